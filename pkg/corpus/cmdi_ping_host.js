// Network diagnostic: pings whatever host the request names.
function exec(command) {
  print("exec: " + command);
  return 0;
}
var req = {
  query: {
    targetHost: "box-11.lan"
  }
};

function pingHost() {
  var host = req.query["targetHost"];
  exec("ping -c 1 " + host);
}

pingHost();
