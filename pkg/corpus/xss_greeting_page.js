// Greeting page: echoes the visitor's display name straight back.
var res = {
  send: function (page) {
    print("send: " + page);
  }
};
var req = {
  query: {
    visitorName: "Mallory"
  }
};

function greet() {
  var shown = req.query["visitorName"];
  res.send("<h1>Hello " + shown + "</h1>");
}

greet();
