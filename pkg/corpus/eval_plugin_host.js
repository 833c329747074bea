// Plugin host: registered snippets are compiled and run on demand.
function eval(code) {
  print("run: " + code);
  return code.length;
}

function Function(body) {
  return function () {
    return body;
  };
}

var greetPlugin = Function("greet installed");
var auditPlugin = Function("audit installed");

function boot() {
  print(greetPlugin());
  print(auditPlugin());
  eval("plugins.start()");
}

boot();
