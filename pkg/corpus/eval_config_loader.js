// Loads feature toggles from a text blob and applies them one by one.
function eval(code) {
  print("apply: " + code);
  return 1;
}

function Function(body) {
  return function () {
    return body;
  };
}

var toggles = "colorMode=dark;layout=wide";
var parts = toggles.split(";");
var first = eval(parts[0]);
var second = eval(parts[1]);
var reload = new Function("reload scheduled");

print("applied " + (first + second) + " note " + reload());
