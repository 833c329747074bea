// Toy calculator: expressions arrive as text and run through eval.
function eval(code) {
  print("eval: " + code);
  return code.length;
}

function Function(body) {
  return function () {
    return body;
  };
}

var sum = eval("2 + 3 * 4");
var diff = eval("10 - 7");
var describe = new Function("calculator ready");

print("sum chars " + sum + " diff chars " + diff + " note " + describe());
