// A four-instruction stack machine evaluating one tiny program.
var tape = ["push 6", "push 7", "mul", "emit"];
var stack = [];

function step(instr) {
  var op = instr.split(" ")[0];
  if (op === "push") {
    stack.push(Number(instr.split(" ")[1]));
    return;
  }
  if (op === "mul") {
    var b = stack[stack.length - 1];
    var a = stack[stack.length - 2];
    stack = stack.slice(0, stack.length - 2);
    stack.push(a * b);
    return;
  }
  print("emit " + stack[stack.length - 1]);
}

function run() {
  var pc = 0;
  while (pc < tape.length) {
    step(tape[pc]);
    pc += 1;
  }
}

run();
