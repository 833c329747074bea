// Prints a short freezing/boiling report for a few Celsius readings.
var readings = [-40, 0, 37, 100];

function toFahrenheit(c) {
  return c * 9 / 5 + 32;
}

function describe(c) {
  var f = toFahrenheit(c);
  if (c <= 0) {
    return c + "C (" + f + "F) freezing";
  }
  if (c >= 100) {
    return c + "C (" + f + "F) boiling";
  }
  return c + "C (" + f + "F) liquid";
}

function report() {
  var i = 0;
  while (i < readings.length) {
    print(describe(readings[i]));
    i += 1;
  }
}

report();
