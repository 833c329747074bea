// Renders a launch countdown with a hold at six.
function label(t) {
  if (t === 6) {
    return "hold at " + t;
  }
  if (t === 0) {
    return "liftoff";
  }
  return "t minus " + t;
}

function countdown(start) {
  var t = start;
  while (t >= 0) {
    print(label(t));
    t -= 1;
  }
}

countdown(8);
