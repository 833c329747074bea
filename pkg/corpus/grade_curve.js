// Applies a flat curve and letter-grades a small class.
var scores = [52, 67, 74, 81, 93];

function curved(raw) {
  var lifted = raw + 5;
  if (lifted > 100) {
    return 100;
  }
  return lifted;
}

function letterFor(score) {
  if (score >= 90) {
    return "A";
  }
  if (score >= 80) {
    return "B";
  }
  if (score >= 70) {
    return "C";
  }
  return "D";
}

function gradeAll() {
  var i = 0;
  while (i < scores.length) {
    var c = curved(scores[i]);
    print("score " + scores[i] + " curves to " + c + " grade " + letterFor(c));
    i += 1;
  }
}

gradeAll();
