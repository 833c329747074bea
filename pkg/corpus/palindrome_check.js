// Reports whether each candidate word reads the same reversed.
var candidates = ["racecar", "kayak", "lentil"];

function reversed(text) {
  var out = "";
  var i = text.length - 1;
  while (i >= 0) {
    out += text.slice(i, i + 1);
    i -= 1;
  }
  return out;
}

function check(word) {
  if (reversed(word) === word) {
    print(word + " is a palindrome");
  } else {
    print(word + " is not a palindrome");
  }
}

function checkAll() {
  var k = 0;
  while (k < candidates.length) {
    check(candidates[k]);
    k += 1;
  }
}

checkAll();
