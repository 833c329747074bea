// Shifts a message three places around a lowercase alphabet wheel.
var alphabet = "abcdefghijklmnopqrstuvwxyz";

function shifted(ch, by) {
  var at = alphabet.indexOf(ch);
  if (at < 0) {
    return ch;
  }
  var to = at + by;
  if (to >= 26) {
    to -= 26;
  }
  return alphabet.slice(to, to + 1);
}

function encode(text, by) {
  var out = "";
  var i = 0;
  while (i < text.length) {
    out += shifted(text.slice(i, i + 1), by);
    i += 1;
  }
  return out;
}

print("attack at dawn -> " + encode("attack at dawn", 3));
