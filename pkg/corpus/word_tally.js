// Counts words and characters in a fixed line of prose.
var line = "the quick brown fox jumps over the lazy dog";

function countWords(text) {
  var words = text.split(" ");
  return words.length;
}

function countLetters(text) {
  var parts = text.split(" ");
  var total = 0;
  var i = 0;
  while (i < parts.length) {
    total += parts[i].length;
    i += 1;
  }
  return total;
}

print("words " + countWords(line) + " letters " + countLetters(line));
