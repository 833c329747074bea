// Counts vowels in a line of verse, one letter at a time.
var verse = "a quiet moon over the harbor";
var vowels = "aeiou";

function countOf(letter) {
  var n = 0;
  var i = 0;
  while (i < verse.length) {
    if (verse.slice(i, i + 1) === letter) {
      n += 1;
    }
    i += 1;
  }
  return n;
}

function census() {
  var i = 0;
  while (i < vowels.length) {
    var v = vowels.slice(i, i + 1);
    print(v + " appears " + countOf(v));
    i += 1;
  }
}

census();
