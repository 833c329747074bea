// The classic three-five chant over the first dozen counts.
function chantFor(n) {
  var call = "";
  if (n % 3 === 0) {
    call += "fizz";
  }
  if (n % 5 === 0) {
    call += "buzz";
  }
  if (call === "") {
    return String(n);
  }
  return call;
}

function chant(upTo) {
  var verse = "";
  var i = 1;
  while (i <= upTo) {
    verse += chantFor(i) + " ";
    i += 1;
  }
  print(verse);
}

chant(12);
