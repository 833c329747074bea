// Converts a handful of years to Roman numerals.
var values = [1000, 900, 500, 400, 100, 90, 50, 40, 10, 9, 5, 4, 1];
var glyphs = ["M", "CM", "D", "CD", "C", "XC", "L", "XL", "X", "IX", "V", "IV", "I"];

function toRoman(n) {
  var out = "";
  var i = 0;
  while (i < values.length) {
    while (n >= values[i]) {
      out += glyphs[i];
      n -= values[i];
    }
    i += 1;
  }
  return out;
}

print("1994 is " + toRoman(1994));
print("2024 is " + toRoman(2024));
