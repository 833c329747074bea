// Lists which century-straddling years are leap years.
var years = [1900, 1996, 2000, 2023, 2024];

function isLeap(y) {
  if (y % 400 === 0) {
    return true;
  }
  if (y % 100 === 0) {
    return false;
  }
  return y % 4 === 0;
}

function survey() {
  var i = 0;
  while (i < years.length) {
    if (isLeap(years[i])) {
      print(years[i] + " is a leap year");
    } else {
      print(years[i] + " is a common year");
    }
    i += 1;
  }
}

survey();
