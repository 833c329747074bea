// Compound interest on a fixed deposit, year by year.
var principal = 1000;
var ratePercent = 5;

function growOnce(balance) {
  return balance + Math.floor(balance * ratePercent) / 100;
}

function table(yearCount) {
  var balance = principal;
  var year = 1;
  while (year <= yearCount) {
    balance = growOnce(balance);
    print("year " + year + " balance " + balance);
    year += 1;
  }
}

table(4);
