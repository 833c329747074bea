// Tracks stock movements for a tiny warehouse ledger.
var stock = {
  bolts: 40,
  panels: 12,
  hinges: 0
};

function receive(item, amount) {
  stock[item] += amount;
  print("received " + amount + " " + item);
}

function ship(item, amount) {
  if (stock[item] >= amount) {
    stock[item] -= amount;
    print("shipped " + amount + " " + item);
  } else {
    print("backorder for " + item);
  }
}

receive("hinges", 25);
ship("bolts", 15);
ship("hinges", 40);
print("bolts " + stock.bolts + " panels " + stock.panels + " hinges " + stock.hinges);
