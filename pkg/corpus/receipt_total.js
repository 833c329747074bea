// Totals a shopping basket and applies a two-for-one on pencils.
var basket = [
  { name: "pencil", price: 40, count: 4 },
  { name: "eraser", price: 75, count: 1 },
  { name: "ruler", price: 120, count: 2 }
];

function lineTotal(entry) {
  var paidCount = entry.count;
  if (entry.name === "pencil") {
    paidCount = Math.floor(entry.count / 2) + entry.count % 2;
  }
  return entry.price * paidCount;
}

function totalOf(items) {
  var cents = 0;
  var i = 0;
  while (i < items.length) {
    cents += lineTotal(items[i]);
    i += 1;
  }
  return cents;
}

print("basket total " + totalOf(basket) + " cents");
