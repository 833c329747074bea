// Order cleanup endpoint: deletes rows for the customer named in the body.
var db = {
  run: function (sql) {
    print("db.run: " + sql);
    return 0;
  }
};
var req = {
  body: {
    customerRef: "CUST-0042"
  }
};

function purgeOrders() {
  var ref = req.body["customerRef"];
  db.run("DELETE FROM orders WHERE customer = '" + ref + "'");
}

purgeOrders();
