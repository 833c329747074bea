// Account balance endpoint: looks up whichever account the caller names.
var db = {
  query: function (sql) {
    print("db.query: " + sql);
    return 1;
  }
};
var req = {
  query: {
    accountId: "ACCT-2291"
  }
};

function handleLookup() {
  var target = req.query["accountId"];
  db.query("SELECT balance FROM accounts WHERE owner = '" + target + "'");
}

handleLookup();
