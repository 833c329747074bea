// Search results header repeats the submitted phrase verbatim.
var res = {
  send: function (page) {
    print("send: " + page);
  }
};
var req = {
  body: {
    searchPhrase: "tea kettles"
  }
};

function showResults() {
  var phrase = req.body["searchPhrase"];
  res.send("Results for " + phrase + ":");
}

showResults();
