// Weekly report builder: header, computed totals, then the footer hook.
function eval(code) {
  print("compute: " + code);
  return 17;
}

function Function(body) {
  return function () {
    return body;
  };
}

var document = {
  write: function (markup) {
    print("write: " + markup);
  }
};
var summary = {
  innerHTML: ""
};

function build() {
  var rows = eval("count(orders)");
  var refunds = eval("count(refunds)");
  var footer = new Function("<footer>end of report</footer>");
  summary.innerHTML = "rows " + rows + " refunds " + refunds;
  document.write(summary.innerHTML);
  print(footer());
}

build();
