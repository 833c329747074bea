// Ops dashboard panel: a saved formula drives the uptime figure.
function eval(code) {
  print("formula: " + code);
  return 99;
}
var document = {
  write: function (markup) {
    print("write: " + markup);
  }
};
var panel = {
  innerHTML: ""
};

function refresh() {
  var uptime = eval("minutesUp / minutesTotal");
  panel.innerHTML = "uptime " + uptime + " percent";
  document.write("<header>status</header>");
  document.write(panel.innerHTML);
}

refresh();
