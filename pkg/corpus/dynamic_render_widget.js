// Renders a status widget straight into the page.
var document = {
  write: function (markup) {
    print("write: " + markup);
  }
};
var widget = {
  innerHTML: ""
};

function renderStatus(level, detail) {
  widget.innerHTML = "<b>" + level + "</b>";
  widget.innerHTML += " <i>" + detail + "</i>";
  document.write(widget.innerHTML);
}

renderStatus("warn", "disk almost full");
