// Stamps a mail template into the preview pane and the print frame.
var document = {
  write: function (markup) {
    print("write: " + markup);
  }
};

function Function(body) {
  return function () {
    return body;
  };
}

var pane = {
  innerHTML: ""
};
var frame = {
  innerHTML: ""
};
var template = Function("<p>Thanks for your order!</p>");

function stamp() {
  pane.innerHTML = template();
  frame.innerHTML = pane.innerHTML;
  document.write(frame.innerHTML);
}

stamp();
