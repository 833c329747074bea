// Rotating promo banner: writes the frame, then the active slogan.
var document = {
  write: function (markup) {
    print("write: " + markup);
  }
};
var banner = {
  innerHTML: ""
};
var slogans = ["fresh roast daily", "beans from eleven farms"];

function rotate(step) {
  var pick = slogans[step];
  banner.innerHTML = "<div>" + pick + "</div>";
  document.write("<section>");
  document.write(banner.innerHTML);
}

rotate(1);
