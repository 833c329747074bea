// Joins path segments while collapsing duplicate slashes.
var segments = ["srv", "static", "img", "logo.png"];

function joinPath(parts) {
  var out = "";
  var i = 0;
  while (i < parts.length) {
    if (out === "") {
      out = parts[i];
    } else {
      out = out + "/" + parts[i];
    }
    i += 1;
  }
  return out;
}

print("asset path " + joinPath(segments));
