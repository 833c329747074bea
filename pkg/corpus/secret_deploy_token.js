// Pushes a build artifact to the release channel.
var deployToken = "ZGVwbG95OmNoYW5uZWw6cHJvZDA3";
var artifact = "app-bundle.tgz";

function describeUpload() {
  var line = "uploading " + artifact + " with ";
  return line + deployToken;
}

print(describeUpload());
