// Backup launcher: the first CLI argument picks the archive mode.
function exec(command) {
  print("exec: " + command);
  return 0;
}
var process = {
  argv: ["full"]
};

function runBackup() {
  var mode = process.argv[0];
  exec("tar --create --mode " + mode);
}

runBackup();
