// Simulates a print queue draining two jobs per tick.
var queue = [];

function enqueue(job) {
  queue.push(job);
  print("queued " + job);
}

function drainTick(tick) {
  var done = 0;
  while (done < 2 && queue.length > 0) {
    var job = queue.slice(0, 1).join("");
    queue = queue.slice(1);
    print("tick " + tick + " prints " + job);
    done += 1;
  }
}

function main() {
  enqueue("report.pdf");
  enqueue("photo.png");
  enqueue("letter.txt");
  drainTick(1);
  drainTick(2);
}

main();
