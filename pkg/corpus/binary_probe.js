// Binary search over a sorted shelf of box weights.
var weights = [3, 8, 14, 22, 31, 47, 60, 75];

function locate(goal) {
  var lo = 0;
  var hi = weights.length - 1;
  while (lo <= hi) {
    var mid = Math.floor((lo + hi) / 2);
    if (weights[mid] === goal) {
      return mid;
    }
    if (weights[mid] < goal) {
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  return -1;
}

print("47 sits at " + locate(47));
print("9 sits at " + locate(9));
