// Thin client for the metrics ingestion service.
var serviceKey = "dXNlcjpyZXBvcnRpbmc6OTkxMg==";
var endpoint = "https://metrics.internal/ingest";

function buildHeader() {
  return "Bearer " + serviceKey;
}

function pushSample(value) {
  print("POST " + endpoint + " auth=" + buildHeader() + " value=" + value);
}

pushSample(42);
