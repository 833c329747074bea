// Session middleware settings: cookie lifetime plus the signing material.
var sessionConfig = {
  cookieAge: 3600,
  renewOnUse: true,
  signingSecret: "c2lnbmluZzpwcm9kOjIwMjQwMQ=="
};

function describeSession() {
  print("cookie lifetime " + sessionConfig.cookieAge + "s renew " + sessionConfig.renewOnUse);
}

describeSession();
