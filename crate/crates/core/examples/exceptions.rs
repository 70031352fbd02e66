//! `try` hands its body a throw token; throwing unwinds to the matching
//! handler and the finally part always runs.

use eogray::{run_source, Config};

const SOURCE: &str = "\
[price] > checked
  try > @
    [throw]
      seq > @
        if.
          price.less 0
          throw \"negative price\"
          TRUE
        price.mul 2
    [e]
      seq > @
        stdout (sprintf \"caught: %s\\n\" e.message)
        0
    stdout \"finally\\n\"
[] > main
  seq > @
    stdout (sprintf \"%d\\n\" (checked 21))
    stdout (sprintf \"%d\\n\" (checked -1))
";

fn main() {
    let report = run_source(SOURCE, "exceptions.phi", &Config::default());
    report.result.expect("runs");
    print!("{}", report.output);
    assert_eq!(report.output, "finally\n42\ncaught: negative price\nfinally\n0\n");
}
