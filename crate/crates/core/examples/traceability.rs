//! Synthetic `source` attributes and a step trace that shows them.

use eogray::{run_source, Config};

const SOURCE: &str = "\
[x] > f
  [] > @
    42.div x > @
[] > g
  \"legacy.c:10-12\" > source
  f 2 > @
[] > main
  stdout (sprintf \"%d %d\\n\" (f 6) g) > @
";

fn main() {
    let config = Config {
        trace: true,
        traceability: true,
        ..Config::default()
    };
    let report = run_source(SOURCE, "trace.phi", &config);
    report.result.expect("runs");
    for w in &report.warnings {
        println!("{w}");
    }
    let annotated: Vec<&str> = report.trace.lines().filter(|l| l.contains('[')).collect();
    println!("{} of {} trace lines carry a span, for example:", annotated.len(), report.trace.lines().count());
    for line in annotated.iter().take(6) {
        println!("{line}");
    }
    print!("{}", report.output);
    assert_eq!(report.output, "7 21\n");
    assert!(report.trace.contains("[trace.phi:0-2]"));
    assert!(report.trace.contains("[legacy.c:10-12]"));
}
