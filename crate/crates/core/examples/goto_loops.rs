//! `goto` as an object: a backward jump restarts the body, a forward jump
//! leaves it with an optional payload.

use eogray::{run_source, Config};

const SOURCE: &str = "\
[n] > count-to
  memory > i
  seq > @
    i.write 0
    Q.org.eolang.gray.goto
      [g]
        seq > @
          i.write (i.add 1)
          stdout (sprintf \"%d \" i)
          if.
            i.less n
            g.backward
            TRUE
    stdout \"\\n\"
[x] > safe-div
  Q.org.eolang.gray.goto > @
    [g]
      seq > @
        if.
          x.eq 0
          g.forward -1
          TRUE
        42.div x
[] > main
  seq > @
    count-to 5
    stdout (sprintf \"%d %d\\n\" (safe-div 6) (safe-div 0))
";

fn main() {
    let report = run_source(SOURCE, "goto.phi", &Config::default());
    report.result.expect("runs");
    print!("{}", report.output);
    assert_eq!(report.output, "1 2 3 4 5 \n7 -1\n");
    println!("{} dataization steps", report.steps);
}
