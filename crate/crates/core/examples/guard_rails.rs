//! Runaway programs stop with a budget or depth error instead of hanging
//! or overflowing the native stack.

use eogray::{run_source, Config, Error};

fn main() {
    let spin = "[] > main\n  Q.org.eolang.gray.goto > @\n    [g]\n      g.backward > @\n";
    let config = Config {
        max_steps: 10_000,
        ..Config::default()
    };
    let report = run_source(spin, "spin.phi", &config);
    show("endless backward jump", &report.result);

    let deep = "[n] > deep\n  n.sub 1 > m!\n  if. > @\n    n.less 1\n    0\n    (deep m).add 1\n[] > main\n  deep 1000000 > @\n";
    let config = Config {
        max_steps: u64::MAX,
        ..Config::default()
    };
    let report = run_source(deep, "deep.phi", &config);
    show("unbounded recursion", &report.result);

    for (name, src) in [
        ("division by zero", "[] > main\n  1.div 0 > @\n"),
        ("read before write", "[] > main\n  memory > m\n  m > @\n"),
    ] {
        show(name, &run_source(src, "fault.phi", &Config::default()).result);
    }
}

fn show(name: &str, result: &Result<eogray::Value, Error>) {
    match result {
        Ok(v) => println!("{name}: finished with {v}"),
        Err(e) => println!("{name}: exit {} ({e})", e.exit_code()),
    }
}
