//! Arguments are passed by name and attributes are re-dataized on each
//! use, unless marked constant with `!`.

use eogray::{Config, Runtime, Value};

const SOURCE: &str = "\
[a b] > first
  a > @
[] > counter
  memory 0 > n
  n.write (n.add 1) > bump
  n.write (n.add 1) > bump-once!
";

fn main() {
    let rt = Runtime::from_source(SOURCE, "lazy.phi", &Config::default()).expect("parses");
    // The second argument is never dataized, so it cannot fail.
    assert_eq!(rt.eval("first 1 (1.div 0)").unwrap(), Value::Int(1));
    let plain = rt.eval("seq counter.bump counter.bump counter.bump counter.n").unwrap();
    let constant = rt.eval("seq counter.bump-once counter.bump-once counter.n").unwrap();
    println!("plain attribute used three times: n = {plain}");
    println!("constant attribute used twice: n = {constant}");
    assert_eq!(plain, Value::Int(3));
    assert_eq!(constant, Value::Int(4));
}
