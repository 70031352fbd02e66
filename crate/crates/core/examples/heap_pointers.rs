//! Structs over simulated memory: `malloc`, pointers with a stride, and
//! typed block views packed one after another.

use eogray::{Config, Runtime, Value};

const SOURCE: &str = "\
[ptr] > book
  ptr.block > title
    100
    [b] (b.as-string > @)
  ptr.block > price
    8
    [b] (b.as-int > @)
[] > main
  Q.org.eolang.gray.heap.malloc 216 > shelf
  shelf.pointer 0 108 > first
  book first > a
  book (first.add 1) > b
  seq > @
    a.title.write \"Elegant Objects\"
    a.price.write 30
    b.title.write \"Object Thinking\"
    b.price.write 45
    stdout (sprintf \"%s %d\\n%s %d\\n\" a.title a.price b.title b.price)
    stdout (sprintf \"second record at %d\\n\" (first.add 1))
    a.price.add b.price
";

fn main() {
    eogray::runtime::on_big_stack(run);
}

fn run() {
    let rt = Runtime::from_source(SOURCE, "heap.phi", &Config::default()).expect("parses");
    let total = rt.run().expect("runs");
    print!("{}", rt.output());
    assert_eq!(total, Value::Int(75));
    println!("total {total}, live allocations {}", rt.interp().heap().live_allocations());
}
