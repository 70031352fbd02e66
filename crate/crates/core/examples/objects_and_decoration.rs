//! Classes as factories, inheritance as decoration, and monkey patching
//! through a cage that holds an object.

use eogray::runtime::on_big_stack;
use eogray::{Config, Runtime, Value};

const SOURCE: &str = "\
[] > animal
  [n s] > new
    [] > @
      n > name
      s > sound
      [] > describe
        sprintf \"%s says %s\" ^.name ^.sound > @
[] > dog
  [n] > new
    [] > @
      animal.new n \"woof\" > @
      [] > fetch
        sprintf \"%s fetches\" ^.name > @
[] > main
  Q.org.eolang.gray.cage > pet
  seq > @
    pet.write (dog.new \"Rex\")
    stdout (sprintf \"%s, %s\\n\" pet.describe pet.fetch)
    pet.write
      []
        dog.new \"Rex\" > @
        \"Rex stays quiet\" > describe
    stdout (sprintf \"%s, %s\\n\" pet.describe pet.fetch)
";

fn main() {
    // Evaluation recurses natively, so give it a roomy stack.
    on_big_stack(run);
}

fn run() {
    let rt = Runtime::from_source(SOURCE, "objects.phi", &Config::default()).expect("parses");
    rt.run().expect("runs");
    print!("{}", rt.output());
    assert_eq!(rt.output(), "Rex says woof, Rex fetches\nRex stays quiet, Rex fetches\n");
    assert_eq!(rt.eval("(dog.new \"Fido\").name").unwrap(), Value::Str("Fido".into()));
}
