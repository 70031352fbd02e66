//! Parse a program, show each object's line span, and print it back in
//! canonical form.

use eogray::{parse_program, print_program};

const SOURCE: &str = "\
+import org.eolang.io.stdout

# max of two numbers
[a b] > max
  if. > @
    a.greater b
    a
    b
[] > main
  stdout (sprintf \"%d\\n\" (max 7 42)) > @
";

fn main() {
    let program = parse_program(SOURCE, "max.phi").expect("valid program");
    for import in program.imports() {
        println!("import {import}");
    }
    for item in program.objects() {
        let name = item.name.as_deref().unwrap_or("<anonymous>");
        println!("{name} spans {}", item.term.span);
    }
    let printed = print_program(&program);
    println!("---\n{printed}---");
    let again = parse_program(&printed, "max.phi").expect("printed text parses");
    assert_eq!(program.items, again.items);

    let err = parse_program("[x] > f\n   x > @\n", "bad.phi").unwrap_err();
    println!("error: {err}");
}
