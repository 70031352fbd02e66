//! Canonical text rendering of parsed programs. Re-parsing the output
//! yields a structurally equal program (spans aside).

use std::fmt::Write;

use crate::syntax::{Formation, Literal, Program, Term, TermKind};

pub fn print_program(program: &Program) -> String {
    let mut out = String::new();
    for item in &program.items {
        if let TermKind::Meta { name, value } = &item.term.kind {
            if value.is_empty() {
                let _ = writeln!(out, "+{name}");
            } else {
                let _ = writeln!(out, "+{name} {value}");
            }
            continue;
        }
        let suffix = naming(item.name.as_deref(), item.constant);
        print_line(&item.term, 0, &suffix, &mut out);
    }
    out
}

/// One-line rendering of a term.
pub fn print_term(term: &Term) -> String {
    let mut out = String::new();
    horizontal(term, &mut out);
    out
}

fn naming(name: Option<&str>, constant: bool) -> String {
    match name {
        Some(n) if constant => format!(" > {n}!"),
        Some(n) => format!(" > {n}"),
        None => String::new(),
    }
}

fn contains_formation(term: &Term) -> bool {
    let mut found = false;
    term.walk(&mut |t| found |= matches!(t.kind, TermKind::Formation(_)));
    found
}

fn print_line(term: &Term, indent: usize, suffix: &str, out: &mut String) {
    let pad = " ".repeat(indent);
    match &term.kind {
        TermKind::Formation(f) => {
            out.push_str(&pad);
            params(f, out);
            out.push_str(suffix);
            if let Some(atom) = &f.atom {
                let _ = write!(out, " /{atom}");
            }
            out.push('\n');
            for b in &f.bindings {
                print_line(&b.term, indent + 2, &naming(Some(&b.name), b.constant), out);
            }
        }
        TermKind::Application { head, args }
            if !contains_formation(head) && args.iter().any(|a| contains_formation(a)) =>
        {
            out.push_str(&pad);
            horizontal(head, out);
            out.push_str(suffix);
            out.push('\n');
            for a in args {
                print_line(a, indent + 2, "", out);
            }
        }
        _ => {
            out.push_str(&pad);
            horizontal(term, out);
            out.push_str(suffix);
            out.push('\n');
        }
    }
}

fn params(f: &Formation, out: &mut String) {
    out.push('[');
    for (i, p) in f.params.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(p);
        if f.variadic && i + 1 == f.params.len() {
            out.push_str("...");
        }
    }
    out.push(']');
}

fn horizontal(term: &Term, out: &mut String) {
    match &term.kind {
        TermKind::Data(lit) => literal(lit, out),
        TermKind::Dispatch {
            receiver: None,
            attr,
        } => out.push_str(attr),
        TermKind::Dispatch {
            receiver: Some(r),
            attr,
        } => {
            wrapped(r, out);
            match attr.as_str() {
                "'" => out.push('\''),
                _ => {
                    out.push('.');
                    out.push_str(attr);
                }
            }
        }
        TermKind::Application { head, args } => {
            wrapped(head, out);
            for a in args {
                out.push(' ');
                match a.kind {
                    TermKind::Formation(_) => horizontal(a, out),
                    _ => wrapped(a, out),
                }
            }
        }
        TermKind::Formation(f) => {
            params(f, out);
            for b in &f.bindings {
                out.push_str(" (");
                horizontal(&b.term, out);
                out.push_str(&naming(Some(&b.name), b.constant));
                out.push(')');
            }
        }
        TermKind::Meta { name, value } => {
            let _ = write!(out, "+{name} {value}");
        }
    }
}

fn wrapped(term: &Term, out: &mut String) {
    match term.kind {
        TermKind::Application { .. } | TermKind::Formation(_) => {
            out.push('(');
            horizontal(term, out);
            out.push(')');
        }
        _ => horizontal(term, out),
    }
}

fn literal(lit: &Literal, out: &mut String) {
    match lit {
        Literal::Int(v) => {
            let _ = write!(out, "{v}");
        }
        Literal::Float(v) => {
            let s = format!("{v}");
            out.push_str(&s);
            if !s.contains('.') {
                out.push_str(".0");
            }
        }
        Literal::Bool(true) => out.push_str("TRUE"),
        Literal::Bool(false) => out.push_str("FALSE"),
        Literal::Str(s) => {
            out.push('"');
            for c in s.chars() {
                match c {
                    '"' => out.push_str("\\\""),
                    '\\' => out.push_str("\\\\"),
                    '\n' => out.push_str("\\n"),
                    '\t' => out.push_str("\\t"),
                    '\r' => out.push_str("\\r"),
                    '\0' => out.push_str("\\0"),
                    c if c.is_control() => {
                        let _ = write!(out, "\\u{{{:x}}}", c as u32);
                    }
                    c => out.push(c),
                }
            }
            out.push('"');
        }
        Literal::Bytes(bytes) => {
            // No literal syntax for bytes; rendered as a string of the same content.
            out.push('"');
            for b in bytes {
                let _ = write!(out, "\\u{{{b:x}}}");
            }
            out.push('"');
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_program;

    #[test]
    fn prints_listing_style() {
        let text = "[a b] > max\n  goto > @\n    [g]\n      seq > @\n        if.\n          a.greater b\n          g.forward a\n          TRUE\n        b\n";
        let p = parse_program(text, "m.phi").unwrap();
        let printed = print_program(&p);
        let again = parse_program(&printed, "m.phi").unwrap();
        assert_eq!(p.items, again.items, "{printed}");
    }

    #[test]
    fn float_keeps_its_point() {
        let p = parse_program("5.0 > x\n", "f.phi").unwrap();
        assert_eq!(print_program(&p), "5.0 > x\n");
    }
}
