//! Parsing the corpus and hand-written fragments; printing and
//! re-parsing must give the same tree.

mod common;

use eogray::corpus::list_entries;
use eogray::syntax::TermKind;
use eogray::{parse_expression, parse_program, print_program, print_term, run_source, Config};
use proptest::prelude::*;

#[test]
fn every_corpus_program_parses() {
    for entry in list_entries() {
        let p = parse_program(entry.program, &entry.file_name())
            .unwrap_or_else(|e| panic!("{}: {e}", entry.id));
        assert!(p.objects().count() > 0, "{} has no objects", entry.id);
    }
}

#[test]
fn printing_round_trips_the_corpus() {
    for entry in list_entries() {
        let first = parse_program(entry.program, "a.phi").unwrap();
        let printed = print_program(&first);
        let second = parse_program(&printed, "b.phi")
            .unwrap_or_else(|e| panic!("{}: reprint does not parse: {e}\n{printed}", entry.id));
        assert_eq!(first.items, second.items, "{}", entry.id);
        assert_eq!(print_program(&second), printed, "{}: printing is not stable", entry.id);
    }
}

#[test]
fn reprinted_corpus_behaves_the_same() {
    for entry in list_entries() {
        let printed = print_program(&parse_program(entry.program, "a.phi").unwrap());
        let a = run_source(entry.program, &entry.file_name(), &entry.config());
        let b = run_source(&printed, &entry.file_name(), &entry.config());
        assert_eq!(a.output, b.output, "{}", entry.id);
    }
}

#[test]
fn parsing_is_pure() {
    for entry in list_entries() {
        let a = parse_program(entry.program, "x.phi").unwrap();
        let b = parse_program(entry.program, "x.phi").unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn spans_stay_inside_the_file() {
    for entry in list_entries() {
        let p = parse_program(entry.program, &entry.file_name()).unwrap();
        assert_eq!(p.line_count, entry.program.lines().count(), "{}", entry.id);
        for item in &p.items {
            item.term.walk(&mut |t| {
                assert!(t.span.first_line <= t.span.last_line, "{}", entry.id);
                assert!(t.span.last_line < p.line_count, "{}", entry.id);
                assert_eq!(&*t.span.file, entry.file_name(), "{}", entry.id);
            });
        }
    }
}

#[test]
fn nested_formation_spans_cover_their_lines() {
    let p = parse_program("[x] > f\n  [] > @\n    42.div x > @\n[] > g\n  1 > @\n", "m.phi").unwrap();
    let f = p.named("f").unwrap();
    assert_eq!(f.term.span.to_string(), "m.phi:0-2");
    let inner = &f.term.as_formation().unwrap().binding("@").unwrap().term;
    assert_eq!(inner.span.to_string(), "m.phi:1-2");
    assert_eq!(p.named("g").unwrap().term.span.to_string(), "m.phi:3-4");
}

#[test]
fn errors_name_file_and_line() {
    let cases = [
        ("[x] > f\n   x > @\n", 2),
        ("[] > a\n  \"unterminated > b\n", 2),
        ("[a b > f\n", 1),
        ("[] > a\n  1 > x\n  2 > x\n", 3),
        ("[] > a\n  (1.add 2 > b\n", 2),
    ];
    for (src, line) in cases {
        let e = parse_program(src, "bad.phi").expect_err(src);
        assert_eq!(e.file, "bad.phi");
        assert_eq!(e.line, line, "{src}: {e}");
        let shown = e.to_string();
        assert!(shown.contains("bad.phi"), "{shown}");
    }
}

#[test]
fn distinct_errors_for_distinct_mistakes() {
    let msgs: Vec<String> = ["[a b > f\n", "[] > a\n  1 > x\n  2 > x\n", "[args... b] > f\n", "[x] > f\n   x > @\n"]
        .iter()
        .map(|s| parse_program(s, "t.phi").unwrap_err().message)
        .collect();
    for (i, a) in msgs.iter().enumerate() {
        for b in &msgs[i + 1..] {
            assert_ne!(a, b);
        }
    }
}

#[test]
fn expressions_parse_on_their_own() {
    let t = parse_expression("(7.add 35).as-string", "<e>").unwrap();
    assert!(matches!(&t.kind, TermKind::Dispatch { attr, .. } if attr == "as-string"));
    assert_eq!(print_term(&t), "(7.add 35).as-string");
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let a = parse_program("# header\n\n[] > a\n  1 > @\n", "c.phi").unwrap();
    let b = parse_program("[] > a\n  1 > @\n", "c.phi").unwrap();
    assert_eq!(a.items, b.items);
}

#[test]
fn printed_program_still_runs() {
    let src = "[a b] > max\n  if. > @\n    a.greater b\n    a\n    b\n[] > main\n  stdout (sprintf \"%d\" (max 3 9)) > @\n";
    let printed = print_program(&parse_program(src, "p.phi").unwrap());
    assert_eq!(common::stdout(&printed), "9");
}

/// Random arithmetic over `add`, `sub`, `mul` as a text expression.
fn arith() -> impl Strategy<Value = String> {
    let leaf = (-1000i64..1000).prop_map(|n| n.to_string());
    leaf.prop_recursive(4, 24, 2, |inner| {
        (inner.clone(), prop_oneof!["add", "sub", "mul"], inner)
            .prop_map(|(a, op, b)| format!("({a}).{op} ({b})"))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn expression_print_round_trips(src in arith()) {
        let a = parse_expression(&src, "<e>").unwrap();
        let b = parse_expression(&print_term(&a), "<e>").unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn odd_indentation_is_rejected(depth in 0usize..4) {
        let pad = " ".repeat(depth * 2 + 1);
        let src = format!("[] > a\n{pad}1 > @\n");
        prop_assert!(parse_program(&src, "i.phi").is_err());
    }
}

#[test]
fn config_default_is_documented_budget() {
    let c = Config::default();
    assert_eq!(c.max_steps, 1_000_000);
    assert_eq!(c.heap_size, 1 << 20);
}
