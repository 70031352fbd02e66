//! The feature corpus against its golden outputs.

use std::collections::BTreeSet;

use eogray::corpus::{filter, find, list_entries, run_entry, run_id, Outcome};
use eogray::Value;

#[test]
fn corpus_is_large_enough_and_ids_are_unique() {
    let entries = list_entries();
    assert!(entries.len() >= 22, "{}", entries.len());
    let ids: BTreeSet<&str> = entries.iter().map(|e| e.id).collect();
    assert_eq!(ids.len(), entries.len());
    for e in &entries {
        assert!(!e.feature.trim().is_empty(), "{}", e.id);
        assert!(!e.notes.trim().is_empty(), "{}", e.id);
    }
}

#[test]
fn every_feature_family_is_covered() {
    let families: BTreeSet<&str> = list_entries().iter().map(|e| e.feature).collect();
    for family in [
        "goto",
        "pointers",
        "procedures",
        "classes",
        "destructors",
        "exceptions",
        "anonymous functions",
        "generators",
        "types and type casting",
        "reflection",
        "static methods",
        "inheritance",
        "method overloading",
        "generics",
        "templates",
        "mixins",
        "annotations",
        "traceability",
    ] {
        assert!(families.contains(family), "missing {family}");
    }
}

#[test]
fn every_program_records_how_its_output_was_obtained() {
    for e in list_entries() {
        let header: Vec<&str> = e.program.lines().take_while(|l| l.starts_with('#')).collect();
        assert!(!header.is_empty(), "{} has no header", e.id);
        assert!(header.iter().any(|l| l.starts_with("# oracle:")), "{} has no oracle line", e.id);
        assert!(header.iter().any(|l| l.starts_with("# source:")), "{} has no source line", e.id);
    }
}

#[test]
fn every_entry_matches_its_golden_output() {
    let mut failures = Vec::new();
    for e in list_entries() {
        let report = run_entry(&e);
        if let Err(reason) = e.check(&report) {
            failures.push(format!("{}: {reason}", e.id));
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn only_the_documented_branch_diverges() {
    let divergent: Vec<&str> = list_entries()
        .iter()
        .filter(|e| e.outcome == Outcome::Diverges)
        .map(|e| e.id)
        .collect();
    assert_eq!(divergent, vec!["goto-complex-divergent"]);
}

#[test]
fn run_id_returns_output_and_value() {
    let (out, _) = run_id("destructors").unwrap();
    assert_eq!(out, "AliveDead");
    let (out, v) = run_id("pointers-stack").unwrap();
    assert_eq!(out, "7\n");
    assert_eq!(v, Value::Bool(true));
    let (out, _) = run_id("inheritance-prototype").unwrap();
    assert_eq!(out, "4.2");
    let (out, _) = run_id("prototype-inheritance").unwrap();
    assert_eq!(out, "4.2");
}

#[test]
fn run_id_errors_carry_the_id() {
    let e = run_id("goto-complex-divergent").unwrap_err();
    assert!(e.starts_with("goto-complex-divergent: "), "{e}");
    assert!(e.contains("budget"), "{e}");
    assert!(run_id("nope").unwrap_err().contains("nope"));
}

#[test]
fn generators_print_nine_values() {
    let (out, _) = run_id("generators").unwrap();
    // Oracle: the listed loop body, traced by hand in Rust.
    let (mut a, mut b, mut i) = (1i64, 1i64, 1i64);
    let mut expected = vec![1];
    loop {
        i += 1;
        if i >= 10 {
            break;
        }
        b += a;
        expected.push(b - a);
        a = b;
    }
    let expected: String = expected.iter().map(|n| format!("{n}\n")).collect();
    assert_eq!(out, expected);
    assert_eq!(out.lines().count(), 9);
}

#[test]
fn goto_forward_matches_c_arithmetic() {
    let f = |x: i64| if x == 0 { 0 } else { 42 / x };
    let (out, _) = run_id("goto-forward").unwrap();
    assert_eq!(out, format!("{}\n{}\n", f(0), f(6)));
}

#[test]
fn pointers_book_address_follows_the_layout() {
    let (out, _) = run_id("pointers-book").unwrap();
    let sizeof_book = 100 + 8;
    let address = 0x1A76EC09i64 + 7 * sizeof_book;
    let first = out.lines().next().unwrap();
    assert_eq!(first, address.to_string());
}

#[test]
fn filter_uses_shell_globs() {
    assert_eq!(filter("goto-*").unwrap().len(), 4);
    assert_eq!(filter("pointers-*").unwrap().len(), 3);
    assert_eq!(filter("inheritance*").unwrap().len(), 3);
    assert!(filter("zzz").unwrap().is_empty());
    assert!(filter("[").is_err());
    assert!(find("generators").is_some());
}
