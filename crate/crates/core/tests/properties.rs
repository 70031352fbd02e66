//! Randomized laws of the runtime. Every property uses its own oracle:
//! plain Rust arithmetic or a count derived from the generated program.

mod common;

use common::{indent, run, stdout, value};
use eogray::corpus::list_entries;
use eogray::{run_source, Value};
use proptest::prelude::*;

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 256,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

/// Strings that need no escaping inside a literal.
fn plain_string(max: usize) -> impl Strategy<Value = String> {
    proptest::string::string_regex(&format!("[a-zA-Z0-9 ,.!?-]{{0,{max}}}")).unwrap()
}

fn literal(s: &str) -> String {
    format!("\"{s}\"")
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn memory_roundtrips_any_int(v in any::<i64>()) {
        let src = format!("[] > main\n  memory > m\n  seq > @\n    m.write {v}\n    m\n");
        prop_assert_eq!(value(&src), Value::Int(v));
    }

    #[test]
    fn memory_roundtrips_strings(s in plain_string(40)) {
        let src = format!("[] > main\n  memory > m\n  seq > @\n    m.write {}\n    m\n", literal(&s));
        prop_assert_eq!(value(&src), Value::Str(s));
    }

    #[test]
    fn heap_block_roundtrips_any_int(v in any::<i64>(), offset in 0i64..8) {
        let src = format!(
            "[p] > cell\n  p.block > @\n    8\n    [b] (b.as-int > @)\n\
             [] > main\n  Q.org.eolang.gray.heap.malloc 16 > m\n  cell (m.pointer {offset} 8) > c\n  \
             seq > @\n    c.write {v}\n    c\n"
        );
        prop_assert_eq!(value(&src), Value::Int(v));
    }

    #[test]
    fn heap_block_roundtrips_strings_up_to_view_length(
        (len, s) in (1usize..64).prop_flat_map(|len| (Just(len), plain_string(len)))
    ) {
        let src = format!(
            "[p] > text\n  p.block > @\n    {len}\n    [b] (b.as-string > @)\n\
             [] > main\n  Q.org.eolang.gray.heap.malloc {len} > m\n  text (m.pointer 0 {len}) > t\n  \
             seq > @\n    t.write {}\n    t\n",
            literal(&s)
        );
        prop_assert_eq!(value(&src), Value::Str(s));
    }

    #[test]
    fn pointer_add_then_sub_is_identity(
        addr in 10_000i64..1_000_000,
        stride in 1i64..200,
        k in -40i64..40,
    ) {
        let src = format!(
            "Q.org.eolang.gray.heap.pointer > p\n  {addr}\n  {stride}\n\
             [] > main\n  (p.add {k}).sub {k} > @\n"
        );
        prop_assert_eq!(value(&src), Value::Int(addr));
    }

    #[test]
    fn pointer_add_scales_by_stride(
        addr in 10_000i64..1_000_000,
        stride in 1i64..200,
        k in -40i64..40,
    ) {
        let src = format!(
            "Q.org.eolang.gray.heap.pointer > p\n  {addr}\n  {stride}\n\
             [] > main\n  p.add {k} > @\n"
        );
        prop_assert_eq!(value(&src), Value::Int(addr + k * stride));
    }

    #[test]
    fn pointer_add_is_associative(
        addr in 10_000i64..1_000_000,
        stride in 1i64..200,
        j in -20i64..20,
        k in -20i64..20,
    ) {
        let src = format!(
            "Q.org.eolang.gray.heap.pointer > p\n  {addr}\n  {stride}\n\
             [] > main\n  ((p.add {j}).add {k}).eq (p.add ({j}.add {k})) > @\n"
        );
        prop_assert_eq!(value(&src), Value::Bool(true));
    }

    #[test]
    fn goto_forward_returns_payload_and_skips_the_rest(
        v in any::<i64>(),
        dead in 1usize..6,
    ) {
        let mut body = format!("g.forward {v}\n");
        for _ in 0..dead {
            body.push_str("hits.write (hits.add 1)\nstdout \"dead\"\n");
        }
        let src = format!(
            "[] > main\n  memory > hits\n  Q.org.eolang.gray.goto > r\n    [g]\n      seq > @\n{}\n  \
             seq > @\n    hits.write 0\n    stdout (sprintf \"%d,%d\" r hits)\n",
            indent(&body, 8)
        );
        prop_assert_eq!(stdout(&src), format!("{v},0"));
    }

    #[test]
    fn goto_backward_loops_like_a_counter(limit in 1i64..40) {
        let src = format!(
            "[] > main\n  memory > i\n  memory > visits\n  seq > @\n    i.write 0\n    visits.write 0\n    \
             Q.org.eolang.gray.goto\n      [g]\n        seq > @\n          visits.write (visits.add 1)\n          \
             i.write (i.add 1)\n          if.\n            i.less {limit}\n            g.backward\n            TRUE\n    \
             stdout (sprintf \"%d %d\" i visits)\n"
        );
        // Oracle: a do-while loop.
        let (mut i, mut visits) = (0, 0);
        loop {
            visits += 1;
            i += 1;
            if i >= limit {
                break;
            }
        }
        prop_assert_eq!(stdout(&src), format!("{i} {visits}"));
    }

    #[test]
    fn finally_runs_on_both_paths(throw in any::<bool>(), payload in -1000i64..1000, ok in -1000i64..1000) {
        let src = format!(
            "[] > main\n  memory > fin\n  seq > @\n    fin.write 0\n    stdout\n      sprintf\n        \"%d %d\"\n        \
             try\n          [t]\n            if. > @\n              {}\n              t {payload}\n              {ok}\n          \
             [e]\n            e.message.add 1000 > @\n          fin.write (fin.add 1)\n        fin\n",
            if throw { "TRUE" } else { "FALSE" }
        );
        let expected = if throw { payload + 1000 } else { ok };
        prop_assert_eq!(stdout(&src), format!("{expected} 1"));
    }

    #[test]
    fn nested_throw_reaches_its_own_handler(
        (depth, target) in (1usize..=4).prop_flat_map(|d| (Just(d), 1..=d)),
        payload in 0i64..1000,
    ) {
        let src = format!("[] > main\n{}\n", indent(&decorate(&nested_try(1, depth, target, payload)), 2));
        // Oracle: handler `j` adds j * 1000 to the payload.
        prop_assert_eq!(value(&src), Value::Int(payload + target as i64 * 1000));
    }

    #[test]
    fn if_dataizes_only_the_chosen_branch(a in any::<i32>(), b in any::<i32>()) {
        let src = format!(
            "[] > main\n  memory > x\n  memory > y\n  seq > @\n    x.write 0\n    y.write 0\n    \
             if.\n      {a}.less {b}\n      x.write 1\n      y.write 1\n    \
             if.\n      {a}.less {b}\n      TRUE\n      TRUE\n    \
             if.\n      {a}.less {b}\n      1\n      1.div 0\n    \
             stdout (sprintf \"%d %d\" x y)\n"
        );
        let expected = if a < b { "1 0" } else { "0 1" };
        if a < b {
            prop_assert_eq!(stdout(&src), expected);
        } else {
            // The chosen branch is the division by zero.
            prop_assert!(run(&src).result.is_err());
        }
    }

    #[test]
    fn constant_is_forced_once_plain_attribute_every_time(k in 1usize..10) {
        let uses = "c\n".repeat(k);
        let plain = "d\n".repeat(k);
        let src = format!(
            "[] > main\n  memory > n\n  memory > m\n  n.write (n.add 1) > c!\n  m.write (m.add 1) > d\n  \
             seq > @\n    n.write 0\n    m.write 0\n{}\n{}\n    stdout (sprintf \"%d %d\" n m)\n",
            indent(&uses, 4),
            indent(&plain, 4)
        );
        prop_assert_eq!(stdout(&src), format!("1 {k}"));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn corpus_runs_are_deterministic(index in 0usize..27, trace in any::<bool>()) {
        let entries = list_entries();
        let entry = &entries[index % entries.len()];
        let config = eogray::Config { trace, max_steps: 200_000, ..entry.config() };
        let a = run_source(entry.program, &entry.file_name(), &config);
        let b = run_source(entry.program, &entry.file_name(), &config);
        prop_assert_eq!(a.output.as_bytes(), b.output.as_bytes());
        prop_assert_eq!(a.trace.as_bytes(), b.trace.as_bytes());
        prop_assert_eq!(a.steps, b.steps);
        prop_assert_eq!(a.result.map_err(|e| e.to_string()), b.result.map_err(|e| e.to_string()));
    }
}

/// A `try` nest `depth` deep whose innermost body throws `payload` at
/// the token of level `target`; handler `j` adds `j * 1000`.
fn nested_try(level: usize, depth: usize, target: usize, payload: i64) -> String {
    let body = if level == depth {
        format!("t{target} {payload} > @")
    } else {
        decorate(&nested_try(level + 1, depth, target, payload))
    };
    format!(
        "try\n  [t{level}]\n{}\n  [e]\n    e.message.add {} > @\n  TRUE",
        indent(&body, 4),
        level * 1000
    )
}

/// Binds a multi-line application to `@` by suffixing its head line.
fn decorate(term: &str) -> String {
    let (head, rest) = term.split_once('\n').unwrap_or((term, ""));
    format!("{head} > @\n{rest}")
}
