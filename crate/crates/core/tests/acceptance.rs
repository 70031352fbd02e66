//! Acceptance gate: one pass/fail line per criterion. Exits non-zero if
//! any criterion fails.

mod common;

use std::time::{Duration, Instant};

use common::indent;
use eogray::cli::main_with;
use eogray::corpus::{find, list_entries, run_entry};
use eogray::{run_source, Config, Runtime, Value};
use proptest::prelude::*;
use proptest::test_runner::{Config as RunnerConfig, TestCaseError, TestRunner};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn main() {
    let criteria: [Criterion; 5] = [
        ("corpus goldens", corpus_goldens),
        ("derived outputs", derived_outputs),
        ("property suites", property_suites),
        ("traceability", traceability),
        ("guard rails", guard_rails),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(reason) => {
                failed += 1;
                println!("FAIL {}. {name}: {reason}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

fn golden(id: &str, expected: &str) -> Result<(), String> {
    let entry = find(id).ok_or_else(|| format!("no entry {id}"))?;
    let report = run_entry(&entry);
    match report.result {
        Ok(_) if report.output == expected => Ok(()),
        Ok(_) => Err(format!("{id}: got {:?}, want {expected:?}", report.output)),
        Err(e) => Err(format!("{id}: {e}")),
    }
}

fn corpus_goldens() -> Check {
    golden("goto-backward", "Finished!")?;
    golden("destructors", "AliveDead")?;
    golden("inheritance-prototype", "4.2")?;
    golden("pointers-stack", "7\n")?;
    golden("inheritance-multiple", "Bark!listen!")?;
    let start = Instant::now();
    let entries = list_entries();
    for entry in &entries {
        entry.check(&run_entry(entry)).map_err(|r| format!("{}: {r}", entry.id))?;
    }
    let took = start.elapsed();
    if took >= Duration::from_secs(5) {
        return Err(format!("corpus took {took:?}"));
    }
    Ok(format!("{} entries pass in {:.2} s", entries.len(), took.as_secs_f64()))
}

fn derived_outputs() -> Check {
    // Inner handler for f(0), outer one for f(5).
    let routes = |x: i64| if x == 0 { ("e1", "IOException") } else { ("e2", "RuntimeException") };
    let expected: String = [0, 5].iter().map(|&x| { let (h, m) = routes(x); format!("{h}: {m}\n") }).collect();
    golden("exceptions-many", &expected)?;

    let mut seq = vec![1i64];
    let (mut a, mut b) = (1i64, 1i64);
    for _ in 2..10 {
        b += a;
        seq.push(b - a);
        a = b;
    }
    let expected: String = seq.iter().map(|n| format!("{n}\n")).collect();
    if expected != "1\n1\n2\n4\n8\n16\n32\n64\n128\n" {
        return Err("generator oracle disagrees with the documented trace".into());
    }
    golden("generators", &expected)?;

    let lines = ["#a", "b", "#c"];
    let expected: String = lines.iter().filter(|l| l.starts_with('#')).copied().collect();
    golden("anonymous-functions", &expected)?;

    golden("pointers-code", &format!("{}\n", 7 + 42))?;
    Ok("exceptions routing, generators, filtering, code pointer".into())
}

fn runner() -> TestRunner {
    TestRunner::new(RunnerConfig {
        cases: 256,
        failure_persistence: None,
        ..RunnerConfig::default()
    })
}

fn program_value(src: &str) -> Result<Value, TestCaseError> {
    run_source(src, "law.phi", &Config::default())
        .result
        .map_err(|e| TestCaseError::fail(format!("{e}\n{src}")))
}

fn program_stdout(src: &str) -> Result<String, TestCaseError> {
    let report = run_source(src, "law.phi", &Config::default());
    report.result.map_err(|e| TestCaseError::fail(format!("{e}\n{src}")))?;
    Ok(report.output)
}

fn law<S: Strategy>(name: &str, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    runner().run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn property_suites() -> Check {
    let text = || proptest::string::string_regex("[a-zA-Z0-9 ,.!?-]{0,40}").unwrap();
    law("memory int roundtrip", any::<i64>(), |v| {
        let src = format!("[] > main\n  memory > m\n  seq > @\n    m.write {v}\n    m\n");
        prop_assert_eq!(program_value(&src)?, Value::Int(v));
        Ok(())
    })?;
    law("block int roundtrip", any::<i64>(), |v| {
        let src = format!(
            "[p] > cell\n  p.block > @\n    8\n    [b] (b.as-int > @)\n[] > main\n  Q.org.eolang.gray.heap.malloc 8 > m\n  \
             cell (m.pointer 0 8) > c\n  seq > @\n    c.write {v}\n    c\n"
        );
        prop_assert_eq!(program_value(&src)?, Value::Int(v));
        Ok(())
    })?;
    law("block string roundtrip", text(), |s| {
        let len = s.len().max(1);
        let src = format!(
            "[p] > t\n  p.block > @\n    {len}\n    [b] (b.as-string > @)\n[] > main\n  Q.org.eolang.gray.heap.malloc {len} > m\n  \
             t (m.pointer 0 {len}) > c\n  seq > @\n    c.write \"{s}\"\n    c\n"
        );
        prop_assert_eq!(program_value(&src)?, Value::Str(s));
        Ok(())
    })?;
    law("pointer algebra", (10_000i64..1_000_000, 1i64..200, -40i64..40), |(addr, stride, k)| {
        let src = format!(
            "Q.org.eolang.gray.heap.pointer > p\n  {addr}\n  {stride}\n[] > main\n  \
             stdout (sprintf \"%d %d %d\" ((p.add {k}).sub {k}) (p.add {k}) (p.add 0)) > @\n"
        );
        prop_assert_eq!(program_stdout(&src)?, format!("{addr} {} {addr}", addr + k * stride));
        Ok(())
    })?;
    law("goto forward", (any::<i64>(), 1usize..6), |(v, dead)| {
        let body = format!("g.forward {v}\n{}", "hits.write (hits.add 1)\n".repeat(dead));
        let src = format!(
            "[] > main\n  memory > hits\n  Q.org.eolang.gray.goto > r\n    [g]\n      seq > @\n{}\n  \
             seq > @\n    hits.write 0\n    stdout (sprintf \"%d,%d\" r hits)\n",
            indent(&body, 8)
        );
        prop_assert_eq!(program_stdout(&src)?, format!("{v},0"));
        Ok(())
    })?;
    law("try/finally", (any::<bool>(), -1000i64..1000, -1000i64..1000), |(throw, payload, ok)| {
        let src = format!(
            "[] > main\n  memory > fin\n  seq > @\n    fin.write 0\n    stdout\n      sprintf\n        \"%d %d\"\n        \
             try\n          [t]\n            if. > @\n              {}\n              t {payload}\n              {ok}\n          \
             [e]\n            e.message.add 1000 > @\n          fin.write (fin.add 1)\n        fin\n",
            if throw { "TRUE" } else { "FALSE" }
        );
        let expected = if throw { payload + 1000 } else { ok };
        prop_assert_eq!(program_stdout(&src)?, format!("{expected} 1"));
        Ok(())
    })?;
    let nesting = (1usize..=4).prop_flat_map(|d| (Just(d), 1..=d, 0i64..1000));
    law("nested tokens", nesting, |(depth, target, payload)| {
        let src = format!("[] > main\n{}\n", indent(&decorate(&nested_try(1, depth, target, payload)), 2));
        prop_assert_eq!(program_value(&src)?, Value::Int(payload + target as i64 * 1000));
        Ok(())
    })?;
    law("if single branch", (any::<i32>(), any::<i32>()), |(a, b)| {
        let src = format!(
            "[] > main\n  memory > x\n  memory > y\n  seq > @\n    x.write 0\n    y.write 0\n    \
             if.\n      {a}.less {b}\n      x.write 1\n      y.write 1\n    stdout (sprintf \"%d %d\" x y)\n"
        );
        prop_assert_eq!(program_stdout(&src)?, if a < b { "1 0" } else { "0 1" });
        Ok(())
    })?;
    law("constant forced once", 1usize..10, |k| {
        let src = format!(
            "[] > main\n  memory > n\n  n.write (n.add 1) > c!\n  seq > @\n    n.write 0\n{}\n    n\n",
            indent(&"c\n".repeat(k), 4)
        );
        prop_assert_eq!(program_value(&src)?, Value::Int(1));
        Ok(())
    })?;
    let entries = list_entries();
    let count = entries.len();
    let mut det = TestRunner::new(RunnerConfig { cases: 200, failure_persistence: None, ..RunnerConfig::default() });
    det.run(&(0..count), |i| {
        let e = &entries[i];
        let a = run_entry(e);
        let b = run_entry(e);
        prop_assert_eq!(a.output.as_bytes(), b.output.as_bytes());
        prop_assert_eq!(a.steps, b.steps);
        Ok(())
    })
    .map_err(|e| format!("determinism: {e}"))?;
    Ok("10 laws, at least 200 cases each".into())
}

fn nested_try(level: usize, depth: usize, target: usize, payload: i64) -> String {
    let body = if level == depth {
        format!("t{target} {payload} > @")
    } else {
        decorate(&nested_try(level + 1, depth, target, payload))
    };
    format!("try\n  [t{level}]\n{}\n  [e]\n    e.message.add {} > @\n  TRUE", indent(&body, 4), level * 1000)
}

fn decorate(term: &str) -> String {
    let (head, rest) = term.split_once('\n').unwrap_or((term, ""));
    format!("{head} > @\n{rest}")
}

fn traceability() -> Check {
    let entry = find("traceability").ok_or("no traceability entry")?;
    let config = Config { trace: true, traceability: true, ..Config::default() };
    let report = run_source(entry.program, &entry.file_name(), &config);
    report.result.as_ref().map_err(|e| e.to_string())?;
    for span in ["src/main.c:0-2", "src/main.c:1-1"] {
        if !report.trace.contains(&format!("[{span}]")) {
            return Err(format!("trace lacks {span}"));
        }
    }
    let src = "[] > mine\n  \"custom\" > source\n  1 > @\n[] > plain\n  2 > @\n";
    let config = Config { traceability: true, ..Config::default() };
    let rt = Runtime::from_source(src, "user.phi", &config).map_err(|e| e.to_string())?;
    if rt.warnings().len() != 1 || !rt.warnings()[0].to_string().contains("user.phi:0-2") {
        return Err(format!("warnings: {:?}", rt.warnings()));
    }
    let kept = rt.eval("mine.source").map_err(|e| e.to_string())?;
    let synthetic = rt.eval("plain.source").map_err(|e| e.to_string())?;
    if kept != Value::Str("custom".into()) || synthetic != Value::Str("user.phi:3-4".into()) {
        return Err(format!("sources: {kept} / {synthetic}"));
    }
    Ok("spans traced; user source kept with a warning".into())
}

fn cli_run(text: &str) -> (i32, String) {
    let path = std::env::temp_dir().join(format!("eogray-acceptance-{}-{}.phi", std::process::id(), text.len()));
    std::fs::write(&path, text).expect("write program");
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = main_with(["eogray", "run", path.to_str().unwrap()], &mut out, &mut err);
    let _ = std::fs::remove_file(&path);
    (code, String::from_utf8_lossy(&err).into_owned())
}

fn guard_rails() -> Check {
    let backward = "[] > main\n  Q.org.eolang.gray.goto > @\n    [g]\n      g.backward > @\n";
    let divergent = find("goto-complex-divergent").ok_or("no divergent entry")?.program;
    for (name, src) in [("backward jump", backward), ("goto-complex divergence", divergent)] {
        let (code, err) = cli_run(src);
        if code != 3 {
            return Err(format!("{name}: exit {code}: {err}"));
        }
    }
    let cell = "[p] > cell\n  p.block > @\n    8\n    [b] (b.as-int > @)\n";
    let faults = [
        ("division by zero", "[] > main\n  42.div 0 > @\n".to_string()),
        ("read before write", "[] > main\n  memory > m\n  m.add 1 > @\n".to_string()),
        (
            "double free",
            "[] > main\n  Q.org.eolang.gray.heap.malloc 8 > m\n  seq > @\n    m.free\n    m.free\n".to_string(),
        ),
        (
            "out of bounds",
            format!("{cell}[] > main\n  Q.org.eolang.gray.heap.malloc 8 > m\n  (cell (m.pointer 4 8)).write 1 > @\n"),
        ),
    ];
    let mut seen: Vec<String> = Vec::new();
    for (name, src) in &faults {
        let (code, err) = cli_run(src);
        if code != 1 {
            return Err(format!("{name}: exit {code}: {err}"));
        }
        if seen.contains(&err) {
            return Err(format!("{name}: diagnostic not distinct: {err}"));
        }
        seen.push(err);
    }
    Ok("divergence exits 3; four faults exit 1 with distinct messages".into())
}
