//! Helpers shared by the integration tests.

#![allow(dead_code)]

use eogray::{run_source, Config, Error, RunReport, Value};

pub fn run(src: &str) -> RunReport {
    run_source(src, "test.phi", &Config::default())
}

pub fn run_with(src: &str, config: &Config) -> RunReport {
    run_source(src, "test.phi", config)
}

/// Runs `src` and returns its stdout, panicking with the error otherwise.
pub fn stdout(src: &str) -> String {
    let report = run(src);
    match report.result {
        Ok(_) => report.output,
        Err(e) => panic!("program failed: {e}\n{src}"),
    }
}

pub fn value(src: &str) -> Value {
    let report = run(src);
    report.result.unwrap_or_else(|e| panic!("program failed: {e}\n{src}"))
}

pub fn error(src: &str) -> Error {
    match run(src).result {
        Ok(v) => panic!("expected an error, got {v}\n{src}"),
        Err(e) => e,
    }
}

/// Indents every line of `text` by `n` spaces.
pub fn indent(text: &str, n: usize) -> String {
    let pad = " ".repeat(n);
    text.lines()
        .map(|l| if l.is_empty() { String::new() } else { format!("{pad}{l}") })
        .collect::<Vec<_>>()
        .join("\n")
}
