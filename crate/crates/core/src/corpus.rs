//! The feature corpus: one program per translated language feature, each
//! with its expected output and notes on how it was reconstructed.

use crate::error::Error;
use crate::runtime::{run_source, Config, RunReport};
use crate::value::Value;

/// How a corpus run is expected to end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// Completes; stdout equals the golden output byte for byte.
    Completes,
    /// Exhausts the step budget; stdout starts with the golden output.
    Diverges,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub id: &'static str,
    /// The feature family the program illustrates.
    pub feature: &'static str,
    pub program: &'static str,
    pub expected_stdout: &'static str,
    pub notes: &'static str,
    pub outcome: Outcome,
    /// Run with synthetic `source` attributes.
    pub traceability: bool,
}

impl CorpusEntry {
    pub fn file_name(&self) -> String {
        format!("corpus/{}/program.phi", self.id)
    }

    pub fn config(&self) -> Config {
        Config {
            traceability: self.traceability,
            ..Config::default()
        }
    }

    /// Checks a run against the golden output; `Err` carries the reason.
    pub fn check(&self, report: &RunReport) -> Result<(), String> {
        match (self.outcome, &report.result) {
            (Outcome::Completes, Ok(_)) => {
                if report.output == self.expected_stdout {
                    Ok(())
                } else {
                    Err(format!(
                        "stdout {:?} differs from expected {:?}",
                        report.output, self.expected_stdout
                    ))
                }
            }
            (Outcome::Completes, Err(e)) => Err(e.to_string()),
            (Outcome::Diverges, Err(Error::Runtime(e))) if e.is_budget() => {
                if report.output.starts_with(self.expected_stdout) {
                    Ok(())
                } else {
                    Err(format!(
                        "stdout does not start with {:?}",
                        self.expected_stdout
                    ))
                }
            }
            (Outcome::Diverges, Err(e)) => Err(format!("expected budget exhaustion, got: {e}")),
            (Outcome::Diverges, Ok(_)) => Err("expected budget exhaustion, but it completed".into()),
        }
    }
}

macro_rules! entry {
    ($id:literal, $feature:literal) => {
        entry!($id, $feature, Outcome::Completes, false)
    };
    ($id:literal, $feature:literal, $outcome:expr, $traceability:expr) => {
        CorpusEntry {
            id: $id,
            feature: $feature,
            program: include_str!(concat!("../corpus/", $id, "/program.phi")),
            expected_stdout: include_str!(concat!("../corpus/", $id, "/expected.txt")),
            notes: include_str!(concat!("../corpus/", $id, "/NOTES.md")),
            outcome: $outcome,
            traceability: $traceability,
        }
    };
}

/// All entries, in presentation order.
pub fn list_entries() -> Vec<CorpusEntry> {
    vec![
        entry!("goto-backward", "goto"),
        entry!("goto-forward", "goto"),
        entry!("goto-complex", "goto"),
        entry!("goto-complex-divergent", "goto", Outcome::Diverges, false),
        entry!("multiple-returns", "goto"),
        entry!("pointers-book", "pointers"),
        entry!("pointers-code", "pointers"),
        entry!("pointers-stack", "pointers"),
        entry!("procedures", "procedures"),
        entry!("classes", "classes"),
        entry!("destructors", "destructors"),
        entry!("exceptions", "exceptions"),
        entry!("exceptions-many", "exceptions"),
        entry!("anonymous-functions", "anonymous functions"),
        entry!("generators", "generators"),
        entry!("types", "types and type casting"),
        entry!("reflection-monkey-patching", "reflection"),
        entry!("static-methods", "static methods"),
        entry!("inheritance", "inheritance"),
        entry!("inheritance-prototype", "inheritance"),
        entry!("inheritance-multiple", "inheritance"),
        entry!("overloading", "method overloading"),
        entry!("generics", "generics"),
        entry!("templates", "templates"),
        entry!("mixins", "mixins"),
        entry!("annotations", "annotations"),
        entry!("traceability", "traceability", Outcome::Completes, true),
    ]
}

/// Alternative ids accepted by [`find`].
pub const ALIASES: &[(&str, &str)] = &[("prototype-inheritance", "inheritance-prototype")];

pub fn find(id: &str) -> Option<CorpusEntry> {
    let id = ALIASES
        .iter()
        .find(|(alias, _)| *alias == id)
        .map_or(id, |(_, target)| target);
    list_entries().into_iter().find(|e| e.id == id)
}

/// Entries whose id matches a shell-style pattern such as `goto-*`.
pub fn filter(pattern: &str) -> Result<Vec<CorpusEntry>, glob::PatternError> {
    let pattern = glob::Pattern::new(pattern)?;
    Ok(list_entries()
        .into_iter()
        .filter(|e| pattern.matches(e.id))
        .collect())
}

/// Runs one entry under the default budget.
pub fn run_entry(entry: &CorpusEntry) -> RunReport {
    run_source(entry.program, &entry.file_name(), &entry.config())
}

/// Runs an entry by id; the result carries the program's stdout and its
/// final value, or the runtime error prefixed with the id.
pub fn run_id(id: &str) -> Result<(String, Value), String> {
    let entry = find(id).ok_or_else(|| format!("no corpus entry `{id}`"))?;
    let report = run_entry(&entry);
    match report.result {
        Ok(v) => Ok((report.output, v)),
        Err(e) => Err(format!("{id}: {e}")),
    }
}
