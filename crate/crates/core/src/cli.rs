//! Command-line front end: `run`, `corpus`, `eval`.
//!
//! Exit status: 0 success, 1 runtime error, 2 parse or usage error,
//! 3 exhausted step budget (or nesting depth).

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::corpus;
use crate::error::Error;
use crate::eval::DEFAULT_MAX_STEPS;
use crate::heap::DEFAULT_HEAP_SIZE;
use crate::parser::ParseError;
use crate::runtime::{on_big_stack, run_source, Config, Runtime};

#[derive(Debug, Parser)]
#[command(name = "eogray", version, about = "Run EO object-calculus programs with gray atoms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dataize a program: `main`, else `app`, else its last object.
    Run {
        file: PathBuf,
        /// Print every dataization step to stderr.
        #[arg(long)]
        trace: bool,
        /// Give every object a `source` attribute with its line span.
        #[arg(long)]
        traceability: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_STEPS,
              value_parser = clap::value_parser!(u64).range(1..))]
        max_steps: u64,
        #[arg(long, default_value_t = DEFAULT_HEAP_SIZE as u64,
              value_parser = clap::value_parser!(u64).range(16..))]
        heap_size: u64,
    },
    /// Run the built-in feature corpus, optionally filtered by id glob.
    Corpus { glob: Option<String> },
    /// Dataize one expression and print its value.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value_t = DEFAULT_MAX_STEPS,
              value_parser = clap::value_parser!(u64).range(1..))]
        max_steps: u64,
    },
}

/// Parses `args` (program name first) and executes the command.
pub fn main_with<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    execute(cli.command, out, err)
}

pub fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match command {
        Command::Run {
            file,
            trace,
            traceability,
            max_steps,
            heap_size,
        } => {
            let config = Config {
                max_steps,
                heap_size: heap_size as usize,
                trace,
                traceability,
                ..Config::default()
            };
            run_file(&file, &config, out, err)
        }
        Command::Corpus { glob } => run_corpus(glob.as_deref(), out, err),
        Command::Eval { expr, max_steps } => {
            let config = Config {
                max_steps,
                ..Config::default()
            };
            eval_expr(&expr, &config, out, err)
        }
    }
}

fn run_file(file: &std::path::Path, config: &Config, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let name = file.display().to_string();
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            let e = Error::Parse(ParseError {
                file: name,
                line: 0,
                message: format!("cannot read file: {e}"),
            });
            let _ = writeln!(err, "error: {e}");
            return e.exit_code();
        }
    };
    let report = run_source(&text, &name, config);
    for w in &report.warnings {
        let _ = writeln!(err, "{w}");
    }
    let _ = err.write_all(report.trace.as_bytes());
    let _ = out.write_all(report.output.as_bytes());
    let _ = out.flush();
    match report.result {
        Ok(_) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn run_corpus(glob: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let entries = match corpus::filter(glob.unwrap_or("*")) {
        Ok(e) => e,
        Err(e) => {
            let _ = writeln!(err, "error: bad pattern: {e}");
            return 2;
        }
    };
    let width = entries.iter().map(|e| e.id.len()).max().unwrap_or(2).max(2);
    let _ = writeln!(out, "{:<width$}  result  reason", "id");
    let mut failed = 0;
    for entry in &entries {
        let report = corpus::run_entry(entry);
        match entry.check(&report) {
            Ok(()) => {
                let _ = writeln!(out, "{:<width$}  pass", entry.id);
            }
            Err(reason) => {
                failed += 1;
                let _ = writeln!(out, "{:<width$}  FAIL    {reason}", entry.id);
            }
        }
    }
    let _ = writeln!(out, "{} passed, {} failed", entries.len() - failed, failed);
    i32::from(failed > 0)
}

fn eval_expr(expr: &str, config: &Config, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let expr = expr.to_string();
    let config = config.clone();
    let (result, output) = on_big_stack(move || {
        let rt = Runtime::new(crate::syntax::Program::empty("<eval>"), &config);
        let result = rt.eval(&expr).map(|v| v.to_string());
        (result, rt.output())
    });
    let _ = out.write_all(output.as_bytes());
    match result {
        Ok(v) => {
            let _ = writeln!(out, "{v}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
