//! A runtime for a small EO-style object calculus: objects, decoration
//! and dataization, plus "gray" atoms (`goto`, `cage`, `try`, `heap`,
//! `memory`) that make imperative features expressible as objects.
//!
//! ```
//! use eogray::{Config, Runtime};
//!
//! let src = "[a b] > max\n  if. > @\n    a.greater b\n    a\n    b\n";
//! let rt = Runtime::from_source(src, "max.phi", &Config::default()).unwrap();
//! assert_eq!(rt.eval("max 7 42").unwrap(), eogray::Value::Int(42));
//! ```

pub mod atoms;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod eval;
pub mod heap;
pub mod object;
pub mod parser;
pub mod printer;
pub mod runtime;
pub mod syntax;
pub mod traceability;
pub mod value;

pub use error::{Error, RuntimeError};
pub use heap::{HeapError, HeapStore};
pub use parser::{parse_expression, parse_program, ParseError};
pub use printer::{print_program, print_term};
pub use runtime::{run_source, Config, RunReport, Runtime};
pub use syntax::{Program, SourceSpan, Term};
pub use value::Value;
