//! Program instances: a parsed program, its interpreter state, and the
//! captured output.

use std::cell::RefCell;
use std::io::{self, Write};
use std::rc::Rc;

use crate::error::{Error, RuntimeError};
use crate::eval::{Interp, DEFAULT_MAX_DEPTH, DEFAULT_MAX_STEPS};
use crate::heap::DEFAULT_HEAP_SIZE;
use crate::object::ObjRef;
use crate::parser::{parse_expression, parse_program};
use crate::syntax::{Program, TermKind};
use crate::traceability::{attach_program_sources, Warning};
use crate::value::Value;

/// Stack size for threads that run programs; deep recursion in the
/// evaluated program turns into deep native recursion.
pub const STACK_SIZE: usize = 1 << 30;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub max_steps: u64,
    pub max_depth: usize,
    pub heap_size: usize,
    pub trace: bool,
    pub traceability: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_steps: DEFAULT_MAX_STEPS,
            max_depth: DEFAULT_MAX_DEPTH,
            heap_size: DEFAULT_HEAP_SIZE,
            trace: false,
            traceability: false,
        }
    }
}

/// A byte sink that can be read back while the runtime still holds it.
#[derive(Clone, Default)]
pub struct Capture(Rc<RefCell<Vec<u8>>>);

impl Capture {
    pub fn bytes(&self) -> Vec<u8> {
        self.0.borrow().clone()
    }

    pub fn text(&self) -> String {
        String::from_utf8_lossy(&self.0.borrow()).into_owned()
    }
}

impl Write for Capture {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        self.0.borrow_mut().extend_from_slice(buf);
        Ok(buf.len())
    }

    fn flush(&mut self) -> io::Result<()> {
        Ok(())
    }
}

/// One loaded program. Evaluation runs on the calling thread and recurses
/// natively; deep programs need [`on_big_stack`] or [`run_source`].
pub struct Runtime {
    program: Program,
    interp: Interp,
    root: ObjRef,
    warnings: Vec<Warning>,
    output: Option<Capture>,
    trace: Option<Capture>,
}

impl Runtime {
    /// Loads a parsed program; output and trace lines are captured.
    pub fn new(program: Program, config: &Config) -> Self {
        let output = Capture::default();
        let trace = Capture::default();
        let mut rt = Runtime::with_sinks(
            program,
            config,
            Box::new(output.clone()),
            Box::new(trace.clone()),
        );
        rt.output = Some(output);
        rt.trace = config.trace.then_some(trace);
        rt
    }

    /// Loads a parsed program that writes output and trace lines (when
    /// tracing is on) straight to the given sinks.
    pub fn with_sinks(
        program: Program,
        config: &Config,
        output: Box<dyn Write>,
        trace: Box<dyn Write>,
    ) -> Self {
        let (program, warnings) = if config.traceability {
            attach_program_sources(&program)
        } else {
            (program, Vec::new())
        };
        let mut interp = Interp::new(config.max_steps, config.max_depth, config.heap_size, output);
        if config.trace {
            interp.set_trace(trace, config.traceability);
        }
        let root = interp.load(&program);
        Runtime {
            program,
            interp,
            root,
            warnings,
            output: None,
            trace: None,
        }
    }

    pub fn from_source(text: &str, file: &str, config: &Config) -> Result<Self, Error> {
        Ok(Runtime::new(parse_program(text, file)?, config))
    }

    pub fn program(&self) -> &Program {
        &self.program
    }

    pub fn warnings(&self) -> &[Warning] {
        &self.warnings
    }

    pub fn steps(&self) -> u64 {
        self.interp.steps()
    }

    pub fn interp(&self) -> &Interp {
        &self.interp
    }

    /// Captured program output so far (empty when redirected).
    pub fn output(&self) -> String {
        self.output.as_ref().map(Capture::text).unwrap_or_default()
    }

    pub fn output_bytes(&self) -> Vec<u8> {
        self.output.as_ref().map(Capture::bytes).unwrap_or_default()
    }

    /// Captured trace lines so far.
    pub fn trace(&self) -> String {
        self.trace.as_ref().map(Capture::text).unwrap_or_default()
    }

    /// Dataizes the program's entry object: `main`, else `app`, else
    /// the last top-level object.
    pub fn run(&self) -> Result<Value, RuntimeError> {
        self.interp.reset_steps();
        for name in ["main", "app"] {
            if self.program.named(name).is_some() {
                return self.dataize_named(name);
            }
        }
        let Some(last) = self.program.objects().last() else {
            return Err(RuntimeError::MissingDecoratee("an empty program".into()));
        };
        match &last.name {
            Some(name) => self.dataize_named(name),
            None => self.interp.run_term(&last.term),
        }
    }

    /// Dataizes one named top-level object.
    pub fn dataize_named(&self, name: &str) -> Result<Value, RuntimeError> {
        let obj = self
            .interp
            .resolve(&self.root, name)
            .map_err(|f| f.into_error())?;
        self.interp.run(&obj)
    }

    /// Parses `expr` and dataizes it in the scope of this program.
    pub fn eval(&self, expr: &str) -> Result<Value, Error> {
        self.interp.reset_steps();
        let term = parse_expression(expr, "<eval>")?;
        if let TermKind::Meta { .. } = term.kind {
            return Err(RuntimeError::NotApplicable("a meta line".into()).into());
        }
        Ok(self.interp.run_term(&term)?)
    }
}

/// Outcome of running a program to completion in isolation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub result: Result<Value, Error>,
    pub output: String,
    pub trace: String,
    pub warnings: Vec<Warning>,
    pub steps: u64,
}

/// Parses and runs `text` on a dedicated thread with a large stack.
pub fn run_source(text: &str, file: &str, config: &Config) -> RunReport {
    let text = text.to_string();
    let file = file.to_string();
    let config = config.clone();
    on_big_stack(move || match Runtime::from_source(&text, &file, &config) {
        Ok(rt) => {
            let result = rt.run().map_err(Error::from);
            RunReport {
                result,
                output: rt.output(),
                trace: rt.trace(),
                warnings: rt.warnings().to_vec(),
                steps: rt.steps(),
            }
        }
        Err(e) => RunReport {
            result: Err(e),
            output: String::new(),
            trace: String::new(),
            warnings: Vec::new(),
            steps: 0,
        },
    })
}

/// Runs `f` on a thread with [`STACK_SIZE`] bytes of stack.
pub fn on_big_stack<T: Send + 'static>(f: impl FnOnce() -> T + Send + 'static) -> T {
    std::thread::Builder::new()
        .stack_size(STACK_SIZE)
        .spawn(f)
        .expect("spawn evaluation thread")
        .join()
        .unwrap_or_else(|e| std::panic::resume_unwind(e))
}
