use thiserror::Error;

use crate::heap::HeapError;
use crate::parser::ParseError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RuntimeError {
    #[error("attribute `{attr}` not found in {object}")]
    AttributeNotFound { object: String, attr: String },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("the root object has no parent")]
    ParentOfRoot,
    #[error("{0} cannot be dataized: it has neither `@` nor a native behavior")]
    MissingDecoratee(String),
    #[error("{object} is missing argument `{param}`")]
    PartialApplication { object: String, param: String },
    #[error("{object} takes {expected} argument(s), got {got}")]
    TooManyArguments {
        object: String,
        expected: usize,
        got: usize,
    },
    #[error("{0} cannot be applied to arguments")]
    NotApplicable(String),
    #[error("budget of {0} dataization steps exhausted")]
    BudgetExhausted(u64),
    #[error("nesting depth limit of {0} exceeded")]
    DepthExceeded(usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("integer overflow in `{0}`")]
    Overflow(String),
    #[error("`{op}` expects {expected}, got {found}")]
    TypeMismatch {
        op: String,
        expected: String,
        found: String,
    },
    #[error("`{op}` expects {expected} argument(s), got {got}")]
    Arity {
        op: String,
        expected: usize,
        got: usize,
    },
    #[error("memory read before the first write")]
    UninitializedMemory,
    #[error("cage is empty")]
    EmptyCage,
    #[error("jump token used after its `{0}` scope exited")]
    DeadToken(&'static str),
    #[error("`{0}` signal escaped every enclosing scope")]
    EscapedSignal(&'static str),
    #[error("heap: {0}")]
    Heap(#[from] HeapError),
    #[error("sprintf: {0}")]
    Format(String),
    #[error("index {index} out of range for an array of {len}")]
    IndexOutOfRange { index: i64, len: usize },
    #[error("`.<` applies only to snapshots made with `'`")]
    NotASnapshot,
    #[error("abstract atom `/{0}` has no implementation")]
    AbstractAtom(String),
    #[error("{0}")]
    Raised(String),
}

impl RuntimeError {
    /// Divergence guards rather than faults in the program itself.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            RuntimeError::BudgetExhausted(_) | RuntimeError::DepthExceeded(_)
        )
    }

    pub(crate) fn mismatch(op: &str, expected: &str, found: &str) -> Self {
        RuntimeError::TypeMismatch {
            op: op.to_string(),
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("runtime error: {0}")]
    Runtime(#[from] RuntimeError),
}

impl Error {
    /// Process exit status: 1 runtime error, 2 parse error, 3 budget.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::Runtime(e) if e.is_budget() => 3,
            Error::Runtime(_) => 1,
        }
    }
}
