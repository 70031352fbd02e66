//! Runtime objects.
//!
//! Objects are reference counted and immutable except for their caches
//! and the three mutable cells (`memory`, `cage`, heap allocations).
//! Attribute objects are materialized once per object copy; dataization
//! is never cached except for `!` constants.

use std::cell::{Cell, OnceCell, RefCell};
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use crate::heap::AllocId;
use crate::syntax::{Formation, Literal, SourceSpan, Term, TermKind};
use crate::traceability::SOURCE_ATTR;
use crate::value::Value;

pub type ObjRef = Rc<Object>;

pub struct Object {
    pub id: u64,
    pub kind: Kind,
}

pub enum Kind {
    Data(Value),
    Formation(FormationObj),
    /// An argument not yet evaluated to an object.
    Lazy(LazyObj),
    /// A `!` binding: its first dataization is remembered.
    Const(ConstObj),
    Atom(Atom),
}

pub struct FormationObj {
    pub form: Rc<Formation>,
    pub label: Rc<str>,
    /// The object in whose body this formation was written; `None` only
    /// for the program root. Also serves as the home (`&`).
    pub parent: Option<ObjRef>,
    pub args: Vec<ObjRef>,
    pub attrs: RefCell<HashMap<String, ObjRef>>,
    pub span: Option<SourceSpan>,
}

impl FormationObj {
    pub fn is_root(&self) -> bool {
        self.parent.is_none()
    }

    /// The literal `source` binding, when there is one.
    pub fn source(&self) -> Option<&str> {
        match &self.form.binding(SOURCE_ATTR)?.term.kind {
            TermKind::Data(Literal::Str(s)) => Some(s),
            _ => None,
        }
    }
}

pub struct LazyObj {
    pub term: Rc<Term>,
    pub env: ObjRef,
    pub forced: OnceCell<ObjRef>,
}

pub struct ConstObj {
    pub inner: ObjRef,
    pub value: OnceCell<Value>,
}

pub struct Atom {
    pub kind: AtomKind,
    pub args: Vec<ObjRef>,
    /// The result object remembered when attributes are looked up
    /// through an object-returning atom such as `seq`.
    pub reduced: OnceCell<ObjRef>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScopeKind {
    Goto,
    Try,
}

impl ScopeKind {
    pub fn name(self) -> &'static str {
        match self {
            ScopeKind::Goto => "goto",
            ScopeKind::Try => "try",
        }
    }
}

/// The capability a `goto` or `try` hands to its body.
pub struct Token {
    pub id: u64,
    pub scope: ScopeKind,
    pub live: Cell<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JumpKind {
    Forward,
    Backward,
    Throw,
}

impl JumpKind {
    pub fn name(self) -> &'static str {
        match self {
            JumpKind::Forward => "forward",
            JumpKind::Backward => "backward",
            JumpKind::Throw => "thrown",
        }
    }
}

pub enum PtrSource {
    /// `heap.pointer address stride`
    Absolute,
    /// `allocation.pointer offset stride`
    Allocation(ObjRef),
    /// `pointer.add k` / `pointer.sub k`
    Shift { base: ObjRef, sign: i64 },
}

pub enum AtomKind {
    /// A namespace such as `Q.org.eolang`.
    Package(Rc<str>),
    Seq,
    Stdout,
    Sprintf,
    Goto,
    Try,
    Raise,
    /// `*`: an array of its arguments.
    Tuple,
    Memory(RefCell<Option<Value>>),
    Cage(RefCell<Option<ObjRef>>),
    /// `write` on a memory, cage, or heap block.
    Write(ObjRef),
    /// A data method with a lazily dataized receiver.
    Method(Rc<str>, ObjRef),
    ArrayOp(&'static str, ObjRef),
    Token(Rc<Token>),
    Jump(Rc<Token>, JumpKind),
    /// What a `catch` receives: decorates the payload, adds `message`.
    Exception(Option<ObjRef>),
    /// Built-in home of data: answers `subtype-of`.
    Home(&'static str),
    SubtypeOf(&'static str),
    Heap,
    Malloc(OnceCell<AllocId>),
    Free,
    Pointer(PtrSource),
    Block { ptr: ObjRef, offset: u64 },
    Snapshot {
        source: ObjRef,
        captured: RefCell<Option<ObjRef>>,
    },
    Anchor(ObjRef),
}

impl AtomKind {
    pub fn name(&self) -> &'static str {
        match self {
            AtomKind::Package(_) => "package",
            AtomKind::Seq => "seq",
            AtomKind::Stdout => "stdout",
            AtomKind::Sprintf => "sprintf",
            AtomKind::Goto => "goto",
            AtomKind::Try => "try",
            AtomKind::Raise => "error",
            AtomKind::Tuple => "array",
            AtomKind::Memory(_) => "memory",
            AtomKind::Cage(_) => "cage",
            AtomKind::Write(_) => "write",
            AtomKind::Method(..) => "method",
            AtomKind::ArrayOp(..) => "array-op",
            AtomKind::Token(_) => "token",
            AtomKind::Jump(..) => "jump",
            AtomKind::Exception(_) => "exception",
            AtomKind::Home(_) => "home",
            AtomKind::SubtypeOf(_) => "subtype-of",
            AtomKind::Heap => "heap",
            AtomKind::Malloc(_) => "malloc",
            AtomKind::Free => "free",
            AtomKind::Pointer(_) => "pointer",
            AtomKind::Block { .. } => "block",
            AtomKind::Snapshot { .. } => "snapshot",
            AtomKind::Anchor(_) => "anchor",
        }
    }

    /// Atoms whose result is an arbitrary object rather than plain data;
    /// attribute lookups continue into that result.
    pub fn returns_object(&self) -> bool {
        match self {
            AtomKind::Seq | AtomKind::Goto | AtomKind::Try => true,
            AtomKind::Method(name, _) => &**name == "if",
            AtomKind::ArrayOp(op, _) => *op == "get",
            _ => false,
        }
    }
}

impl Object {
    pub fn data(&self) -> Option<&Value> {
        match &self.kind {
            Kind::Data(v) => Some(v),
            _ => None,
        }
    }

    pub fn formation(&self) -> Option<&FormationObj> {
        match &self.kind {
            Kind::Formation(f) => Some(f),
            _ => None,
        }
    }

    pub fn atom(&self) -> Option<&Atom> {
        match &self.kind {
            Kind::Atom(a) => Some(a),
            _ => None,
        }
    }
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::Data(Value::Str(s)) => write!(f, "data {s:?}"),
            Kind::Data(v) => write!(f, "data {v}"),
            Kind::Formation(form) => write!(f, "#{} {}", self.id, form.label),
            Kind::Lazy(_) => write!(f, "#{} thunk", self.id),
            Kind::Const(_) => write!(f, "#{} constant", self.id),
            Kind::Atom(a) => match &a.kind {
                AtomKind::Method(name, _) => write!(f, "#{} .{}", self.id, name),
                AtomKind::ArrayOp(op, _) => write!(f, "#{} .{}", self.id, op),
                AtomKind::Package(p) => write!(f, "Q.{p}"),
                kind => write!(f, "#{} {}", self.id, kind.name()),
            },
        }
    }
}
