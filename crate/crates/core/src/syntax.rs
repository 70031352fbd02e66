//! Parsed program representation.

use std::fmt;
use std::rc::Rc;

/// Location of a construct in its source file. Lines are zero-based and
/// inclusive on both ends.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SourceSpan {
    pub file: Rc<str>,
    pub first_line: usize,
    pub last_line: usize,
}

impl SourceSpan {
    pub fn new(file: Rc<str>, first_line: usize, last_line: usize) -> Self {
        debug_assert!(first_line <= last_line);
        SourceSpan {
            file,
            first_line,
            last_line,
        }
    }

    pub fn line(file: Rc<str>, line: usize) -> Self {
        SourceSpan::new(file, line, line)
    }

    pub fn to(&self, other: &SourceSpan) -> SourceSpan {
        SourceSpan::new(
            self.file.clone(),
            self.first_line.min(other.first_line),
            self.last_line.max(other.last_line),
        )
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}-{}", self.file, self.first_line, self.last_line)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Literal {
    Int(i64),
    Float(f64),
    Str(String),
    Bool(bool),
    Bytes(Vec<u8>),
}

/// A syntax node. Equality ignores spans.
#[derive(Debug, Clone)]
pub struct Term {
    pub kind: TermKind,
    pub span: SourceSpan,
}

impl PartialEq for Term {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum TermKind {
    Formation(Rc<Formation>),
    Application {
        head: Rc<Term>,
        args: Vec<Rc<Term>>,
    },
    /// `receiver.attr`; a missing receiver is a lexical name lookup.
    /// The copy suffix `x'` is the attribute `'`, the anchor `x.<` is `<`.
    Dispatch {
        receiver: Option<Rc<Term>>,
        attr: String,
    },
    Data(Literal),
    Meta {
        name: String,
        value: String,
    },
}

/// An object literal: `[params] > name` plus its bindings.
#[derive(Debug, Clone, PartialEq)]
pub struct Formation {
    pub params: Vec<String>,
    /// The last parameter collects the remaining arguments.
    pub variadic: bool,
    pub bindings: Vec<Binding>,
    /// `/type` marker of an abstract atom declaration.
    pub atom: Option<String>,
}

impl Formation {
    pub fn binding(&self, name: &str) -> Option<&Binding> {
        self.bindings.iter().find(|b| b.name == name)
    }

    pub fn param_index(&self, name: &str) -> Option<usize> {
        self.params.iter().position(|p| p == name)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Binding {
    pub name: String,
    pub term: Rc<Term>,
    /// Suffixed with `!`: dataized at most once per owning object.
    pub constant: bool,
}

/// A top-level item: either a named root binding, an anonymous object,
/// or a meta line such as `+import`.
#[derive(Debug, Clone, PartialEq)]
pub struct TopLevel {
    pub name: Option<String>,
    pub constant: bool,
    pub term: Rc<Term>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Program {
    pub file: Rc<str>,
    pub items: Vec<TopLevel>,
    pub line_count: usize,
}

impl Program {
    pub fn empty(file: &str) -> Self {
        Program {
            file: file.into(),
            items: Vec::new(),
            line_count: 0,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn imports(&self) -> impl Iterator<Item = &str> {
        self.items.iter().filter_map(|item| match &item.term.kind {
            TermKind::Meta { name, value } if name == "import" => Some(value.as_str()),
            _ => None,
        })
    }

    /// Objects of the program, metas excluded.
    pub fn objects(&self) -> impl Iterator<Item = &TopLevel> {
        self.items
            .iter()
            .filter(|item| !matches!(item.term.kind, TermKind::Meta { .. }))
    }

    pub fn named(&self, name: &str) -> Option<&TopLevel> {
        self.objects().find(|item| item.name.as_deref() == Some(name))
    }
}

impl Term {
    pub fn name(attr: &str, span: SourceSpan) -> Term {
        Term {
            kind: TermKind::Dispatch {
                receiver: None,
                attr: attr.to_string(),
            },
            span,
        }
    }

    pub fn string(text: &str, span: SourceSpan) -> Term {
        Term {
            kind: TermKind::Data(Literal::Str(text.to_string())),
            span,
        }
    }

    pub fn as_formation(&self) -> Option<&Rc<Formation>> {
        match &self.kind {
            TermKind::Formation(f) => Some(f),
            _ => None,
        }
    }

    /// Visits this term and every nested term, depth first.
    pub fn walk(&self, visit: &mut dyn FnMut(&Term)) {
        visit(self);
        match &self.kind {
            TermKind::Formation(f) => {
                for b in &f.bindings {
                    b.term.walk(visit);
                }
            }
            TermKind::Application { head, args } => {
                head.walk(visit);
                for a in args {
                    a.walk(visit);
                }
            }
            TermKind::Dispatch {
                receiver: Some(r), ..
            } => r.walk(visit),
            _ => {}
        }
    }
}
