//! Synthetic `source` attributes that map objects back to the lines they
//! were written on.

use std::fmt;
use std::rc::Rc;

use crate::syntax::{Binding, Formation, Program, Term, TermKind, TopLevel};

pub const SOURCE_ATTR: &str = "source";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Warning {
    pub span: String,
    pub message: String,
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "warning: {}: {}", self.span, self.message)
    }
}

/// Gives every formation in `term` a `source` binding holding its span.
/// Formations that already bind `source` keep their own and produce a
/// warning instead.
pub fn attach_source(term: &Rc<Term>, warnings: &mut Vec<Warning>) -> Rc<Term> {
    let kind = match &term.kind {
        TermKind::Formation(f) => {
            let mut bindings: Vec<Binding> = f
                .bindings
                .iter()
                .map(|b| Binding {
                    name: b.name.clone(),
                    term: attach_source(&b.term, warnings),
                    constant: b.constant,
                })
                .collect();
            if f.binding(SOURCE_ATTR).is_some() || f.param_index(SOURCE_ATTR).is_some() {
                warnings.push(Warning {
                    span: term.span.to_string(),
                    message: "object already has a `source` attribute; synthetic one suppressed"
                        .to_string(),
                });
            } else {
                bindings.push(Binding {
                    name: SOURCE_ATTR.to_string(),
                    term: Rc::new(Term::string(&term.span.to_string(), term.span.clone())),
                    constant: false,
                });
            }
            TermKind::Formation(Rc::new(Formation {
                params: f.params.clone(),
                variadic: f.variadic,
                bindings,
                atom: f.atom.clone(),
            }))
        }
        TermKind::Application { head, args } => TermKind::Application {
            head: attach_source(head, warnings),
            args: args.iter().map(|a| attach_source(a, warnings)).collect(),
        },
        TermKind::Dispatch {
            receiver: Some(r),
            attr,
        } => TermKind::Dispatch {
            receiver: Some(attach_source(r, warnings)),
            attr: attr.clone(),
        },
        _ => return term.clone(),
    };
    Rc::new(Term {
        kind,
        span: term.span.clone(),
    })
}

/// Applies [`attach_source`] to every object of a program.
pub fn attach_program_sources(program: &Program) -> (Program, Vec<Warning>) {
    let mut warnings = Vec::new();
    let items = program
        .items
        .iter()
        .map(|item| TopLevel {
            name: item.name.clone(),
            constant: item.constant,
            term: attach_source(&item.term, &mut warnings),
        })
        .collect();
    (
        Program {
            file: program.file.clone(),
            items,
            line_count: program.line_count,
        },
        warnings,
    )
}
