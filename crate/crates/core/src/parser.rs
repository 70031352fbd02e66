//! Indentation-sensitive parser for the object-calculus surface syntax.
//!
//! A program is a tree of lines indented by two spaces per level. A line
//! is either a formation header (`[a b] > max`), an expression
//! (`i.write (i.add 1)`), a reversed dispatch heading its argument list
//! (`if.` followed by receiver and arguments), or a meta (`+import ...`).
//! Children of a formation are its bindings; children of an expression
//! are additional arguments. An argument line carrying `> name` declares
//! that name as a binding of the closest enclosing formation and passes a
//! reference to it.

use std::collections::HashSet;
use std::rc::Rc;

use thiserror::Error;

use crate::syntax::{Binding, Formation, Literal, Program, SourceSpan, Term, TermKind, TopLevel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{file}:{line}: {message}")]
pub struct ParseError {
    pub file: String,
    /// One-based, as editors count.
    pub line: usize,
    pub message: String,
}

pub fn parse_program(text: &str, file: &str) -> Result<Program, ParseError> {
    let file: Rc<str> = Rc::from(file);
    let raw_lines: Vec<&str> = text.lines().collect();
    let mut lines = Vec::new();
    for (no, raw) in raw_lines.iter().enumerate() {
        let content = raw.trim_end();
        if content.trim_start().is_empty() || content.trim_start().starts_with('#') {
            continue;
        }
        if content.starts_with('\t') || content.trim_start_matches(' ').starts_with('\t') {
            return Err(error(&file, no, "tabs are not allowed in indentation"));
        }
        let indent = content.len() - content.trim_start_matches(' ').len();
        if indent % 2 != 0 {
            return Err(error(
                &file,
                no,
                format!("indentation of {indent} spaces is not a multiple of two"),
            ));
        }
        lines.push(RawLine {
            no,
            indent,
            content: content[indent..].to_string(),
        });
    }
    let mut pos = 0;
    let nodes = build_tree(&file, &lines, &mut pos, 0)?;
    if pos < lines.len() {
        return Err(error(&file, lines[pos].no, "unexpected indentation"));
    }

    let parser = Parser { file: file.clone() };
    let mut items = Vec::new();
    let mut names = HashSet::new();
    for node in &nodes {
        if let Some(meta) = node.content.strip_prefix('+') {
            if !node.children.is_empty() {
                return Err(error(&file, node.no, "a meta line cannot have children"));
            }
            let (name, value) = match meta.split_once(' ') {
                Some((n, v)) => (n.trim(), v.trim()),
                None => (meta.trim(), ""),
            };
            if name.is_empty() {
                return Err(error(&file, node.no, "empty meta"));
            }
            items.push(TopLevel {
                name: None,
                constant: false,
                term: Rc::new(Term {
                    kind: TermKind::Meta {
                        name: name.to_string(),
                        value: value.to_string(),
                    },
                    span: SourceSpan::line(file.clone(), node.no),
                }),
            });
            continue;
        }
        let mut hoisted = Vec::new();
        let line = parser.parse_node(node, &mut hoisted)?;
        for b in hoisted {
            if !names.insert(b.name.clone()) {
                return Err(error(
                    &file,
                    b.term.span.first_line,
                    format!("duplicate binding `{}`", b.name),
                ));
            }
            items.push(TopLevel {
                name: Some(b.name),
                constant: b.constant,
                term: b.term,
            });
        }
        if let Some(name) = &line.name {
            if !names.insert(name.clone()) {
                return Err(error(&file, node.no, format!("duplicate binding `{name}`")));
            }
        }
        items.push(TopLevel {
            name: line.name,
            constant: line.constant,
            term: line.term,
        });
    }
    Ok(Program {
        file,
        items,
        line_count: raw_lines.len(),
    })
}

/// Parses a single horizontal expression, e.g. for `eval`.
pub fn parse_expression(text: &str, file: &str) -> Result<Rc<Term>, ParseError> {
    let file: Rc<str> = Rc::from(file);
    if text.contains('\n') {
        return Err(error(&file, 0, "an expression must fit on one line"));
    }
    let tokens = tokenize(&file, 0, text.trim())?;
    let mut lp = LineParser {
        file: file.clone(),
        line: 0,
        tokens,
        pos: 0,
    };
    let term = lp.happ()?;
    if !lp.at_end() {
        return Err(lp.err("unexpected token after expression"));
    }
    Ok(Rc::new(term))
}

fn error(file: &str, line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        file: file.to_string(),
        line: line + 1,
        message: message.into(),
    }
}

struct RawLine {
    no: usize,
    indent: usize,
    content: String,
}

struct Node {
    no: usize,
    content: String,
    children: Vec<Node>,
}

impl Node {
    fn last_line(&self) -> usize {
        self.children.last().map_or(self.no, Node::last_line)
    }
}

fn build_tree(
    file: &str,
    lines: &[RawLine],
    pos: &mut usize,
    indent: usize,
) -> Result<Vec<Node>, ParseError> {
    let mut nodes = Vec::new();
    while *pos < lines.len() {
        let line = &lines[*pos];
        if line.indent < indent {
            break;
        }
        if line.indent > indent {
            return Err(error(
                file,
                line.no,
                format!(
                    "indentation of {} spaces where {} was expected",
                    line.indent, indent
                ),
            ));
        }
        *pos += 1;
        let mut node = Node {
            no: line.no,
            content: line.content.clone(),
            children: Vec::new(),
        };
        if *pos < lines.len() && lines[*pos].indent > indent {
            if lines[*pos].indent != indent + 2 {
                return Err(error(
                    file,
                    lines[*pos].no,
                    format!(
                        "indentation of {} spaces where {} was expected",
                        lines[*pos].indent,
                        indent + 2
                    ),
                ));
            }
            node.children = build_tree(file, lines, pos, indent + 2)?;
        }
        nodes.push(node);
    }
    Ok(nodes)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Name(String),
    Int(i64),
    Float(f64),
    Str(String),
    LBracket,
    RBracket,
    LParen,
    RParen,
    Dot,
    Greater,
    Bang,
    Ellipsis,
    Quote,
    Lt,
    At,
    Caret,
    Amp,
    Star,
    Dollar,
    Slash,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    space_before: bool,
}

fn is_name_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '-'
}

fn tokenize(file: &str, line: usize, text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens: Vec<Token> = Vec::new();
    let mut i = 0;
    let mut space_before = true;
    while i < chars.len() {
        let c = chars[i];
        if c == ' ' {
            space_before = true;
            i += 1;
            continue;
        }
        let tok = if is_name_start(c) {
            let start = i;
            while i < chars.len() && is_name_char(chars[i]) {
                i += 1;
            }
            if i < chars.len() && chars[i] == '?' {
                i += 1;
            }
            Tok::Name(chars[start..i].iter().collect())
        } else if c.is_ascii_digit()
            || (c == '-' && i + 1 < chars.len() && chars[i + 1].is_ascii_digit())
        {
            let (tok, next) = lex_number(file, line, &chars, i)?;
            i = next;
            tok
        } else if c == '"' {
            let (s, next) = lex_string(file, line, &chars, i + 1, '"')?;
            i = next;
            Tok::Str(s)
        } else if c == '\'' {
            let suffix = !space_before
                && matches!(
                    tokens.last().map(|t| &t.tok),
                    Some(Tok::Name(_) | Tok::RParen | Tok::RBracket | Tok::At | Tok::Caret)
                );
            if suffix {
                i += 1;
                Tok::Quote
            } else {
                let (s, next) = lex_string(file, line, &chars, i + 1, '\'')?;
                i = next;
                Tok::Str(s)
            }
        } else if c == '.' && chars.get(i + 1) == Some(&'.') && chars.get(i + 2) == Some(&'.') {
            i += 3;
            Tok::Ellipsis
        } else {
            i += 1;
            match c {
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '.' => Tok::Dot,
                '>' => Tok::Greater,
                '!' => Tok::Bang,
                '<' => Tok::Lt,
                '@' => Tok::At,
                '^' => Tok::Caret,
                '&' => Tok::Amp,
                '*' => Tok::Star,
                '$' => Tok::Dollar,
                '/' => Tok::Slash,
                other => return Err(error(file, line, format!("unexpected character `{other}`"))),
            }
        };
        tokens.push(Token { tok, space_before });
        space_before = false;
    }
    Ok(tokens)
}

fn lex_number(
    file: &str,
    line: usize,
    chars: &[char],
    start: usize,
) -> Result<(Tok, usize), ParseError> {
    let mut i = start;
    let negative = chars[i] == '-';
    if negative {
        i += 1;
    }
    if chars[i] == '0' && matches!(chars.get(i + 1), Some('x') | Some('X')) {
        let digits_start = i + 2;
        let mut j = digits_start;
        while j < chars.len() && chars[j].is_ascii_hexdigit() {
            j += 1;
        }
        let digits: String = chars[digits_start..j].iter().collect();
        let value = i64::from_str_radix(&digits, 16)
            .map_err(|_| error(file, line, format!("bad hex literal `0x{digits}`")))?;
        return Ok((Tok::Int(if negative { -value } else { value }), j));
    }
    while i < chars.len() && chars[i].is_ascii_digit() {
        i += 1;
    }
    let mut float = false;
    if i + 1 < chars.len() && chars[i] == '.' && chars[i + 1].is_ascii_digit() {
        float = true;
        i += 1;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
    }
    let text: String = chars[start..i].iter().collect();
    if float {
        let v: f64 = text
            .parse()
            .map_err(|_| error(file, line, format!("bad float literal `{text}`")))?;
        Ok((Tok::Float(v), i))
    } else {
        let v: i64 = text
            .parse()
            .map_err(|_| error(file, line, format!("integer literal `{text}` out of range")))?;
        Ok((Tok::Int(v), i))
    }
}

fn lex_string(
    file: &str,
    line: usize,
    chars: &[char],
    mut i: usize,
    quote: char,
) -> Result<(String, usize), ParseError> {
    let mut out = String::new();
    while i < chars.len() {
        let c = chars[i];
        if c == quote {
            return Ok((out, i + 1));
        }
        if c == '\\' {
            let Some(&e) = chars.get(i + 1) else { break };
            i += 2;
            match e {
                'n' => out.push('\n'),
                't' => out.push('\t'),
                'r' => out.push('\r'),
                '0' => out.push('\0'),
                '\\' => out.push('\\'),
                '"' => out.push('"'),
                '\'' => out.push('\''),
                'u' => {
                    if chars.get(i) != Some(&'{') {
                        return Err(error(file, line, "expected `{` after \\u"));
                    }
                    let close = chars[i..]
                        .iter()
                        .position(|&c| c == '}')
                        .ok_or_else(|| error(file, line, "unterminated \\u escape"))?;
                    let hex: String = chars[i + 1..i + close].iter().collect();
                    let ch = u32::from_str_radix(&hex, 16)
                        .ok()
                        .and_then(char::from_u32)
                        .ok_or_else(|| error(file, line, format!("bad \\u escape `{hex}`")))?;
                    out.push(ch);
                    i += close + 1;
                }
                other => return Err(error(file, line, format!("unknown escape `\\{other}`"))),
            }
            continue;
        }
        out.push(c);
        i += 1;
    }
    Err(error(file, line, "unterminated string literal"))
}

struct ParsedLine {
    term: Rc<Term>,
    name: Option<String>,
    constant: bool,
}

struct Parser {
    file: Rc<str>,
}

enum Head {
    Formation(Formation),
    Reversed(String),
    Expr(Term),
}

impl Parser {
    fn parse_node(&self, node: &Node, hoist: &mut Vec<Binding>) -> Result<ParsedLine, ParseError> {
        if node.content.starts_with('+') {
            return Err(error(&self.file, node.no, "meta lines are only allowed at the top level"));
        }
        let tokens = tokenize(&self.file, node.no, &node.content)?;
        let mut lp = LineParser {
            file: self.file.clone(),
            line: node.no,
            tokens,
            pos: 0,
        };
        let head = lp.line_head()?;
        let (name, constant) = lp.naming()?;
        let atom = if lp.eat(&Tok::Slash) {
            match lp.next() {
                Some(Tok::Name(n)) => Some(n),
                _ => return Err(lp.err("expected atom type after `/`")),
            }
        } else {
            None
        };
        if !lp.at_end() {
            return Err(lp.err("unexpected token"));
        }
        let span = SourceSpan::new(self.file.clone(), node.no, node.last_line());
        let term = match head {
            Head::Formation(mut formation) => {
                formation.atom = atom;
                let mut inner = Vec::new();
                for child in &node.children {
                    let line = self.parse_node(child, &mut inner)?;
                    let Some(name) = line.name else {
                        return Err(error(
                            &self.file,
                            child.no,
                            "an object inside a formation must be named (`> name` or `> @`)",
                        ));
                    };
                    formation.bindings.append(&mut inner);
                    formation.bindings.push(Binding {
                        name,
                        term: line.term,
                        constant: line.constant,
                    });
                }
                check_formation(&self.file, node.no, &formation)?;
                Term {
                    kind: TermKind::Formation(Rc::new(formation)),
                    span,
                }
            }
            Head::Reversed(attr) => {
                if atom.is_some() {
                    return Err(error(&self.file, node.no, "`/type` is only allowed on formations"));
                }
                let mut args = self.child_args(node, hoist)?;
                if args.is_empty() {
                    return Err(error(
                        &self.file,
                        node.no,
                        format!("`{attr}.` needs its receiver on the next line"),
                    ));
                }
                let receiver = args.remove(0);
                let head = Rc::new(Term {
                    kind: TermKind::Dispatch {
                        receiver: Some(receiver),
                        attr,
                    },
                    span: span.clone(),
                });
                if args.is_empty() {
                    Rc::try_unwrap(head).unwrap_or_else(|rc| (*rc).clone())
                } else {
                    Term {
                        kind: TermKind::Application { head, args },
                        span,
                    }
                }
            }
            Head::Expr(term) => {
                if atom.is_some() {
                    return Err(error(&self.file, node.no, "`/type` is only allowed on formations"));
                }
                let extra = self.child_args(node, hoist)?;
                if extra.is_empty() {
                    term
                } else {
                    if matches!(term.kind, TermKind::Data(_)) {
                        return Err(error(&self.file, node.no, "a data literal takes no arguments"));
                    }
                    match term.kind {
                        TermKind::Application { head, mut args } => {
                            args.extend(extra);
                            Term {
                                kind: TermKind::Application { head, args },
                                span,
                            }
                        }
                        kind => Term {
                            kind: TermKind::Application {
                                head: Rc::new(Term {
                                    kind,
                                    span: term.span,
                                }),
                                args: extra,
                            },
                            span,
                        },
                    }
                }
            }
        };
        Ok(ParsedLine {
            term: Rc::new(term),
            name,
            constant,
        })
    }

    fn child_args(&self, node: &Node, hoist: &mut Vec<Binding>) -> Result<Vec<Rc<Term>>, ParseError> {
        let mut args = Vec::new();
        for child in &node.children {
            let line = self.parse_node(child, hoist)?;
            match line.name {
                Some(name) => {
                    if name == "@" {
                        return Err(error(
                            &self.file,
                            child.no,
                            "an argument cannot be named `@`",
                        ));
                    }
                    let span = line.term.span.clone();
                    hoist.push(Binding {
                        name: name.clone(),
                        term: line.term,
                        constant: line.constant,
                    });
                    args.push(Rc::new(Term::name(&name, span)));
                }
                None => args.push(line.term),
            }
        }
        Ok(args)
    }
}

fn check_formation(file: &str, line: usize, f: &Formation) -> Result<(), ParseError> {
    let mut seen: HashSet<&str> = HashSet::new();
    for p in &f.params {
        if !seen.insert(p) {
            return Err(error(file, line, format!("duplicate parameter `{p}`")));
        }
    }
    for b in &f.bindings {
        if !seen.insert(&b.name) {
            let at = b.term.span.first_line;
            return Err(error(file, at, format!("duplicate binding `{}`", b.name)));
        }
    }
    Ok(())
}

struct LineParser {
    file: Rc<str>,
    line: usize,
    tokens: Vec<Token>,
    pos: usize,
}

impl LineParser {
    fn err(&self, message: impl Into<String>) -> ParseError {
        error(&self.file, self.line, message)
    }

    fn span(&self) -> SourceSpan {
        SourceSpan::line(self.file.clone(), self.line)
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn peek_at(&self, offset: usize) -> Option<&Token> {
        self.tokens.get(self.pos + offset)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|t| t.tok.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn at_stop(&self) -> bool {
        matches!(
            self.peek(),
            None | Some(Tok::Greater) | Some(Tok::Slash) | Some(Tok::RParen)
        )
    }

    fn line_head(&mut self) -> Result<Head, ParseError> {
        if self.peek() == Some(&Tok::LBracket) {
            let formation = self.formation()?;
            if !self.at_stop() {
                return Err(self.err("unexpected token after formation"));
            }
            return Ok(Head::Formation(formation));
        }
        // `name.` with nothing glued after the dot heads a reversed dispatch.
        if let (Some(Tok::Name(n)), Some(dot)) = (self.peek().cloned(), self.peek_at(1)) {
            if dot.tok == Tok::Dot && !dot.space_before {
                let after = self.peek_at(2);
                let reversed = match after {
                    None => true,
                    Some(t) => t.space_before || t.tok == Tok::Greater,
                };
                if reversed {
                    self.pos += 2;
                    if !self.at_stop() {
                        return Err(self.err(format!(
                            "`{n}.` takes its receiver and arguments from the lines below"
                        )));
                    }
                    return Ok(Head::Reversed(n));
                }
            }
        }
        Ok(Head::Expr(self.happ()?))
    }

    fn naming(&mut self) -> Result<(Option<String>, bool), ParseError> {
        if !self.eat(&Tok::Greater) {
            return Ok((None, false));
        }
        let name = match self.next() {
            Some(Tok::Name(n)) => n,
            Some(Tok::At) => "@".to_string(),
            _ => return Err(self.err("expected a name after `>`")),
        };
        let constant = self.eat(&Tok::Bang);
        if constant && name == "@" {
            return Err(self.err("`@` cannot be constant"));
        }
        Ok((Some(name), constant))
    }

    /// Horizontal application: `head arg1 arg2 ...`.
    fn happ(&mut self) -> Result<Term, ParseError> {
        let mut items = Vec::new();
        while !self.at_stop() {
            items.push(self.primary()?);
        }
        if items.is_empty() {
            return Err(self.err("expected an expression"));
        }
        let head = items.remove(0);
        if items.is_empty() {
            return Ok(head);
        }
        Ok(Term {
            kind: TermKind::Application {
                head: Rc::new(head),
                args: items.into_iter().map(Rc::new).collect(),
            },
            span: self.span(),
        })
    }

    fn primary(&mut self) -> Result<Term, ParseError> {
        let span = self.span();
        let base = match self.next() {
            Some(Tok::Name(n)) => match n.as_str() {
                "TRUE" | "true" => data(Literal::Bool(true), span.clone()),
                "FALSE" | "false" => data(Literal::Bool(false), span.clone()),
                _ => Term::name(&n, span.clone()),
            },
            Some(Tok::Int(v)) => data(Literal::Int(v), span.clone()),
            Some(Tok::Float(v)) => data(Literal::Float(v), span.clone()),
            Some(Tok::Str(s)) => data(Literal::Str(s), span.clone()),
            Some(Tok::At) => Term::name("@", span.clone()),
            Some(Tok::Caret) => Term::name("^", span.clone()),
            Some(Tok::Amp) => Term::name("&", span.clone()),
            Some(Tok::Dollar) => Term::name("$", span.clone()),
            Some(Tok::Star) => Term::name("*", span.clone()),
            Some(Tok::LParen) => {
                let inner = self.happ()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.err("unbalanced parenthesis: expected `)`"));
                }
                inner
            }
            Some(Tok::LBracket) => {
                self.pos -= 1;
                let f = self.formation()?;
                Term {
                    kind: TermKind::Formation(Rc::new(f)),
                    span: span.clone(),
                }
            }
            Some(Tok::RBracket) => return Err(self.err("unbalanced bracket: unexpected `]`")),
            Some(Tok::Dot) => return Err(self.err("unexpected `.`")),
            Some(other) => return Err(self.err(format!("unexpected token {other:?}"))),
            None => return Err(self.err("unexpected end of line")),
        };
        self.postfix(base)
    }

    fn postfix(&mut self, mut term: Term) -> Result<Term, ParseError> {
        loop {
            let Some(tok) = self.tokens.get(self.pos) else {
                return Ok(term);
            };
            if tok.space_before {
                return Ok(term);
            }
            match tok.tok {
                Tok::Quote => {
                    self.pos += 1;
                    term = dispatch(term, "'", self.span());
                }
                Tok::Dot => {
                    let attr = match self.peek_at(1) {
                        Some(t) if !t.space_before => match &t.tok {
                            Tok::Name(n) => n.clone(),
                            Tok::At => "@".to_string(),
                            Tok::Caret => "^".to_string(),
                            Tok::Amp => "&".to_string(),
                            Tok::Lt => "<".to_string(),
                            _ => return Err(self.err("expected an attribute after `.`")),
                        },
                        _ => return Err(self.err("dangling `.`")),
                    };
                    self.pos += 2;
                    term = dispatch(term, &attr, self.span());
                }
                _ => return Ok(term),
            }
        }
    }

    /// `[params]` followed by inline bindings like `(b.as-int > @)`.
    fn formation(&mut self) -> Result<Formation, ParseError> {
        if !self.eat(&Tok::LBracket) {
            return Err(self.err("expected `[`"));
        }
        let mut params = Vec::new();
        let mut variadic = false;
        loop {
            match self.next() {
                Some(Tok::RBracket) => break,
                Some(Tok::Name(n)) => {
                    if variadic {
                        return Err(self.err("only the last parameter may be variadic"));
                    }
                    params.push(n);
                    if self.eat(&Tok::Ellipsis) {
                        variadic = true;
                    }
                }
                Some(Tok::Ellipsis) => return Err(self.err("`...` must follow a parameter name")),
                None | Some(Tok::Greater) => {
                    return Err(self.err("unbalanced bracket: expected `]`"))
                }
                Some(other) => return Err(self.err(format!("unexpected {other:?} in parameters"))),
            }
        }
        let mut bindings = Vec::new();
        while self.peek() == Some(&Tok::LParen) && self.group_has_naming() {
            self.pos += 1;
            let term = self.happ()?;
            let (name, constant) = self.naming()?;
            let name = name.ok_or_else(|| self.err("expected `> name` in inline binding"))?;
            if !self.eat(&Tok::RParen) {
                return Err(self.err("unbalanced parenthesis: expected `)`"));
            }
            bindings.push(Binding {
                name,
                term: Rc::new(term),
                constant,
            });
        }
        let f = Formation {
            params,
            variadic,
            bindings,
            atom: None,
        };
        check_formation(&self.file, self.line, &f)?;
        Ok(f)
    }

    fn group_has_naming(&self) -> bool {
        let mut depth = 0usize;
        for t in &self.tokens[self.pos..] {
            match t.tok {
                Tok::LParen => depth += 1,
                Tok::RParen => {
                    depth -= 1;
                    if depth == 0 {
                        return false;
                    }
                }
                Tok::Greater if depth == 1 => return true,
                _ => {}
            }
        }
        false
    }
}

fn data(lit: Literal, span: SourceSpan) -> Term {
    Term {
        kind: TermKind::Data(lit),
        span,
    }
}

fn dispatch(receiver: Term, attr: &str, span: SourceSpan) -> Term {
    Term {
        kind: TermKind::Dispatch {
            receiver: Some(Rc::new(receiver)),
            attr: attr.to_string(),
        },
        span,
    }
}
