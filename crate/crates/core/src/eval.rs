//! The evaluator: object formation, copying, attribute resolution
//! through decoration, and dataization.

use std::cell::{Cell, OnceCell, RefCell};
use std::collections::HashMap;
use std::io::Write;
use std::rc::Rc;

use crate::error::RuntimeError;
use crate::heap::{HeapError, HeapStore};
use crate::object::{
    Atom, AtomKind, ConstObj, FormationObj, JumpKind, Kind, LazyObj, ObjRef, Object, Token,
};
use crate::syntax::{Formation, Literal, Program, SourceSpan, Term, TermKind};
use crate::value::{is_data_method, Value};

/// A jump or throw travelling towards the scope that owns its token.
#[derive(Clone)]
pub struct Signal {
    pub token: Rc<Token>,
    pub kind: JumpKind,
    pub payload: Option<ObjRef>,
}

/// Why evaluation stopped early.
#[derive(Clone)]
pub enum Flow {
    Error(RuntimeError),
    Signal(Signal),
}

impl From<RuntimeError> for Flow {
    fn from(e: RuntimeError) -> Self {
        Flow::Error(e)
    }
}

impl From<HeapError> for Flow {
    fn from(e: HeapError) -> Self {
        Flow::Error(RuntimeError::Heap(e))
    }
}

impl Flow {
    /// Turns a signal that left every scope into an error.
    pub fn into_error(self) -> RuntimeError {
        match self {
            Flow::Error(e) => e,
            Flow::Signal(s) => RuntimeError::EscapedSignal(s.kind.name()),
        }
    }
}

pub type Eval<T> = Result<T, Flow>;

/// What an atom reduces to: plain data, or another object to continue
/// dataizing.
pub enum Reduced {
    Value(Value),
    Object(ObjRef),
}

pub const DEFAULT_MAX_STEPS: u64 = 1_000_000;
/// Nesting limit for evaluation; with the stack of `runtime::STACK_SIZE`
/// it trips well before the native stack runs out, even in debug builds.
pub const DEFAULT_MAX_DEPTH: usize = 20_000;

/// Names visible everywhere without an import.
pub const BUILTINS: &[&str] = &[
    "seq", "stdout", "sprintf", "goto", "try", "error", "memory", "cage", "heap", "*", "tuple",
];

pub struct Interp {
    next_id: Cell<u64>,
    steps: Cell<u64>,
    max_steps: u64,
    depth: Cell<usize>,
    max_depth: usize,
    pub(crate) heap: RefCell<HeapStore>,
    out: RefCell<Box<dyn Write>>,
    trace: Option<RefCell<Box<dyn Write>>>,
    trace_sources: bool,
    root: OnceCell<ObjRef>,
}

pub(crate) struct DepthGuard<'a>(&'a Cell<usize>);

impl Drop for DepthGuard<'_> {
    fn drop(&mut self) {
        self.0.set(self.0.get() - 1);
    }
}

impl Interp {
    pub fn new(max_steps: u64, max_depth: usize, heap_size: usize, out: Box<dyn Write>) -> Self {
        Interp {
            next_id: Cell::new(0),
            steps: Cell::new(0),
            max_steps,
            depth: Cell::new(0),
            max_depth,
            heap: RefCell::new(HeapStore::new(heap_size)),
            out: RefCell::new(out),
            trace: None,
            trace_sources: false,
            root: OnceCell::new(),
        }
    }

    pub fn set_trace(&mut self, sink: Box<dyn Write>, with_sources: bool) {
        self.trace = Some(RefCell::new(sink));
        self.trace_sources = with_sources;
    }

    pub fn steps(&self) -> u64 {
        self.steps.get()
    }

    pub fn reset_steps(&self) {
        self.steps.set(0);
    }

    pub fn heap(&self) -> std::cell::Ref<'_, HeapStore> {
        self.heap.borrow()
    }

    pub(crate) fn write_out(&self, bytes: &[u8]) {
        let mut out = self.out.borrow_mut();
        let _ = out.write_all(bytes);
        let _ = out.flush();
    }

    /// Builds the root object from the program's named items.
    pub fn load(&self, program: &Program) -> ObjRef {
        let bindings = program
            .objects()
            .filter_map(|item| {
                item.name.as_ref().map(|name| crate::syntax::Binding {
                    name: name.clone(),
                    term: item.term.clone(),
                    constant: item.constant,
                })
            })
            .collect();
        let form = Rc::new(Formation {
            params: Vec::new(),
            variadic: false,
            bindings,
            atom: None,
        });
        let span = SourceSpan::new(program.file.clone(), 0, program.line_count.saturating_sub(1));
        let root = self.formation(form, "Q".into(), None, Vec::new(), Some(span));
        let _ = self.root.set(root.clone());
        root
    }

    pub fn root(&self) -> ObjRef {
        self.root
            .get()
            .cloned()
            .expect("load() is called before evaluation")
    }

    pub(crate) fn enter(&self) -> Result<DepthGuard<'_>, RuntimeError> {
        let d = self.depth.get() + 1;
        if d > self.max_depth {
            return Err(RuntimeError::DepthExceeded(self.max_depth));
        }
        self.depth.set(d);
        Ok(DepthGuard(&self.depth))
    }

    fn step(&self, obj: &ObjRef) -> Result<(), RuntimeError> {
        let n = self.steps.get() + 1;
        if n > self.max_steps {
            return Err(RuntimeError::BudgetExhausted(self.max_steps));
        }
        self.steps.set(n);
        if let Some(sink) = &self.trace {
            let mut line = format!("{}{}", "  ".repeat(self.depth.get().saturating_sub(1)), obj);
            if self.trace_sources {
                if let Kind::Formation(f) = &obj.kind {
                    if let Some(src) = f.source() {
                        line.push_str(&format!(" [{src}]"));
                    }
                }
            }
            let _ = writeln!(sink.borrow_mut(), "{line}");
        }
        Ok(())
    }

    // Constructors.

    fn object(&self, kind: Kind) -> ObjRef {
        let id = self.next_id.get();
        self.next_id.set(id + 1);
        Rc::new(Object { id, kind })
    }

    pub fn data(&self, v: Value) -> ObjRef {
        self.object(Kind::Data(v))
    }

    pub(crate) fn atom(&self, kind: AtomKind, args: Vec<ObjRef>) -> ObjRef {
        self.object(Kind::Atom(Atom {
            kind,
            args,
            reduced: OnceCell::new(),
        }))
    }

    pub(crate) fn formation(
        &self,
        form: Rc<Formation>,
        label: Rc<str>,
        parent: Option<ObjRef>,
        args: Vec<ObjRef>,
        span: Option<SourceSpan>,
    ) -> ObjRef {
        self.object(Kind::Formation(FormationObj {
            form,
            label,
            parent,
            args,
            attrs: RefCell::new(HashMap::new()),
            span,
        }))
    }

    pub(crate) fn token(&self, scope: crate::object::ScopeKind) -> Rc<Token> {
        let id = self.next_id.get();
        self.next_id.set(id + 1);
        Rc::new(Token {
            id,
            scope,
            live: Cell::new(true),
        })
    }

    // Evaluation of terms to objects (no dataization).

    pub fn eval(&self, term: &Rc<Term>, env: &ObjRef) -> Eval<ObjRef> {
        let _g = self.enter()?;
        match &term.kind {
            TermKind::Data(lit) => Ok(self.data(literal(lit))),
            TermKind::Formation(f) => Ok(self.formation(
                f.clone(),
                "[]".into(),
                Some(env.clone()),
                Vec::new(),
                Some(term.span.clone()),
            )),
            TermKind::Dispatch {
                receiver: None,
                attr,
            } => self.lookup(env, attr),
            TermKind::Dispatch {
                receiver: Some(r),
                attr,
            } => {
                let recv = self.eval(r, env)?;
                self.resolve(&recv, attr)
            }
            TermKind::Application { head, args } => {
                let head = self.eval(head, env)?;
                let args = args.iter().map(|a| self.arg(a, env)).collect();
                self.apply(&head, args)
            }
            TermKind::Meta { name, .. } => Err(RuntimeError::NotApplicable(format!("+{name}")).into()),
        }
    }

    /// Arguments are passed by name: evaluated only when first needed.
    fn arg(&self, term: &Rc<Term>, env: &ObjRef) -> ObjRef {
        match &term.kind {
            TermKind::Data(lit) => self.data(literal(lit)),
            TermKind::Formation(f) => self.formation(
                f.clone(),
                "[]".into(),
                Some(env.clone()),
                Vec::new(),
                Some(term.span.clone()),
            ),
            _ => self.object(Kind::Lazy(LazyObj {
                term: term.clone(),
                env: env.clone(),
                forced: OnceCell::new(),
            })),
        }
    }

    /// Follows pending arguments to the object they denote.
    pub fn force(&self, obj: &ObjRef) -> Eval<ObjRef> {
        let mut cur = obj.clone();
        while let Kind::Lazy(lazy) = &cur.kind {
            let next = match lazy.forced.get() {
                Some(o) => o.clone(),
                None => {
                    let o = self.eval(&lazy.term, &lazy.env)?;
                    let _ = lazy.forced.set(o.clone());
                    o
                }
            };
            cur = next;
        }
        Ok(cur)
    }

    /// Like [`Interp::force`], also seeing through `!` wrappers.
    pub fn unwrap(&self, obj: &ObjRef) -> Eval<ObjRef> {
        let mut cur = self.force(obj)?;
        while let Kind::Const(c) = &cur.kind {
            cur = self.force(&c.inner)?;
        }
        Ok(cur)
    }

    fn lookup(&self, env: &ObjRef, name: &str) -> Eval<ObjRef> {
        match name {
            "Q" => return Ok(self.root()),
            "$" => return Ok(env.clone()),
            "^" | "&" | "@" => return self.resolve(env, name),
            _ => {}
        }
        let mut scope = Some(env.clone());
        while let Some(s) = scope {
            let Kind::Formation(f) = &s.kind else { break };
            if let Some(i) = f.form.param_index(name) {
                return self.param(&s, f, i);
            }
            if f.form.binding(name).is_some() {
                return self.materialize(&s, name);
            }
            scope = f.parent.clone();
        }
        self.builtin(name)
            .ok_or_else(|| RuntimeError::UnknownName(name.to_string()).into())
    }

    fn param(&self, obj: &ObjRef, f: &FormationObj, i: usize) -> Eval<ObjRef> {
        if let Some(a) = f.args.get(i) {
            return Ok(a.clone());
        }
        if f.form.variadic && i + 1 == f.form.params.len() && f.args.len() == i {
            return Ok(self.atom(AtomKind::Tuple, Vec::new()));
        }
        Err(RuntimeError::PartialApplication {
            object: describe(obj),
            param: f.form.params[i].clone(),
        }
        .into())
    }

    /// The attribute object of `owner`, created on first access and
    /// shared by every later access to the same copy.
    pub(crate) fn materialize(&self, owner: &ObjRef, name: &str) -> Eval<ObjRef> {
        let f = owner.formation().expect("materialize on a formation");
        if let Some(o) = f.attrs.borrow().get(name) {
            return Ok(o.clone());
        }
        let b = f.form.binding(name).expect("binding exists");
        let obj = match &b.term.kind {
            TermKind::Formation(form) => self.formation(
                form.clone(),
                name.into(),
                Some(owner.clone()),
                Vec::new(),
                Some(b.term.span.clone()),
            ),
            _ => match self.block_binding(owner, f, name)? {
                Some(o) => o,
                None => self.eval(&b.term, owner)?,
            },
        };
        let obj = if b.constant {
            self.object(Kind::Const(ConstObj {
                inner: obj,
                value: OnceCell::new(),
            }))
        } else {
            obj
        };
        let mut attrs = f.attrs.borrow_mut();
        Ok(attrs.entry(name.to_string()).or_insert(obj).clone())
    }

    /// Consecutive `p.block len decoder` bindings over the same pointer
    /// lay out a record: each starts where the previous one ended.
    fn block_binding(&self, owner: &ObjRef, f: &FormationObj, name: &str) -> Eval<Option<ObjRef>> {
        let Some((recv, _)) = block_decl(&f.form.binding(name).unwrap().term) else {
            return Ok(None);
        };
        let ptr = self.eval(recv, owner)?;
        let view = self.resolve(&ptr, "block")?;
        let is_block = matches!(
            view.atom().map(|a| &a.kind),
            Some(AtomKind::Block { offset: 0, .. })
        );
        if !is_block {
            return Ok(None);
        }
        let Some(AtomKind::Block { ptr, .. }) = view.atom().map(|a| &a.kind) else {
            unreachable!()
        };
        let mut offset = 0u64;
        for b in &f.form.bindings {
            if b.name == name {
                break;
            }
            if let Some((r, len)) = block_decl(&b.term) {
                if r == recv {
                    let n = self.dataize(&self.arg(len, owner))?.as_int("block")?;
                    offset += u64::try_from(n).map_err(|_| HeapError::BadSize(n))?;
                }
            }
        }
        let args = match &f.form.binding(name).unwrap().term.kind {
            TermKind::Application { args, .. } => args.iter().map(|a| self.arg(a, owner)).collect(),
            _ => unreachable!(),
        };
        Ok(Some(self.atom(
            AtomKind::Block {
                ptr: ptr.clone(),
                offset,
            },
            args,
        )))
    }

    pub fn builtin(&self, name: &str) -> Option<ObjRef> {
        let kind = match name {
            "seq" => AtomKind::Seq,
            "stdout" => AtomKind::Stdout,
            "sprintf" => AtomKind::Sprintf,
            "goto" => AtomKind::Goto,
            "try" => AtomKind::Try,
            "error" => AtomKind::Raise,
            "memory" => AtomKind::Memory(RefCell::new(None)),
            "cage" => AtomKind::Cage(RefCell::new(None)),
            "heap" => AtomKind::Heap,
            "*" | "tuple" => AtomKind::Tuple,
            _ => return None,
        };
        Some(self.atom(kind, Vec::new()))
    }

    // Attribute resolution.

    pub fn resolve(&self, obj: &ObjRef, name: &str) -> Eval<ObjRef> {
        self.resolve_as(obj, name, obj)
    }

    /// Resolves `name` on `obj`; built-in data methods found along the
    /// way take `recv` as their receiver, so that decorators and `!`
    /// constants are dataized as themselves.
    fn resolve_as(&self, obj: &ObjRef, name: &str, recv: &ObjRef) -> Eval<ObjRef> {
        let _g = self.enter()?;
        let obj = self.force(obj)?;
        match name {
            "'" => return Ok(self.atom(
                AtomKind::Snapshot {
                    source: obj,
                    captured: RefCell::new(None),
                },
                Vec::new(),
            )),
            "<" => {
                let target = self.unwrap(&obj)?;
                return match target.atom().map(|a| &a.kind) {
                    Some(AtomKind::Snapshot { .. }) => Ok(self.atom(AtomKind::Anchor(target), Vec::new())),
                    _ => Err(RuntimeError::NotASnapshot.into()),
                };
            }
            "&" => return self.home(&obj),
            "^" => return self.parent(&obj),
            _ => {}
        }
        match &obj.kind {
            Kind::Data(_) => {
                if is_data_method(name) {
                    Ok(self.method(name, recv))
                } else {
                    Err(not_found(&obj, name))
                }
            }
            Kind::Const(c) => self.resolve_as(&c.inner, name, recv),
            Kind::Lazy(_) => unreachable!("forced above"),
            Kind::Formation(f) => {
                if let Some(i) = f.form.param_index(name) {
                    return self.param(&obj, f, i);
                }
                if f.form.binding(name).is_some() {
                    return self.materialize(&obj, name);
                }
                if f.is_root() && name == "org" {
                    return Ok(self.atom(AtomKind::Package("org".into()), Vec::new()));
                }
                if f.form.binding("@").is_some() {
                    let deco = self.materialize(&obj, "@")?;
                    return self.resolve_as(&deco, name, recv);
                }
                Err(not_found(&obj, name))
            }
            Kind::Atom(a) => {
                if let Some(o) = self.native_attr(&obj, a, name)? {
                    return Ok(o);
                }
                match &a.kind {
                    AtomKind::Cage(slot) => {
                        let content = slot.borrow().clone().ok_or(RuntimeError::EmptyCage)?;
                        self.resolve_as(&content, name, recv)
                    }
                    AtomKind::Snapshot { .. } => {
                        let captured = self.anchor(&obj)?;
                        self.resolve_as(&captured, name, recv)
                    }
                    AtomKind::Exception(Some(payload)) => self.resolve_as(payload, name, recv),
                    kind if is_data_method(name) && (dataizable(kind) || kind.returns_object()) => {
                        Ok(self.method(name, recv))
                    }
                    kind if kind.returns_object() => {
                        let result = self.reduce_cached(&obj, a)?;
                        self.resolve_as(&result, name, &result)
                    }
                    _ => Err(not_found(&obj, name)),
                }
            }
        }
    }

    fn method(&self, name: &str, recv: &ObjRef) -> ObjRef {
        self.atom(AtomKind::Method(name.into(), recv.clone()), Vec::new())
    }

    /// The object an object-returning atom stands for, computed once per
    /// atom for attribute lookups.
    fn reduce_cached(&self, obj: &ObjRef, a: &Atom) -> Eval<ObjRef> {
        if let Some(r) = a.reduced.get() {
            return Ok(r.clone());
        }
        let r = match self.reduce(obj, a)? {
            Reduced::Object(o) => self.force(&o)?,
            Reduced::Value(v) => self.data(v),
        };
        let _ = a.reduced.set(r.clone());
        Ok(r)
    }

    fn home(&self, obj: &ObjRef) -> Eval<ObjRef> {
        match &obj.kind {
            Kind::Formation(f) => f.parent.clone().ok_or_else(|| RuntimeError::ParentOfRoot.into()),
            Kind::Data(v) => Ok(self.atom(AtomKind::Home(v.type_name()), Vec::new())),
            Kind::Const(c) => {
                let inner = self.unwrap(&c.inner)?;
                if inner.formation().is_some() {
                    self.home(&inner)
                } else {
                    let v = self.dataize(obj)?;
                    Ok(self.atom(AtomKind::Home(v.type_name()), Vec::new()))
                }
            }
            Kind::Lazy(_) => {
                let o = self.force(obj)?;
                self.home(&o)
            }
            Kind::Atom(a) => match self.structural_target(obj, a)? {
                Some(target) => self.home(&target),
                None if dataizable(&a.kind) => {
                    let v = self.dataize(obj)?;
                    Ok(self.atom(AtomKind::Home(v.type_name()), Vec::new()))
                }
                None => Err(not_found(obj, "&")),
            },
        }
    }

    fn parent(&self, obj: &ObjRef) -> Eval<ObjRef> {
        match &obj.kind {
            Kind::Formation(f) => f.parent.clone().ok_or_else(|| RuntimeError::ParentOfRoot.into()),
            Kind::Const(c) => self.parent(&self.force(&c.inner)?),
            Kind::Lazy(_) => self.parent(&self.force(obj)?),
            Kind::Atom(a) => match self.structural_target(obj, a)? {
                Some(target) => self.parent(&target),
                None => Err(not_found(obj, "^")),
            },
            Kind::Data(_) => Err(not_found(obj, "^")),
        }
    }

    /// For atoms that stand in for another object: that object.
    fn structural_target(&self, obj: &ObjRef, a: &Atom) -> Eval<Option<ObjRef>> {
        Ok(match &a.kind {
            AtomKind::Cage(slot) => Some(slot.borrow().clone().ok_or(RuntimeError::EmptyCage)?),
            AtomKind::Snapshot { .. } => Some(self.anchor(obj)?),
            AtomKind::Exception(Some(p)) => Some(self.force(p)?),
            kind if kind.returns_object() => Some(self.reduce_cached(obj, a)?),
            _ => None,
        })
    }

    // Application (copying).

    pub fn apply(&self, obj: &ObjRef, args: Vec<ObjRef>) -> Eval<ObjRef> {
        if args.is_empty() {
            return Ok(obj.clone());
        }
        let obj = self.force(obj)?;
        match &obj.kind {
            Kind::Data(_) => Err(RuntimeError::NotApplicable(describe(&obj)).into()),
            Kind::Const(c) => self.apply(&c.inner, args),
            Kind::Lazy(_) => unreachable!("forced above"),
            Kind::Formation(f) => {
                let n = f.form.params.len();
                let mut bound = f.args.clone();
                let mut rest = args.into_iter();
                while let Some(a) = rest.next() {
                    if f.form.variadic && bound.len() + 1 == n {
                        let mut items = vec![a];
                        items.extend(rest.by_ref());
                        bound.push(self.atom(AtomKind::Tuple, items));
                        break;
                    }
                    if bound.len() >= n {
                        return Err(RuntimeError::TooManyArguments {
                            object: describe(&obj),
                            expected: n,
                            got: bound.len() + 1 + rest.len(),
                        }
                        .into());
                    }
                    bound.push(a);
                }
                Ok(self.formation(
                    f.form.clone(),
                    f.label.clone(),
                    f.parent.clone(),
                    bound,
                    f.span.clone(),
                ))
            }
            Kind::Atom(a) => self.apply_atom(&obj, a, args),
        }
    }

    // Dataization.

    pub fn dataize(&self, obj: &ObjRef) -> Eval<Value> {
        let _g = self.enter()?;
        let mut cur = obj.clone();
        loop {
            self.step(&cur)?;
            let next = match &cur.kind {
                Kind::Data(v) => return Ok(v.clone()),
                Kind::Lazy(_) => self.force(&cur)?,
                Kind::Const(c) => {
                    if let Some(v) = c.value.get() {
                        return Ok(v.clone());
                    }
                    let v = self.dataize(&c.inner)?;
                    let _ = c.value.set(v.clone());
                    return Ok(v);
                }
                Kind::Formation(f) => {
                    if let Some(atom) = &f.form.atom {
                        return Err(RuntimeError::AbstractAtom(atom.clone()).into());
                    }
                    let required = f.form.params.len() - usize::from(f.form.variadic);
                    if f.args.len() < required {
                        return Err(RuntimeError::PartialApplication {
                            object: describe(&cur),
                            param: f.form.params[f.args.len()].clone(),
                        }
                        .into());
                    }
                    if f.form.binding("@").is_none() {
                        return Err(RuntimeError::MissingDecoratee(describe(&cur)).into());
                    }
                    self.materialize(&cur, "@")?
                }
                Kind::Atom(a) => match self.reduce(&cur, a)? {
                    Reduced::Value(v) => return Ok(v),
                    Reduced::Object(o) => o,
                },
            };
            cur = next;
        }
    }

    /// Dataizes an entry object, turning escaped signals into errors.
    pub fn run(&self, obj: &ObjRef) -> Result<Value, RuntimeError> {
        self.dataize(obj).map_err(Flow::into_error)
    }

    /// Evaluates a term in the root scope and dataizes it.
    pub fn run_term(&self, term: &Rc<Term>) -> Result<Value, RuntimeError> {
        let root = self.root();
        let obj = self.eval(term, &root).map_err(Flow::into_error)?;
        self.run(&obj)
    }
}

pub(crate) fn literal(lit: &Literal) -> Value {
    match lit {
        Literal::Int(v) => Value::Int(*v),
        Literal::Float(v) => Value::Float(*v),
        Literal::Str(s) => Value::Str(s.clone()),
        Literal::Bool(b) => Value::Bool(*b),
        Literal::Bytes(b) => Value::Bytes(b.clone()),
    }
}

/// Matches `receiver.block length decoder`.
fn block_decl(term: &Term) -> Option<(&Rc<Term>, &Rc<Term>)> {
    let TermKind::Application { head, args } = &term.kind else {
        return None;
    };
    let TermKind::Dispatch {
        receiver: Some(recv),
        attr,
    } = &head.kind
    else {
        return None;
    };
    if attr != "block" || args.is_empty() {
        return None;
    }
    Some((recv, &args[0]))
}

/// Atoms whose dataization yields plain data, so data methods may be
/// called on them directly.
fn dataizable(kind: &AtomKind) -> bool {
    !matches!(
        kind,
        AtomKind::Package(_)
            | AtomKind::Tuple
            | AtomKind::Heap
            | AtomKind::Home(_)
            | AtomKind::Token(_)
            | AtomKind::Cage(_)
            | AtomKind::Snapshot { .. }
            | AtomKind::Exception(_)
    ) && !kind.returns_object()
}

pub(crate) fn describe(obj: &Object) -> String {
    match &obj.kind {
        Kind::Formation(f) => {
            let label = if f.is_root() { "Q".to_string() } else { format!("`{}`", f.label) };
            match &f.span {
                Some(span) => format!("{label} ({span})"),
                None => label,
            }
        }
        Kind::Atom(a) => match &a.kind {
            AtomKind::Method(name, _) => format!("`.{name}`"),
            AtomKind::Package(p) => format!("`Q.{p}`"),
            kind => format!("`{}`", kind.name()),
        },
        Kind::Data(v) => format!("{} data", v.type_name()),
        Kind::Lazy(l) => format!("the argument at {}", l.term.span),
        Kind::Const(_) => "a constant".to_string(),
    }
}

pub(crate) fn not_found(obj: &Object, name: &str) -> Flow {
    RuntimeError::AttributeNotFound {
        object: describe(obj),
        attr: name.to_string(),
    }
    .into()
}
