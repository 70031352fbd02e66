//! Native behavior of atoms: control flow, mutable cells, arrays, I/O,
//! and views of the simulated heap.

use std::cell::{OnceCell, RefCell};
use std::rc::Rc;

use crate::error::RuntimeError;
use crate::eval::{describe, Eval, Flow, Interp, Reduced, Signal, BUILTINS};
use crate::heap::{AllocId, HeapError};
use crate::object::{Atom, AtomKind, JumpKind, ObjRef, PtrSource, ScopeKind, Token};
use crate::value::{data_op, encode, sprintf, Value, FALSE, TRUE};

fn arity(op: &str, args: &[ObjRef], n: usize) -> Result<(), RuntimeError> {
    if args.len() != n {
        return Err(RuntimeError::Arity {
            op: op.to_string(),
            expected: n,
            got: args.len(),
        });
    }
    Ok(())
}

impl Interp {
    /// Attributes an atom answers by itself.
    pub(crate) fn native_attr(&self, obj: &ObjRef, a: &Atom, name: &str) -> Eval<Option<ObjRef>> {
        let kind = match (&a.kind, name) {
            (AtomKind::Package(p), _) => {
                if BUILTINS.contains(&name) {
                    return Ok(self.builtin(name));
                }
                AtomKind::Package(format!("{p}.{name}").into())
            }
            (AtomKind::Memory(_) | AtomKind::Cage(_) | AtomKind::Block { .. }, "write") => {
                AtomKind::Write(obj.clone())
            }
            (AtomKind::Token(t), "forward") if t.scope == ScopeKind::Goto => {
                AtomKind::Jump(t.clone(), JumpKind::Forward)
            }
            (AtomKind::Token(t), "backward") if t.scope == ScopeKind::Goto => {
                AtomKind::Jump(t.clone(), JumpKind::Backward)
            }
            (AtomKind::Tuple, "get") => AtomKind::ArrayOp("get", obj.clone()),
            (AtomKind::Tuple, "each") => AtomKind::ArrayOp("each", obj.clone()),
            (AtomKind::Tuple, "length") => AtomKind::ArrayOp("length", obj.clone()),
            (AtomKind::Home(t), "subtype-of") => AtomKind::SubtypeOf(t),
            (AtomKind::Heap, "malloc") => AtomKind::Malloc(OnceCell::new()),
            (AtomKind::Heap, "free") => AtomKind::Free,
            (AtomKind::Heap, "pointer") => AtomKind::Pointer(PtrSource::Absolute),
            (AtomKind::Malloc(_), "pointer") => AtomKind::Pointer(PtrSource::Allocation(obj.clone())),
            (AtomKind::Malloc(_), "free") => return Ok(Some(self.atom(AtomKind::Free, vec![obj.clone()]))),
            (AtomKind::Pointer(_), "add") => AtomKind::Pointer(PtrSource::Shift {
                base: obj.clone(),
                sign: 1,
            }),
            (AtomKind::Pointer(_), "sub") => AtomKind::Pointer(PtrSource::Shift {
                base: obj.clone(),
                sign: -1,
            }),
            (AtomKind::Pointer(_), "block") => AtomKind::Block {
                ptr: obj.clone(),
                offset: 0,
            },
            (AtomKind::Exception(payload), "message") => {
                return Ok(Some(match payload {
                    Some(p) => p.clone(),
                    None => self.data(Value::Str(String::new())),
                }));
            }
            _ => return Ok(None),
        };
        Ok(Some(self.atom(kind, Vec::new())))
    }

    pub(crate) fn apply_atom(&self, obj: &ObjRef, a: &Atom, args: Vec<ObjRef>) -> Eval<ObjRef> {
        let extended = || {
            let mut all = a.args.clone();
            all.extend(args.iter().cloned());
            all
        };
        let kind = match &a.kind {
            AtomKind::Memory(_) => AtomKind::Memory(RefCell::new(None)),
            AtomKind::Malloc(_) => AtomKind::Malloc(OnceCell::new()),
            AtomKind::Cage(slot) => {
                let content = slot.borrow().clone().ok_or(RuntimeError::EmptyCage)?;
                return self.apply(&content, args);
            }
            AtomKind::Snapshot { .. } => {
                let captured = self.anchor(obj)?;
                return self.apply(&captured, args);
            }
            AtomKind::Exception(Some(p)) => return self.apply(p, args),
            AtomKind::Token(t) if t.scope == ScopeKind::Try => AtomKind::Jump(t.clone(), JumpKind::Throw),
            AtomKind::Seq => AtomKind::Seq,
            AtomKind::Stdout => AtomKind::Stdout,
            AtomKind::Sprintf => AtomKind::Sprintf,
            AtomKind::Goto => AtomKind::Goto,
            AtomKind::Try => AtomKind::Try,
            AtomKind::Raise => AtomKind::Raise,
            AtomKind::Tuple => AtomKind::Tuple,
            AtomKind::Write(t) => AtomKind::Write(t.clone()),
            AtomKind::Method(n, r) => AtomKind::Method(n.clone(), r.clone()),
            AtomKind::ArrayOp(op, arr) => AtomKind::ArrayOp(op, arr.clone()),
            AtomKind::Jump(t, k) => AtomKind::Jump(t.clone(), *k),
            AtomKind::SubtypeOf(t) => AtomKind::SubtypeOf(t),
            AtomKind::Free => AtomKind::Free,
            AtomKind::Pointer(src) => AtomKind::Pointer(match src {
                PtrSource::Absolute => PtrSource::Absolute,
                PtrSource::Allocation(m) => PtrSource::Allocation(m.clone()),
                PtrSource::Shift { base, sign } => PtrSource::Shift {
                    base: base.clone(),
                    sign: *sign,
                },
            }),
            AtomKind::Block { ptr, offset } => AtomKind::Block {
                ptr: ptr.clone(),
                offset: *offset,
            },
            AtomKind::Anchor(s) => AtomKind::Anchor(s.clone()),
            AtomKind::Package(_)
            | AtomKind::Heap
            | AtomKind::Home(_)
            | AtomKind::Token(_)
            | AtomKind::Exception(None) => {
                return Err(RuntimeError::NotApplicable(describe(obj)).into());
            }
        };
        Ok(self.atom(kind, extended()))
    }

    /// Fixes what a snapshot refers to: the current content of a cage,
    /// or the source object itself.
    pub(crate) fn anchor(&self, snapshot: &ObjRef) -> Eval<ObjRef> {
        let Some(AtomKind::Snapshot { source, captured }) = snapshot.atom().map(|a| &a.kind) else {
            return Err(RuntimeError::NotASnapshot.into());
        };
        if let Some(c) = captured.borrow().clone() {
            return Ok(c);
        }
        let src = self.unwrap(source)?;
        let target = match src.atom().map(|a| &a.kind) {
            Some(AtomKind::Cage(slot)) => slot.borrow().clone().ok_or(RuntimeError::EmptyCage)?,
            _ => src,
        };
        *captured.borrow_mut() = Some(target.clone());
        Ok(target)
    }

    pub(crate) fn reduce(&self, obj: &ObjRef, a: &Atom) -> Eval<Reduced> {
        let args = &a.args;
        match &a.kind {
            AtomKind::Seq => {
                let Some((last, init)) = args.split_last() else {
                    return Err(RuntimeError::Arity {
                        op: "seq".into(),
                        expected: 1,
                        got: 0,
                    }
                    .into());
                };
                for child in init {
                    self.dataize(child)?;
                }
                Ok(Reduced::Object(last.clone()))
            }
            AtomKind::Stdout => {
                arity("stdout", args, 1)?;
                let text = self.dataize(&args[0])?.render()?;
                self.write_out(text.as_bytes());
                Ok(Reduced::Value(TRUE))
            }
            AtomKind::Sprintf => {
                let Some((fmt, rest)) = args.split_first() else {
                    return Err(RuntimeError::Format("missing format string".into()).into());
                };
                let fmt = self.dataize(fmt)?;
                let fmt = fmt.as_str("sprintf")?;
                let values = rest.iter().map(|a| self.dataize(a)).collect::<Eval<Vec<_>>>()?;
                Ok(Reduced::Value(Value::Str(sprintf(fmt, &values)?)))
            }
            AtomKind::Goto => {
                arity("goto", args, 1)?;
                self.goto(&args[0])
            }
            AtomKind::Try => {
                arity("try", args, 3)?;
                self.try_catch(&args[0], &args[1], &args[2])
            }
            AtomKind::Raise => {
                arity("error", args, 1)?;
                let msg = self.dataize(&args[0])?.render()?;
                Err(RuntimeError::Raised(msg).into())
            }
            AtomKind::Memory(cell) => {
                if let Some(v) = cell.borrow().clone() {
                    return Ok(Reduced::Value(v));
                }
                match args.first() {
                    Some(init) => {
                        let v = self.dataize(init)?;
                        *cell.borrow_mut() = Some(v.clone());
                        Ok(Reduced::Value(v))
                    }
                    None => Err(RuntimeError::UninitializedMemory.into()),
                }
            }
            AtomKind::Cage(slot) => {
                let content = slot.borrow().clone().ok_or(RuntimeError::EmptyCage)?;
                Ok(Reduced::Object(content))
            }
            AtomKind::Write(target) => {
                arity("write", args, 1)?;
                self.write(target, &args[0])
            }
            AtomKind::Method(name, recv) => self.method_call(name, recv, args),
            AtomKind::ArrayOp(op, arr) => self.array_op(op, arr, args),
            AtomKind::Token(t) => match t.scope {
                ScopeKind::Try => self.jump(t, JumpKind::Throw, None),
                ScopeKind::Goto => Err(RuntimeError::MissingDecoratee("a goto token".into()).into()),
            },
            AtomKind::Jump(t, kind) => {
                if args.len() > 1 {
                    return Err(RuntimeError::Arity {
                        op: kind.name().into(),
                        expected: 1,
                        got: args.len(),
                    }
                    .into());
                }
                self.jump(t, *kind, args.first().cloned())
            }
            AtomKind::Exception(payload) => match payload {
                Some(p) => Ok(Reduced::Object(p.clone())),
                None => Ok(Reduced::Value(Value::Str(String::new()))),
            },
            AtomKind::SubtypeOf(t) => {
                arity("subtype-of", args, 1)?;
                let name = self.dataize(&args[0])?;
                Ok(Reduced::Value(Value::Bool(name.as_str("subtype-of")? == *t)))
            }
            AtomKind::Malloc(_) => {
                let id = self.allocation(obj)?;
                Ok(Reduced::Value(Value::Int(self.heap.borrow().base(id) as i64)))
            }
            AtomKind::Free => {
                arity("free", args, 1)?;
                let target = self.unwrap(&args[0])?;
                if !matches!(target.atom().map(|a| &a.kind), Some(AtomKind::Malloc(_))) {
                    return Err(RuntimeError::mismatch("free", "an allocation", &describe(&target)).into());
                }
                let id = self.allocation(&target)?;
                self.heap.borrow_mut().free(id)?;
                Ok(Reduced::Value(TRUE))
            }
            AtomKind::Pointer(_) => {
                let (addr, _) = self.pointer(obj)?;
                Ok(Reduced::Value(Value::Int(addr)))
            }
            AtomKind::Block { ptr, offset } => {
                arity("block", args, 2)?;
                let addr = self.block_address(ptr, *offset)?;
                let len = self.block_len(&args[0])?;
                let bytes = self.heap.borrow().read(addr, len)?;
                let decoded = self.apply(&args[1], vec![self.data(Value::Bytes(bytes))])?;
                Ok(Reduced::Value(self.dataize(&decoded)?))
            }
            AtomKind::Snapshot { .. } => Ok(Reduced::Object(self.anchor(obj)?)),
            AtomKind::Anchor(snap) => {
                self.anchor(snap)?;
                Ok(Reduced::Value(TRUE))
            }
            AtomKind::Package(_) | AtomKind::Tuple | AtomKind::Heap | AtomKind::Home(_) => {
                Err(RuntimeError::MissingDecoratee(describe(obj)).into())
            }
        }
    }

    fn jump(&self, token: &Rc<Token>, kind: JumpKind, payload: Option<ObjRef>) -> Eval<Reduced> {
        if !token.live.get() {
            return Err(RuntimeError::DeadToken(token.scope.name()).into());
        }
        Err(Flow::Signal(Signal {
            token: token.clone(),
            kind,
            payload,
        }))
    }

    fn goto(&self, scope: &ObjRef) -> Eval<Reduced> {
        let token = self.token(ScopeKind::Goto);
        let result = loop {
            let g = self.atom(AtomKind::Token(token.clone()), Vec::new());
            let body = match self.apply(scope, vec![g]) {
                Ok(b) => b,
                Err(e) => break Err(e),
            };
            match self.dataize(&body) {
                Ok(v) => break Ok(Reduced::Value(v)),
                Err(Flow::Signal(s)) if s.token.id == token.id => match s.kind {
                    JumpKind::Backward => continue,
                    _ => match s.payload {
                        Some(p) => break Ok(Reduced::Object(p)),
                        None => break Ok(Reduced::Value(TRUE)),
                    },
                },
                Err(e) => break Err(e),
            }
        };
        token.live.set(false);
        result
    }

    fn try_catch(&self, body: &ObjRef, catch: &ObjRef, finally: &ObjRef) -> Eval<Reduced> {
        let token = self.token(ScopeKind::Try);
        let t = self.atom(AtomKind::Token(token.clone()), Vec::new());
        let outcome = self.apply(body, vec![t]).and_then(|b| self.dataize(&b));
        token.live.set(false);
        let result = match outcome {
            Ok(v) => Ok(v),
            Err(Flow::Signal(s)) if s.token.id == token.id => {
                let exc = self.atom(AtomKind::Exception(s.payload), Vec::new());
                self.apply(catch, vec![exc]).and_then(|c| self.dataize(&c))
            }
            Err(e) => Err(e),
        };
        self.dataize(finally)?;
        result.map(Reduced::Value)
    }

    fn write(&self, target: &ObjRef, arg: &ObjRef) -> Eval<Reduced> {
        match target.atom().map(|a| &a.kind) {
            Some(AtomKind::Memory(cell)) => {
                let v = self.dataize(arg)?;
                *cell.borrow_mut() = Some(v.clone());
                Ok(Reduced::Value(v))
            }
            Some(AtomKind::Cage(slot)) => {
                let stored = self.force(arg)?;
                *slot.borrow_mut() = Some(stored);
                Ok(Reduced::Value(TRUE))
            }
            Some(AtomKind::Block { ptr, offset }) => {
                let view = target.atom().unwrap();
                arity("block", &view.args, 2)?;
                let addr = self.block_address(ptr, *offset)?;
                let len = self.block_len(&view.args[0])?;
                let v = self.dataize(arg)?;
                let mut bytes = encode(&v);
                if bytes.len() as u64 > len {
                    return Err(HeapError::TooLong {
                        len: bytes.len() as u64,
                        capacity: len,
                    }
                    .into());
                }
                bytes.resize(len as usize, 0);
                self.heap.borrow_mut().write(addr, &bytes)?;
                Ok(Reduced::Value(TRUE))
            }
            _ => Err(RuntimeError::NotApplicable(describe(target)).into()),
        }
    }

    fn method_call(&self, name: &str, recv: &ObjRef, args: &[ObjRef]) -> Eval<Reduced> {
        match name {
            "if" => {
                arity("if", args, 2)?;
                let c = self.dataize(recv)?.as_bool("if")?;
                Ok(Reduced::Object(args[if c { 0 } else { 1 }].clone()))
            }
            "while" => {
                arity("while", args, 1)?;
                let mut index = 0i64;
                loop {
                    if !self.dataize(recv)?.as_bool("while")? {
                        return Ok(Reduced::Value(FALSE));
                    }
                    let body = self.apply(&args[0], vec![self.data(Value::Int(index))])?;
                    self.dataize(&body)?;
                    index += 1;
                }
            }
            _ => {
                let r = self.dataize(recv)?;
                let values = args.iter().map(|a| self.dataize(a)).collect::<Eval<Vec<_>>>()?;
                Ok(Reduced::Value(data_op(name, &r, &values)?))
            }
        }
    }

    fn array_op(&self, op: &str, arr: &ObjRef, args: &[ObjRef]) -> Eval<Reduced> {
        let items = &arr.atom().expect("arrays are atoms").args;
        match op {
            "get" => {
                arity("get", args, 1)?;
                let i = self.dataize(&args[0])?.as_int("get")?;
                usize::try_from(i)
                    .ok()
                    .and_then(|i| items.get(i))
                    .map(|o| Reduced::Object(o.clone()))
                    .ok_or_else(|| {
                        RuntimeError::IndexOutOfRange {
                            index: i,
                            len: items.len(),
                        }
                        .into()
                    })
            }
            "each" => {
                arity("each", args, 1)?;
                for item in items {
                    let applied = self.apply(&args[0], vec![item.clone()])?;
                    self.dataize(&applied)?;
                }
                Ok(Reduced::Value(TRUE))
            }
            _ => {
                arity("length", args, 0)?;
                Ok(Reduced::Value(Value::Int(items.len() as i64)))
            }
        }
    }

    /// The heap allocation behind a `malloc` atom, made on first use.
    fn allocation(&self, malloc: &ObjRef) -> Eval<AllocId> {
        let a = malloc.atom().expect("malloc atom");
        let AtomKind::Malloc(cell) = &a.kind else {
            unreachable!("checked by the caller")
        };
        if let Some(id) = cell.get() {
            return Ok(*id);
        }
        arity("malloc", &a.args, 1)?;
        let size = self.dataize(&a.args[0])?.as_int("malloc")?;
        let id = self.heap.borrow_mut().malloc(size)?;
        let _ = cell.set(id);
        Ok(id)
    }

    /// Address and stride of a pointer. Objects that are not pointers
    /// are dataized and taken as a plain address with stride 1.
    pub(crate) fn pointer(&self, obj: &ObjRef) -> Eval<(i64, i64)> {
        let p = self.unwrap(obj)?;
        let Some(AtomKind::Pointer(src)) = p.atom().map(|a| &a.kind) else {
            let addr = self.dataize(&p)?.as_int("pointer")?;
            return Ok((addr, 1));
        };
        let args = &p.atom().unwrap().args;
        let int = |i: usize| -> Eval<i64> { Ok(self.dataize(&args[i])?.as_int("pointer")?) };
        match src {
            PtrSource::Absolute => {
                arity("heap.pointer", args, 2)?;
                let (addr, stride) = (int(0)?, int(1)?);
                self.heap.borrow_mut().map_absolute(addr)?;
                Ok((addr, stride))
            }
            PtrSource::Allocation(m) => {
                arity("pointer", args, 2)?;
                let id = self.allocation(m)?;
                let base = self.heap.borrow().base(id) as i64;
                let (offset, stride) = (int(0)?, int(1)?);
                Ok((base + offset, stride))
            }
            PtrSource::Shift { base, sign } => {
                arity(if *sign > 0 { "add" } else { "sub" }, args, 1)?;
                let (addr, stride) = self.pointer(base)?;
                let k = int(0)?;
                let shifted = k
                    .checked_mul(stride)
                    .and_then(|d| d.checked_mul(*sign))
                    .and_then(|d| addr.checked_add(d))
                    .ok_or_else(|| RuntimeError::Overflow("pointer arithmetic".into()))?;
                Ok((shifted, stride))
            }
        }
    }

    fn block_address(&self, ptr: &ObjRef, offset: u64) -> Eval<i64> {
        let (addr, _) = self.pointer(ptr)?;
        addr.checked_add(offset as i64)
            .ok_or_else(|| RuntimeError::Overflow("block address".into()).into())
    }

    fn block_len(&self, len: &ObjRef) -> Eval<u64> {
        let n = self.dataize(len)?.as_int("block")?;
        if n <= 0 {
            return Err(HeapError::BadSize(n).into());
        }
        Ok(n as u64)
    }
}

