//! Terminal data and the native operations over it.

use std::fmt;

use crate::error::RuntimeError;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Float(f64),
    Str(String),
    Bool(bool),
    Bytes(Vec<u8>),
}

pub const TRUE: Value = Value::Bool(true);
pub const FALSE: Value = Value::Bool(false);

impl Value {
    pub fn type_name(&self) -> &'static str {
        match self {
            Value::Int(_) => "Int",
            Value::Float(_) => "Float",
            Value::Str(_) => "String",
            Value::Bool(_) => "Bool",
            Value::Bytes(_) => "Bytes",
        }
    }

    pub fn as_bool(&self, op: &str) -> Result<bool, RuntimeError> {
        match self {
            Value::Bool(b) => Ok(*b),
            other => Err(RuntimeError::mismatch(op, "a boolean", other.type_name())),
        }
    }

    pub fn as_int(&self, op: &str) -> Result<i64, RuntimeError> {
        match self {
            Value::Int(v) => Ok(*v),
            other => Err(RuntimeError::mismatch(op, "an integer", other.type_name())),
        }
    }

    pub fn as_str(&self, op: &str) -> Result<&str, RuntimeError> {
        match self {
            Value::Str(s) => Ok(s),
            other => Err(RuntimeError::mismatch(op, "a string", other.type_name())),
        }
    }

    /// The `as-string` rendering.
    pub fn render(&self) -> Result<String, RuntimeError> {
        Ok(match self {
            Value::Int(v) => v.to_string(),
            Value::Float(v) => format_float(*v),
            Value::Str(s) => s.clone(),
            Value::Bool(true) => "TRUE".to_string(),
            Value::Bool(false) => "FALSE".to_string(),
            Value::Bytes(b) => {
                let end = b.iter().position(|&x| x == 0).unwrap_or(b.len());
                String::from_utf8(b[..end].to_vec()).map_err(|_| {
                    RuntimeError::mismatch("as-string", "UTF-8 bytes", "invalid UTF-8")
                })?
            }
        })
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Bytes(b) => {
                let parts: Vec<String> = b.iter().map(|x| format!("{x:02X}")).collect();
                write!(f, "{}", parts.join("-"))
            }
            other => match other.render() {
                Ok(s) => write!(f, "{s}"),
                Err(_) => write!(f, "<invalid>"),
            },
        }
    }
}

/// Shortest decimal that round-trips, without a trailing `.0`.
pub fn format_float(v: f64) -> String {
    format!("{v}")
}

/// Names answered natively by every dataizable object.
pub const DATA_METHODS: &[&str] = &[
    "add", "sub", "mul", "div", "mod", "neg", "eq", "less", "greater", "not", "and", "or",
    "as-string", "as-int", "as-float", "as-bytes", "starts", "length", "concat", "if", "while",
];

pub fn is_data_method(name: &str) -> bool {
    DATA_METHODS.contains(&name)
}

fn arity(op: &str, args: &[Value], n: usize) -> Result<(), RuntimeError> {
    if args.len() != n {
        return Err(RuntimeError::Arity {
            op: op.to_string(),
            expected: n,
            got: args.len(),
        });
    }
    Ok(())
}

enum Num {
    I(i64, i64),
    F(f64, f64),
}

fn numbers(op: &str, a: &Value, b: &Value) -> Result<Num, RuntimeError> {
    match (a, b) {
        (Value::Int(x), Value::Int(y)) => Ok(Num::I(*x, *y)),
        (Value::Int(x), Value::Float(y)) => Ok(Num::F(*x as f64, *y)),
        (Value::Float(x), Value::Int(y)) => Ok(Num::F(*x, *y as f64)),
        (Value::Float(x), Value::Float(y)) => Ok(Num::F(*x, *y)),
        (Value::Int(_) | Value::Float(_), other) | (other, _) => {
            Err(RuntimeError::mismatch(op, "a number", other.type_name()))
        }
    }
}

fn checked(op: &str, v: Option<i64>) -> Result<Value, RuntimeError> {
    v.map(Value::Int)
        .ok_or_else(|| RuntimeError::Overflow(op.to_string()))
}

/// Applies one of the pure [`DATA_METHODS`] (everything but `if`/`while`).
pub fn data_op(op: &str, recv: &Value, args: &[Value]) -> Result<Value, RuntimeError> {
    match op {
        "add" | "sub" | "mul" | "div" | "mod" => {
            arity(op, args, 1)?;
            match numbers(op, recv, &args[0])? {
                Num::I(a, b) => match op {
                    "add" => checked(op, a.checked_add(b)),
                    "sub" => checked(op, a.checked_sub(b)),
                    "mul" => checked(op, a.checked_mul(b)),
                    _ if b == 0 => Err(RuntimeError::DivisionByZero),
                    "div" => checked(op, a.checked_div(b)),
                    _ => checked(op, a.checked_rem(b)),
                },
                Num::F(a, b) => match op {
                    "add" => Ok(Value::Float(a + b)),
                    "sub" => Ok(Value::Float(a - b)),
                    "mul" => Ok(Value::Float(a * b)),
                    _ if b == 0.0 => Err(RuntimeError::DivisionByZero),
                    "div" => Ok(Value::Float(a / b)),
                    _ => Ok(Value::Float(a % b)),
                },
            }
        }
        "neg" => {
            arity(op, args, 0)?;
            match recv {
                Value::Int(v) => checked(op, v.checked_neg()),
                Value::Float(v) => Ok(Value::Float(-v)),
                other => Err(RuntimeError::mismatch(op, "a number", other.type_name())),
            }
        }
        "eq" => {
            arity(op, args, 1)?;
            Ok(Value::Bool(match numbers(op, recv, &args[0]) {
                Ok(Num::I(a, b)) => a == b,
                Ok(Num::F(a, b)) => a == b,
                Err(_) => recv == &args[0],
            }))
        }
        "less" | "greater" => {
            arity(op, args, 1)?;
            let ordering = match (recv, &args[0]) {
                (Value::Str(a), Value::Str(b)) => a.cmp(b),
                (a, b) => match numbers(op, a, b)? {
                    Num::I(x, y) => x.cmp(&y),
                    Num::F(x, y) => x
                        .partial_cmp(&y)
                        .ok_or_else(|| RuntimeError::mismatch(op, "comparable numbers", "NaN"))?,
                },
            };
            Ok(Value::Bool(if op == "less" {
                ordering.is_lt()
            } else {
                ordering.is_gt()
            }))
        }
        "not" => {
            arity(op, args, 0)?;
            Ok(Value::Bool(!recv.as_bool(op)?))
        }
        "and" | "or" => {
            let mut acc = recv.as_bool(op)?;
            for a in args {
                let b = a.as_bool(op)?;
                acc = if op == "and" { acc && b } else { acc || b };
            }
            Ok(Value::Bool(acc))
        }
        "as-string" => {
            arity(op, args, 0)?;
            Ok(Value::Str(recv.render()?))
        }
        "as-int" => {
            arity(op, args, 0)?;
            match recv {
                Value::Int(v) => Ok(Value::Int(*v)),
                Value::Float(v) if v.is_finite() && v.trunc().abs() < 9.2e18 => {
                    Ok(Value::Int(v.trunc() as i64))
                }
                Value::Float(_) => Err(RuntimeError::Overflow(op.to_string())),
                Value::Bool(b) => Ok(Value::Int(*b as i64)),
                Value::Str(s) => s
                    .trim()
                    .parse()
                    .map(Value::Int)
                    .map_err(|_| RuntimeError::mismatch(op, "a decimal integer", "a string")),
                Value::Bytes(b) => {
                    let arr: [u8; 8] = b.as_slice().try_into().map_err(|_| {
                        RuntimeError::mismatch(op, "exactly 8 bytes", &format!("{} bytes", b.len()))
                    })?;
                    Ok(Value::Int(i64::from_le_bytes(arr)))
                }
            }
        }
        "as-float" => {
            arity(op, args, 0)?;
            match recv {
                Value::Int(v) => Ok(Value::Float(*v as f64)),
                Value::Float(v) => Ok(Value::Float(*v)),
                Value::Str(s) => s
                    .trim()
                    .parse()
                    .map(Value::Float)
                    .map_err(|_| RuntimeError::mismatch(op, "a decimal number", "a string")),
                Value::Bytes(b) => {
                    let arr: [u8; 8] = b.as_slice().try_into().map_err(|_| {
                        RuntimeError::mismatch(op, "exactly 8 bytes", &format!("{} bytes", b.len()))
                    })?;
                    Ok(Value::Float(f64::from_le_bytes(arr)))
                }
                other => Err(RuntimeError::mismatch(op, "a number", other.type_name())),
            }
        }
        "as-bytes" => {
            arity(op, args, 0)?;
            Ok(Value::Bytes(encode(recv)))
        }
        "starts" => {
            arity(op, args, 1)?;
            Ok(Value::Bool(recv.as_str(op)?.starts_with(args[0].as_str(op)?)))
        }
        "length" => {
            arity(op, args, 0)?;
            match recv {
                Value::Str(s) => Ok(Value::Int(s.chars().count() as i64)),
                Value::Bytes(b) => Ok(Value::Int(b.len() as i64)),
                other => Err(RuntimeError::mismatch(op, "a string or bytes", other.type_name())),
            }
        }
        "concat" => {
            let mut s = recv.as_str(op)?.to_string();
            for a in args {
                s.push_str(a.as_str(op)?);
            }
            Ok(Value::Str(s))
        }
        other => Err(RuntimeError::UnknownName(other.to_string())),
    }
}

/// Byte encoding used by heap blocks: integers and floats as 8
/// little-endian bytes, strings as UTF-8, booleans as one byte.
pub fn encode(v: &Value) -> Vec<u8> {
    match v {
        Value::Int(x) => x.to_le_bytes().to_vec(),
        Value::Float(x) => x.to_le_bytes().to_vec(),
        Value::Str(s) => s.as_bytes().to_vec(),
        Value::Bool(b) => vec![*b as u8],
        Value::Bytes(b) => b.clone(),
    }
}

/// `sprintf` with `%d`, `%s`, `%f` (optionally `%.Nf`), `%x` and `%%`.
pub fn sprintf(format: &str, args: &[Value]) -> Result<String, RuntimeError> {
    let mut out = String::new();
    let mut rest = args.iter();
    let mut chars = format.chars().peekable();
    while let Some(c) = chars.next() {
        if c != '%' {
            out.push(c);
            continue;
        }
        let mut precision = None;
        if chars.peek() == Some(&'.') {
            chars.next();
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            precision = Some(
                digits
                    .parse::<usize>()
                    .map_err(|_| RuntimeError::Format("bad precision".to_string()))?,
            );
        }
        let directive = chars
            .next()
            .ok_or_else(|| RuntimeError::Format("format ends with `%`".to_string()))?;
        if directive == '%' {
            out.push('%');
            continue;
        }
        let arg = rest.next().ok_or_else(|| {
            RuntimeError::Format(format!("not enough arguments for `%{directive}`"))
        })?;
        match directive {
            'd' => match arg {
                Value::Int(v) => out.push_str(&v.to_string()),
                Value::Float(v) => out.push_str(&(v.trunc() as i64).to_string()),
                other => {
                    return Err(RuntimeError::Format(format!(
                        "`%d` expects a number, got {}",
                        other.type_name()
                    )))
                }
            },
            'f' => {
                let v = match arg {
                    Value::Int(v) => *v as f64,
                    Value::Float(v) => *v,
                    other => {
                        return Err(RuntimeError::Format(format!(
                            "`%f` expects a number, got {}",
                            other.type_name()
                        )))
                    }
                };
                out.push_str(&format!("{:.*}", precision.unwrap_or(6), v));
            }
            'x' => out.push_str(&format!("{:x}", arg.as_int("sprintf")?)),
            's' => out.push_str(&arg.render()?),
            other => {
                return Err(RuntimeError::Format(format!("unknown directive `%{other}`")));
            }
        }
    }
    if rest.next().is_some() {
        return Err(RuntimeError::Format("too many arguments".to_string()));
    }
    Ok(out)
}
