//! Name checking and evaluation.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::ast::{BinOp, Expr, ExprKind, Program, Stmt};
use super::lexer::Span;
use super::parser::{parse, parse_expr};
use super::{CutError, EvalError, Value};
use crate::error::Error;
use crate::idealcalc::{
    ann_ball_power, ann_power_quotient, annihilator, solve_ideal, verify_m_properties, MPropertyBounds,
    SolveIdealOutcome, ValuedField,
};
use crate::lexgroup::{ConvexSubgroup, GroupElement, GroupSignature};
use crate::oracle::battery::{run_suite, Suite};
use crate::oracle::WindowSpec;
use crate::segcalc::{solve, FinalSegment, Flavor, SolveOutcome};

type EResult<T> = std::result::Result<T, EvalError>;

/// Names bound in every group unless shadowed.
pub const CONSTANTS: &[&str] = &["Ov", "Mv"];

fn constant(g: &GroupSignature, name: &str) -> EResult<Value> {
    let f = ValuedField::new(g.clone());
    match name {
        "Ov" => Ok(Value::Overring(f.valuation_ring())),
        "Mv" => Ok(Value::Ideal(f.mv())),
        _ => Err(EvalError::Unbound(name.into())),
    }
}

/// Built-in functions with their accepted argument counts.
pub const FUNCTIONS: &[(&str, &[usize], &str)] = &[
    ("delta", &[1], "delta(S): {x : x >= -S}"),
    ("negc", &[1], "negc(S): -S^c"),
    ("msub", &[2], "msub(S2, S1) = S2 + delta(S1)"),
    ("cdiff", &[2], "cdiff(S2, S1) = S2 + negc(S1)"),
    ("ms", &[2], "ms(S2, S1): largest T with S1 + T inside S2"),
    ("hat", &[1], "hat(S): closure"),
    ("dhat", &[1], "dhat(S | I): deep closure"),
    ("ntimes", &[2], "ntimes(S, k) = S + ... + S"),
    ("inv", &[1], "inv(S): invariance group H(j)"),
    ("push", &[2], "push(S, k): image modulo H(k)"),
    ("pull", &[1], "pull(S): preimage in the declared group"),
    ("eq", &[2], "eq(A, B): equality"),
    ("subset", &[2], "subset(A, B)"),
    ("member", &[2], "member(S, g)"),
    ("is_principal", &[1], "is_principal(S | I)"),
    ("ideal", &[1], "ideal(S): the ideal with value set S; ideal(O): O as an ideal"),
    ("segment", &[1], "segment(I): value set of I"),
    ("principal", &[1], "principal(g): aO_v with va = g"),
    ("O", &[1], "O(k) overring at level k, O(I) invariance ring"),
    ("M", &[1], "M(O) or M(I): maximal ideal"),
    ("H", &[1], "H(k), H(O), H(I), H(S)"),
    ("mul", &[2], "mul(I, J) = I * J"),
    ("power", &[2], "power(I, n)"),
    ("colon", &[2], "colon(I2, I1) = I2 : I1"),
    ("ann", &[2], "ann(I1, I2): annihilator of I1/I2"),
    ("annpow", &[3], "annpow(I, b, n): ann I/bI^n"),
    ("annball", &[3], "annball(a, O, n): ann aM/(aM)^n"),
    ("extend", &[2], "extend(I, O) = IO"),
    ("closure", &[2], "closure(I, O)"),
    ("solve", &[2], "solve(A, B): A + T = B or A * J = B"),
    ("best", &[1], "best(outcome): largest (sub)solution"),
    ("mprops", &[1], "mprops(bound): M(I) property report"),
    ("verify", &[3, 4], "verify(\"seg\"|\"ideal\"|\"m-properties\"|\"all\", bound, box[, samples])"),
];

/// Limits that keep a single statement from running for minutes.
const MAX_VERIFY_BOUND: i64 = 4;
const MAX_VERIFY_BOX: i64 = 64;
const MAX_VERIFY_SAMPLES: usize = 100_000;

/// A group declaration and the names bound under it.
#[derive(Debug, Clone, Default)]
pub struct Session {
    group: Option<GroupSignature>,
    env: HashMap<String, Value>,
}

fn at<T>(span: Span, r: EResult<T>) -> Result<T, CutError> {
    r.map_err(|error| CutError::Eval { span, error })
}

impl Session {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_group(sig: GroupSignature) -> Self {
        Session { group: Some(sig), env: HashMap::new() }
    }

    pub fn group(&self) -> Option<&GroupSignature> {
        self.group.as_ref()
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.env.get(name)
    }

    /// Runs a program and collects what it prints.
    pub fn run(&mut self, src: &str) -> Result<Vec<Value>, CutError> {
        let mut out = Vec::new();
        self.run_with(src, &mut |v| out.push(v.clone()))?;
        Ok(out)
    }

    /// Runs a program, handing each printed value to `emit` as it appears.
    /// Nothing runs unless the whole program parses and every name and
    /// literal checks out.
    pub fn run_with(&mut self, src: &str, emit: &mut dyn FnMut(&Value)) -> Result<(), CutError> {
        let program = parse(src)?;
        self.check(&program)?;
        for stmt in &program.stmts {
            self.exec(stmt, emit)?;
        }
        Ok(())
    }

    /// Evaluates one expression in the current scope.
    pub fn eval_str(&self, src: &str) -> Result<Value, CutError> {
        let e = parse_expr(src)?;
        let names: HashSet<String> = self.env.keys().cloned().collect();
        Checker { group: self.group.clone(), names }.expr(&e)?;
        self.eval(&e)
    }

    fn check(&self, program: &Program) -> Result<(), CutError> {
        let mut c = Checker { group: self.group.clone(), names: self.env.keys().cloned().collect() };
        for stmt in &program.stmts {
            c.stmt(stmt)?;
        }
        Ok(())
    }

    fn exec(&mut self, stmt: &Stmt, emit: &mut dyn FnMut(&Value)) -> Result<(), CutError> {
        match stmt {
            Stmt::Group { sig, .. } => {
                self.group = Some(sig.clone());
                self.env.clear();
            }
            Stmt::Let { name, value, .. } => {
                let v = self.eval(value)?;
                self.env.insert(name.clone(), v);
            }
            Stmt::Print { value, .. } | Stmt::Eval { value } => emit(&self.eval(value)?),
            Stmt::SolveSum { s1, s2, span } => {
                let (a, b) = (self.eval(s1)?, self.eval(s2)?);
                let v = at(
                    *span,
                    match (&a, &b) {
                        (Value::Segment(a), Value::Segment(b)) => solve(a, b).map(Value::Solve).map_err(Into::into),
                        _ => Err(type_error("solve _ + ? = _", &[&a, &b])),
                    },
                )?;
                emit(&v);
            }
            Stmt::SolveProduct { i2, i1, span } => {
                let (b, a) = (self.eval(i2)?, self.eval(i1)?);
                let v = at(
                    *span,
                    match (&a, &b) {
                        (Value::Ideal(a), Value::Ideal(b)) => {
                            solve_ideal(a, b).map(Value::SolveIdeal).map_err(Into::into)
                        }
                        _ => Err(type_error("solve _ = _ * ?", &[&b, &a])),
                    },
                )?;
                emit(&v);
            }
        }
        Ok(())
    }

    fn sig(&self) -> EResult<&GroupSignature> {
        self.group.as_ref().ok_or(EvalError::NoGroup)
    }

    fn eval(&self, e: &Expr) -> Result<Value, CutError> {
        let span = e.span;
        match &e.kind {
            ExprKind::Int(n) => Ok(Value::Int(n.clone())),
            ExprKind::Bool(b) => Ok(Value::Bool(*b)),
            ExprKind::Str(_) => at(span, Err(EvalError::Type { op: "string".into(), operands: "a value".into() })),
            ExprKind::Element(coords) => at(span, self.sig().and_then(|g| element(g, coords)).map(Value::Element)),
            ExprKind::Segment { level, flavor, anchor } => {
                at(span, self.sig().and_then(|g| segment(g, level, *flavor, anchor)).map(Value::Segment))
            }
            ExprKind::Var(name) => {
                if let Some(v) = self.env.get(name) {
                    return Ok(v.clone());
                }
                at(span, self.sig().and_then(|g| constant(g, name)))
            }
            ExprKind::Neg(inner) => {
                let v = self.eval(inner)?;
                at(
                    span,
                    match v {
                        Value::Int(n) => Ok(Value::Int(-n)),
                        Value::Element(g) => Ok(Value::Element(g.neg())),
                        other => Err(type_error("-", &[&other])),
                    },
                )
            }
            ExprKind::Binary { op, lhs, rhs } => {
                let (a, b) = (self.eval(lhs)?, self.eval(rhs)?);
                at(span, binary(*op, a, b))
            }
            ExprKind::Call { name, args } => {
                if name == "verify" {
                    return at(span, self.verify(args));
                }
                let vals = args.iter().map(|a| self.eval(a)).collect::<Result<Vec<_>, _>>()?;
                at(span, self.call(name, vals))
            }
            ExprKind::Unique(inner) | ExprKind::Largest(inner) => {
                let unique = matches!(e.kind, ExprKind::Unique(_));
                let v = self.eval(inner)?;
                at(
                    span,
                    match (v, unique) {
                        (Value::Segment(t), true) => Ok(Value::Solve(SolveOutcome::Unique(t))),
                        (Value::Segment(t), false) => Ok(Value::Solve(SolveOutcome::Largest(t))),
                        (Value::Ideal(j), true) => Ok(Value::SolveIdeal(SolveIdealOutcome::Unique(j))),
                        (Value::Ideal(j), false) => Ok(Value::SolveIdeal(SolveIdealOutcome::Largest(j))),
                        (other, _) => Err(type_error(if unique { "unique" } else { "largest" }, &[&other])),
                    },
                )
            }
            ExprKind::NoSolution { ideal, shrunk, best } => {
                let (a, b) = (self.eval(shrunk)?, self.eval(best)?);
                at(
                    span,
                    match (a, b, ideal) {
                        (Value::Segment(s2_prime), Value::Segment(t_max), false) => {
                            Ok(Value::Solve(SolveOutcome::NoSolution { s2_prime, t_max }))
                        }
                        (Value::Ideal(i2_prime), Value::Ideal(j_max), true) => {
                            Ok(Value::SolveIdeal(SolveIdealOutcome::NoSolution { i2_prime, j_max }))
                        }
                        (a, b, _) => Err(type_error("no-solution", &[&a, &b])),
                    },
                )
            }
        }
    }

    fn call(&self, name: &str, args: Vec<Value>) -> EResult<Value> {
        use Value::*;
        let bad = |args: &[Value]| type_error(name, &args.iter().collect::<Vec<_>>());
        let v = match (name, args.as_slice()) {
            ("delta", [Segment(s)]) => Segment(s.delta()),
            ("negc", [Segment(s)]) => Segment(s.neg_complement()),
            ("msub", [Segment(a), Segment(b)]) => Segment(a.msub(b)?),
            ("cdiff", [Segment(a), Segment(b)]) => Segment(a.cdiff(b)?),
            ("ms", [Segment(a), Segment(b)]) => Segment(a.ms(b)?),
            ("hat", [Segment(s)]) => Segment(s.hat()),
            ("dhat", [Segment(s)]) => Segment(s.dhat()),
            ("dhat", [Ideal(i)]) => Ideal(i.deep_closure()),
            ("ntimes", [Segment(s), Int(k)]) => Segment(s.n_times(small(k)?)?),
            ("inv" | "H", [Segment(s)]) => Subgroup(s.inv_group()),
            ("push", [Segment(s), Int(k)]) => Segment(s.push_quotient(level(k))?),
            ("pull", [Segment(s)]) => Segment(s.pull_quotient(self.sig()?)?),
            ("eq", [a, b]) if a.kind() == b.kind() => Bool(a == b),
            ("subset", [Segment(a), Segment(b)]) => Bool(a.subset(b)?),
            ("subset", [Ideal(a), Ideal(b)]) => Bool(a.subset(b)?),
            ("member", [Segment(s), Element(g)]) => Bool(s.member(g)?),
            ("is_principal", [Segment(s)]) => Bool(s.is_principal()),
            ("is_principal", [Ideal(i)]) => Bool(i.is_principal()),
            ("ideal", [Segment(s)]) => Ideal(crate::idealcalc::Ideal::from_segment(s.clone())),
            ("ideal", [Overring(o)]) => Ideal(o.as_ideal()),
            ("segment", [Ideal(i)]) => Segment(i.segment().clone()),
            ("principal", [Element(g)]) => Ideal(ValuedField::new(g.signature().clone()).principal_ideal(g)?),
            ("O", [Int(k)]) => Overring(ValuedField::new(self.sig()?.clone()).overring(level(k))?),
            ("O", [Ideal(i)]) => Overring(i.inv_ring()),
            ("M", [Overring(o)]) => Ideal(o.max_ideal()),
            ("M", [Ideal(i)]) => Ideal(i.max_ideal()),
            ("H", [Int(k)]) => Subgroup(ConvexSubgroup::new(self.sig()?, level(k))?),
            ("H", [Overring(o)]) => Subgroup(o.units_group()),
            ("H", [Ideal(i)]) => Subgroup(i.units_group()),
            ("mul", [Ideal(a), Ideal(b)]) => Ideal(a.mul(b)?),
            ("power", [Ideal(i), Int(n)]) => Ideal(i.power(small(n)?)?),
            ("colon", [Ideal(a), Ideal(b)]) => Ideal(a.colon(b)?),
            ("ann", [Ideal(a), Ideal(b)]) => Ideal(annihilator(a, b)?),
            ("annpow", [Ideal(i), Element(b), Int(n)]) => Ideal(ann_power_quotient(i, b, small(n)?)?.ann),
            ("annball", [Element(a), Overring(o), Int(n)]) => Ideal(ann_ball_power(a, o, small(n)?)?.ann),
            ("extend", [Ideal(i), Overring(o)]) => Ideal(i.extend(o)?),
            ("closure", [Ideal(i), Overring(o)]) => Ideal(i.closure_over(o)?),
            ("solve", [Segment(a), Segment(b)]) => Solve(solve(a, b)?),
            ("solve", [Ideal(a), Ideal(b)]) => SolveIdeal(solve_ideal(a, b)?),
            ("best", [Solve(o)]) => Segment(o.best().clone()),
            ("best", [SolveIdeal(o)]) => Ideal(o.best().clone()),
            ("mprops", [Int(b)]) => {
                let anchor_bound = bounded(b, 0, MAX_VERIFY_BOUND, "mprops bound")?;
                let field = ValuedField::new(self.sig()?.clone());
                let r = verify_m_properties(&field, MPropertyBounds { anchor_bound, ..MPropertyBounds::default() });
                Report(super::Report { passed: r.passed(), text: r.to_string() })
            }
            (name, args) if FUNCTIONS.iter().any(|(f, _, _)| *f == name) => return Err(bad(args)),
            (name, _) => return Err(EvalError::UnknownFunction(name.to_string())),
        };
        Ok(v)
    }

    fn verify(&self, args: &[Expr]) -> EResult<Value> {
        let sig = self.sig()?;
        let [suite, rest @ ..] = args else { unreachable!("arity is checked") };
        let ExprKind::Str(name) = &suite.kind else {
            return Err(EvalError::Type { op: "verify".into(), operands: "a non-string suite name".into() });
        };
        let suite = Suite::parse(name).ok_or_else(|| EvalError::Limit(format!("unknown suite {name:?}")))?;
        let ints = rest
            .iter()
            .map(|a| match self.eval(a) {
                Ok(Value::Int(n)) => Ok(n),
                Ok(other) => Err(type_error("verify", &[&other])),
                Err(e) => Err(match e {
                    CutError::Eval { error, .. } => error,
                    CutError::Syntax { expected, .. } => EvalError::Limit(expected),
                }),
            })
            .collect::<EResult<Vec<_>>>()?;
        let bound = bounded(&ints[0], 0, MAX_VERIFY_BOUND, "anchor bound")?;
        let radius = bounded(&ints[1], 1, MAX_VERIFY_BOX, "box")?;
        let mut w = WindowSpec::with_radius(radius);
        if let Some(n) = ints.get(2) {
            w.samples = bounded(n, 1, MAX_VERIFY_SAMPLES as i64, "samples")? as usize;
        }
        let checks = run_suite(suite, sig, bound, &w)?;
        let text: Vec<String> = checks.iter().map(|c| c.to_string()).collect();
        Ok(Value::Report(super::Report { passed: checks.iter().all(|c| c.passed()), text: text.join("\n") }))
    }
}

fn type_error(op: &str, args: &[&Value]) -> EvalError {
    let kinds: Vec<&str> = args.iter().map(|v| v.kind()).collect();
    let operands = match kinds.as_slice() {
        [] => "no arguments".to_string(),
        [k] if k.starts_with(['e', 'i', 'o']) => format!("an {k}"),
        [k] => format!("a {k}"),
        ks => ks.join(" and "),
    };
    EvalError::Type { op: op.to_string(), operands }
}

fn small(n: &BigInt) -> EResult<i64> {
    n.to_i64().ok_or_else(|| EvalError::Limit(format!("{n} does not fit in 64 bits")))
}

/// Levels out of range are reported by the engine with their bounds.
fn level(n: &BigInt) -> usize {
    n.to_usize().unwrap_or(usize::MAX)
}

fn bounded(n: &BigInt, lo: i64, hi: i64, what: &str) -> EResult<i64> {
    n.to_i64()
        .filter(|v| (lo..=hi).contains(v))
        .ok_or_else(|| EvalError::Limit(format!("{what} must lie in {lo}..={hi}, got {n}")))
}

/// Literals with fewer coordinates than the group live in its prefix.
fn literal_group(sig: &GroupSignature, len: usize) -> EResult<GroupSignature> {
    if len == 0 || len > sig.rank() {
        return Err(Error::ArityMismatch { expected: sig.rank(), got: len }.into());
    }
    Ok(sig.prefix(len)?)
}

fn element(sig: &GroupSignature, coords: &[BigRational]) -> EResult<GroupElement> {
    Ok(GroupElement::new(&literal_group(sig, coords.len())?, coords.to_vec())?)
}

fn segment(sig: &GroupSignature, lvl: &BigInt, flavor: Flavor, anchor: &[BigRational]) -> EResult<FinalSegment> {
    let anchor = element(sig, anchor)?;
    Ok(FinalSegment::new(anchor.signature(), level(lvl), flavor, &anchor)?)
}

fn binary(op: BinOp, a: Value, b: Value) -> EResult<Value> {
    use Value::*;
    Ok(match (op, &a, &b) {
        (BinOp::Add, Segment(x), Segment(y)) => Segment(x.add(y)?),
        (BinOp::Add, Segment(s), Element(g)) | (BinOp::Add, Element(g), Segment(s)) => Segment(s.shift(g)?),
        (BinOp::Sub, Segment(s), Element(g)) => Segment(s.shift(&g.neg())?),
        (BinOp::Add, Element(x), Element(y)) => Element(x.add(y)?),
        (BinOp::Sub, Element(x), Element(y)) => Element(x.sub(y)?),
        (BinOp::Add, Int(x), Int(y)) => Int(x + y),
        (BinOp::Sub, Int(x), Int(y)) => Int(x - y),
        (BinOp::Mul, Int(x), Int(y)) => Int(x * y),
        (BinOp::Mul, Ideal(x), Ideal(y)) => Ideal(x.mul(y)?),
        (BinOp::Mul, Int(k), Segment(s)) => Segment(s.n_times(small(k)?)?),
        (BinOp::Mul, Int(k), Element(g)) => Element(g.scale(small(k)?)),
        _ => return Err(type_error(op.symbol(), &[&a, &b])),
    })
}

/// Static pass: names are bound before use, calls have the right arity,
/// and literals fit the declared group.
struct Checker {
    group: Option<GroupSignature>,
    names: HashSet<String>,
}

impl Checker {
    fn stmt(&mut self, stmt: &Stmt) -> Result<(), CutError> {
        match stmt {
            Stmt::Group { sig, .. } => {
                self.group = Some(sig.clone());
                self.names.clear();
            }
            Stmt::Let { name, value, .. } => {
                self.expr(value)?;
                self.names.insert(name.clone());
            }
            Stmt::Print { value, .. } | Stmt::Eval { value } => self.expr(value)?,
            Stmt::SolveSum { s1: a, s2: b, .. } | Stmt::SolveProduct { i2: a, i1: b, .. } => {
                self.expr(a)?;
                self.expr(b)?;
            }
        }
        Ok(())
    }

    fn expr(&self, e: &Expr) -> Result<(), CutError> {
        let group = || self.group.as_ref().ok_or(EvalError::NoGroup);
        match &e.kind {
            ExprKind::Int(_) | ExprKind::Bool(_) | ExprKind::Str(_) => Ok(()),
            ExprKind::Element(coords) => at(e.span, group().and_then(|g| element(g, coords)).map(drop)),
            ExprKind::Segment { level, flavor, anchor } => {
                at(e.span, group().and_then(|g| segment(g, level, *flavor, anchor)).map(drop))
            }
            ExprKind::Var(name) => {
                if self.names.contains(name) || CONSTANTS.contains(&name.as_str()) {
                    Ok(())
                } else {
                    at(e.span, Err(EvalError::Unbound(name.clone())))
                }
            }
            ExprKind::Call { name, args } => {
                let Some((_, arities, _)) = FUNCTIONS.iter().find(|(f, _, _)| f == name) else {
                    return at(e.span, Err(EvalError::UnknownFunction(name.clone())));
                };
                if !arities.contains(&args.len()) {
                    let expected = arities.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" or ");
                    return at(e.span, Err(EvalError::Arity { name: name.clone(), expected, got: args.len() }));
                }
                args.iter().try_for_each(|a| self.expr(a))
            }
            ExprKind::Neg(x) | ExprKind::Unique(x) | ExprKind::Largest(x) => self.expr(x),
            ExprKind::Binary { lhs, rhs, .. } => {
                self.expr(lhs)?;
                self.expr(rhs)
            }
            ExprKind::NoSolution { shrunk, best, .. } => {
                self.expr(shrunk)?;
                self.expr(best)
            }
        }
    }
}
