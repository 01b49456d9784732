//! The `.cut` language: a small calculator over segments and ideals.
//!
//! ```text
//! group Q,Z
//! S = seg(1, >, [0, 0])
//! print S + S            # seg(1, >, [0, 0])
//! solve seg(2, >=, [1, 0]) + ? = S
//! ```
//!
//! Values print in a form the parser reads back, except reports.

mod ast;
mod eval;
pub mod json;
mod lexer;
mod parser;
pub mod repl;

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::error::Error;
use crate::idealcalc::{Ideal, Overring, SolveIdealOutcome};
use crate::lexgroup::{ConvexSubgroup, GroupElement};
use crate::segcalc::{FinalSegment, SolveOutcome};

pub use ast::{BinOp, Expr, ExprKind, Program, Stmt};
pub use eval::{Session, CONSTANTS, FUNCTIONS};
pub use lexer::{lex, Span, Tok, Token};
pub use parser::{parse, parse_expr, MAX_DEPTH, MAX_GROUP_RANK};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(BigInt),
    Bool(bool),
    Element(GroupElement),
    Segment(FinalSegment),
    Ideal(Ideal),
    Overring(Overring),
    Subgroup(ConvexSubgroup),
    Solve(SolveOutcome),
    SolveIdeal(SolveIdealOutcome),
    Report(Report),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Int(_) => "int",
            Value::Bool(_) => "bool",
            Value::Element(_) => "element",
            Value::Segment(_) => "segment",
            Value::Ideal(_) => "ideal",
            Value::Overring(_) => "overring",
            Value::Subgroup(_) => "subgroup",
            Value::Solve(_) => "solve",
            Value::SolveIdeal(_) => "solve-ideal",
            Value::Report(_) => "report",
        }
    }
}

/// Canonical text of a value.
impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(n) => write!(f, "{n}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Element(g) => write!(f, "{g}"),
            Value::Segment(s) => write!(f, "{s}"),
            Value::Ideal(i) => write!(f, "{i}"),
            Value::Overring(o) => write!(f, "{o}"),
            Value::Subgroup(h) => write!(f, "{h}"),
            Value::Solve(o) => write!(f, "{o}"),
            Value::SolveIdeal(o) => write!(f, "{o}"),
            Value::Report(r) => write!(f, "{}", r.text.trim_end()),
        }
    }
}

/// Output of a verification run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub passed: bool,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Engine(#[from] Error),
    #[error("no group declared; start with e.g. `group Z^2`")]
    NoGroup,
    #[error("unbound name `{0}`")]
    Unbound(String),
    #[error("unknown function `{0}`")]
    UnknownFunction(String),
    #[error("`{name}` takes {expected} arguments, got {got}")]
    Arity { name: String, expected: String, got: usize },
    #[error("`{op}` does not apply to {operands}")]
    Type { op: String, operands: String },
    #[error("{0}")]
    Limit(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CutError {
    #[error("{}:{}: syntax error: expected {expected}, found {found}", span.line, span.col)]
    Syntax { span: Span, expected: String, found: String },
    #[error("{}:{}: {error}", span.line, span.col)]
    Eval { span: Span, error: EvalError },
}

impl CutError {
    pub(crate) fn syntax(span: Span, expected: &str, found: &str) -> Self {
        CutError::Syntax { span, expected: expected.into(), found: found.into() }
    }

    pub fn span(&self) -> Span {
        match self {
            CutError::Syntax { span, .. } | CutError::Eval { span, .. } => *span,
        }
    }
}
