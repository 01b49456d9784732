use num_bigint::BigInt;
use num_rational::BigRational;

use super::lexer::Span;
use crate::lexgroup::GroupSignature;
use crate::segcalc::Flavor;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Program {
    pub stmts: Vec<Stmt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stmt {
    Group {
        sig: GroupSignature,
        span: Span,
    },
    Let {
        name: String,
        value: Expr,
        span: Span,
    },
    Print {
        value: Expr,
        span: Span,
    },
    /// A bare expression; its value is printed like `print`.
    Eval {
        value: Expr,
    },
    /// `solve S1 + ? = S2`
    SolveSum {
        s1: Expr,
        s2: Expr,
        span: Span,
    },
    /// `solve I2 = I1 * ?`
    SolveProduct {
        i2: Expr,
        i1: Expr,
        span: Span,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Int(BigInt),
    Bool(bool),
    Str(String),
    Element(Vec<BigRational>),
    Segment {
        level: BigInt,
        flavor: Flavor,
        anchor: Vec<BigRational>,
    },
    Var(String),
    Call {
        name: String,
        args: Vec<Expr>,
    },
    Neg(Box<Expr>),
    Binary {
        op: BinOp,
        lhs: Box<Expr>,
        rhs: Box<Expr>,
    },
    Unique(Box<Expr>),
    Largest(Box<Expr>),
    /// `no-solution { s2' = .., tmax = .. }` or with `i2'` and `jmax`.
    NoSolution {
        ideal: bool,
        shrunk: Box<Expr>,
        best: Box<Expr>,
    },
}
