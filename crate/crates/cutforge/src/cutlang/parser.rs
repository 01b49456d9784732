//! Recursive descent over the token stream.
//!
//! ```text
//! program := sep* (stmt (sep+ stmt)*)? sep*          sep := newline | ";"
//! stmt    := "group" sig | "print" expr | ident "=" expr | expr
//!          | "solve" expr "+" "?" "=" expr | "solve" expr "=" expr "*" "?"
//! sig     := "("? factor ("," factor)* ")"? | factor "^" int
//! expr    := product (("+" | "-") product)*
//! product := unary ("*" unary)*
//! unary   := "-" unary | primary
//! primary := int | "true" | "false" | string | element | "(" expr ")"
//!          | "seg" "(" int "," (">=" | ">") "," element ")"
//!          | ("unique" | "largest") unary
//!          | "no-solution" "{" name "=" expr "," name "=" expr "}"
//!          | ident "(" (expr ("," expr)*)? ")" | ident
//! element := "[" (rational ("," rational)*)? "]"
//! rational := "-"? int ("/" int)?
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::ast::{BinOp, Expr, ExprKind, Program, Stmt};
use super::lexer::{lex, Span, Tok, Token};
use super::CutError;
use crate::lexgroup::{Factor, GroupSignature};
use crate::segcalc::Flavor;

/// Deepest nesting of expressions accepted.
pub const MAX_DEPTH: usize = 64;
/// Largest rank a `group` statement may declare.
pub const MAX_GROUP_RANK: usize = 32;

pub fn parse(src: &str) -> Result<Program, CutError> {
    let toks = lex(src)?;
    Parser { toks, pos: 0, depth: 0 }.program()
}

/// Parses a single expression, as produced by the value printer.
pub fn parse_expr(src: &str) -> Result<Expr, CutError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, depth: 0 };
    let e = p.expr()?;
    p.expect(&Tok::Eof, "end of input")?;
    Ok(e)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn span(&self) -> Span {
        self.toks[self.pos].span
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, expected: &str) -> Result<T, CutError> {
        Err(CutError::syntax(self.span(), expected, &self.peek().describe()))
    }

    fn expect(&mut self, tok: &Tok, expected: &str) -> Result<Span, CutError> {
        if self.peek() == tok {
            Ok(self.bump().span)
        } else {
            self.error(expected)
        }
    }

    fn is_ident(&self, word: &str) -> bool {
        matches!(self.peek(), Tok::Ident(w) if w == word)
    }

    fn skip_separators(&mut self) -> bool {
        let mut any = false;
        while matches!(self.peek(), Tok::Newline | Tok::Semi) {
            self.bump();
            any = true;
        }
        any
    }

    fn program(&mut self) -> Result<Program, CutError> {
        let mut stmts = Vec::new();
        self.skip_separators();
        while *self.peek() != Tok::Eof {
            stmts.push(self.stmt()?);
            if !self.skip_separators() && *self.peek() != Tok::Eof {
                return self.error("end of statement");
            }
        }
        Ok(Program { stmts })
    }

    fn stmt(&mut self) -> Result<Stmt, CutError> {
        let span = self.span();
        if self.is_ident("group") {
            self.bump();
            return Ok(Stmt::Group { sig: self.sig()?, span });
        }
        if self.is_ident("print") {
            self.bump();
            return Ok(Stmt::Print { value: self.expr()?, span });
        }
        if self.is_ident("solve") && *self.peek_at(1) != Tok::LParen {
            self.bump();
            let first = self.expr()?;
            if *self.peek() == Tok::Plus {
                self.bump();
                self.expect(&Tok::Question, "`?`")?;
                self.expect(&Tok::Eq, "`=`")?;
                return Ok(Stmt::SolveSum { s1: first, s2: self.expr()?, span });
            }
            if *self.peek() == Tok::Eq {
                self.bump();
                let i1 = self.expr()?;
                self.expect(&Tok::Star, "`* ?`")?;
                self.expect(&Tok::Question, "`?`")?;
                return Ok(Stmt::SolveProduct { i2: first, i1, span });
            }
            return self.error("`+ ? =` or `=`");
        }
        if let (Tok::Ident(name), Tok::Eq) = (self.peek().clone(), self.peek_at(1)) {
            self.bump();
            self.bump();
            return Ok(Stmt::Let { name, value: self.expr()?, span });
        }
        Ok(Stmt::Eval { value: self.expr()? })
    }

    fn factor(&mut self) -> Result<Factor, CutError> {
        match self.peek() {
            Tok::Ident(w) if w == "Z" => {
                self.bump();
                Ok(Factor::Int)
            }
            Tok::Ident(w) if w == "Q" => {
                self.bump();
                Ok(Factor::Rat)
            }
            _ => self.error("`Z` or `Q`"),
        }
    }

    fn sig(&mut self) -> Result<GroupSignature, CutError> {
        let paren = *self.peek() == Tok::LParen;
        if paren {
            self.bump();
        }
        let first = self.factor()?;
        let mut factors = vec![first];
        if *self.peek() == Tok::Caret {
            self.bump();
            let span = self.span();
            let n = match self.peek() {
                Tok::Int(n) => n.to_usize().filter(|n| (1..=MAX_GROUP_RANK).contains(n)),
                _ => return self.error("an exponent"),
            };
            let Some(n) = n else {
                return Err(CutError::syntax(
                    span,
                    &format!("an exponent in 1..={MAX_GROUP_RANK}"),
                    &self.peek().describe(),
                ));
            };
            self.bump();
            factors = vec![first; n];
        } else {
            while *self.peek() == Tok::Comma {
                self.bump();
                if factors.len() == MAX_GROUP_RANK {
                    return self.error(&format!("at most {MAX_GROUP_RANK} factors"));
                }
                factors.push(self.factor()?);
            }
        }
        if paren {
            self.expect(&Tok::RParen, "`)`")?;
        }
        Ok(GroupSignature::new(factors).expect("at least one factor"))
    }

    fn nested<T>(&mut self, f: impl FnOnce(&mut Self) -> Result<T, CutError>) -> Result<T, CutError> {
        if self.depth == MAX_DEPTH {
            return self.error(&format!("an expression nested at most {MAX_DEPTH} deep"));
        }
        self.depth += 1;
        let r = f(self);
        self.depth -= 1;
        r
    }

    fn expr(&mut self) -> Result<Expr, CutError> {
        self.nested(|p| {
            let mut lhs = p.product()?;
            loop {
                let op = match p.peek() {
                    // `+ ?` ends the left side of a solve statement
                    Tok::Plus if *p.peek_at(1) != Tok::Question => BinOp::Add,
                    Tok::Minus => BinOp::Sub,
                    _ => return Ok(lhs),
                };
                let span = p.bump().span;
                let rhs = p.product()?;
                lhs = Expr { kind: ExprKind::Binary { op, lhs: Box::new(lhs), rhs: Box::new(rhs) }, span };
            }
        })
    }

    fn product(&mut self) -> Result<Expr, CutError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Star && *self.peek_at(1) != Tok::Question {
            let span = self.bump().span;
            let rhs = self.unary()?;
            lhs = Expr { kind: ExprKind::Binary { op: BinOp::Mul, lhs: Box::new(lhs), rhs: Box::new(rhs) }, span };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, CutError> {
        self.nested(|p| {
            if *p.peek() == Tok::Minus {
                let span = p.bump().span;
                let inner = p.unary()?;
                return Ok(Expr { kind: ExprKind::Neg(Box::new(inner)), span });
            }
            p.primary()
        })
    }

    fn primary(&mut self) -> Result<Expr, CutError> {
        let span = self.span();
        let kind = match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                ExprKind::Int(n)
            }
            Tok::Str(s) => {
                self.bump();
                ExprKind::Str(s)
            }
            Tok::LBracket => ExprKind::Element(self.element()?),
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(&Tok::RParen, "`)`")?;
                return Ok(e);
            }
            Tok::NoSolution => {
                self.bump();
                return self.no_solution(span);
            }
            Tok::Ident(w) => {
                self.bump();
                match w.as_str() {
                    "true" => ExprKind::Bool(true),
                    "false" => ExprKind::Bool(false),
                    "unique" => ExprKind::Unique(Box::new(self.unary()?)),
                    "largest" => ExprKind::Largest(Box::new(self.unary()?)),
                    "seg" if *self.peek() == Tok::LParen => self.segment()?,
                    _ if *self.peek() == Tok::LParen => ExprKind::Call { name: w, args: self.args()? },
                    _ => ExprKind::Var(w),
                }
            }
            _ => return self.error("an expression"),
        };
        Ok(Expr { kind, span })
    }

    fn args(&mut self) -> Result<Vec<Expr>, CutError> {
        self.expect(&Tok::LParen, "`(`")?;
        let mut args = Vec::new();
        if *self.peek() != Tok::RParen {
            args.push(self.expr()?);
            while *self.peek() == Tok::Comma {
                self.bump();
                args.push(self.expr()?);
            }
        }
        self.expect(&Tok::RParen, "`,` or `)`")?;
        Ok(args)
    }

    fn segment(&mut self) -> Result<ExprKind, CutError> {
        self.expect(&Tok::LParen, "`(`")?;
        let Tok::Int(level) = self.peek().clone() else {
            return self.error("a level");
        };
        self.bump();
        self.expect(&Tok::Comma, "`,`")?;
        let flavor = match self.peek() {
            Tok::Ge => Flavor::Geq,
            Tok::Gt => Flavor::Gt,
            _ => return self.error("`>=` or `>`"),
        };
        self.bump();
        self.expect(&Tok::Comma, "`,`")?;
        let anchor = self.element()?;
        self.expect(&Tok::RParen, "`)`")?;
        Ok(ExprKind::Segment { level, flavor, anchor })
    }

    fn element(&mut self) -> Result<Vec<BigRational>, CutError> {
        self.expect(&Tok::LBracket, "`[`")?;
        let mut coords = Vec::new();
        if *self.peek() != Tok::RBracket {
            coords.push(self.rational()?);
            while *self.peek() == Tok::Comma {
                self.bump();
                coords.push(self.rational()?);
            }
        }
        self.expect(&Tok::RBracket, "`,` or `]`")?;
        Ok(coords)
    }

    fn rational(&mut self) -> Result<BigRational, CutError> {
        let negative = *self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        let Tok::Int(num) = self.peek().clone() else {
            return self.error("a number");
        };
        self.bump();
        let mut den = BigInt::from(1);
        if *self.peek() == Tok::Slash {
            self.bump();
            match self.peek().clone() {
                Tok::Int(d) if !d.is_zero() => den = d,
                _ => return self.error("a positive denominator"),
            }
            self.bump();
        }
        let q = BigRational::new(num, den);
        Ok(if negative { -q } else { q })
    }

    fn no_solution(&mut self, span: Span) -> Result<Expr, CutError> {
        self.expect(&Tok::LBrace, "`{`")?;
        let ideal = match self.peek() {
            Tok::Ident(w) if w == "s2'" => false,
            Tok::Ident(w) if w == "i2'" => true,
            _ => return self.error("`s2'` or `i2'`"),
        };
        self.bump();
        self.expect(&Tok::Eq, "`=`")?;
        let shrunk = self.expr()?;
        self.expect(&Tok::Comma, "`,`")?;
        let best_name = if ideal { "jmax" } else { "tmax" };
        if !self.is_ident(best_name) {
            return self.error(&format!("`{best_name}`"));
        }
        self.bump();
        self.expect(&Tok::Eq, "`=`")?;
        let best = self.expr()?;
        self.expect(&Tok::RBrace, "`}`")?;
        Ok(Expr { kind: ExprKind::NoSolution { ideal, shrunk: Box::new(shrunk), best: Box::new(best) }, span })
    }
}
