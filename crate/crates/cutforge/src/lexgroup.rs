//! Lexicographic products of copies of Z and Q.
//!
//! The first coordinate is the most significant one. Quotients by the
//! standard convex subgroups are represented by prefix products.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    Int,
    Rat,
}

impl Factor {
    pub fn symbol(self) -> char {
        match self {
            Factor::Int => 'Z',
            Factor::Rat => 'Q',
        }
    }
}

/// The factor list of a lexicographic product.
///
/// Only [`GroupSignature::prefix`] can produce the trivial signature with no
/// factors; everything else has rank at least one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSignature {
    factors: Arc<[Factor]>,
}

impl GroupSignature {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptySignature);
        }
        Ok(GroupSignature { factors: factors.into() })
    }

    pub fn ints(n: usize) -> Result<Self> {
        Self::new(vec![Factor::Int; n])
    }

    /// Accepts `(Z,Q,Z)`, `Z,Q,Z` and `Z^3`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::BadLiteral { what: "signature", text: text.to_string() };
        let mut body = text.trim();
        if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            body = inner.trim();
        }
        let factor = |s: &str| match s.trim() {
            "Z" => Ok(Factor::Int),
            "Q" => Ok(Factor::Rat),
            _ => Err(bad()),
        };
        if let Some((base, exp)) = body.split_once('^') {
            let f = factor(base)?;
            let n: usize = exp.trim().parse().map_err(|_| bad())?;
            return Self::new(vec![f; n]).map_err(|_| bad());
        }
        let factors = body.split(',').map(factor).collect::<Result<Vec<_>>>()?;
        Self::new(factors)
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// Factor at a 1-based position.
    pub fn factor(&self, position: usize) -> Factor {
        self.factors[position - 1]
    }

    pub fn is_all_int(&self) -> bool {
        self.factors.iter().all(|f| *f == Factor::Int)
    }

    pub fn is_discrete(&self) -> bool {
        self.factors.last() == Some(&Factor::Int)
    }

    pub fn smallest_positive(&self) -> Option<GroupElement> {
        if self.is_discrete() {
            Some(GroupElement::unit(self, self.rank()))
        } else {
            None
        }
    }

    /// Signature of `A_1 x ... x A_k`, the realization of `G/H_k`.
    pub fn prefix(&self, k: usize) -> Result<Self> {
        self.check_level(k, 0)?;
        Ok(GroupSignature { factors: self.factors[..k].into() })
    }

    pub(crate) fn check_level(&self, level: usize, min: usize) -> Result<()> {
        if level < min || level > self.rank() {
            return Err(Error::LevelOutOfRange { level, min, max: self.rank() });
        }
        Ok(())
    }

    pub(crate) fn ensure_same(&self, other: &Self) -> Result<()> {
        if self != other {
            return Err(Error::SignatureMismatch { left: self.to_string(), right: other.to_string() });
        }
        Ok(())
    }
}

impl fmt::Display for GroupSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| x.symbol().to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::BadLiteral { what: "rational", text: text.to_string() };
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if !den.is_positive() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    sig: GroupSignature,
    coords: Vec<BigRational>,
}

impl GroupElement {
    pub fn new(sig: &GroupSignature, coords: Vec<BigRational>) -> Result<Self> {
        if coords.len() != sig.rank() {
            return Err(Error::ArityMismatch { expected: sig.rank(), got: coords.len() });
        }
        for (i, (c, f)) in coords.iter().zip(sig.factors()).enumerate() {
            if *f == Factor::Int && !c.is_integer() {
                return Err(Error::NonIntegerInIntFactor { position: i + 1 });
            }
        }
        Ok(GroupElement { sig: sig.clone(), coords })
    }

    pub fn from_ints(sig: &GroupSignature, coords: &[i64]) -> Result<Self> {
        Self::new(sig, coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// Parses `[1, -5/2, 3]`.
    pub fn parse(sig: &GroupSignature, text: &str) -> Result<Self> {
        let bad = || Error::BadLiteral { what: "element", text: text.to_string() };
        let inner = text.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
        let coords = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?
        };
        Self::new(sig, coords)
    }

    pub fn zero(sig: &GroupSignature) -> Self {
        GroupElement { sig: sig.clone(), coords: vec![BigRational::zero(); sig.rank()] }
    }

    /// `e_position`, 1-based.
    pub fn unit(sig: &GroupSignature, position: usize) -> Self {
        let mut g = Self::zero(sig);
        g.coords[position - 1] = BigRational::one();
        g
    }

    pub fn signature(&self) -> &GroupSignature {
        &self.sig
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.sig.ensure_same(&other.sig)?;
        Ok(self.add_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &Self) -> Self {
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        GroupElement { sig: self.sig.clone(), coords }
    }

    pub fn neg(&self) -> Self {
        GroupElement { sig: self.sig.clone(), coords: self.coords.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Integer multiple `k * self`.
    pub fn scale(&self, k: i64) -> Self {
        let k = BigRational::from_integer(k.into());
        GroupElement { sig: self.sig.clone(), coords: self.coords.iter().map(|c| c * &k).collect() }
    }

    pub fn cmp_lex(&self, other: &Self) -> Result<Ordering> {
        self.sig.ensure_same(&other.sig)?;
        Ok(lex_prefix_cmp(&self.coords, &other.coords, self.coords.len()))
    }

    pub fn is_nonnegative(&self) -> bool {
        lex_sign(&self.coords) != Ordering::Less
    }

    pub fn is_positive(&self) -> bool {
        lex_sign(&self.coords) == Ordering::Greater
    }

    /// `pi_j(self)`, an element of the prefix product `A_1 x ... x A_j`.
    pub fn project(&self, j: usize) -> Result<Self> {
        let sig = self.sig.prefix(j)?;
        Ok(GroupElement { sig, coords: self.coords[..j].to_vec() })
    }

    /// Zeroes coordinates after position `j`, staying in the same group.
    pub(crate) fn truncate(&self, j: usize) -> Self {
        let mut g = self.clone();
        for c in &mut g.coords[j..] {
            c.set_zero();
        }
        g
    }

    /// Reads an element of a prefix product as an element of `target`
    /// with zero tail.
    pub fn pad(&self, target: &GroupSignature) -> Result<Self> {
        target.prefix(self.sig.rank())?.ensure_same(&self.sig)?;
        let mut coords = self.coords.clone();
        coords.resize(target.rank(), BigRational::zero());
        Ok(GroupElement { sig: target.clone(), coords })
    }
}

pub(crate) fn lex_prefix_cmp(a: &[BigRational], b: &[BigRational], j: usize) -> Ordering {
    for (x, y) in a[..j].iter().zip(&b[..j]) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn lex_sign(a: &[BigRational]) -> Ordering {
    a.iter().find(|c| !c.is_zero()).map_or(Ordering::Equal, |c| {
        if c.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    })
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// `H_j = {g : g_1 = ... = g_j = 0}`; `H_0` is the whole group and `H_n` is trivial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConvexSubgroup {
    sig: GroupSignature,
    level: usize,
}

impl ConvexSubgroup {
    pub fn new(sig: &GroupSignature, level: usize) -> Result<Self> {
        sig.check_level(level, 0)?;
        Ok(ConvexSubgroup { sig: sig.clone(), level })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn signature(&self) -> &GroupSignature {
        &self.sig
    }

    pub fn is_trivial(&self) -> bool {
        self.level == self.sig.rank()
    }

    pub fn contains(&self, g: &GroupElement) -> Result<bool> {
        self.sig.ensure_same(g.signature())?;
        Ok(g.coords()[..self.level].iter().all(Zero::is_zero))
    }

    /// `self ⊆ other`
    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        self.sig == other.sig && self.level >= other.level
    }
}

impl fmt::Display for ConvexSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({})", self.level)
    }
}
