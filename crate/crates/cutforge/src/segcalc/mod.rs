//! Final segments of lexicographic products.
//!
//! Every segment handled here has the form `{g : pi_j(g) >= pi_j(anchor)}`
//! or `{g : pi_j(g) > pi_j(anchor)}`, stored as a normalized triple so that
//! structural equality is set equality.

mod enumerate;
mod solve;

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::lexgroup::{lex_prefix_cmp, ConvexSubgroup, Factor, GroupElement, GroupSignature};

pub use enumerate::{enumerate_elements, enumerate_segments, rational_grid, Sampler};
pub use solve::{solve, SolveOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Geq,
    Gt,
}

impl Flavor {
    pub fn flip(self) -> Self {
        match self {
            Flavor::Geq => Flavor::Gt,
            Flavor::Gt => Flavor::Geq,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Flavor::Geq => ">=",
            Flavor::Gt => ">",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Geq => "geq",
            Flavor::Gt => "gt",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinalSegment {
    level: usize,
    flavor: Flavor,
    anchor: GroupElement,
}

/// One slot of a [`ThresholdKey`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum KeyEntry {
    NegInf,
    Val(BigRational),
    PosInf,
}

/// Sort key whose lexicographic order reverses inclusion.
///
/// A segment is `{g : (g, 0) >= key}` inside the rationals extended by one
/// trailing slot. The extra slot keeps `>= gamma` and `> gamma` apart at
/// full level.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ThresholdKey(pub Vec<KeyEntry>);

impl FinalSegment {
    /// Builds the canonical triple: zero the anchor after position `j`, then
    /// rewrite `> gamma` as `>= gamma + e_j` when `A_j` is Z.
    pub fn new(sig: &GroupSignature, level: usize, flavor: Flavor, anchor: &GroupElement) -> Result<Self> {
        sig.ensure_same(anchor.signature())?;
        sig.check_level(level, 1)?;
        Ok(Self::normalized(level, flavor, anchor.truncate(level)))
    }

    fn normalized(level: usize, flavor: Flavor, anchor: GroupElement) -> Self {
        if flavor == Flavor::Gt && anchor.signature().factor(level) == Factor::Int {
            let step = GroupElement::unit(anchor.signature(), level);
            return FinalSegment { level, flavor: Flavor::Geq, anchor: anchor.add_unchecked(&step) };
        }
        FinalSegment { level, flavor, anchor }
    }

    /// `gamma^-`
    pub fn principal(gamma: &GroupElement) -> Self {
        FinalSegment { level: gamma.signature().rank(), flavor: Flavor::Geq, anchor: gamma.clone() }
    }

    /// `H_j^- = {g : pi_j(g) >= 0}`
    pub fn subgroup_minus(sig: &GroupSignature, level: usize) -> Result<Self> {
        Self::new(sig, level, Flavor::Geq, &GroupElement::zero(sig))
    }

    /// `H_j^+ = {g : pi_j(g) > 0}`
    pub fn subgroup_plus(sig: &GroupSignature, level: usize) -> Result<Self> {
        Self::new(sig, level, Flavor::Gt, &GroupElement::zero(sig))
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn anchor(&self) -> &GroupElement {
        &self.anchor
    }

    pub fn signature(&self) -> &GroupSignature {
        self.anchor.signature()
    }

    fn rank(&self) -> usize {
        self.signature().rank()
    }

    pub fn member(&self, g: &GroupElement) -> Result<bool> {
        self.signature().ensure_same(g.signature())?;
        let ord = lex_prefix_cmp(g.coords(), self.anchor.coords(), self.level);
        Ok(match self.flavor {
            Flavor::Geq => ord != Ordering::Less,
            Flavor::Gt => ord == Ordering::Greater,
        })
    }

    pub fn threshold_key(&self) -> ThresholdKey {
        let tail = match self.flavor {
            Flavor::Geq => KeyEntry::NegInf,
            Flavor::Gt => KeyEntry::PosInf,
        };
        let mut key: Vec<KeyEntry> = self.anchor.coords()[..self.level].iter().cloned().map(KeyEntry::Val).collect();
        key.resize(self.rank() + 1, tail);
        ThresholdKey(key)
    }

    pub fn subset(&self, other: &Self) -> Result<bool> {
        Ok(self.compare(other)? != Ordering::Greater)
    }

    /// Position in the inclusion chain: `Less` means a proper subset.
    pub fn compare(&self, other: &Self) -> Result<Ordering> {
        self.signature().ensure_same(other.signature())?;
        Ok(other.threshold_key().cmp(&self.threshold_key()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.signature().ensure_same(other.signature())?;
        let j = self.level.min(other.level);
        let anchor = self.anchor.truncate(j).add_unchecked(&other.anchor.truncate(j));
        let strict = [self, other].iter().any(|s| s.level == j && s.flavor == Flavor::Gt);
        let flavor = if strict { Flavor::Gt } else { Flavor::Geq };
        Ok(Self::normalized(j, flavor, anchor))
    }

    /// `α + S`
    pub fn shift(&self, alpha: &GroupElement) -> Result<Self> {
        self.add(&Self::principal(alpha))
    }

    /// Returns `α` with `α + self = target`, if there is one.
    pub fn offset_to(&self, target: &Self) -> Result<Option<GroupElement>> {
        self.signature().ensure_same(target.signature())?;
        if self.level != target.level || self.flavor != target.flavor {
            return Ok(None);
        }
        Ok(Some(target.anchor.add_unchecked(&self.anchor.neg())))
    }

    pub fn n_times(&self, k: i64) -> Result<Self> {
        if k < 1 {
            return Err(Error::BadMultiplicity(k));
        }
        // binary expansion of k
        let (mut acc, mut base, mut k) = (None::<Self>, self.clone(), k);
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => a.add(&base)?,
                    None => base.clone(),
                });
            }
            k >>= 1;
            if k == 0 {
                return Ok(acc.expect("k >= 1"));
            }
            base = base.add(&base)?;
        }
    }

    pub fn inv_group(&self) -> ConvexSubgroup {
        ConvexSubgroup::new(self.signature(), self.level).expect("segment level is in range")
    }

    /// `Δ⁻S = {x : x >= -S}`
    pub fn delta(&self) -> Self {
        if self.is_principal() {
            return Self::principal(&self.anchor.neg());
        }
        Self::normalized(self.level, self.flavor.flip(), self.anchor.neg())
    }

    /// `-S^c`
    pub fn neg_complement(&self) -> Self {
        Self::normalized(self.level, self.flavor.flip(), self.anchor.neg())
    }

    /// `S2 ⊖ S1`, called as `s2.msub(s1)`.
    pub fn msub(&self, s1: &Self) -> Result<Self> {
        self.add(&s1.delta())
    }

    /// Classical difference `S2 - S1^c`, called as `s2.cdiff(s1)`.
    pub fn cdiff(&self, s1: &Self) -> Result<Self> {
        self.add(&s1.neg_complement())
    }

    /// `S2 ∸ S1`: the largest `T` with `S1 + T ⊆ S2`.
    pub fn ms(&self, s1: &Self) -> Result<Self> {
        Ok(solve(s1, self)?.into_best())
    }

    /// Closure in `G`.
    pub fn hat(&self) -> Self {
        if self.level == self.rank() {
            FinalSegment { flavor: Flavor::Geq, ..self.clone() }
        } else {
            self.clone()
        }
    }

    /// Closure of `S/G(S)` in `G/G(S)`, pulled back.
    pub fn dhat(&self) -> Self {
        FinalSegment { flavor: Flavor::Geq, ..self.clone() }
    }

    pub fn is_principal(&self) -> bool {
        self.level == self.rank() && self.flavor == Flavor::Geq
    }

    pub fn is_closed(&self) -> bool {
        !(self.level == self.rank() && self.flavor == Flavor::Gt)
    }

    pub fn infimum(&self) -> Option<GroupElement> {
        (self.level == self.rank()).then(|| self.anchor.clone())
    }

    /// Image in `G/H_k`, realized over the prefix product of length `k`.
    /// `k = n` is allowed and gives the segment back.
    pub fn push_quotient(&self, k: usize) -> Result<Self> {
        self.signature().check_level(k, 1)?;
        let anchor = self.anchor.project(k)?;
        if self.level <= k {
            Ok(FinalSegment { level: self.level, flavor: self.flavor, anchor })
        } else {
            Ok(FinalSegment { level: k, flavor: Flavor::Geq, anchor })
        }
    }

    /// Preimage in `target` of a segment of a prefix product of `target`.
    pub fn pull_quotient(&self, target: &GroupSignature) -> Result<Self> {
        Ok(FinalSegment { level: self.level, flavor: self.flavor, anchor: self.anchor.pad(target)? })
    }

    pub fn cut_view(&self) -> CutView {
        CutView { upper: self.clone() }
    }
}

impl PartialOrd for FinalSegment {
    /// Inclusion order; `None` across different groups.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.compare(other).ok()
    }
}

impl fmt::Display for FinalSegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "seg({}, {}, {})", self.level, self.flavor.symbol(), self.anchor)
    }
}

/// A cut of the group seen through its upper set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutView {
    pub upper: FinalSegment,
}

impl CutView {
    pub fn lower_member(&self, g: &GroupElement) -> Result<bool> {
        Ok(!self.upper.member(g)?)
    }

    pub fn upper_member(&self, g: &GroupElement) -> Result<bool> {
        self.upper.member(g)
    }

    /// Both halves of a cut share one invariance group.
    pub fn inv_group(&self) -> ConvexSubgroup {
        self.upper.inv_group()
    }
}

impl fmt::Display for CutView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.upper;
        let rel = match s.flavor {
            Flavor::Geq => "<",
            Flavor::Gt => "<=",
        };
        let anchor = s.anchor.project(s.level).map_err(|_| fmt::Error)?;
        write!(f, "{{g : pi_{}(g) {} {}}} | {}", s.level, rel, anchor, s)
    }
}
