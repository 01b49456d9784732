//! Fractional ideals of a valuation ring, represented by their value sets.
//!
//! An ideal `I` of `O_v` is stored as the final segment `vI` of the value
//! group; products become sums of segments and colon ideals become `∸`.
//! Field elements never appear, only their values.

mod annihilator;
mod mprops;

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::lexgroup::{ConvexSubgroup, GroupElement, GroupSignature};
use crate::segcalc::{solve, FinalSegment, SolveOutcome};

pub use annihilator::{
    ann_ball_power, ann_is_maximal_ideal, ann_power_quotient, annihilator, BallPowerAnnihilator, PowerAnnihilator,
};
pub use mprops::{is_prime_on_box, verify_m_properties, MPropertyBounds, MPropertyReport, PropertyCheck};

/// A valued field, known only through its value group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ValuedField {
    value_group: GroupSignature,
}

impl ValuedField {
    pub fn new(value_group: GroupSignature) -> Self {
        ValuedField { value_group }
    }

    pub fn value_group(&self) -> &GroupSignature {
        &self.value_group
    }

    pub fn ideal(&self, segment: FinalSegment) -> Result<Ideal> {
        self.value_group.ensure_same(segment.signature())?;
        Ok(Ideal { segment })
    }

    /// `aO_v` with `va = gamma`.
    pub fn principal_ideal(&self, gamma: &GroupElement) -> Result<Ideal> {
        self.value_group.ensure_same(gamma.signature())?;
        Ok(Ideal { segment: FinalSegment::principal(gamma) })
    }

    /// `O(H_level)`; the top level is `O_v`.
    pub fn overring(&self, level: usize) -> Result<Overring> {
        self.value_group.check_level(level, 1)?;
        Ok(Overring { sig: self.value_group.clone(), level })
    }

    pub fn valuation_ring(&self) -> Overring {
        Overring { sig: self.value_group.clone(), level: self.value_group.rank() }
    }

    /// `O_v` as an ideal.
    pub fn ov(&self) -> Ideal {
        self.valuation_ring().as_ideal()
    }

    /// `M_v`
    pub fn mv(&self) -> Ideal {
        self.valuation_ring().max_ideal()
    }
}

/// A valuation ring containing `O_v`, given by the convex subgroup `H_level`
/// of units it adds.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Overring {
    sig: GroupSignature,
    level: usize,
}

impl Overring {
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn field(&self) -> ValuedField {
        ValuedField::new(self.sig.clone())
    }

    /// `vO = H^-`
    pub fn ring_segment(&self) -> FinalSegment {
        FinalSegment::subgroup_minus(&self.sig, self.level).expect("overring level is valid")
    }

    /// `vM = H^+`
    pub fn max_ideal_segment(&self) -> FinalSegment {
        FinalSegment::subgroup_plus(&self.sig, self.level).expect("overring level is valid")
    }

    pub fn as_ideal(&self) -> Ideal {
        Ideal { segment: self.ring_segment() }
    }

    pub fn max_ideal(&self) -> Ideal {
        Ideal { segment: self.max_ideal_segment() }
    }

    /// `H(O)`, the values of units of `O`.
    pub fn units_group(&self) -> ConvexSubgroup {
        ConvexSubgroup::new(&self.sig, self.level).expect("overring level is valid")
    }

    /// Is the maximal ideal principal as an ideal of this ring?
    pub fn has_principal_max_ideal(&self) -> bool {
        self.sig.factor(self.level) == crate::lexgroup::Factor::Int
    }
}

impl PartialOrd for Overring {
    /// Inclusion of rings: a lower level is a larger ring.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        (self.sig == other.sig).then(|| other.level.cmp(&self.level))
    }
}

impl fmt::Display for Overring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O({})", self.level)
    }
}

/// A nonzero fractional ideal other than `K`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    segment: FinalSegment,
}

fn same_field(a: &FinalSegment, b: &FinalSegment) -> Result<()> {
    if a.signature() != b.signature() {
        return Err(Error::FieldMismatch { left: a.signature().to_string(), right: b.signature().to_string() });
    }
    Ok(())
}

impl Ideal {
    pub fn segment(&self) -> &FinalSegment {
        &self.segment
    }

    pub fn into_segment(self) -> FinalSegment {
        self.segment
    }

    pub fn field(&self) -> ValuedField {
        ValuedField::new(self.segment.signature().clone())
    }

    /// Every final segment is the value set of exactly one ideal.
    pub fn from_segment(segment: FinalSegment) -> Self {
        Ideal { segment }
    }

    pub fn subset(&self, other: &Self) -> Result<bool> {
        same_field(&self.segment, &other.segment)?;
        self.segment.subset(&other.segment)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        same_field(&self.segment, &other.segment)?;
        Ok(Self::from_segment(self.segment.add(&other.segment)?))
    }

    /// `aI` with `va = gamma`.
    pub fn scale(&self, gamma: &GroupElement) -> Result<Self> {
        Ok(Self::from_segment(self.segment.shift(gamma)?))
    }

    pub fn power(&self, n: i64) -> Result<Self> {
        if n == 0 {
            return Ok(self.field().ov());
        }
        Ok(Self::from_segment(self.segment.n_times(n)?))
    }

    /// `self : i1`, the largest `J` with `i1 J ⊆ self`.
    pub fn colon(&self, i1: &Self) -> Result<Self> {
        same_field(&self.segment, &i1.segment)?;
        Ok(Self::from_segment(self.segment.ms(&i1.segment)?))
    }

    /// `O(I)`, the largest valuation ring over which `I` is an ideal.
    pub fn inv_ring(&self) -> Overring {
        Overring { sig: self.segment.signature().clone(), level: self.segment.level() }
    }

    /// `M(I)`, the maximal ideal of `O(I)`.
    pub fn max_ideal(&self) -> Self {
        self.inv_ring().max_ideal()
    }

    /// `H(I)`
    pub fn units_group(&self) -> ConvexSubgroup {
        self.segment.inv_group()
    }

    /// `I O`
    pub fn extend(&self, o: &Overring) -> Result<Self> {
        same_field(&self.segment, &o.ring_segment())?;
        Ok(Self::from_segment(self.segment.add(&o.ring_segment())?))
    }

    pub fn is_ideal_over(&self, o: &Overring) -> Result<bool> {
        Ok(self.extend(o)? == *self)
    }

    /// Is `I O` principal as an `O`-ideal?
    pub fn is_principal_over(&self, o: &Overring) -> Result<bool> {
        Ok(self.extend(o)?.segment.push_quotient(o.level)?.is_principal())
    }

    pub fn is_principal(&self) -> bool {
        self.segment.is_principal()
    }

    /// `I ⊆ O_v`
    pub fn is_integral(&self) -> bool {
        self.segment.subset(&self.field().ov().segment).expect("same group")
    }

    /// Closure of an `O`-ideal: `aO` if `wJ` has an infimum `wa`, else `J`.
    pub fn closure_over(&self, o: &Overring) -> Result<Self> {
        if !self.is_ideal_over(o)? {
            return Err(Error::NotAnOverringIdeal { ideal: self.to_string(), level: o.level });
        }
        let w = self.segment.push_quotient(o.level)?;
        Ok(Self::from_segment(w.hat().pull_quotient(self.segment.signature())?))
    }

    /// Closure over `O(J)`; equals `J² : J`.
    pub fn deep_closure(&self) -> Self {
        Self::from_segment(self.segment.dhat())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ideal({})", self.segment)
    }
}

/// Result of solving `I1 J = I2` for `J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveIdealOutcome {
    Unique(Ideal),
    Largest(Ideal),
    /// `I1 j_max = i2_prime ⊊ I2`, and `i2_prime : I1 = I2 : I1`.
    NoSolution {
        i2_prime: Ideal,
        j_max: Ideal,
    },
}

impl SolveIdealOutcome {
    pub fn label(&self) -> &'static str {
        match self {
            SolveIdealOutcome::Unique(_) => "unique",
            SolveIdealOutcome::Largest(_) => "largest",
            SolveIdealOutcome::NoSolution { .. } => "no-solution",
        }
    }

    pub fn is_solvable(&self) -> bool {
        !matches!(self, SolveIdealOutcome::NoSolution { .. })
    }

    /// `I2 : I1`
    pub fn best(&self) -> &Ideal {
        match self {
            SolveIdealOutcome::Unique(j) | SolveIdealOutcome::Largest(j) => j,
            SolveIdealOutcome::NoSolution { j_max, .. } => j_max,
        }
    }
}

impl From<SolveOutcome> for SolveIdealOutcome {
    fn from(o: SolveOutcome) -> Self {
        match o {
            SolveOutcome::Unique(t) => SolveIdealOutcome::Unique(Ideal::from_segment(t)),
            SolveOutcome::Largest(t) => SolveIdealOutcome::Largest(Ideal::from_segment(t)),
            SolveOutcome::NoSolution { s2_prime, t_max } => SolveIdealOutcome::NoSolution {
                i2_prime: Ideal::from_segment(s2_prime),
                j_max: Ideal::from_segment(t_max),
            },
        }
    }
}

impl fmt::Display for SolveIdealOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveIdealOutcome::Unique(j) => write!(f, "unique {j}"),
            SolveIdealOutcome::Largest(j) => write!(f, "largest {j}"),
            SolveIdealOutcome::NoSolution { i2_prime, j_max } => {
                write!(f, "no-solution {{ i2' = {i2_prime}, jmax = {j_max} }}")
            }
        }
    }
}

pub fn solve_ideal(i1: &Ideal, i2: &Ideal) -> Result<SolveIdealOutcome> {
    same_field(&i1.segment, &i2.segment)?;
    Ok(solve(&i1.segment, &i2.segment)?.into())
}

#[cfg(test)]
mod tests;
