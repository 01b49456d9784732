use num_traits::Zero;

use super::{solve_ideal, Ideal, Overring, SolveIdealOutcome};
use crate::error::{Error, Result};
use crate::lexgroup::GroupElement;

/// `ann I1/I2 = I2 : I1` for `I2 ⊆ I1`.
///
/// Computed from the solver: with `I2'` the shrunken target when
/// `I1 J = I2` has no solution (else `I2` itself) and `O = O(I2')`, the
/// annihilator is `a⁻¹ I2'` if `I1 O = aO`, and `(I2' (O_v : I1))` deep
/// closed otherwise. Equal ideals give `O(I1)` as an ideal.
pub fn annihilator(i1: &Ideal, i2: &Ideal) -> Result<Ideal> {
    if !i2.subset(i1)? {
        return Err(Error::NotASubideal { sub: i2.to_string(), sup: i1.to_string() });
    }
    let target = match solve_ideal(i1, i2)? {
        SolveIdealOutcome::NoSolution { i2_prime, .. } => i2_prime,
        _ => i2.clone(),
    };
    let o = target.inv_ring();
    let spread = i1.extend(&o)?;
    if spread.is_principal_over(&o)? {
        target.scale(&spread.segment().anchor().neg())
    } else {
        let inverse = i1.field().ov().colon(i1)?;
        Ok(target.mul(&inverse)?.deep_closure())
    }
}

/// Is `ann I1/I2` the maximal ideal `M_v`? Requires `I2 ⊊ I1`.
pub fn ann_is_maximal_ideal(i1: &Ideal, i2: &Ideal) -> Result<bool> {
    if !i2.subset(i1)? || i1 == i2 {
        return Err(Error::NotAProperSubideal { sub: i2.to_string(), sup: i1.to_string() });
    }
    Ok(i1.is_principal() && *i2 == i1.mul(&i1.field().mv())?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerAnnihilator {
    /// `J = b I^(n-1)`
    pub j: Ideal,
    /// `ann I/IJ`
    pub ann: Ideal,
    pub properly_contains_j: bool,
    /// `M(J) ann ⊆ J`
    pub max_ideal_times_ann_within_j: bool,
    /// Whether `ann = M_v` holds according to the closed-form criterion.
    pub equals_max_ideal: bool,
}

/// `ann I/(b Iⁿ)` with `J = b I^(n-1)`.
///
/// The annihilator is `J O(IJ)` when `I O(IJ)` is principal over `O(IJ)`
/// and its deep closure otherwise; for `n >= 2` this is `J` or `J` deep
/// closed. `I` must be integral and `vb >= 0`; for `n = 1` also `vb > 0`,
/// for `n > 1` also `I ≠ O_v`.
pub fn ann_power_quotient(i: &Ideal, b_val: &GroupElement, n: i64) -> Result<PowerAnnihilator> {
    let field = i.field();
    field.value_group().ensure_same(b_val.signature())?;
    let pre = |msg: &str| Err(Error::PreconditionViolated(msg.to_string()));
    if n < 1 {
        return pre("the exponent must be at least 1");
    }
    if !i.is_integral() {
        return pre("I must be contained in O_v");
    }
    if n == 1 && !b_val.is_positive() {
        return pre("b must lie in M_v when n = 1");
    }
    if n > 1 && (*i == field.ov() || !b_val.is_nonnegative()) {
        return pre("n > 1 needs I properly inside O_v and b in O_v");
    }
    let j = field.principal_ideal(b_val)?.mul(&i.power(n - 1)?)?;
    let o = i.mul(&j)?.inv_ring();
    let base = j.extend(&o)?;
    let ann = if i.is_principal_over(&o)? { base } else { base.deep_closure() };
    let mv = field.mv();
    let equals_max_ideal = if n == 1 {
        i.is_principal() && j == mv
    } else {
        field.valuation_ring().has_principal_max_ideal() && *i == mv && j == mv
    };
    Ok(PowerAnnihilator {
        properly_contains_j: ann != j,
        max_ideal_times_ann_within_j: j.max_ideal().mul(&ann)?.subset(&j)?,
        equals_max_ideal,
        ann,
        j,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallPowerAnnihilator {
    /// `ann aM/(aM)ⁿ`
    pub ann: Ideal,
    /// Whether `ann = M_v` holds according to the closed-form criterion.
    pub equals_max_ideal: bool,
}

/// `ann aM/(aM)ⁿ` for `a ∈ O_v`, `M` the maximal ideal of `o`, `n >= 2`.
///
/// This is `(aM)^(n-1)` when `M` is principal over `o` and `(aO)^(n-1)`
/// otherwise. When `a` is a unit of `o` and `M` is not principal the
/// quotient is zero and [`Error::DegenerateQuotient`] is returned.
pub fn ann_ball_power(a_val: &GroupElement, o: &Overring, n: i64) -> Result<BallPowerAnnihilator> {
    let field = o.field();
    field.value_group().ensure_same(a_val.signature())?;
    if n < 2 {
        return Err(Error::PreconditionViolated("the exponent must be at least 2".into()));
    }
    if !a_val.is_nonnegative() {
        return Err(Error::PreconditionViolated("a must lie in O_v".into()));
    }
    let a_is_unit = a_val.coords()[..o.level()].iter().all(Zero::is_zero);
    let principal_max = o.has_principal_max_ideal();
    if a_is_unit && !principal_max {
        return Err(Error::DegenerateQuotient);
    }
    let a = field.principal_ideal(a_val)?;
    let ann = if principal_max { a.mul(&o.max_ideal())?.power(n - 1)? } else { a.mul(&o.as_ideal())?.power(n - 1)? };
    let top = a_val.signature().rank();
    let equals_max_ideal = n == 2 && a_val.is_zero() && o.level() == top && principal_max;
    Ok(BallPowerAnnihilator { ann, equals_max_ideal })
}
