use std::fmt;

use super::{FinalSegment, Flavor};
use crate::error::Result;

/// Result of solving `S1 + T = S2` for `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// `S1` is principal, so `T` is forced.
    Unique(FinalSegment),
    /// The largest of several solutions.
    Largest(FinalSegment),
    /// No solution; `t_max` is the largest solution for the shrunken target
    /// `s2_prime`, and `S1 + t_max = s2_prime ⊊ S2`.
    NoSolution { s2_prime: FinalSegment, t_max: FinalSegment },
}

impl SolveOutcome {
    pub fn label(&self) -> &'static str {
        match self {
            SolveOutcome::Unique(_) => "unique",
            SolveOutcome::Largest(_) => "largest",
            SolveOutcome::NoSolution { .. } => "no-solution",
        }
    }

    pub fn is_solvable(&self) -> bool {
        !matches!(self, SolveOutcome::NoSolution { .. })
    }

    /// The largest `T` with `S1 + T ⊆ S2`.
    pub fn best(&self) -> &FinalSegment {
        match self {
            SolveOutcome::Unique(t) | SolveOutcome::Largest(t) => t,
            SolveOutcome::NoSolution { t_max, .. } => t_max,
        }
    }

    pub fn into_best(self) -> FinalSegment {
        match self {
            SolveOutcome::Unique(t) | SolveOutcome::Largest(t) => t,
            SolveOutcome::NoSolution { t_max, .. } => t_max,
        }
    }
}

impl fmt::Display for SolveOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveOutcome::Unique(t) => write!(f, "unique {t}"),
            SolveOutcome::Largest(t) => write!(f, "largest {t}"),
            SolveOutcome::NoSolution { s2_prime, t_max } => {
                write!(f, "no-solution {{ s2' = {s2_prime}, tmax = {t_max} }}")
            }
        }
    }
}

/// Solves `s1 + T = s2`.
pub fn solve(s1: &FinalSegment, s2: &FinalSegment) -> Result<SolveOutcome> {
    s1.signature().ensure_same(s2.signature())?;
    if s1.is_principal() {
        return Ok(SolveOutcome::Unique(s2.shift(&s1.anchor.neg())?));
    }
    let (j1, j2) = (s1.level, s2.level);
    let both_gt = s1.flavor == Flavor::Gt && s2.flavor == Flavor::Gt;
    let open_into_closed = j1 == j2 && s1.flavor == Flavor::Gt && s2.flavor == Flavor::Geq;
    if j1 >= j2 && !open_into_closed {
        let flavor = if j1 == j2 && both_gt { Flavor::Geq } else { s2.flavor };
        let anchor = s2.anchor.add_unchecked(&s1.anchor.neg());
        let t = FinalSegment::new(s2.signature(), j2, flavor, &anchor)?;
        return Ok(SolveOutcome::Largest(t));
    }
    // shrink S2 to the largest segment inside it with invariance group G(S1)
    let s2_prime = if j2 > j1 {
        FinalSegment::new(s2.signature(), j1, Flavor::Gt, &s2.anchor)?
    } else {
        FinalSegment { level: j1, flavor: Flavor::Gt, anchor: s2.anchor.clone() }
    };
    let t_max = solve(s1, &s2_prime)?.into_best();
    Ok(SolveOutcome::NoSolution { s2_prime, t_max })
}
