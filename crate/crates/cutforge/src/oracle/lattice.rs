//! Scaled integer coordinates for brute-force searches.
//!
//! A Z coordinate is stored as itself. A Q coordinate is stored as a
//! multiple of `u = 1/(4L)` where `L = lcm(1..=D)`. Test points and anchors
//! live on the `1/L` lattice, witnesses of a search on `2u` steps, and
//! witnesses of a search nested inside another one on `u` steps. So a
//! witness just above an open boundary never lands on a test value, and
//! the two approximations of one infimum in a nested search cannot cancel.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lexgroup::{Factor, GroupElement, GroupSignature};
use crate::segcalc::{FinalSegment, Flavor};

pub const MAX_RANK: usize = 6;
pub(crate) type Pt = [i64; MAX_RANK];

/// A canonical triple in scaled coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Cut {
    pub level: usize,
    pub gt: bool,
    pub anchor: Pt,
}

impl Cut {
    #[inline]
    pub fn member(&self, g: &Pt) -> bool {
        for i in 0..self.level {
            if g[i] != self.anchor[i] {
                return g[i] > self.anchor[i];
            }
        }
        !self.gt
    }
}

#[inline]
pub(crate) fn lex_ge(a: &Pt, b: &Pt, n: usize) -> bool {
    for i in 0..n {
        if a[i] != b[i] {
            return a[i] > b[i];
        }
    }
    true
}

#[inline]
pub(crate) fn add(a: &Pt, b: &Pt) -> Pt {
    std::array::from_fn(|i| a[i] + b[i])
}

#[inline]
pub(crate) fn sub(a: &Pt, b: &Pt) -> Pt {
    std::array::from_fn(|i| a[i] - b[i])
}

#[inline]
pub(crate) fn neg(a: &Pt) -> Pt {
    std::array::from_fn(|i| -a[i])
}

#[derive(Debug, Clone)]
pub(crate) struct Lattice {
    pub sig: GroupSignature,
    pub n: usize,
    /// Grid steps per unit.
    pub scale: Pt,
    /// Witness radius in steps.
    pub wit: Pt,
    /// Margin radius in steps.
    pub margin: Pt,
    /// Spacing of test points in steps.
    pub test_step: Pt,
    pub denom_bound: u32,
    margin_value: Rational64,
}

impl Lattice {
    pub fn new(sig: &GroupSignature, radius: i64, margin: Rational64, denom_bound: u32) -> Result<Self> {
        let n = sig.rank();
        if n > MAX_RANK {
            return Err(Error::PreconditionViolated(format!("windows support rank at most {MAX_RANK}")));
        }
        if radius < 1 {
            return Err(Error::PreconditionViolated("the window radius must be positive".into()));
        }
        if margin <= Rational64::zero() || margin > Rational64::from_integer(1) {
            return Err(Error::PreconditionViolated("the margin factor must lie in (0, 1]".into()));
        }
        if !(1..=20).contains(&denom_bound) {
            return Err(Error::PreconditionViolated("the denominator bound must lie in 1..=20".into()));
        }
        let l = (1..=i64::from(denom_bound)).fold(1i64, |acc, q| acc.lcm(&q));
        let mut lat = Lattice {
            sig: sig.clone(),
            n,
            scale: [0; MAX_RANK],
            wit: [0; MAX_RANK],
            margin: [0; MAX_RANK],
            test_step: [0; MAX_RANK],
            denom_bound,
            margin_value: margin * radius,
        };
        for (i, f) in sig.factors().iter().enumerate() {
            let (scale, step) = match f {
                Factor::Int => (1, 1),
                Factor::Rat => (4 * l, 4),
            };
            lat.scale[i] = scale;
            lat.test_step[i] = step;
            lat.wit[i] = radius * scale;
            let r = lat.margin_value * scale;
            // largest multiple of the test step not above r
            lat.margin[i] = (r.to_integer() / step) * step;
        }
        Ok(lat)
    }

    pub fn is_rat(&self, i: usize) -> bool {
        self.sig.factors()[i] == Factor::Rat
    }

    fn scaled(&self, i: usize, v: &BigRational) -> Result<i64> {
        let s = v * BigRational::from_integer(BigInt::from(self.scale[i]));
        if !s.is_integer() {
            return Err(Error::OffLattice(format!("{v} is not a multiple of 1/{}", self.scale[i])));
        }
        s.to_integer().to_i64().ok_or_else(|| Error::OffLattice(format!("{v} is too large")))
    }

    /// Coordinates of an element of this group or of a prefix of it.
    pub fn point(&self, coords: &[BigRational]) -> Result<Pt> {
        let mut p = [0; MAX_RANK];
        for (i, v) in coords.iter().enumerate() {
            p[i] = self.scaled(i, v)?;
        }
        Ok(p)
    }

    pub fn element(&self, p: &Pt) -> GroupElement {
        let coords = (0..self.n).map(|i| BigRational::new(p[i].into(), self.scale[i].into())).collect();
        GroupElement::new(&self.sig, coords).expect("lattice points fit the signature")
    }

    pub fn cut(&self, s: &FinalSegment) -> Result<Cut> {
        let factors = s.signature().factors();
        if factors.len() > self.n || factors != &self.sig.factors()[..factors.len()] {
            return Err(Error::SignatureMismatch { left: self.sig.to_string(), right: s.signature().to_string() });
        }
        Ok(Cut { level: s.level(), gt: s.flavor() == Flavor::Gt, anchor: self.point(s.anchor().coords())? })
    }

    pub fn in_margin(&self, p: &Pt) -> bool {
        (0..self.n).all(|i| p[i].abs() <= self.margin[i])
    }

    pub fn on_test_lattice(&self, p: &Pt, upto: usize) -> bool {
        (0..upto).all(|i| p[i] % self.test_step[i] == 0)
    }

    /// Point with the given prefix and every later coordinate at the top of
    /// the witness box scaled by `mult`.
    pub fn with_top_tail(&self, p: &Pt, k: usize, mult: i64) -> Pt {
        let mut q = *p;
        for i in k..self.n {
            q[i] = mult * self.wit[i];
        }
        q
    }

    /// Lex-smallest point of the box of radius `mult * m` satisfying an
    /// upward closed predicate, searching the first `k` coordinates and
    /// keeping the rest at the top of the box. Q coordinates move in steps
    /// of `2u`, or `u` when `nested`.
    ///
    /// Upward closure makes "some completion of this prefix qualifies"
    /// equivalent to "the largest completion qualifies", so one binary
    /// search per coordinate finds the exact minimum.
    pub fn box_min(&self, k: usize, mult: i64, nested: bool, pred: impl Fn(&Pt) -> bool) -> Option<Pt> {
        let mut p = self.with_top_tail(&[0; MAX_RANK], 0, mult);
        if !pred(&p) {
            return None;
        }
        for i in 0..k {
            let stride = if self.is_rat(i) && !nested { 2 } else { 1 };
            let top = mult * self.wit[i] / stride;
            let (mut lo, mut hi) = (-top, top);
            while lo < hi {
                let mid = lo + (hi - lo) / 2;
                p[i] = mid * stride;
                if pred(&p) {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            p[i] = lo * stride;
        }
        Some(p)
    }

    /// Every test point of the margin box, for all-Z signatures.
    pub fn all_test_points(&self) -> Vec<Pt> {
        let mut out = vec![[0; MAX_RANK]];
        for i in 0..self.n {
            let r = self.margin[i];
            let step = self.test_step[i];
            out = out
                .into_iter()
                .flat_map(|p| {
                    (-r / step..=r / step).map(move |v| {
                        let mut q = p;
                        q[i] = v * step;
                        q
                    })
                })
                .collect();
        }
        out
    }

    /// A uniformly drawn test point; Q coordinates get denominators at most
    /// the bound.
    pub fn random_point(&self, rng: &mut ChaCha8Rng) -> Pt {
        let mut p = [0; MAX_RANK];
        for i in 0..self.n {
            p[i] = if self.is_rat(i) {
                let q = rng.gen_range(1..=i64::from(self.denom_bound));
                let top = (self.margin_value * q).floor().to_integer();
                let num = rng.gen_range(-top..=top);
                num * (self.scale[i] / q)
            } else {
                rng.gen_range(-self.margin[i]..=self.margin[i])
            };
        }
        p
    }

    /// Points where the answer can change: anchors, their negatives, sums
    /// and differences, each nudged by one test step along every axis.
    pub fn critical_points(&self, anchors: &[Pt]) -> Vec<Pt> {
        let mut base: Vec<Pt> = vec![[0; MAX_RANK]];
        for a in anchors {
            base.push(*a);
            base.push(neg(a));
            for b in anchors {
                base.push(add(a, b));
                base.push(sub(a, b));
            }
        }
        let mut out = Vec::new();
        for b in &base {
            // anchors of segments may sit on the finer witness grid
            let b: Pt = std::array::from_fn(|i| if i < self.n { b[i] - b[i] % self.test_step[i] } else { 0 });
            out.push(b);
            for i in 0..self.n {
                for d in [-1, 1] {
                    let mut q = b;
                    q[i] += d * self.test_step[i];
                    out.push(q);
                }
            }
        }
        out.retain(|p| self.in_margin(p));
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn unit(&self, i: usize) -> Pt {
        let mut p = [0; MAX_RANK];
        p[i] = self.scale[i];
        p
    }

    /// One finest-grid step along axis `i`.
    pub fn step(&self, i: usize) -> Pt {
        let mut p = [0; MAX_RANK];
        p[i] = 1;
        p
    }

    /// Converts a caller-supplied point, which must lie in the margin box.
    pub fn check_point(&self, g: &GroupElement) -> Result<Pt> {
        self.sig.ensure_same(g.signature())?;
        let p = self.point(g.coords())?;
        let inside = (0..self.n).all(|i| Rational64::from_integer(p[i].abs()) <= self.margin_value * self.scale[i]);
        if !inside {
            return Err(Error::PointOutsideMargin { point: g.to_string() });
        }
        Ok(p)
    }
}
