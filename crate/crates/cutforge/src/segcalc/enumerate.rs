use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{FinalSegment, Flavor};
use crate::lexgroup::{Factor, GroupElement, GroupSignature};

/// Values allowed in one coordinate: integers in `[-bound, bound]` for Z,
/// fractions `p/q` with `q <= denom_bound` in the same range for Q. Sorted.
pub fn rational_grid(factor: Factor, bound: i64, denom_bound: u32) -> Vec<BigRational> {
    let max_den = match factor {
        Factor::Int => 1,
        Factor::Rat => i64::from(denom_bound.max(1)),
    };
    let mut out = Vec::new();
    for q in 1..=max_den {
        for p in -bound * q..=bound * q {
            out.push(BigRational::new(p.into(), q.into()));
        }
    }
    out.sort();
    out.dedup();
    out
}

fn product(grids: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let mut rows = vec![Vec::new()];
    for grid in grids {
        rows = rows
            .into_iter()
            .flat_map(|row| {
                grid.iter().map(move |v| {
                    let mut r = row.clone();
                    r.push(v.clone());
                    r
                })
            })
            .collect();
    }
    rows
}

pub fn enumerate_elements(sig: &GroupSignature, bound: i64, denom_bound: u32) -> Vec<GroupElement> {
    let grids: Vec<_> = sig.factors().iter().map(|&f| rational_grid(f, bound, denom_bound)).collect();
    product(&grids)
        .into_iter()
        .map(|coords| GroupElement::new(sig, coords).expect("grid values fit the signature"))
        .collect()
}

/// Every canonical segment whose anchor coordinates come from
/// [`rational_grid`]. Over Z positions only `>=` occurs, so each set is
/// listed once.
pub fn enumerate_segments(sig: &GroupSignature, bound: i64, denom_bound: u32) -> Vec<FinalSegment> {
    let n = sig.rank();
    let mut out = Vec::new();
    for j in 1..=n {
        let grids: Vec<_> = sig.factors()[..j].iter().map(|&f| rational_grid(f, bound, denom_bound)).collect();
        let flavors: &[Flavor] = match sig.factor(j) {
            Factor::Int => &[Flavor::Geq],
            Factor::Rat => &[Flavor::Geq, Flavor::Gt],
        };
        for mut prefix in product(&grids) {
            prefix.resize(n, BigRational::default());
            let anchor = GroupElement::new(sig, prefix).expect("grid values fit the signature");
            for &flavor in flavors {
                out.push(FinalSegment::new(sig, j, flavor, &anchor).expect("level in range"));
            }
        }
    }
    out
}

/// Seeded generator of elements and segments with bounded anchors.
pub struct Sampler {
    sig: GroupSignature,
    bound: i64,
    denom_bound: u32,
    rng: ChaCha8Rng,
}

impl Sampler {
    /// Streams with the same seed are independent; the same `(seed, stream)`
    /// always replays the same values.
    pub fn new(sig: &GroupSignature, bound: i64, denom_bound: u32, seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { sig: sig.clone(), bound, denom_bound: denom_bound.max(1), rng }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn rational(&mut self, factor: Factor) -> BigRational {
        let q = match factor {
            Factor::Int => 1,
            Factor::Rat => self.rng.gen_range(1..=i64::from(self.denom_bound)),
        };
        let p = self.rng.gen_range(-self.bound * q..=self.bound * q);
        BigRational::new(p.into(), q.into())
    }

    pub fn element(&mut self) -> GroupElement {
        let sig = self.sig.clone();
        let coords = sig.factors().iter().map(|&f| self.rational(f)).collect();
        GroupElement::new(&sig, coords).expect("sampled values fit the signature")
    }

    pub fn segment(&mut self) -> FinalSegment {
        let level = self.rng.gen_range(1..=self.sig.rank());
        let flavor = if self.rng.gen_bool(0.5) { Flavor::Geq } else { Flavor::Gt };
        let anchor = self.element();
        FinalSegment::new(&self.sig.clone(), level, flavor, &anchor).expect("level in range")
    }
}
