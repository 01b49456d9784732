//! Exhaustive check of the standard list of properties of `M(I)`.

use std::fmt;

use super::{Ideal, ValuedField};
use crate::lexgroup::GroupElement;
use crate::segcalc::{enumerate_elements, enumerate_segments};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MPropertyBounds {
    /// Anchor coordinates of enumerated ideals lie in `[-anchor_bound, anchor_bound]`.
    pub anchor_bound: i64,
    /// Largest denominator used at Q positions.
    pub denom_bound: u32,
    /// Radius of the value box used for the union in item 11.
    pub point_bound: i64,
}

impl Default for MPropertyBounds {
    fn default() -> Self {
        MPropertyBounds { anchor_bound: 2, denom_bound: 2, point_bound: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCheck {
    pub item: usize,
    pub statement: &'static str,
    pub instances: usize,
    pub failures: usize,
    pub counterexample: Option<String>,
}

impl PropertyCheck {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPropertyReport {
    pub value_group: String,
    pub ideals: usize,
    pub checks: Vec<PropertyCheck>,
}

impl MPropertyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(PropertyCheck::passed)
    }
}

impl fmt::Display for MPropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "M(I) properties over {} ({} ideals)", self.value_group, self.ideals)?;
        for c in &self.checks {
            let verdict = if c.passed() { "pass" } else { "FAIL" };
            write!(f, "  {:>2}. {verdict} {:>8} cases  {}", c.item, c.instances, c.statement)?;
            if let Some(cx) = &c.counterexample {
                write!(f, "\n      counterexample: {cx}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

struct Tally {
    check: PropertyCheck,
}

impl Tally {
    fn new(item: usize, statement: &'static str) -> Self {
        Tally { check: PropertyCheck { item, statement, instances: 0, failures: 0, counterexample: None } }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.check.instances += 1;
        if !ok {
            self.check.failures += 1;
            if self.check.counterexample.is_none() {
                self.check.counterexample = Some(describe());
            }
        }
    }
}

/// Primality of an integral ideal, tested on the nonnegative values in
/// `values`. Final segments are totally ordered, so `x + y ∈ vP` with
/// `x, y ∉ vP` happens iff it happens with `x = y`; the box must reach one
/// step past the anchor for the test to see the witness.
pub fn is_prime_on_box(p: &Ideal, values: &[GroupElement]) -> bool {
    let field = p.field();
    if !p.is_integral() || *p == field.ov() {
        return false;
    }
    let s = p.segment();
    values
        .iter()
        .filter(|x| x.is_nonnegative() && !s.member(x).expect("same group"))
        .all(|x| !s.member(&x.add_unchecked(x)).expect("same group"))
}

fn expect<T>(r: crate::Result<T>) -> T {
    r.expect("operands share one value group")
}

/// Checks all fourteen properties over every enumerated ideal (and pair of
/// ideals) of `field`.
///
/// Item 10 is checked with the hypothesis `J M(J) ⊊ J`. Read with
/// `⊊ M(J)` instead it fails: over Q, `I = O_v`, `J = {v > 1}`.
pub fn verify_m_properties(field: &ValuedField, bounds: MPropertyBounds) -> MPropertyReport {
    let sig = field.value_group();
    let (b, d) = (bounds.anchor_bound, bounds.denom_bound);
    let ideals: Vec<Ideal> = enumerate_segments(sig, b, d).into_iter().map(Ideal::from_segment).collect();
    let scalars = enumerate_elements(sig, b, d);
    let fine = enumerate_elements(sig, b + 1, 2 * d);
    let points = enumerate_elements(sig, bounds.point_bound, d);
    let wide = enumerate_elements(sig, bounds.point_bound + b + 1, d);
    let ov = field.ov();
    let mv = field.mv();
    let primes: Vec<&Ideal> = ideals.iter().filter(|p| is_prime_on_box(p, &fine)).collect();

    let mut t: Vec<Tally> = vec![
        Tally::new(1, "M(I) = M_v for principal I"),
        Tally::new(2, "M(aI) = M(I)"),
        Tally::new(3, "O(I) ⊆ I iff I ⊄ M(I)"),
        Tally::new(4, "M(I) = I for prime I"),
        Tally::new(5, "aP = Q for primes P, Q forces P = Q"),
        Tally::new(6, "M(O_v : I) = M(I)"),
        Tally::new(7, "I : M(I) = I iff no a has M(I) = aI, else it is larger"),
        Tally::new(8, "I M(I) ⊊ I iff I is principal over O(I)"),
        Tally::new(9, "M(I) ⊊ M(J) gives IJ = aI"),
        Tally::new(10, "M(I) = M(J) and J M(J) ⊊ J give IJ = aI"),
        Tally::new(11, "M(I) is the union of the proper integral aI"),
        Tally::new(12, "I (O_v : I) is M(I) for nonprincipal I, else O_v"),
        Tally::new(13, "M(IJ) = min(M(I), M(J))"),
        Tally::new(14, "M(I^n) = M(I)"),
    ];

    for i in &ideals {
        let m = i.max_ideal();
        if i.is_principal() {
            t[0].record(m == mv, || format!("I = {i}"));
        }
        for a in &scalars {
            let ok = expect(i.scale(a)).max_ideal() == m;
            t[1].record(ok, || format!("I = {i}, va = {a}"));
        }
        let lhs = expect(i.inv_ring().as_ideal().subset(i));
        t[2].record(lhs == !expect(i.subset(&m)), || format!("I = {i}"));
        let ok = expect(ov.colon(i)).max_ideal() == m;
        t[5].record(ok, || format!("I = {i}"));
        let c = expect(i.colon(&m));
        let ok = match expect(i.segment().offset_to(m.segment())) {
            None => c == *i,
            Some(_) => expect(i.subset(&c)) && c != *i,
        };
        t[6].record(ok, || format!("I = {i}, I : M(I) = {c}"));
        let shrinks = expect(i.mul(&m)) != *i;
        t[7].record(shrinks == expect(i.is_principal_over(&i.inv_ring())), || format!("I = {i}"));
        for g in &points {
            let covered = wide.iter().any(|a| {
                let ai = expect(i.scale(a));
                expect(ai.subset(&ov)) && ai != ov && expect(ai.segment().member(g))
            });
            t[10].record(covered == expect(m.segment().member(g)), || format!("I = {i}, g = {g}"));
        }
        let expected = if i.is_principal() { ov.clone() } else { m.clone() };
        t[11].record(expect(i.mul(&expect(ov.colon(i)))) == expected, || format!("I = {i}"));
        for n in 1..=4 {
            t[13].record(expect(i.power(n)).max_ideal() == m, || format!("I = {i}, n = {n}"));
        }
        for j in &ideals {
            let mj = j.max_ideal();
            let ij = expect(i.mul(j));
            let has_offset = || expect(i.segment().offset_to(ij.segment())).is_some();
            if expect(m.subset(&mj)) && m != mj {
                t[8].record(has_offset(), || format!("I = {i}, J = {j}"));
            }
            if m == mj && expect(j.mul(&mj)) != *j {
                t[9].record(has_offset(), || format!("I = {i}, J = {j}"));
            }
            let smaller = if expect(m.subset(&mj)) { m.clone() } else { mj.clone() };
            t[12].record(ij.max_ideal() == smaller, || format!("I = {i}, J = {j}"));
        }
    }
    for p in &primes {
        t[3].record(p.max_ideal() == **p, || format!("P = {p}"));
        for q in &primes {
            for a in &scalars {
                if expect(p.scale(a)) == **q {
                    t[4].record(p == q, || format!("P = {p}, Q = {q}, va = {a}"));
                }
            }
        }
    }
    MPropertyReport {
        value_group: sig.to_string(),
        ideals: ideals.len(),
        checks: t.into_iter().map(|x| x.check).collect(),
    }
}
