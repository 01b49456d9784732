use super::*;
use crate::segcalc::Flavor::{self, Geq, Gt};

fn field(s: &str) -> ValuedField {
    ValuedField::new(GroupSignature::parse(s).unwrap())
}

fn el(f: &ValuedField, s: &str) -> GroupElement {
    GroupElement::parse(f.value_group(), s).unwrap()
}

fn ideal(f: &ValuedField, j: usize, fl: Flavor, a: &str) -> Ideal {
    f.ideal(FinalSegment::new(f.value_group(), j, fl, &el(f, a)).unwrap()).unwrap()
}

fn principal(f: &ValuedField, a: &str) -> Ideal {
    f.principal_ideal(&el(f, a)).unwrap()
}

#[test]
fn bijection() {
    let f = field("Z^2");
    let zero = FinalSegment::principal(&el(&f, "[0, 0]"));
    assert_eq!(f.ideal(zero.clone()).unwrap(), f.ov());
    assert_eq!(f.ov().into_segment(), zero);
    let other = field("Q,Z");
    assert!(matches!(other.ideal(zero), Err(Error::SignatureMismatch { .. })));
}

#[test]
fn principal_ideals() {
    let z = field("Z");
    assert_eq!(principal(&z, "[0]"), z.ov());
    assert_eq!(principal(&z, "[1]"), z.mv());
    assert_eq!(principal(&z, "[2]").mul(&principal(&z, "[3]")).unwrap(), principal(&z, "[5]"));
}

#[test]
fn products() {
    let z = field("Z");
    assert_eq!(z.mv().mul(&z.mv()).unwrap(), ideal(&z, 1, Geq, "[2]"));
    let q = field("Q");
    assert_eq!(q.mv().mul(&q.mv()).unwrap(), q.mv());
    let zz = field("Z^2");
    let prod = ideal(&zz, 1, Geq, "[0, 0]").mul(&ideal(&zz, 2, Geq, "[1, 5]")).unwrap();
    assert_eq!(prod, ideal(&zz, 1, Geq, "[1, 0]"));
    assert!(matches!(z.ov().mul(&q.ov()), Err(Error::FieldMismatch { .. })));
}

#[test]
fn colons() {
    let z = field("Z");
    assert_eq!(z.mv().colon(&z.ov()).unwrap(), z.mv());
    let zz = field("Z^2");
    let i = ideal(&zz, 1, Geq, "[0, 0]");
    assert_eq!(i.colon(&i).unwrap(), ideal(&zz, 1, Geq, "[0, 0]"));
    let q = field("Q");
    assert_eq!(q.ov().colon(&q.mv()).unwrap(), q.ov());
}

#[test]
fn invariance_rings() {
    let zz = field("Z^2");
    let i = ideal(&zz, 1, Geq, "[0, 0]");
    assert_eq!(i.inv_ring(), zz.overring(1).unwrap());
    assert_eq!(i.max_ideal(), ideal(&zz, 1, Geq, "[1, 0]"));
    assert_eq!(i.units_group().level(), 1);
    let p = principal(&zz, "[3, -2]");
    assert_eq!(p.inv_ring(), zz.valuation_ring());
    assert_eq!(p.max_ideal(), zz.mv());
    let o = zz.overring(1).unwrap();
    assert_eq!(o.as_ideal().inv_ring(), o);
    assert_eq!(o.max_ideal().inv_ring(), o);
    assert!(o > zz.valuation_ring());
}

#[test]
fn extensions() {
    let zz = field("Z^2");
    let o1 = zz.overring(1).unwrap();
    assert_eq!(principal(&zz, "[0, 3]").extend(&o1).unwrap(), ideal(&zz, 1, Geq, "[0, 0]"));
    let i = ideal(&zz, 2, Geq, "[4, 1]");
    assert_eq!(i.extend(&zz.valuation_ring()).unwrap(), i);
    assert!(ideal(&zz, 1, Geq, "[0, 0]").is_ideal_over(&o1).unwrap());
    assert!(!i.is_ideal_over(&o1).unwrap());
    assert!(matches!(zz.overring(0), Err(Error::LevelOutOfRange { .. })));
    assert!(matches!(zz.overring(3), Err(Error::LevelOutOfRange { .. })));
}

#[test]
fn principal_over_overrings() {
    let zz = field("Z^2");
    assert!(ideal(&zz, 1, Geq, "[1, 0]").is_principal_over(&zz.overring(1).unwrap()).unwrap());
    let qq = field("Q^2");
    assert!(!ideal(&qq, 1, Gt, "[0, 0]").is_principal_over(&qq.overring(1).unwrap()).unwrap());
    assert!(principal(&qq, "[1/2, 3]").is_principal_over(&qq.valuation_ring()).unwrap());
}

#[test]
fn closures() {
    let qq = field("Q^2");
    let o1 = qq.overring(1).unwrap();
    let j = ideal(&qq, 1, Gt, "[2, 0]");
    assert_eq!(j.closure_over(&o1).unwrap(), ideal(&qq, 1, Geq, "[2, 0]"));
    let closed = ideal(&qq, 1, Geq, "[2, 0]");
    assert_eq!(closed.closure_over(&o1).unwrap(), closed);
    let not_over = principal(&qq, "[1, 1]");
    assert!(matches!(not_over.closure_over(&o1), Err(Error::NotAnOverringIdeal { .. })));
    let open = ideal(&qq, 1, Gt, "[0, 0]");
    assert_eq!(open.deep_closure(), ideal(&qq, 1, Geq, "[0, 0]"));
    assert_eq!(open.deep_closure(), open.mul(&open).unwrap().colon(&open).unwrap());
    assert_eq!(closed.deep_closure(), closed);
}

#[test]
fn solving() {
    let z = field("Z");
    let out = solve_ideal(&principal(&z, "[1]"), &principal(&z, "[5]")).unwrap();
    assert_eq!(out, SolveIdealOutcome::Unique(principal(&z, "[4]")));
    let zz = field("Z^2");
    let out = solve_ideal(&ideal(&zz, 1, Geq, "[0, 0]"), &principal(&zz, "[0, 0]")).unwrap();
    let shrunk = ideal(&zz, 1, Geq, "[1, 0]");
    assert_eq!(out, SolveIdealOutcome::NoSolution { i2_prime: shrunk.clone(), j_max: shrunk });
    let qq = field("Q^2");
    let open = ideal(&qq, 1, Gt, "[0, 0]");
    assert_eq!(solve_ideal(&open, &open).unwrap(), SolveIdealOutcome::Largest(ideal(&qq, 1, Geq, "[0, 0]")));
}

#[test]
fn annihilators() {
    let z = field("Z");
    assert_eq!(annihilator(&z.ov(), &z.mv()).unwrap(), z.mv());
    let q = field("Q");
    assert_eq!(annihilator(&q.ov(), &q.mv()).unwrap(), q.mv());
    let qq = field("Q^2");
    let i = ideal(&qq, 1, Gt, "[0, 0]");
    assert_eq!(annihilator(&i, &i.mul(&i).unwrap()).unwrap(), i.deep_closure());
    assert_eq!(annihilator(&i, &i).unwrap(), i.inv_ring().as_ideal());
    assert!(matches!(annihilator(&z.mv(), &z.ov()), Err(Error::NotASubideal { .. })));
}

#[test]
fn maximal_annihilators() {
    let z = field("Z");
    assert!(ann_is_maximal_ideal(&z.ov(), &z.mv()).unwrap());
    let q = field("Q");
    assert!(!ann_is_maximal_ideal(&q.mv(), &principal(&q, "[1]")).unwrap());
    let zz = field("Z^2");
    let i1 = ideal(&zz, 1, Geq, "[0, 0]");
    let i2 = ideal(&zz, 1, Geq, "[1, 0]");
    assert!(!ann_is_maximal_ideal(&i1, &i2).unwrap());
    assert_eq!(annihilator(&i1, &i2).unwrap(), i2);
    assert!(matches!(ann_is_maximal_ideal(&i1, &i1), Err(Error::NotAProperSubideal { .. })));
}

#[test]
fn power_quotients() {
    let z = field("Z");
    let r = ann_power_quotient(&z.mv(), &el(&z, "[0]"), 2).unwrap();
    assert_eq!(r.ann, z.mv());
    assert_eq!(r.j, z.mv());
    assert!(r.equals_max_ideal && !r.properly_contains_j);
    let q = field("Q");
    let r = ann_power_quotient(&q.mv(), &el(&q, "[0]"), 2).unwrap();
    assert_eq!(r.j, q.mv());
    assert_eq!(r.ann, ideal(&q, 1, Geq, "[0]"));
    assert!(r.properly_contains_j && !r.equals_max_ideal && r.max_ideal_times_ann_within_j);
    let qq = field("Q^2");
    let r = ann_power_quotient(&ideal(&qq, 1, Geq, "[1, 0]"), &el(&qq, "[0, 0]"), 2).unwrap();
    assert_eq!(r.j, ideal(&qq, 1, Geq, "[1, 0]"));
    assert_eq!(r.ann, r.j);
}

#[test]
fn power_quotient_preconditions() {
    let z = field("Z");
    let bad = |r: Result<PowerAnnihilator>| matches!(r, Err(Error::PreconditionViolated(_)));
    assert!(bad(ann_power_quotient(&z.ov(), &el(&z, "[0]"), 2)));
    assert!(bad(ann_power_quotient(&z.mv(), &el(&z, "[0]"), 1)));
    assert!(bad(ann_power_quotient(&z.mv(), &el(&z, "[-1]"), 2)));
    assert!(bad(ann_power_quotient(&principal(&z, "[-1]"), &el(&z, "[1]"), 2)));
    assert!(bad(ann_power_quotient(&z.mv(), &el(&z, "[1]"), 0)));
    // n = 1 accepts O_v itself: ann O_v/bO_v = bO_v
    let r = ann_power_quotient(&z.ov(), &el(&z, "[1]"), 1).unwrap();
    assert_eq!(r.ann, z.mv());
    assert!(r.equals_max_ideal);
}

#[test]
fn rank_one_quotient_of_a_nonprincipal_power() {
    // with n = 1 and O(I) ≠ O_v the annihilator is J O(IJ), not J
    let zz = field("Z^2");
    let i = ideal(&zz, 1, Geq, "[1, 0]");
    let b = el(&zz, "[1, 0]");
    let r = ann_power_quotient(&i, &b, 1).unwrap();
    assert_eq!(r.j, principal(&zz, "[1, 0]"));
    assert_eq!(r.ann, ideal(&zz, 1, Geq, "[1, 0]"));
    assert_eq!(r.ann, annihilator(&i, &i.mul(&r.j).unwrap()).unwrap());
    assert!(r.properly_contains_j);
}

#[test]
fn ball_powers() {
    let z = field("Z");
    let r = ann_ball_power(&el(&z, "[0]"), &z.valuation_ring(), 2).unwrap();
    assert_eq!(r.ann, z.mv());
    assert!(r.equals_max_ideal);
    let q = field("Q");
    let r = ann_ball_power(&el(&q, "[1]"), &q.valuation_ring(), 2).unwrap();
    assert_eq!(r.ann, ideal(&q, 1, Geq, "[1]"));
    assert!(!r.equals_max_ideal);
    assert_eq!(ann_ball_power(&el(&q, "[0]"), &q.valuation_ring(), 2), Err(Error::DegenerateQuotient));
    assert!(matches!(ann_ball_power(&el(&q, "[1]"), &q.valuation_ring(), 1), Err(Error::PreconditionViolated(_))));
}

#[test]
fn m_properties_on_z2() {
    let report = verify_m_properties(&field("Z^2"), MPropertyBounds::default());
    assert!(report.passed(), "{report}");
    assert_eq!(report.checks.len(), 14);
}

#[test]
fn prime_detection() {
    let f = field("Q,Z");
    let fine = crate::segcalc::enumerate_elements(f.value_group(), 3, 4);
    let primes: Vec<Ideal> = crate::segcalc::enumerate_segments(f.value_group(), 2, 2)
        .into_iter()
        .map(Ideal::from_segment)
        .filter(|p| is_prime_on_box(p, &fine))
        .collect();
    let expected: Vec<Ideal> = (1..=2).map(|k| f.overring(k).unwrap().max_ideal()).collect();
    assert_eq!(primes.len(), 2);
    for p in expected {
        assert!(primes.contains(&p));
    }
}

#[test]
fn spot_values() {
    let zz = field("Z^2");
    let i = ideal(&zz, 1, Geq, "[0, 0]");
    let j = principal(&zz, "[0, 3]");
    assert_eq!(i.mul(&j).unwrap().max_ideal(), i.max_ideal());
    let p = zz.overring(1).unwrap().max_ideal();
    assert_eq!(p.max_ideal(), p);
}
