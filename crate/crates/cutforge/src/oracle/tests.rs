use super::*;
use crate::error::Error;
use crate::lexgroup::GroupSignature;
use crate::segcalc::Flavor;

fn sig(s: &str) -> GroupSignature {
    GroupSignature::parse(s).unwrap()
}

fn el(g: &GroupSignature, s: &str) -> GroupElement {
    GroupElement::parse(g, s).unwrap()
}

fn seg(g: &GroupSignature, j: usize, f: Flavor, a: &str) -> FinalSegment {
    FinalSegment::new(g, j, f, &el(g, a)).unwrap()
}

fn full_margin() -> WindowSpec {
    WindowSpec { margin: Rational64::from_integer(1), ..WindowSpec::default() }
}

#[test]
fn sum_membership() {
    let z2 = sig("Z^2");
    let s = seg(&z2, 1, Flavor::Geq, "[0, 0]");
    let w = full_margin();
    assert!(oracle_sum_member(&s, &s, &el(&z2, "[0, -7]"), &w).unwrap());
    assert!(!oracle_sum_member(&s, &s, &el(&z2, "[-1, 0]"), &w).unwrap());
    let far = oracle_sum_member(&s, &s, &el(&z2, "[0, -7]"), &WindowSpec::default());
    assert!(matches!(far, Err(Error::PointOutsideMargin { .. })));
}

#[test]
fn principal_sums_match_add() {
    let z2 = sig("Z^2");
    let w = WindowSpec::default();
    let a = FinalSegment::principal(&el(&z2, "[1, -2]"));
    let b = FinalSegment::principal(&el(&z2, "[0, 3]"));
    let sum = a.add(&b).unwrap();
    for g in crate::segcalc::enumerate_elements(&z2, 6, 1) {
        assert_eq!(oracle_sum_member(&a, &b, &g, &w).unwrap(), sum.member(&g).unwrap(), "{g}");
    }
}

#[test]
fn invariance_shifts() {
    let z2 = sig("Z^2");
    let s = seg(&z2, 1, Flavor::Geq, "[0, 0]");
    let w = WindowSpec::default();
    assert!(oracle_inv_shift(&s, &el(&z2, "[0, 5]"), &w).unwrap());
    assert!(!oracle_inv_shift(&s, &el(&z2, "[1, 0]"), &w).unwrap());
    assert!(oracle_inv_shift(&s, &el(&z2, "[0, 0]"), &w).unwrap());
}

#[test]
fn colon_and_delta_membership() {
    let z2 = sig("Z^2");
    let s = seg(&z2, 1, Flavor::Geq, "[0, 0]");
    let w = WindowSpec::default();
    assert!(oracle_ms_member(&s, &s, &el(&z2, "[0, -3]"), &w).unwrap());
    assert!(!oracle_ms_member(&s, &s, &el(&z2, "[-1, 0]"), &w).unwrap());
    assert!(oracle_delta_member(&s, &el(&z2, "[1, -9]"), &full_margin()).unwrap());
    assert!(!oracle_delta_member(&s, &el(&z2, "[0, 5]"), &w).unwrap());
}

#[test]
fn off_lattice_points_are_rejected() {
    let q = sig("Q");
    let s = seg(&q, 1, Flavor::Gt, "[0]");
    let w = WindowSpec { denom_bound: 2, ..WindowSpec::default() };
    assert!(matches!(oracle_delta_member(&s, &el(&q, "[1/7]"), &w), Err(Error::OffLattice(_))));
    assert!(oracle_delta_member(&s, &el(&q, "[1/4]"), &w).unwrap());
}

#[test]
fn instance_counts() {
    let z2 = sig("Z^2");
    let w = WindowSpec::default();
    let segs = enumerate_segments(&z2, 3, 1).len();
    let r = check_agreement(Op::Add, &z2, 3, &w).unwrap();
    assert_eq!(r.instances, segs * segs);
    assert_eq!(r.mode, Mode::Exhaustive);
    assert!(r.passed(), "{r}");
}

#[test]
fn every_op_agrees_on_z2_small() {
    let z2 = sig("Z^2");
    let w = WindowSpec::with_radius(8);
    for op in Op::ALL {
        let r = check_agreement(op, &z2, 2, &w).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn every_op_agrees_on_mixed_groups() {
    for s in ["Q,Z", "Q^2", "Z,Q", "Q"] {
        let g = sig(s);
        let w = WindowSpec { samples: 400, seed: 7, ..WindowSpec::default() };
        for op in Op::ALL {
            let r = check_agreement(op, &g, 3, &w).unwrap();
            assert_eq!(r.mode, Mode::Randomized);
            assert!(r.passed(), "{r}");
        }
    }
}

#[test]
fn randomized_reports_replay() {
    let g = sig("Q^2");
    let w = WindowSpec { samples: 300, seed: 11, ..WindowSpec::default() };
    let a = check_agreement(Op::Delta, &g, 3, &w).unwrap();
    let b = check_agreement(Op::Delta, &g, 3, &w).unwrap();
    assert_eq!(a, b);
}

#[test]
fn a_wrong_answer_is_caught() {
    // the oracle is not vacuous: a shifted copy of S disagrees with S + 0⁻
    let z2 = sig("Z^2");
    let lat = WindowSpec::default().lattice(&z2).unwrap();
    let s = Prepared::new(&lat, seg(&z2, 2, Flavor::Geq, "[0, 1]")).unwrap();
    let zero = Prepared::new(&lat, FinalSegment::principal(&el(&z2, "[0, 0]"))).unwrap();
    let wrong = lat.cut(&seg(&z2, 2, Flavor::Geq, "[0, 2]")).unwrap();
    let points = lat.all_test_points();
    assert!(points.iter().any(|g| s.sum_with(&zero.cut, g) != wrong.member(g)));
}

#[test]
fn monotone_on_z2() {
    let z2 = sig("Z^2");
    let r = check_monotone(Op::Msub, &z2, 2, &WindowSpec::with_radius(6)).unwrap();
    assert!(r.at_m.passed() && r.holds());
}

#[test]
fn oracle_level_and_principality() {
    let qz = sig("Q,Z");
    let lat = WindowSpec::default().lattice(&qz).unwrap();
    let open = lat.cut(&seg(&qz, 1, Flavor::Gt, "[1/2, 0]")).unwrap();
    let pts = lat.critical_points(&[open.anchor]);
    assert_eq!(oracle_level(&lat, &open, &pts), 1);
    assert!(!oracle_quotient_principal(&lat, &open, 1));
    let closed = lat.cut(&seg(&qz, 2, Flavor::Geq, "[1/2, -1]")).unwrap();
    assert!(oracle_quotient_principal(&lat, &closed, 2));
}
