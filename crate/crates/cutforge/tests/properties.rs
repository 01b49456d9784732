use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use cutforge::idealcalc::{solve_ideal, Ideal, SolveIdealOutcome};
use cutforge::segcalc::{solve, FinalSegment, Flavor, SolveOutcome};
use cutforge::{Factor, GroupElement, GroupSignature};

const GROUPS: &[&str] = &["Z", "Q", "Z,Z", "Q,Z", "Z,Q", "Q,Q", "Z,Z,Z", "Q,Z,Q"];

fn coord(f: Factor) -> BoxedStrategy<BigRational> {
    match f {
        Factor::Int => (-6i64..=6).prop_map(|n| BigRational::from_integer(n.into())).boxed(),
        Factor::Rat => {
            (-24i64..=24, 1i64..=4).prop_map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q))).boxed()
        }
    }
}

fn element(sig: &GroupSignature) -> BoxedStrategy<GroupElement> {
    let sig = sig.clone();
    let coords: Vec<_> = sig.factors().iter().map(|&f| coord(f)).collect();
    coords.prop_map(move |c| GroupElement::new(&sig, c).unwrap()).boxed()
}

fn segment(sig: &GroupSignature) -> BoxedStrategy<FinalSegment> {
    let s = sig.clone();
    (1..=sig.rank(), any::<bool>(), element(sig))
        .prop_map(move |(j, gt, a)| FinalSegment::new(&s, j, if gt { Flavor::Gt } else { Flavor::Geq }, &a).unwrap())
        .boxed()
}

fn group() -> impl Strategy<Value = GroupSignature> {
    prop::sample::select(GROUPS).prop_map(|g| GroupSignature::parse(g).unwrap())
}

fn segments(k: usize) -> impl Strategy<Value = (Vec<FinalSegment>, Vec<GroupElement>)> {
    group().prop_flat_map(move |g| (prop::collection::vec(segment(&g), k), prop::collection::vec(element(&g), k)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn order_is_total_and_translation_invariant((_, e) in segments(3)) {
        let (a, b, c) = (&e[0], &e[1], &e[2]);
        let ab = a.cmp_lex(b).unwrap();
        prop_assert_eq!(ab.reverse(), b.cmp_lex(a).unwrap());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        prop_assert_eq!(a.add(c).unwrap().cmp_lex(&b.add(c).unwrap()).unwrap(), ab);
        if ab.is_le() && b.cmp_lex(c).unwrap().is_le() {
            prop_assert!(a.cmp_lex(c).unwrap().is_le());
        }
    }

    #[test]
    fn addition_laws((s, _) in segments(3)) {
        let (a, b, c) = (&s[0], &s[1], &s[2]);
        prop_assert_eq!(a.add(b).unwrap(), b.add(a).unwrap());
        prop_assert_eq!(a.add(b).unwrap().add(c).unwrap(), a.add(&b.add(c).unwrap()).unwrap());
        let zero = FinalSegment::principal(&GroupElement::zero(a.signature()));
        prop_assert_eq!(a.add(&zero).unwrap(), a.clone());
        // inclusion is total and addition is monotone
        let ab = a.subset(b).unwrap();
        prop_assert!(ab || b.subset(a).unwrap());
        if ab {
            prop_assert!(a.add(c).unwrap().subset(&b.add(c).unwrap()).unwrap());
        }
    }

    #[test]
    fn sum_contains_pointwise_sums((s, e) in segments(3)) {
        let (a, b) = (&s[0], &s[1]);
        let sum = a.add(b).unwrap();
        for x in &e {
            for y in &e {
                if a.member(x).unwrap() && b.member(y).unwrap() {
                    prop_assert!(sum.member(&x.add(y).unwrap()).unwrap());
                }
            }
        }
        let g = &e[0];
        let shifted = a.shift(g).unwrap();
        prop_assert_eq!(shifted.member(&e[1]).unwrap(), a.member(&e[1].sub(g).unwrap()).unwrap());
    }

    #[test]
    fn multiples((s, _) in segments(1), k in 1i64..12) {
        let a = &s[0];
        let mut acc = a.clone();
        for _ in 1..k {
            acc = acc.add(a).unwrap();
        }
        prop_assert_eq!(a.n_times(k).unwrap(), acc);
        prop_assert!(a.n_times(0).is_err());
    }

    #[test]
    fn closures_and_complements((s, _) in segments(1)) {
        let a = &s[0];
        prop_assert_eq!(a.delta().delta(), a.hat());
        prop_assert_eq!(a.neg_complement().neg_complement(), a.clone());
        prop_assert_eq!(a.hat().hat(), a.hat());
        prop_assert!(a.subset(&a.hat()).unwrap());
        prop_assert!(a.hat().subset(&a.dhat()).unwrap());
        prop_assert_eq!(a.dhat(), a.add(a).unwrap().ms(a).unwrap());
        // the invariance group does not move the segment
        let h = a.inv_group();
        let n = a.signature().rank();
        if h.level() < n {
            let unit = GroupElement::unit(a.signature(), h.level() + 1);
            prop_assert_eq!(a.shift(&unit).unwrap(), a.clone());
        }
    }

    #[test]
    fn quotients((s, _) in segments(1), k in 1usize..=3) {
        let a = &s[0];
        let k = k.min(a.signature().rank());
        let back = a.push_quotient(k).unwrap().pull_quotient(a.signature()).unwrap();
        prop_assert!(a.subset(&back).unwrap());
        prop_assert_eq!(back.push_quotient(k).unwrap(), a.push_quotient(k).unwrap());
    }

    #[test]
    fn largest_products((s, _) in segments(3)) {
        let (s2, s1, t) = (&s[0], &s[1], &s[2]);
        let m = s2.ms(s1).unwrap();
        prop_assert!(s1.add(&m).unwrap().subset(s2).unwrap());
        if s1.add(t).unwrap().subset(s2).unwrap() {
            prop_assert!(t.subset(&m).unwrap());
        }
    }

    #[test]
    fn solve_postconditions((s, _) in segments(2)) {
        let (s1, s2) = (&s[0], &s[1]);
        let out = solve(s1, s2).unwrap();
        let m = s2.ms(s1).unwrap();
        prop_assert_eq!(out.best(), &m);
        match &out {
            SolveOutcome::Unique(t) | SolveOutcome::Largest(t) => {
                prop_assert_eq!(&s1.add(t).unwrap(), s2);
                prop_assert_eq!(matches!(out, SolveOutcome::Unique(_)), s1.is_principal());
            }
            SolveOutcome::NoSolution { s2_prime, t_max } => {
                prop_assert_eq!(&s1.add(t_max).unwrap(), s2_prime);
                prop_assert!(s2_prime.subset(s2).unwrap() && s2_prime != s2);
                prop_assert_eq!(s2_prime.ms(s1).unwrap(), m);
            }
        }
    }

    #[test]
    fn ideal_products_follow_values((s, _) in segments(2)) {
        let (i, j) = (Ideal::from_segment(s[0].clone()), Ideal::from_segment(s[1].clone()));
        let ij = i.mul(&j).unwrap();
        prop_assert_eq!(ij.segment(), &s[0].add(&s[1]).unwrap());
        prop_assert_eq!(&ij, &j.mul(&i).unwrap());
        let c = j.colon(&i).unwrap();
        prop_assert!(i.mul(&c).unwrap().subset(&j).unwrap());
        prop_assert_eq!(i.deep_closure(), i.mul(&i).unwrap().colon(&i).unwrap());
        match solve_ideal(&i, &j).unwrap() {
            SolveIdealOutcome::Unique(x) | SolveIdealOutcome::Largest(x) => prop_assert_eq!(i.mul(&x).unwrap(), j),
            SolveIdealOutcome::NoSolution { i2_prime, j_max } => {
                prop_assert_eq!(i.mul(&j_max).unwrap(), i2_prime.clone());
                prop_assert_eq!(i2_prime.colon(&i).unwrap(), c);
            }
        }
    }
}
