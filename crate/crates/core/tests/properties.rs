use std::collections::BTreeSet;

use agideal::lab::{verify_claim, witness_rechecks, ClaimId, ClaimInputs, SearchBudget, Verdict};
use agideal::text::{format_ifs, format_magma, parse_ifs, parse_magma};
use agideal::{
    compose, enumerate_ag_groupoids, fixtures, is_crisp_ideal, is_if_ideal, subset_product, CrispSubset, FiniteMagma,
    Grade, IdealKind, Ifs, LatticeOpKind, Strictness,
};
use proptest::prelude::*;

fn magmas() -> Vec<FiniteMagma> {
    let mut v = vec![fixtures::g1(), fixtures::g2()];
    v.extend(enumerate_ag_groupoids(3, false, 4).unwrap().step_by(7));
    v
}

fn magma() -> impl Strategy<Value = FiniteMagma> {
    prop::sample::select(magmas())
}

fn grade_pair() -> impl Strategy<Value = (Grade, Grade)> {
    (1u64..=10)
        .prop_flat_map(|d| (Just(d), 0..=d))
        .prop_flat_map(|(d, p)| (Just(d), Just(p), 0..=d - p))
        .prop_map(|(d, p, q)| (Grade::new(p, d).unwrap(), Grade::new(q, d).unwrap()))
}

fn ifs(n: usize) -> impl Strategy<Value = Ifs> {
    prop::collection::vec(grade_pair(), n).prop_map(|pairs| {
        let (mu, gamma) = pairs.into_iter().unzip();
        Ifs::new(mu, gamma, Strictness::Strict).unwrap()
    })
}

fn magma_with_sets(k: usize) -> impl Strategy<Value = (FiniteMagma, Vec<Ifs>)> {
    magma().prop_flat_map(move |m| {
        let n = m.order();
        (Just(m), prop::collection::vec(ifs(n), k))
    })
}

/// Sup-min / inf-max over factorizations, written out directly.
fn oracle_compose(m: &FiniteMagma, a: &Ifs, b: &Ifs) -> (Vec<Grade>, Vec<Grade>) {
    let n = m.order();
    let mut mu = vec![Grade::ZERO; n];
    let mut gamma = vec![Grade::ONE; n];
    for x in 0..n {
        for y in 0..n {
            let p = m.mul(x, y);
            mu[p] = mu[p].max(a.mu(x).min(b.mu(y)));
            gamma[p] = gamma[p].min(a.gamma(x).max(b.gamma(y)));
        }
    }
    (mu, gamma)
}

fn meet(a: &Ifs, b: &Ifs) -> Ifs {
    a.lattice_op(b, LatticeOpKind::Intersection).unwrap()
}

fn join(a: &Ifs, b: &Ifs) -> Ifs {
    a.lattice_op(b, LatticeOpKind::Union).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn compose_matches_oracle((m, s) in magma_with_sets(2)) {
        let c = compose(&m, &s[0], &s[1]).unwrap();
        let (mu, gamma) = oracle_compose(&m, &s[0], &s[1]);
        prop_assert_eq!(c.mus(), mu.as_slice());
        prop_assert_eq!(c.gammas(), gamma.as_slice());
        let mut allowed: BTreeSet<Grade> = s[0].grade_values().into_iter().chain(s[1].grade_values()).collect();
        allowed.insert(Grade::ZERO);
        allowed.insert(Grade::ONE);
        prop_assert!(c.grade_values().iter().all(|g| allowed.contains(g)));
    }

    #[test]
    fn compose_is_monotone((m, s) in magma_with_sets(4)) {
        let (a, a2) = (meet(&s[0], &s[1]), s[0].clone());
        let (b, b2) = (meet(&s[2], &s[3]), join(&s[2], &s[3]));
        prop_assert!(a.leq(&a2).unwrap() && b.leq(&b2).unwrap());
        let lo = compose(&m, &a, &b).unwrap();
        let hi = compose(&m, &a2, &b2).unwrap();
        prop_assert!(lo.leq(&hi).unwrap());
    }

    #[test]
    fn inclusion_is_a_partial_order((_, s) in magma_with_sets(3)) {
        let (a, b, c) = (&s[0], &s[1], &s[2]);
        prop_assert!(a.leq(a).unwrap());
        if a.leq(b).unwrap() && b.leq(a).unwrap() {
            prop_assert_eq!(a, b);
        }
        let (x, y) = (meet(a, b), join(b, c));
        prop_assert!(x.leq(b).unwrap() && b.leq(&y).unwrap() && x.leq(&y).unwrap());
    }

    #[test]
    fn lattice_laws((_, s) in magma_with_sets(3)) {
        let (a, b, c) = (&s[0], &s[1], &s[2]);
        prop_assert_eq!(meet(a, b), meet(b, a));
        prop_assert_eq!(join(a, b), join(b, a));
        prop_assert_eq!(meet(&meet(a, b), c), meet(a, &meet(b, c)));
        prop_assert_eq!(join(&join(a, b), c), join(a, &join(b, c)));
        prop_assert_eq!(&meet(a, a), a);
        prop_assert_eq!(&join(a, a), a);
        prop_assert_eq!(&meet(a, &join(a, b)), a);
        prop_assert_eq!(&join(a, &meet(a, b)), a);
        prop_assert!(meet(a, b).leq(a).unwrap() && a.leq(&join(a, b)).unwrap());
    }

    #[test]
    fn subset_product_matches_oracle(m in magma(), xa in any::<u64>(), ya in any::<u64>()) {
        let n = m.order();
        let full = (1u64 << n) - 1;
        let (x, y) = (CrispSubset::from_mask(n, xa & full), CrispSubset::from_mask(n, ya & full));
        let p = subset_product(&m, &x, &y).unwrap();
        let expected: BTreeSet<usize> = x.iter().flat_map(|a| y.iter().map(move |b| (a, b))).map(|(a, b)| m.mul(a, b)).collect();
        prop_assert_eq!(p.iter().collect::<BTreeSet<_>>(), expected);
    }

    #[test]
    fn characteristic_cut_round_trip(m in magma(), mask in 1u64..) {
        let n = m.order();
        let x = CrispSubset::from_mask(n, mask & ((1 << n) - 1));
        let chi = Ifs::characteristic(&x);
        for a in ["1/4", "1/2", "1"] {
            prop_assert_eq!(chi.level_cut(a.parse().unwrap()).unwrap(), x.clone());
        }
    }

    #[test]
    fn characteristic_sets_follow_crisp_predicates(m in magma(), mask in 1u64..) {
        let n = m.order();
        let x = CrispSubset::from_mask(n, mask & ((1 << n) - 1));
        prop_assume!(!x.is_empty());
        let chi = Ifs::characteristic(&x);
        for kind in [IdealKind::Subgroupoid, IdealKind::Left, IdealKind::Right, IdealKind::TwoSided] {
            prop_assert_eq!(is_if_ideal(&m, &chi, kind).unwrap().holds, is_crisp_ideal(&m, &x, kind).unwrap().holds);
        }
    }

    #[test]
    fn level_cut_matches_definition((_, s) in magma_with_sets(1), p in grade_pair()) {
        let alpha = p.0.max(p.1);
        prop_assume!(!alpha.is_zero());
        let a = &s[0];
        let expected: Vec<usize> = (0..a.carrier()).filter(|&x| a.mu(x) >= alpha && a.gamma(x) <= alpha).collect();
        prop_assert_eq!(a.level_cut(alpha).unwrap().iter().collect::<Vec<_>>(), expected);
    }

    #[test]
    fn text_round_trip((m, s) in magma_with_sets(1), base in 0usize..=1) {
        prop_assert_eq!(parse_magma(&format_magma(&m, base), base).unwrap(), m.clone());
        prop_assert_eq!(parse_ifs(&format_ifs(&s[0], base), base, Strictness::Strict).unwrap(), s[0].clone());
    }

    #[test]
    fn refutations_recheck((m, s) in magma_with_sets(2)) {
        let budget = SearchBudget::default();
        for claim in [
            ClaimId::ComposeChar, ClaimId::LeftIffRight, ClaimId::Absorb, ClaimId::QuasiChar,
            ClaimId::GrandEquiv, ClaimId::ProdEqMeet, ClaimId::ProdEqMeetNonconverse, ClaimId::Semilattice,
            ClaimId::LevelCutFwd, ClaimId::LiftedLaws,
        ] {
            let inputs = ClaimInputs::sets(s.clone());
            let r = verify_claim(claim, &m, &inputs, None, &budget).unwrap();
            match r.verdict {
                Verdict::Refuted => prop_assert!(witness_rechecks(&r), "{}", r.render_text(1)),
                Verdict::NotApplicable => prop_assert!(r.failed_precondition.is_some()),
                Verdict::Confirmed => prop_assert!(r.witness.is_none()),
            }
        }
    }
}

#[test]
fn grade_strings_round_trip() {
    for d in 1..=12u64 {
        for p in 0..=d {
            let g = Grade::new(p, d).unwrap();
            assert_eq!(g.to_string().parse::<Grade>().unwrap(), g);
        }
    }
}
