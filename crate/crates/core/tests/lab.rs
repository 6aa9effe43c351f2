use agideal::fixtures;
use agideal::lab::*;
use agideal::{Error, FiniteMagma, GradeChain, Ifs, Strictness};

fn chain(k: u64) -> GradeChain {
    GradeChain::new(k).unwrap()
}

fn set(mu: &[&str], gamma: &[&str]) -> Ifs {
    Ifs::parse(mu, gamma, Strictness::Strict).unwrap()
}

fn budget() -> SearchBudget {
    SearchBudget::default()
}

fn trivial() -> FiniteMagma {
    FiniteMagma::constant(1).unwrap()
}

fn claim(c: ClaimId, m: &FiniteMagma, inputs: ClaimInputs, k: Option<u64>) -> ClaimReport {
    verify_claim(c, m, &inputs, k.map(chain), &budget()).unwrap()
}

fn assert_sound(r: &ClaimReport) {
    match r.verdict {
        Verdict::Refuted => assert!(witness_rechecks(r), "{}", r.render_text(1)),
        Verdict::NotApplicable => assert!(r.failed_precondition.is_some()),
        Verdict::Confirmed => assert!(r.witness.is_none()),
    }
}

#[test]
fn delta_idempotent_on_first_table() {
    let r = claim(ClaimId::DeltaIdem, &fixtures::g1(), ClaimInputs::default(), None);
    assert_eq!(r.verdict, Verdict::Confirmed);
    assert_eq!(r.scope, Scope::SingleInstance);
}

#[test]
fn level_cut_with_failing_hypothesis_is_not_applicable() {
    let example = fixtures::example_ifs(Strictness::Lenient).unwrap();
    let r = claim(
        ClaimId::LevelCutFwd,
        &fixtures::g1(),
        ClaimInputs::sets(vec![example]),
        None,
    );
    assert_eq!(r.verdict, Verdict::NotApplicable);
    assert_eq!(r.failed_precondition.unwrap().precondition, Precondition::Hypothesis);
}

#[test]
fn product_meet_on_second_table_prints_both_sides() {
    let inputs = ClaimInputs::sets(vec![fixtures::second_a(), fixtures::second_b()]);
    let r = claim(ClaimId::ProdEqMeet, &fixtures::g2(), inputs.clone(), None);
    assert_eq!(r.verdict, Verdict::NotApplicable);
    let p = r.failed_precondition.as_ref().unwrap();
    assert_eq!(p.precondition, Precondition::IntraRegular);
    assert_eq!(p.elements, vec![1, 2]);
    let Some(Details::Comparison(c)) = &r.details else {
        panic!("missing comparison")
    };
    assert_eq!(
        c.left,
        set(
            &["2/5", "3/10", "3/10", "1/10", "2/5"],
            &["3/10", "1/2", "1/2", "3/5", "3/10"]
        )
    );
    assert_eq!(
        c.right,
        set(
            &["3/10", "3/10", "3/10", "1/10", "2/5"],
            &["3/10", "2/5", "1/2", "3/5", "3/10"]
        )
    );
    assert_eq!(c.differing(), vec![0, 1]);

    let r = claim(ClaimId::ProdEqMeetNonconverse, &fixtures::g2(), inputs, None);
    assert_eq!(r.verdict, Verdict::Refuted);
    assert_eq!(r.witness.as_ref().unwrap().part, "inputs_two_sided");
    assert_sound(&r);
}

#[test]
fn first_table_audit() {
    let out = audit_all(&fixtures::g1(), chain(2), &budget()).unwrap();
    assert!(out.truncated.is_none());
    assert_eq!(out.reports.len(), 24);
    let order: Vec<ClaimId> = out.reports.iter().map(|r| r.claim).collect();
    assert_eq!(order, ClaimId::ALL.to_vec());
    for r in &out.reports {
        assert_sound(r);
    }
    let refuted: Vec<ClaimId> = out.reports.iter().filter(|r| r.is_refuted()).map(|r| r.claim).collect();
    assert_eq!(refuted, vec![ClaimId::Absorb]);
    let absorb = &out.reports[ClaimId::Absorb as usize];
    let w = absorb.witness.as_ref().unwrap();
    assert_eq!(w.part, "delta_left");
    assert_eq!(w.sets, vec![set(&["0"; 5], &["0", "0", "0", "0", "1/2"])]);
    assert_eq!(absorb.scope, Scope::ExhaustiveOverChain);
    assert_eq!(absorb.instances_checked, 2);
    let nonconverse = &out.reports[ClaimId::ProdEqMeetNonconverse as usize];
    assert_eq!(nonconverse.verdict, Verdict::NotApplicable);
    assert_eq!(
        nonconverse.failed_precondition.as_ref().unwrap().precondition,
        Precondition::NotIntraRegular
    );
}

#[test]
fn second_table_audit_blames_element_three() {
    let out = audit_all(&fixtures::g2(), chain(2), &budget()).unwrap();
    assert_eq!(out.reports.len(), 24);
    for r in &out.reports {
        assert_sound(r);
        if r.claim.requirements().intra_regular {
            assert_eq!(r.verdict, Verdict::NotApplicable, "{}", r.claim);
            let p = r.failed_precondition.as_ref().unwrap();
            assert_eq!(p.precondition, Precondition::IntraRegular);
            assert!(p.elements.contains(&2));
        }
    }
    let r = &out.reports[ClaimId::ProdEqMeetNonconverse as usize];
    assert_eq!(r.verdict, Verdict::Refuted);
    let w = r.witness.as_ref().unwrap();
    let a = set(&["0"; 5], &["0", "0", "0", "1/2", "0"]);
    assert_eq!(w.sets, vec![a.clone(), a]);
}

#[test]
fn trivial_audit_is_complete() {
    let out = audit_all(&trivial(), chain(1), &budget()).unwrap();
    assert!(out.truncated.is_none());
    assert_eq!(out.reports.len(), 24);
    assert!(out.reports.iter().all(|r| r.verdict != Verdict::Refuted));
}

#[test]
fn audit_is_deterministic() {
    let b = SearchBudget {
        samples: 50,
        max_instances: 10_000,
        seed: Some(7),
        ..budget()
    };
    let render = || {
        let out = audit_all(&fixtures::g1(), chain(2), &b).unwrap();
        serde_json::to_string(&out.to_json(1)).unwrap()
    };
    assert_eq!(render(), render());
}

#[test]
fn audit_over_budget_is_truncated() {
    let b = SearchBudget {
        max_instances: 1000,
        ..budget()
    };
    let out = audit_all(&fixtures::g1(), chain(2), &b).unwrap();
    let t = out.truncated.unwrap();
    assert_eq!(t.skipped.len(), 19);
    let ran: Vec<ClaimId> = out.reports.iter().map(|r| r.claim).collect();
    assert_eq!(
        ran,
        vec![
            ClaimId::LawMedialFromLi,
            ClaimId::LawParamedialWithE,
            ClaimId::Law4WithE,
            ClaimId::CharBridge,
            ClaimId::DeltaIdem
        ]
    );
    assert!(matches!(
        verify_claim(
            ClaimId::Absorb,
            &fixtures::g1(),
            &ClaimInputs::default(),
            Some(chain(2)),
            &b
        ),
        Err(Error::BudgetExceeded {
            needed: 7776,
            budget: 1000
        })
    ));
}

#[test]
fn lifted_laws_sample_when_tuple_space_is_large() {
    let b = SearchBudget {
        samples: 20,
        seed: Some(3),
        ..budget()
    };
    let r = verify_claim(
        ClaimId::LiftedLaws,
        &fixtures::g1(),
        &ClaimInputs::default(),
        Some(chain(2)),
        &b,
    )
    .unwrap();
    assert_eq!(r.scope, Scope::Sampled);
    assert_eq!(r.seed, Some(3));
    assert_eq!(r.instances_checked, 80);
    let two = FiniteMagma::constant(2).unwrap();
    let r = verify_claim(ClaimId::LiftedLaws, &two, &ClaimInputs::default(), Some(chain(1)), &b).unwrap();
    assert_eq!(r.scope, Scope::ExhaustiveOverChain);
    assert_eq!(r.instances_checked, 2 * 729 + 2 * 6561);
    assert_eq!(r.verdict, Verdict::Confirmed);
}

#[test]
fn arity_is_enforced() {
    let g1 = fixtures::g1();
    let one = ClaimInputs::sets(vec![fixtures::second_a()]);
    for (c, inputs, k) in [
        (ClaimId::ProdEqMeet, one.clone(), None),
        (ClaimId::DeltaIdem, one.clone(), None),
        (ClaimId::Absorb, ClaimInputs::default(), None),
        (ClaimId::DuoEquiv, ClaimInputs::default(), None),
    ] {
        let e = verify_claim(c, &g1, &inputs, k, &budget()).unwrap_err();
        assert!(matches!(e, Error::Arity { .. }), "{c}: {e}");
    }
    let short = ClaimInputs::sets(vec![set(&["0"], &["0"])]);
    assert!(matches!(
        verify_claim(ClaimId::Absorb, &g1, &short, None, &budget()),
        Err(Error::CarrierMismatch { .. })
    ));
    assert!(verify_claim_directed(ClaimId::Absorb, Direction::Converse, &g1, &one, None, &budget()).is_err());
}

#[test]
fn converse_level_cut_example() {
    let inputs = ClaimInputs {
        sets: vec![fixtures::converse_ifs()],
        alpha: Some(fixtures::CONVERSE_ALPHA.parse().unwrap()),
        ..ClaimInputs::default()
    };
    for c in [ClaimId::LevelCutFwd, ClaimId::LevelCutBiFwd] {
        let r = verify_claim_directed(c, Direction::Converse, &fixtures::g1(), &inputs, None, &budget()).unwrap();
        assert_eq!(r.verdict, Verdict::Refuted);
        let w = r.witness.as_ref().unwrap();
        assert_eq!(w.subset.as_ref().unwrap().iter().collect::<Vec<_>>(), vec![0, 1]);
        assert!(witness_rechecks(&r));
        let fwd = verify_claim(c, &fixtures::g1(), &inputs, None, &budget()).unwrap();
        assert_eq!(fwd.verdict, Verdict::NotApplicable);
    }
}

#[test]
fn bridge_over_all_subsets() {
    for m in [fixtures::g1(), fixtures::g2()] {
        let r = claim(ClaimId::CharBridge, &m, ClaimInputs::default(), None);
        assert_eq!(r.verdict, Verdict::Confirmed);
        assert_eq!(r.scope, Scope::ExhaustiveOverSubsets);
        assert_eq!(r.instances_checked, 31);
    }
}

#[test]
fn semilattice_cases() {
    let r = verify_semilattice(&trivial(), chain(2), &budget()).unwrap();
    assert_eq!(r.verdict, Verdict::Confirmed);
    let r = verify_semilattice(&fixtures::g1(), chain(1), &budget()).unwrap();
    assert_sound(&r);
    assert_eq!(r.details, Some(Details::Semilattice { members: 10 }));
    let r = verify_semilattice(&fixtures::g1(), chain(2), &budget()).unwrap();
    assert_eq!(r.details, Some(Details::Semilattice { members: 50 }));
    assert_eq!(r.verdict, Verdict::Confirmed);
    let r = verify_semilattice(&fixtures::g2(), chain(2), &budget()).unwrap();
    assert_eq!(r.verdict, Verdict::NotApplicable);
}

#[test]
fn duo_cases() {
    let r = duo_audit(&trivial(), chain(2), &budget()).unwrap();
    assert_eq!(r.verdict, Verdict::Confirmed);
    let Some(Details::Duo(s)) = &r.details else { panic!() };
    assert!(s.crisp_left && s.crisp_right && s.fuzzy_left && s.fuzzy_right);

    let r = duo_audit(&fixtures::g1(), chain(2), &budget()).unwrap();
    let Some(Details::Duo(s)) = &r.details else { panic!() };
    assert!(s.fuzzy_left && s.fuzzy_right);
    assert_sound(&r);

    let r = duo_audit(&fixtures::g2(), chain(2), &budget()).unwrap();
    assert_sound(&r);
    assert!(r.notes.iter().any(|n| n.contains("intra-regular")));
}

#[test]
fn grand_matrix_on_first_table() {
    let r = claim(ClaimId::GrandEquiv, &fixtures::g1(), ClaimInputs::default(), Some(2));
    let Some(Details::Matrix(m)) = &r.details else { panic!() };
    assert_eq!(m.class_sizes, [50; 8]);
    assert!((0..8).all(|p| (0..8).all(|q| m.coincide(p, q))));
    assert_eq!(r.verdict, Verdict::Confirmed);
}

#[test]
fn searches() {
    let b = SearchBudget {
        max_order: 3,
        require_left_identity: true,
        ..budget()
    };
    let out = search_counterexample(ClaimId::DeltaIdem, Direction::Forward, &b).unwrap();
    assert!(out.found.is_none());
    assert_eq!(out.orders_completed, vec![1, 2, 3]);

    let small = SearchBudget {
        max_order: 2,
        chain_k: 10,
        ..budget()
    };
    let large = SearchBudget {
        max_order: 3,
        ..small.clone()
    };
    let a = search_counterexample(ClaimId::LevelCutFwd, Direction::Converse, &small).unwrap();
    let b = search_counterexample(ClaimId::LevelCutFwd, Direction::Converse, &large).unwrap();
    let found = a.found.expect("converse fails on a small table");
    assert!(witness_rechecks(&found));
    assert_eq!(Some(found), b.found);

    let absorb = SearchBudget {
        max_order: 4,
        ..budget()
    };
    let out = search_counterexample(ClaimId::Absorb, Direction::Forward, &absorb).unwrap();
    let r = out.found.unwrap();
    assert_eq!(r.magma.order(), 2);
    assert!(witness_rechecks(&r));
}

#[test]
fn adjudication_lists_discrepancies() {
    let adj = adjudicate(1, &budget()).unwrap();
    let ids: Vec<&str> = adj.discrepancies().iter().map(|c| c.id).collect();
    assert_eq!(
        ids,
        vec![
            "example_set.is_ifs",
            "example_set.two_sided",
            "converse_set.is_ifs",
            "table2.A_two_sided",
            "table2.B_two_sided",
            "table2.mu_product_eq_meet",
            "table2.gamma_product_eq_meet",
        ]
    );
    let strict = adj.checks.iter().find(|c| c.id == "example_set.is_ifs").unwrap();
    assert!(strict.evidence.contains("13/10"));
    assert_eq!(adj.reports.len(), 2);
    assert_eq!(adj.to_json(), adjudicate(1, &budget()).unwrap().to_json());
}
