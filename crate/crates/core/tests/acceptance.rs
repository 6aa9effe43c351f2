//! Acceptance criteria, run as a plain binary so every PASS/FAIL line is
//! printed regardless of output capture.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use agideal::lab::{
    adjudicate, audit_all, search_counterexample, verify_claim, witness_rechecks, ClaimId, ClaimInputs, Details,
    Direction, SearchBudget, GRAND_LABELS,
};
use agideal::{
    compose, crisp_fuzzy_bridge, enumerate_ag_groupoids, fixtures, is_if_ideal, CrispSubset, Error, FiniteMagma, Grade,
    GradeChain, IdealKind, Ifs, LatticeOpKind, LawKind, Strictness,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn c1() -> Outcome {
    let m = agideal::text::parse_magma("5\n1 1 1 1 1\n1 2 2 2 2\n1 2 4 5 3\n1 2 3 4 5\n1 2 5 3 4\n", 1)
        .map_err(|e| e.to_string())?;
    ensure!(m == fixtures::g1(), "parsed table differs from the fixture");
    for law in [LawKind::LeftInvertive, LawKind::Medial] {
        ensure!(m.check_law(law).holds, "{} fails", law.name());
    }
    ensure!(
        m.left_identities() == vec![3],
        "left identities {:?}",
        m.left_identities()
    );
    for a in m.elements() {
        let w = m
            .intra_regular_witness(a)
            .unwrap()
            .ok_or(format!("element {} has no witness", a + 1))?;
        ensure!(
            m.mul(m.mul(w.x, m.mul(a, a)), w.y) == a,
            "witness for {} does not re-verify",
            a + 1
        );
    }
    let all = m.intra_regular_witnesses(2).unwrap();
    ensure!(all.iter().any(|w| (w.x, w.y) == (4, 4)), "(5,5) missing for element 3");
    Ok("left invertive, medial, left identity 4, intra-regular".into())
}

fn c2() -> Outcome {
    let m = fixtures::g2();
    ensure!(m.check_law(LawKind::LeftInvertive).holds, "not left invertive");
    ensure!(
        m.left_identities() == vec![3],
        "left identities {:?}",
        m.left_identities()
    );
    let sq = m.mul(2, 2);
    let hits = (0..5)
        .flat_map(|x| (0..5).map(move |y| (x, y)))
        .filter(|&(x, y)| m.mul(m.mul(x, sq), y) == 2)
        .count();
    ensure!(hits == 0, "{hits} witnesses for element 3");
    ensure!(m.intra_regular_witness(2).unwrap().is_none(), "library found a witness");
    Ok("element 3 has none of 25 candidate witnesses".into())
}

fn random_strict(rng: &mut ChaCha8Rng, n: usize) -> Ifs {
    let (mut mu, mut gamma) = (Vec::new(), Vec::new());
    for _ in 0..n {
        let p = rng.gen_range(0..=10u64);
        let q = rng.gen_range(0..=10 - p);
        mu.push(Grade::new(p, 10).unwrap());
        gamma.push(Grade::new(q, 10).unwrap());
    }
    Ifs::new(mu, gamma, Strictness::Strict).unwrap()
}

fn oracle(m: &FiniteMagma, a: &Ifs, b: &Ifs) -> (Vec<Grade>, Vec<Grade>) {
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

fn c3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut pairs = 0;
    for m in [fixtures::g1(), fixtures::g2()] {
        for _ in 0..200 {
            let (a, b) = (random_strict(&mut rng, 5), random_strict(&mut rng, 5));
            let c = compose(&m, &a, &b).unwrap();
            let (mu, gamma) = oracle(&m, &a, &b);
            ensure!(c.mus() == mu && c.gammas() == gamma, "mismatch for {a:?} o {b:?}");
            let mut allowed: BTreeSet<Grade> = a.grade_values().into_iter().chain(b.grade_values()).collect();
            allowed.extend([Grade::ZERO, Grade::ONE]);
            ensure!(
                c.grade_values().iter().all(|g| allowed.contains(g)),
                "new grade in {c:?}"
            );
            pairs += 1;
        }
    }
    Ok(format!("{pairs} seeded pairs match the oracle"))
}

fn c4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let meet = |a: &Ifs, b: &Ifs| a.lattice_op(b, LatticeOpKind::Intersection).unwrap();
    let join = |a: &Ifs, b: &Ifs| a.lattice_op(b, LatticeOpKind::Union).unwrap();
    for _ in 0..300 {
        let s: Vec<Ifs> = (0..3).map(|_| random_strict(&mut rng, 5)).collect();
        let (a, b, c) = (&s[0], &s[1], &s[2]);
        ensure!(a.leq(a).unwrap(), "reflexivity");
        ensure!(!(a.leq(b).unwrap() && b.leq(a).unwrap()) || a == b, "antisymmetry");
        ensure!(
            !(a.leq(b).unwrap() && b.leq(c).unwrap()) || a.leq(c).unwrap(),
            "transitivity"
        );
        let (m, j) = (meet(a, b), join(a, b));
        ensure!(m.leq(a).unwrap() && m.leq(b).unwrap() && a.leq(&j).unwrap(), "bounds");
        ensure!(m == meet(b, a) && j == join(b, a), "commutativity");
        ensure!(
            meet(&m, c) == meet(a, &meet(b, c)) && join(&j, c) == join(a, &join(b, c)),
            "associativity"
        );
        ensure!(&meet(a, a) == a && &join(a, a) == a, "idempotence");
        ensure!(&meet(a, &j) == a && &join(a, &m) == a, "absorption");
    }
    let alphas: Vec<Grade> = ["1/4", "1/2", "1"].iter().map(|s| s.parse().unwrap()).collect();
    for x in CrispSubset::all_nonempty(5).chain([CrispSubset::empty(5)]) {
        let chi = Ifs::characteristic(&x);
        for &alpha in &alphas {
            ensure!(chi.level_cut(alpha).unwrap() == x, "cut of chi differs at {alpha}");
        }
    }
    Ok("300 triples, 32 characteristic sets".into())
}

fn c5() -> Outcome {
    let mut cases = 0;
    for m in [fixtures::g1(), fixtures::g2()] {
        for x in CrispSubset::all_nonempty(5) {
            for kind in [
                IdealKind::Subgroupoid,
                IdealKind::Left,
                IdealKind::Right,
                IdealKind::TwoSided,
            ] {
                let v = crisp_fuzzy_bridge(&m, &x, kind).unwrap();
                ensure!(
                    v.agree,
                    "{} disagrees on {:?}",
                    kind.name(),
                    x.iter().collect::<Vec<_>>()
                );
                cases += 1;
            }
        }
    }
    ensure!(cases == 2 * 31 * 4, "{cases} cases");
    Ok(format!("{cases} cases agree"))
}

fn c6() -> Outcome {
    let g1 = fixtures::g1();
    let chain = GradeChain::new(2).unwrap();
    let budget = SearchBudget::default();
    let run = || audit_all(&g1, chain, &budget).unwrap();
    let first = run();
    ensure!(first.truncated.is_none(), "audit truncated");
    let claims: Vec<ClaimId> = first.reports.iter().map(|r| r.claim).collect();
    ensure!(claims == ClaimId::ALL, "reports cover {} claims", claims.len());
    let refuted: Vec<&str> = first
        .reports
        .iter()
        .filter(|r| r.is_refuted())
        .map(|r| r.claim.code())
        .collect();
    for r in first.reports.iter().filter(|r| r.is_refuted()) {
        ensure!(witness_rechecks(r), "{} witness does not re-verify", r.claim.code());
    }
    let a = serde_json::to_string(&first.to_json(1)).unwrap();
    let b = serde_json::to_string(&run().to_json(1)).unwrap();
    ensure!(a == b, "output differs between runs");
    Ok(format!(
        "{} verdicts, refuted {:?}, {} bytes identical",
        claims.len(),
        refuted,
        a.len()
    ))
}

#[allow(clippy::needless_range_loop)]
fn c7() -> Outcome {
    let g1 = fixtures::g1();
    let chain = GradeChain::new(2).unwrap();
    let r = verify_claim(
        ClaimId::GrandEquiv,
        &g1,
        &ClaimInputs::default(),
        Some(chain),
        &SearchBudget::default(),
    )
    .unwrap();
    let Some(Details::Matrix(mx)) = &r.details else {
        return Err("no agreement matrix".into());
    };
    ensure!(
        mx.separators.len() == 8 && mx.separators.iter().all(|row| row.len() == 8),
        "matrix shape"
    );
    let kinds = [
        IdealKind::Left,
        IdealKind::Right,
        IdealKind::TwoSided,
        IdealKind::Bi,
        IdealKind::GeneralizedBi,
        IdealKind::Interior,
        IdealKind::Quasi,
    ];
    let has = |a: &Ifs, p: usize| -> bool {
        if p < 7 {
            is_if_ideal(&g1, a, kinds[p]).unwrap().holds
        } else {
            let d = Ifs::delta(5);
            &compose(&g1, a, &d).unwrap() == a && &compose(&g1, &d, a).unwrap() == a
        }
    };
    let mut separating = 0;
    for p in 0..8 {
        for q in 0..8 {
            if let Some(w) = &mx.separators[p][q] {
                ensure!(
                    has(w, p) != has(w, q),
                    "separator for {} / {} fails",
                    GRAND_LABELS[p],
                    GRAND_LABELS[q]
                );
                separating += 1;
            }
        }
    }
    if r.is_refuted() {
        ensure!(witness_rechecks(&r), "claim witness does not re-verify");
    }
    Ok(format!(
        "8x8 matrix, class sizes {:?}, {separating} separating cells, verdict {}",
        mx.class_sizes,
        r.verdict.name()
    ))
}

fn c8() -> Outcome {
    match fixtures::example_ifs(Strictness::Strict) {
        Err(Error::ConstraintViolation { element: 0, sum }) if sum == "13/10" => {}
        other => return Err(format!("strict load gave {other:?}")),
    }
    let lenient = fixtures::example_ifs(Strictness::Lenient).map_err(|e| e.to_string())?;
    let two_sided = is_if_ideal(&fixtures::g1(), &lenient, IdealKind::TwoSided).unwrap();
    let adj = adjudicate(1, &SearchBudget::default()).map_err(|e| e.to_string())?;
    let check = adj
        .checks
        .iter()
        .find(|c| c.id == "example_set.two_sided")
        .ok_or("two-sided check missing")?;
    ensure!(check.computed == two_sided.holds, "two-sided verdict mismatch");
    let text = adj.render_text();
    let disc = adj.discrepancies();
    ensure!(text.contains("discrepancies:"), "no discrepancy section");
    for c in &disc {
        ensure!(
            text.contains(&format!("  {}: ", c.id)),
            "{} missing from the report",
            c.id
        );
    }
    let prod = adj
        .reports
        .iter()
        .find(|r| r.claim == ClaimId::ProdEqMeet)
        .ok_or("product report missing")?;
    let Some(Details::Comparison(cmp)) = &prod.details else {
        return Err("product report lacks the element-wise comparison".into());
    };
    ensure!(
        cmp.left.carrier() == 5 && cmp.right.carrier() == 5,
        "comparison carrier"
    );
    let json = serde_json::to_string(&adj.to_json()).unwrap();
    ensure!(json.contains("\"discrepancies\""), "no discrepancies key in JSON");
    Ok(format!(
        "{} assertions, {} discrepancies, L_PROD_EQ_MEET {}",
        adj.checks.len(),
        disc.len(),
        prod.verdict.name()
    ))
}

fn unpruned(n: usize) -> u64 {
    let cells = n * n;
    let total = n.pow(cells as u32);
    let mut count = 0;
    let mut t = vec![0usize; cells];
    for code in 0..total {
        let mut c = code;
        for v in t.iter_mut() {
            *v = c % n;
            c /= n;
        }
        let mul = |a: usize, b: usize| t[a * n + b];
        let ok = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| mul(mul(a, b), c) == mul(mul(c, b), a))));
        count += ok as u64;
    }
    count
}

fn c9() -> Outcome {
    let mut found = Vec::new();
    for (n, tables) in [(2usize, 16u64), (3, 19683)] {
        ensure!((n as u64).pow((n * n) as u32) == tables, "table count");
        let expected = unpruned(n);
        let first: Vec<FiniteMagma> = enumerate_ag_groupoids(n, false, 4).unwrap().collect();
        let second: Vec<FiniteMagma> = enumerate_ag_groupoids(n, false, 4).unwrap().collect();
        ensure!(
            first.len() as u64 == expected,
            "order {n}: census {} vs filter {expected}",
            first.len()
        );
        ensure!(first == second, "order {n}: runs differ");
        found.push(format!("order {n}: {expected} of {tables}"));
    }
    Ok(found.join(", "))
}

fn c10() -> Outcome {
    let mut checked = 0;
    for n in 1..=3 {
        for m in enumerate_ag_groupoids(n, true, 4).unwrap() {
            let d = Ifs::delta(n);
            ensure!(compose(&m, &d, &d).unwrap() == d, "delta o delta differs on {m:?}");
            checked += 1;
        }
    }
    let budget = SearchBudget {
        max_order: 3,
        require_left_identity: true,
        ..SearchBudget::default()
    };
    let s = search_counterexample(ClaimId::DeltaIdem, Direction::Forward, &budget).unwrap();
    ensure!(s.found.is_none(), "search found a counterexample");
    ensure!(
        s.orders_completed == vec![1, 2, 3],
        "orders completed {:?}",
        s.orders_completed
    );
    Ok(format!(
        "{checked} tables, search absent over the {} intra-regular ones",
        s.magmas_examined
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("first table fidelity", Duration::from_secs(1), c1),
        ("second table fidelity", Duration::from_secs(1), c2),
        ("composition oracle", Duration::from_secs(5), c3),
        ("lattice and order laws", Duration::from_secs(5), c4),
        ("crisp/fuzzy bridge", Duration::from_secs(5), c5),
        ("claim audit", Duration::from_secs(120), c6),
        ("grand equivalence matrix", Duration::from_secs(60), c7),
        ("example adjudication", Duration::from_secs(10), c8),
        ("census determinism", Duration::from_secs(30), c9),
        ("delta laws", Duration::from_secs(60), c10),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            o => o,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2} {name} ({elapsed:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2} {name} ({elapsed:.2?}): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
