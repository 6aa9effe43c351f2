use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grade::{Grade, GradeChain};
use crate::ideal::{crisp_fuzzy_bridge, IdealFlags};
use crate::ifs::{compose_unchecked, Ifs};
use crate::magma::{FiniteMagma, LawKind};
use crate::subset::{is_crisp_ideal, CrispSubset, IdealKind};

use super::claims::{ClaimId, Direction};
use super::profile::{Pool, Profile};
use super::report::{
    AgreementMatrix, ClaimReport, Comparison, Details, DuoSides, FailedPrecondition, Precondition, Scope, Verdict,
    Witness,
};
use super::SearchBudget;

/// Claim-specific explicit inputs. Empty `sets` means "quantify over the chain".
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClaimInputs {
    pub sets: Vec<Ifs>,
    pub subsets: Vec<CrispSubset>,
    pub alpha: Option<Grade>,
}

impl ClaimInputs {
    pub fn sets(sets: Vec<Ifs>) -> Self {
        ClaimInputs {
            sets,
            ..ClaimInputs::default()
        }
    }
}

/// Largest carrier for which duo audits enumerate every subset.
pub const DUO_MAX_ORDER: usize = 12;

pub(crate) const ROMAN: [&str; 8] = ["(i)", "(ii)", "(iii)", "(iv)", "(v)", "(vi)", "(vii)", "(viii)"];

pub fn verify_claim(
    claim: ClaimId,
    magma: &FiniteMagma,
    inputs: &ClaimInputs,
    chain: Option<GradeChain>,
    budget: &SearchBudget,
) -> Result<ClaimReport> {
    verify_claim_directed(claim, Direction::Forward, magma, inputs, chain, budget)
}

pub fn verify_claim_directed(
    claim: ClaimId,
    direction: Direction,
    magma: &FiniteMagma,
    inputs: &ClaimInputs,
    chain: Option<GradeChain>,
    budget: &SearchBudget,
) -> Result<ClaimReport> {
    budget.validate()?;
    if direction == Direction::Converse && !claim.has_converse() {
        return Err(Error::Unsupported(format!("{claim} has no converse direction")));
    }
    check_inputs(claim, magma, inputs, chain)?;
    let pool = if uses_pool(claim) {
        Some(if inputs.sets.is_empty() {
            let chain = chain.expect("checked by check_inputs");
            Pool::chain(magma, chain, budget.max_instances)?
        } else {
            Pool::explicit(magma, inputs.sets.clone())
        })
    } else {
        None
    };
    Ok(evaluate(claim, direction, magma, inputs, pool.as_ref(), budget))
}

pub(crate) fn uses_pool(claim: ClaimId) -> bool {
    use ClaimId::*;
    !matches!(
        claim,
        LawMedialFromLi | LawParamedialWithE | Law4WithE | DeltaIdem | CharBridge
    )
}

fn arity(claim: ClaimId, expected: &'static str, found: String) -> Error {
    Error::Arity {
        claim: claim.code(),
        expected,
        found,
    }
}

fn check_inputs(claim: ClaimId, magma: &FiniteMagma, inputs: &ClaimInputs, chain: Option<GradeChain>) -> Result<()> {
    use ClaimId::*;
    let n = magma.order();
    for s in &inputs.sets {
        if s.carrier() != n {
            return Err(Error::CarrierMismatch {
                left: n,
                right: s.carrier(),
            });
        }
    }
    for x in &inputs.subsets {
        x.check_carrier(n)?;
        if x.is_empty() {
            return Err(Error::EmptySubset);
        }
    }
    let sets = inputs.sets.len();
    if !inputs.subsets.is_empty() && claim != CharBridge {
        return Err(arity(claim, "no subsets", format!("{} subsets", inputs.subsets.len())));
    }
    if let Some(a) = inputs.alpha {
        if !matches!(claim, LevelCutFwd | LevelCutBiFwd) {
            return Err(arity(claim, "no alpha", format!("alpha {a}")));
        }
        if a.is_zero() {
            return Err(Error::AlphaOutOfRange(a.to_string()));
        }
    }
    match claim {
        LawMedialFromLi | LawParamedialWithE | Law4WithE | DeltaIdem | CharBridge => {
            if sets != 0 {
                return Err(arity(claim, "no IFS inputs", format!("{sets} sets")));
            }
        }
        DuoEquiv => {
            if sets != 0 {
                return Err(arity(claim, "no IFS inputs", format!("{sets} sets")));
            }
            if chain.is_none() {
                return Err(arity(claim, "a grade chain", "none".into()));
            }
            if n > DUO_MAX_ORDER {
                return Err(Error::OrderTooLarge {
                    n,
                    bound: DUO_MAX_ORDER,
                });
            }
        }
        ProdEqMeet | ProdEqMeetNonconverse => {
            if sets == 0 && chain.is_none() {
                return Err(arity(claim, "two IFS or a grade chain", "nothing".into()));
            }
            if sets != 0 && sets != 2 {
                return Err(arity(claim, "two IFS", format!("{sets} sets")));
            }
        }
        _ => {
            if sets == 0 && chain.is_none() {
                return Err(arity(claim, "at least one IFS or a grade chain", "nothing".into()));
            }
        }
    }
    Ok(())
}

/// The first structural hypothesis of `claim` that the magma fails.
pub(crate) fn structural_precondition(claim: ClaimId, magma: &FiniteMagma) -> Option<FailedPrecondition> {
    let fail = |precondition, elements| {
        Some(FailedPrecondition {
            precondition,
            elements,
            inputs: Vec::new(),
        })
    };
    let li = magma.check_law(LawKind::LeftInvertive);
    if !li.holds {
        return fail(Precondition::LeftInvertive, li.witness.unwrap_or_default());
    }
    let req = claim.requirements();
    if req.left_identity && magma.left_identity().is_none() {
        return fail(Precondition::LeftIdentity, Vec::new());
    }
    if req.intra_regular || req.not_intra_regular {
        let ir = magma.intra_regularity();
        if req.intra_regular && !ir.holds() {
            return fail(Precondition::IntraRegular, ir.failing_elements());
        }
        if req.not_intra_regular && ir.holds() {
            return fail(Precondition::NotIntraRegular, Vec::new());
        }
    }
    None
}

/// Result of scanning one claim's instances.
#[derive(Default)]
struct Outcome {
    failure: Option<Witness>,
    instances: u64,
    hypothesis: u64,
    /// True when every part is an implication, so zero hypothesis
    /// instances make the claim vacuous.
    implication_only: bool,
    scope: Option<Scope>,
    details: Option<Details>,
    failed_inputs: Option<FailedPrecondition>,
    notes: Vec<String>,
    seed: Option<u64>,
}

pub(crate) fn evaluate(
    claim: ClaimId,
    direction: Direction,
    magma: &FiniteMagma,
    inputs: &ClaimInputs,
    pool: Option<&Pool>,
    budget: &SearchBudget,
) -> ClaimReport {
    let mut report = ClaimReport {
        claim,
        direction,
        magma: magma.clone(),
        inputs: inputs.sets.clone(),
        subsets: inputs.subsets.clone(),
        alpha: inputs.alpha,
        chain: pool.and_then(|p| p.chain).map(|c| c.k()),
        verdict: Verdict::Confirmed,
        scope: pool.map_or(Scope::SingleInstance, |p| p.scope),
        witness: None,
        failed_precondition: None,
        instances_checked: 0,
        hypothesis_instances: 0,
        seed: None,
        details: None,
        notes: Vec::new(),
    };
    let explicit_pair = matches!(claim, ClaimId::ProdEqMeet | ClaimId::ProdEqMeetNonconverse) && inputs.sets.len() == 2;
    if explicit_pair {
        report.details = Some(Details::Comparison(product_vs_meet(
            magma,
            &inputs.sets[0],
            &inputs.sets[1],
        )));
    }
    if let Some(p) = structural_precondition(claim, magma) {
        report.verdict = Verdict::NotApplicable;
        report.failed_precondition = Some(p);
        return report;
    }
    let outcome = run(claim, direction, magma, inputs, pool, budget);
    report.instances_checked = outcome.instances;
    report.hypothesis_instances = outcome.hypothesis;
    report.notes = outcome.notes;
    report.seed = outcome.seed;
    if let Some(s) = outcome.scope {
        report.scope = s;
    }
    if outcome.details.is_some() {
        report.details = outcome.details;
    }
    if let Some(p) = outcome.failed_inputs {
        report.verdict = Verdict::NotApplicable;
        report.failed_precondition = Some(p);
    } else if let Some(w) = outcome.failure {
        report.verdict = Verdict::Refuted;
        report.witness = Some(w);
    } else if outcome.implication_only && outcome.hypothesis == 0 {
        report.verdict = Verdict::NotApplicable;
        report.failed_precondition = Some(FailedPrecondition {
            precondition: Precondition::Hypothesis,
            elements: Vec::new(),
            inputs: Vec::new(),
        });
    }
    report
}

fn run(
    claim: ClaimId,
    direction: Direction,
    magma: &FiniteMagma,
    inputs: &ClaimInputs,
    pool: Option<&Pool>,
    budget: &SearchBudget,
) -> Outcome {
    use ClaimId::*;
    let pool = || pool.expect("claim uses a pool");
    match claim {
        LawMedialFromLi => law(magma, LawKind::Medial),
        LawParamedialWithE => law(magma, LawKind::Paramedial),
        Law4WithE => law(magma, LawKind::Law4),
        LiftedLaws => lifted_laws(magma, pool(), budget),
        LevelCutFwd | LevelCutBiFwd => level_cut(claim, direction, magma, pool(), inputs.alpha),
        CharBridge => char_bridge(magma, &inputs.subsets),
        DeltaIdem => delta_idem(magma),
        DuoEquiv => duo(magma, pool()).0,
        GrandEquiv => grand(pool()),
        ProdEqMeet | ProdEqMeetNonconverse => prod_eq_meet(claim, magma, pool()),
        Semilattice => semilattice(magma, pool()),
        _ => per_set(&per_set_parts(claim), pool()),
    }
}

fn law(magma: &FiniteMagma, law: LawKind) -> Outcome {
    let n = magma.order() as u64;
    let report = magma.check_law(law);
    Outcome {
        failure: (!report.holds).then(|| Witness::part(law.name()).with_tuple(report.witness.unwrap_or_default())),
        instances: n.pow(law.arity() as u32),
        hypothesis: n.pow(law.arity() as u32),
        ..Outcome::default()
    }
}

struct Part {
    name: &'static str,
    iff: bool,
    /// `(hypothesis, conclusion)` for implications, both sides for iff.
    eval: PartEval,
}

type PartEval = fn(&Ifs, &Profile) -> (bool, bool);

fn iff(name: &'static str, eval: PartEval) -> Part {
    Part { name, iff: true, eval }
}

fn imp(name: &'static str, eval: PartEval) -> Part {
    Part { name, iff: false, eval }
}

fn per_set_parts(claim: ClaimId) -> Vec<Part> {
    use ClaimId::*;
    use IdealKind::*;
    match claim {
        ComposeChar => vec![
            iff("subgroupoid", |a, p| (p.is(Subgroupoid), p.a_a.leq(a).unwrap_or(false))),
            iff("left", |a, p| (p.is(Left), p.delta_a.leq(a).unwrap_or(false))),
            iff("right", |a, p| (p.is(Right), p.a_delta.leq(a).unwrap_or(false))),
        ],
        BiChar => vec![iff("bi", |a, p| (p.is(Bi), p.a_delta_a == *a && p.a_a == *a))],
        InteriorChar => vec![iff("interior", |a, p| (p.is(Interior), p.delta_a_delta == *a))],
        LeftIffRight => vec![iff("left_right", |_, p| (p.is(Left), p.is(Right)))],
        FuzzyDuo => vec![
            imp("left_duo", |_, p| (p.is(Left), p.is(TwoSided))),
            imp("right_duo", |_, p| (p.is(Right), p.is(TwoSided))),
        ],
        Absorb => vec![
            imp("delta_left", |a, p| (true, p.delta_a == *a)),
            imp("delta_right", |a, p| (true, p.a_delta == *a)),
        ],
        AbsorbIdeal => vec![
            imp("left:delta_left", |a, p| (p.is(Left), p.delta_a == *a)),
            imp("left:delta_right", |a, p| (p.is(Left), p.a_delta == *a)),
            imp("right:delta_left", |a, p| (p.is(Right), p.delta_a == *a)),
            imp("right:delta_right", |a, p| (p.is(Right), p.a_delta == *a)),
            imp("two_sided:delta_left", |a, p| (p.is(TwoSided), p.delta_a == *a)),
            imp("two_sided:delta_right", |a, p| (p.is(TwoSided), p.a_delta == *a)),
        ],
        QuasiChar => vec![iff("quasi", |a, p| (p.is(Quasi), p.a_delta.meet(&p.delta_a) == *a))],
        QuasiEqTwoSided => vec![iff("two_sided_quasi", |_, p| (p.is(TwoSided), p.is(Quasi)))],
        InteriorEqTwoSided => vec![iff("two_sided_interior", |_, p| (p.is(TwoSided), p.is(Interior)))],
        Idempotent => vec![imp("idempotent", |a, p| (p.is(TwoSided), p.a_a == *a))],
        other => unreachable!("{other} is not a per-set claim"),
    }
}

fn per_set(parts: &[Part], pool: &Pool) -> Outcome {
    let mut out = Outcome {
        implication_only: parts.iter().all(|p| !p.iff),
        ..Outcome::default()
    };
    for (a, profile) in pool.iter() {
        out.instances += 1;
        let mut hypothesis = false;
        for part in parts {
            let (h, c) = (part.eval)(a, profile);
            let fails = if part.iff { h != c } else { h && !c };
            hypothesis |= part.iff || h;
            if fails {
                out.hypothesis += 1;
                out.failure = Some(Witness::part(part.name).with_sets(vec![a.clone()]));
                return out;
            }
        }
        out.hypothesis += u64::from(hypothesis);
    }
    out
}

pub(crate) fn cut_kinds(claim: ClaimId) -> &'static [IdealKind] {
    match claim {
        ClaimId::LevelCutFwd => &[IdealKind::Right, IdealKind::Left, IdealKind::TwoSided],
        _ => &[IdealKind::Bi, IdealKind::GeneralizedBi],
    }
}

fn level_cut(claim: ClaimId, direction: Direction, magma: &FiniteMagma, pool: &Pool, alpha: Option<Grade>) -> Outcome {
    let mut out = Outcome {
        implication_only: true,
        ..Outcome::default()
    };
    for (a, profile) in pool.iter() {
        let alphas = alpha.map_or_else(|| a.critical_alphas(), |x| vec![x]);
        for &kind in cut_kinds(claim) {
            for &al in &alphas {
                let cut = a.cut_unchecked(al);
                if cut.is_empty() {
                    continue;
                }
                out.instances += 1;
                let fuzzy = profile.is(kind);
                let crisp = || is_crisp_ideal(magma, &cut, kind).expect("non-empty cut").holds;
                let (hypothesis, conclusion) = match direction {
                    Direction::Forward => (fuzzy, !fuzzy || crisp()),
                    Direction::Converse => {
                        let c = crisp();
                        (c, fuzzy)
                    }
                };
                if hypothesis {
                    out.hypothesis += 1;
                    if !conclusion {
                        out.failure = Some(
                            Witness::part(kind.name())
                                .with_sets(vec![a.clone()])
                                .with_alpha(al)
                                .with_subset(cut),
                        );
                        return out;
                    }
                }
            }
        }
    }
    out
}

fn char_bridge(magma: &FiniteMagma, subsets: &[CrispSubset]) -> Outcome {
    let kinds = [
        IdealKind::Subgroupoid,
        IdealKind::Left,
        IdealKind::Right,
        IdealKind::TwoSided,
    ];
    let all: Vec<CrispSubset>;
    let (subsets, scope) = if subsets.is_empty() {
        all = CrispSubset::all_nonempty(magma.order()).collect();
        (all.as_slice(), Scope::ExhaustiveOverSubsets)
    } else {
        (subsets, Scope::SingleInstance)
    };
    let mut out = Outcome {
        scope: Some(scope),
        ..Outcome::default()
    };
    for x in subsets {
        out.instances += 1;
        out.hypothesis += 1;
        for kind in kinds {
            let v = crisp_fuzzy_bridge(magma, x, kind).expect("validated subset");
            if !v.agree {
                out.failure = Some(Witness::part(kind.name()).with_subset(x.clone()));
                return out;
            }
        }
    }
    out
}

fn delta_idem(magma: &FiniteMagma) -> Outcome {
    let d = Ifs::delta(magma.order());
    let dd = compose_unchecked(magma, &d, &d);
    let diff = dd.first_difference(&d);
    Outcome {
        failure: diff.map(|place| Witness::part("delta").at(Some(place))),
        instances: 1,
        hypothesis: 1,
        details: Some(Details::Comparison(Comparison {
            left_label: "delta o delta".into(),
            right_label: "delta".into(),
            left: dd,
            right: d,
        })),
        ..Outcome::default()
    }
}

fn lifted_sides(magma: &FiniteMagma, law: LawKind, s: &[&Ifs]) -> (Ifs, Ifs) {
    let c = |x: &Ifs, y: &Ifs| compose_unchecked(magma, x, y);
    match law {
        LawKind::LeftInvertive => (c(&c(s[0], s[1]), s[2]), c(&c(s[2], s[1]), s[0])),
        LawKind::Medial => (c(&c(s[0], s[1]), &c(s[2], s[3])), c(&c(s[0], s[2]), &c(s[1], s[3]))),
        LawKind::Paramedial => (c(&c(s[0], s[1]), &c(s[2], s[3])), c(&c(s[3], s[2]), &c(s[1], s[0]))),
        LawKind::Law4 => (c(s[0], &c(s[1], s[2])), c(s[1], &c(s[0], s[2]))),
        LawKind::HasLeftIdentity => unreachable!("not an equation"),
    }
}

pub(crate) const LIFTED: [LawKind; 4] = [
    LawKind::LeftInvertive,
    LawKind::Medial,
    LawKind::Paramedial,
    LawKind::Law4,
];

fn lifted_laws(magma: &FiniteMagma, pool: &Pool, budget: &SearchBudget) -> Outcome {
    let n = pool.len();
    let mut out = Outcome::default();
    let mut sampled = false;
    let seed = budget.seed.unwrap_or(0);
    let decode = |mut idx: usize, r: usize| -> Vec<usize> {
        let mut v = vec![0; r];
        for slot in v.iter_mut().rev() {
            *slot = idx % n;
            idx /= n;
        }
        v
    };
    for (li, law) in LIFTED.into_iter().enumerate() {
        let r = law.arity();
        let total = (n as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
        let fails = |idx: &[usize]| {
            let sets: Vec<&Ifs> = idx.iter().map(|&i| &pool.sets[i]).collect();
            let (l, rhs) = lifted_sides(magma, law, &sets);
            l != rhs
        };
        let found: Option<Vec<usize>> = if total <= budget.max_instances as u128 {
            out.instances += total as u64;
            (0..total as usize)
                .into_par_iter()
                .map(|i| decode(i, r))
                .find_first(|idx| fails(idx))
        } else {
            sampled = true;
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(li as u64));
            let tuples: Vec<Vec<usize>> = (0..budget.samples)
                .map(|_| (0..r).map(|_| rng.gen_range(0..n)).collect())
                .collect();
            out.instances += budget.samples;
            tuples.into_par_iter().find_first(|idx| fails(idx))
        };
        if let Some(idx) = found {
            let sets = idx.iter().map(|&i| pool.sets[i].clone()).collect();
            let (l, rhs) = lifted_sides(magma, law, &idx.iter().map(|&i| &pool.sets[i]).collect::<Vec<_>>());
            out.failure = Some(Witness::part(law.name()).with_sets(sets).at(l.first_difference(&rhs)));
            break;
        }
    }
    out.hypothesis = out.instances;
    if sampled {
        out.scope = Some(Scope::Sampled);
        out.seed = Some(seed);
        out.notes.push(format!(
            "tuple space exceeds {} instances; {} random tuples per law",
            budget.max_instances, budget.samples
        ));
    }
    out
}

fn grand(pool: &Pool) -> Outcome {
    let mut separators: Vec<Vec<Option<Ifs>>> = vec![vec![None; 8]; 8];
    let mut class_sizes = [0u64; 8];
    for (a, profile) in pool.iter() {
        let g = profile.grand(a);
        for p in 0..8 {
            class_sizes[p] += u64::from(g[p]);
            for q in 0..8 {
                if g[p] != g[q] && separators[p][q].is_none() {
                    separators[p][q] = Some(a.clone());
                }
            }
        }
    }
    let mut failure = None;
    'outer: for p in 0..8 {
        for q in p + 1..8 {
            if let Some(s) = &separators[p][q] {
                failure = Some(Witness::part(format!("{}<->{}", ROMAN[p], ROMAN[q])).with_sets(vec![s.clone()]));
                break 'outer;
            }
        }
    }
    Outcome {
        failure,
        instances: pool.len() as u64,
        hypothesis: pool.len() as u64,
        details: Some(Details::Matrix(AgreementMatrix {
            separators,
            class_sizes,
        })),
        ..Outcome::default()
    }
}

fn product_vs_meet(magma: &FiniteMagma, a: &Ifs, b: &Ifs) -> Comparison {
    Comparison {
        left_label: "A o B".into(),
        right_label: "A & B".into(),
        left: compose_unchecked(magma, a, b),
        right: a.meet(b),
    }
}

fn two_sided_members(pool: &Pool) -> Vec<usize> {
    (0..pool.len())
        .filter(|&i| pool.profiles[i].is(IdealKind::TwoSided))
        .collect()
}

fn prod_eq_meet(claim: ClaimId, magma: &FiniteMagma, pool: &Pool) -> Outcome {
    let mut out = Outcome {
        implication_only: true,
        ..Outcome::default()
    };
    if pool.scope == Scope::SingleInstance {
        let not_ideal: Vec<usize> = (0..2).filter(|&i| !pool.profiles[i].is(IdealKind::TwoSided)).collect();
        out.instances = 1;
        if !not_ideal.is_empty() {
            if claim == ClaimId::ProdEqMeet {
                out.failed_inputs = Some(FailedPrecondition {
                    precondition: Precondition::InputsTwoSided,
                    elements: Vec::new(),
                    inputs: not_ideal,
                });
            } else {
                out.hypothesis = 1;
                out.failure = Some(Witness::part("inputs_two_sided").with_sets(pool.sets.clone()));
            }
            return out;
        }
    }
    let members = two_sided_members(pool);
    let pairs: Vec<(usize, usize)> = members
        .iter()
        .flat_map(|&i| members.iter().map(move |&j| (i, j)))
        .collect();
    out.instances = pairs.len() as u64;
    out.hypothesis = pairs.len() as u64;
    let fails = |&(i, j): &(usize, usize)| {
        let c = product_vs_meet(magma, &pool.sets[i], &pool.sets[j]);
        c.left.first_difference(&c.right)
    };
    if let Some((i, j)) = pairs.par_iter().copied().find_first(|p| fails(p).is_some()) {
        out.failure = Some(
            Witness::part("product_eq_meet")
                .with_sets(vec![pool.sets[i].clone(), pool.sets[j].clone()])
                .at(fails(&(i, j))),
        );
    }
    out
}

const NO_PRODUCT: u32 = u32::MAX;

#[allow(clippy::needless_range_loop)]
fn semilattice(magma: &FiniteMagma, pool: &Pool) -> Outcome {
    let members = two_sided_members(pool);
    let m = members.len();
    let mut out = Outcome {
        implication_only: true,
        instances: pool.len() as u64,
        hypothesis: m as u64,
        details: Some(Details::Semilattice { members: m as u64 }),
        ..Outcome::default()
    };
    if pool.scope == Scope::SingleInstance && m < pool.len() {
        out.notes
            .push("inputs that are not IF two-sided ideals are outside the claim and were skipped".into());
    }
    let set = |i: usize| &pool.sets[members[i]];
    let fail =
        |part: &str, idx: &[usize]| Some(Witness::part(part).with_sets(idx.iter().map(|&i| set(i).clone()).collect()));
    for i in 0..m {
        let (a, p) = (set(i), &pool.profiles[members[i]]);
        if !p.absorbs(a) {
            out.failure = fail("identity", &[i]);
            return out;
        }
    }
    for i in 0..m {
        if pool.profiles[members[i]].a_a != *set(i) {
            out.failure = fail("idempotency", &[i]);
            return out;
        }
    }
    let index: HashMap<&Ifs, u32> = (0..m).map(|i| (set(i), i as u32)).collect();
    let table: Vec<Vec<u32>> = (0..m)
        .into_par_iter()
        .map(|i| {
            (0..m)
                .map(|j| {
                    let p = compose_unchecked(magma, set(i), set(j));
                    index.get(&p).copied().unwrap_or(NO_PRODUCT)
                })
                .collect()
        })
        .collect();
    // a product outside the member list is only acceptable for explicit inputs
    let mut direct = false;
    for i in 0..m {
        for j in 0..m {
            if table[i][j] == NO_PRODUCT {
                let p = compose_unchecked(magma, set(i), set(j));
                if !(p.is_strict_valid() && IdealFlags::of(magma, &p).get(IdealKind::TwoSided)) {
                    out.failure = fail("closure", &[i, j]);
                    return out;
                }
                direct = true;
            }
        }
    }
    let product = |i: usize, j: usize| compose_unchecked(magma, set(i), set(j));
    for i in 0..m {
        for j in i + 1..m {
            let differ = if direct {
                product(i, j) != product(j, i)
            } else {
                table[i][j] != table[j][i]
            };
            if differ {
                out.failure = fail("commutativity", &[i, j]);
                return out;
            }
        }
    }
    let triples = (0..m * m * m)
        .into_par_iter()
        .map(|t| (t / (m * m), (t / m) % m, t % m));
    let bad = if direct {
        triples.find_first(|&(i, j, k)| {
            compose_unchecked(magma, &product(i, j), set(k)) != compose_unchecked(magma, set(i), &product(j, k))
        })
    } else {
        triples.find_first(|&(i, j, k)| table[table[i][j] as usize][k] != table[i][table[j][k] as usize])
    };
    if let Some((i, j, k)) = bad {
        out.failure = fail("associativity", &[i, j, k]);
    }
    out
}

/// Both sides of the duo biconditional, plus the outcome.
fn duo(magma: &FiniteMagma, pool: &Pool) -> (Outcome, DuoSides) {
    let n = magma.order();
    let crisp_witness = |kind: IdealKind| {
        CrispSubset::all_nonempty(n).find(|x| {
            is_crisp_ideal(magma, x, kind).expect("non-empty").holds
                && !is_crisp_ideal(magma, x, IdealKind::TwoSided).expect("non-empty").holds
        })
    };
    let fuzzy_witness = |kind: IdealKind| {
        pool.iter()
            .find(|(_, p)| p.is(kind) && !p.is(IdealKind::TwoSided))
            .map(|(a, _)| a.clone())
    };
    let cl = crisp_witness(IdealKind::Left);
    let cr = crisp_witness(IdealKind::Right);
    let fl = fuzzy_witness(IdealKind::Left);
    let fr = fuzzy_witness(IdealKind::Right);
    let sides = DuoSides {
        crisp_left: cl.is_none(),
        crisp_right: cr.is_none(),
        fuzzy_left: fl.is_none(),
        fuzzy_right: fr.is_none(),
        crisp_left_witness: cl.clone(),
        crisp_right_witness: cr.clone(),
        fuzzy_left_witness: fl.clone(),
        fuzzy_right_witness: fr.clone(),
    };
    let mut out = Outcome {
        instances: pool.len() as u64 + (1u64 << n) - 1,
        details: Some(Details::Duo(sides.clone())),
        notes: vec![format!(
            "the fuzzy duo side only ranges over IFSs with grades in the chain (k={})",
            pool.chain.map_or(0, |c| c.k())
        )],
        ..Outcome::default()
    };
    out.hypothesis = out.instances;
    for (part, crisp, fuzzy) in [("left", cl, fl), ("right", cr, fr)] {
        let w = match (crisp, fuzzy) {
            (None, Some(a)) => Some(Witness::part(part).with_sets(vec![a])),
            (Some(x), None) => Some(Witness::part(part).with_subset(x)),
            _ => None,
        };
        if w.is_some() {
            out.failure = w;
            break;
        }
    }
    (out, sides)
}

/// Fills a report for [`duo`] without checking the structural preconditions.
pub(crate) fn duo_report(magma: &FiniteMagma, pool: &Pool) -> ClaimReport {
    let (outcome, _) = duo(magma, pool);
    let mut notes = outcome.notes;
    if let Some(p) = structural_precondition(ClaimId::FuzzyDuo, magma) {
        notes.push(format!(
            "precondition '{}' of {} fails; the biconditional is evaluated as stated",
            p.precondition.name(),
            ClaimId::FuzzyDuo
        ));
    }
    ClaimReport {
        claim: ClaimId::DuoEquiv,
        direction: Direction::Forward,
        magma: magma.clone(),
        inputs: Vec::new(),
        subsets: Vec::new(),
        alpha: None,
        chain: pool.chain.map(|c| c.k()),
        verdict: if outcome.failure.is_some() {
            Verdict::Refuted
        } else {
            Verdict::Confirmed
        },
        scope: pool.scope,
        witness: outcome.failure,
        failed_precondition: None,
        instances_checked: outcome.instances,
        hypothesis_instances: outcome.hypothesis,
        seed: None,
        details: outcome.details,
        notes,
    }
}
