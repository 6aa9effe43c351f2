//! Re-evaluation of refutation witnesses from the definitions alone.
//!
//! Nothing here touches the cached profiles or tables used by the claim
//! evaluators: every predicate goes through [`is_if_ideal`],
//! [`is_crisp_ideal`], [`compose`] and the raw Cayley table.

use crate::grade::GradeChain;
use crate::ideal::is_if_ideal;
use crate::ifs::{compose, enumerate_ifs, Ifs, LatticeOpKind};
use crate::magma::{FiniteMagma, LawKind};
use crate::subset::{is_crisp_ideal, CrispSubset, IdealKind};

use super::claims::{ClaimId, Direction};
use super::eval::{cut_kinds, LIFTED, ROMAN};
use super::report::{ClaimReport, Verdict, Witness};

struct Ctx<'a> {
    m: &'a FiniteMagma,
    delta: Ifs,
}

impl Ctx<'_> {
    fn ideal(&self, a: &Ifs, kind: IdealKind) -> bool {
        is_if_ideal(self.m, a, kind).is_ok_and(|v| v.holds)
    }

    fn crisp(&self, x: &CrispSubset, kind: IdealKind) -> bool {
        is_crisp_ideal(self.m, x, kind).is_ok_and(|v| v.holds)
    }

    fn comp(&self, a: &Ifs, b: &Ifs) -> Ifs {
        compose(self.m, a, b).expect("same carrier")
    }

    fn d(&self) -> &Ifs {
        &self.delta
    }

    fn grand(&self, a: &Ifs) -> [bool; 8] {
        use IdealKind::*;
        let absorbs = self.comp(a, self.d()) == *a && self.comp(self.d(), a) == *a;
        [
            self.ideal(a, Left),
            self.ideal(a, Right),
            self.ideal(a, TwoSided),
            self.ideal(a, Bi),
            self.ideal(a, GeneralizedBi),
            self.ideal(a, Interior),
            self.ideal(a, Quasi),
            absorbs,
        ]
    }

    fn crisp_duo(&self, kind: IdealKind) -> bool {
        CrispSubset::all_nonempty(self.m.order()).all(|x| !self.crisp(&x, kind) || self.crisp(&x, IdealKind::TwoSided))
    }

    fn fuzzy_duo(&self, kind: IdealKind, chain: GradeChain) -> bool {
        match enumerate_ifs(self.m.order(), chain, u64::MAX) {
            Ok(all) => all
                .into_iter()
                .all(|a| !self.ideal(&a, kind) || self.ideal(&a, IdealKind::TwoSided)),
            Err(_) => false,
        }
    }
}

/// True when the report is refuted and its witness, re-evaluated
/// independently, still breaks the claim.
pub fn witness_rechecks(report: &ClaimReport) -> bool {
    match (&report.verdict, &report.witness) {
        (Verdict::Refuted, Some(w)) => statement_fails(report, w),
        _ => false,
    }
}

fn kind(name: &str) -> Option<IdealKind> {
    name.parse().ok()
}

fn statement_fails(report: &ClaimReport, w: &Witness) -> bool {
    use ClaimId::*;
    use IdealKind::*;
    let ctx = Ctx {
        m: &report.magma,
        delta: Ifs::delta(report.magma.order()),
    };
    let s = &w.sets;
    let set = |i: usize| s.get(i);
    let one = || set(0);
    match report.claim {
        LawMedialFromLi => report.magma.law_holds_at(LawKind::Medial, &w.tuple) == Some(false),
        LawParamedialWithE => report.magma.law_holds_at(LawKind::Paramedial, &w.tuple) == Some(false),
        Law4WithE => report.magma.law_holds_at(LawKind::Law4, &w.tuple) == Some(false),
        LiftedLaws => {
            let Some(law) = LIFTED.into_iter().find(|l| l.name() == w.part) else {
                return false;
            };
            if s.len() != law.arity() {
                return false;
            }
            let c = |a: &Ifs, b: &Ifs| ctx.comp(a, b);
            let (l, r) = match law {
                LawKind::LeftInvertive => (c(&c(&s[0], &s[1]), &s[2]), c(&c(&s[2], &s[1]), &s[0])),
                LawKind::Medial => (
                    c(&c(&s[0], &s[1]), &c(&s[2], &s[3])),
                    c(&c(&s[0], &s[2]), &c(&s[1], &s[3])),
                ),
                LawKind::Paramedial => (
                    c(&c(&s[0], &s[1]), &c(&s[2], &s[3])),
                    c(&c(&s[3], &s[2]), &c(&s[1], &s[0])),
                ),
                _ => (c(&s[0], &c(&s[1], &s[2])), c(&s[1], &c(&s[0], &s[2]))),
            };
            l != r
        }
        LevelCutFwd | LevelCutBiFwd => {
            let (Some(a), Some(alpha), Some(k)) = (one(), w.alpha, kind(&w.part)) else {
                return false;
            };
            if !cut_kinds(report.claim).contains(&k) {
                return false;
            }
            let Ok(cut) = a.level_cut(alpha) else { return false };
            if cut.is_empty() {
                return false;
            }
            match report.direction {
                Direction::Forward => ctx.ideal(a, k) && !ctx.crisp(&cut, k),
                Direction::Converse => ctx.crisp(&cut, k) && !ctx.ideal(a, k),
            }
        }
        ComposeChar => {
            let (Some(a), Some(k)) = (one(), kind(&w.part)) else {
                return false;
            };
            let lhs = match k {
                Subgroupoid => ctx.comp(a, a),
                Left => ctx.comp(ctx.d(), a),
                Right => ctx.comp(a, ctx.d()),
                _ => return false,
            };
            ctx.ideal(a, k) != lhs.leq(a).unwrap_or(false)
        }
        BiChar => one().is_some_and(|a| {
            let rhs = ctx.comp(&ctx.comp(a, ctx.d()), a) == *a && ctx.comp(a, a) == *a;
            ctx.ideal(a, Bi) != rhs
        }),
        InteriorChar => {
            one().is_some_and(|a| ctx.ideal(a, Interior) != (ctx.comp(&ctx.comp(ctx.d(), a), ctx.d()) == *a))
        }
        LeftIffRight => one().is_some_and(|a| ctx.ideal(a, Left) != ctx.ideal(a, Right)),
        FuzzyDuo => {
            let k = match w.part.as_str() {
                "left_duo" => Left,
                "right_duo" => Right,
                _ => return false,
            };
            one().is_some_and(|a| ctx.ideal(a, k) && !ctx.ideal(a, TwoSided))
        }
        DuoEquiv => {
            let Some(k) = kind(&w.part).filter(|k| matches!(k, Left | Right)) else {
                return false;
            };
            if let Some(a) = one() {
                // fuzzy side false, crisp side true
                ctx.ideal(a, k) && !ctx.ideal(a, TwoSided) && ctx.crisp_duo(k)
            } else if let Some(x) = &w.subset {
                let Some(chain) = report.chain.and_then(|k| GradeChain::new(k).ok()) else {
                    return false;
                };
                ctx.crisp(x, k) && !ctx.crisp(x, TwoSided) && ctx.fuzzy_duo(k, chain)
            } else {
                false
            }
        }
        CharBridge => {
            let (Some(x), Some(k)) = (&w.subset, kind(&w.part)) else {
                return false;
            };
            ctx.crisp(x, k) != ctx.ideal(&Ifs::characteristic(x), k)
        }
        Absorb | AbsorbIdeal => {
            let Some(a) = one() else { return false };
            let (hyp, side) = match w.part.split_once(':') {
                Some((k, side)) => (kind(k).map(|k| ctx.ideal(a, k)), side),
                None => (Some(true), w.part.as_str()),
            };
            let conclusion = match side {
                "delta_left" => ctx.comp(ctx.d(), a) == *a,
                "delta_right" => ctx.comp(a, ctx.d()) == *a,
                _ => return false,
            };
            hyp == Some(true) && !conclusion
        }
        DeltaIdem => ctx.comp(ctx.d(), ctx.d()) != *ctx.d(),
        QuasiChar => one().is_some_and(|a| {
            let meet = ctx
                .comp(a, ctx.d())
                .lattice_op(&ctx.comp(ctx.d(), a), LatticeOpKind::Intersection)
                .expect("same carrier");
            ctx.ideal(a, Quasi) != (meet == *a)
        }),
        QuasiEqTwoSided => one().is_some_and(|a| ctx.ideal(a, TwoSided) != ctx.ideal(a, Quasi)),
        InteriorEqTwoSided => one().is_some_and(|a| ctx.ideal(a, TwoSided) != ctx.ideal(a, Interior)),
        GrandEquiv => {
            let Some((p, q)) = w.part.split_once("<->") else {
                return false;
            };
            let (Some(p), Some(q)) = (ROMAN.iter().position(|r| *r == p), ROMAN.iter().position(|r| *r == q)) else {
                return false;
            };
            one().is_some_and(|a| {
                let g = ctx.grand(a);
                g[p] != g[q]
            })
        }
        ProdEqMeet | ProdEqMeetNonconverse => {
            let (Some(a), Some(b)) = (set(0), set(1)) else {
                return false;
            };
            let both = ctx.ideal(a, TwoSided) && ctx.ideal(b, TwoSided);
            let meet = a.lattice_op(b, LatticeOpKind::Intersection).expect("same carrier");
            match w.part.as_str() {
                "inputs_two_sided" => report.claim == ProdEqMeetNonconverse && !both,
                "product_eq_meet" => both && ctx.comp(a, b) != meet,
                _ => false,
            }
        }
        Idempotent => one().is_some_and(|a| ctx.ideal(a, TwoSided) && ctx.comp(a, a) != *a),
        Semilattice => {
            if s.is_empty() || !s.iter().all(|a| ctx.ideal(a, TwoSided)) {
                return false;
            }
            match (w.part.as_str(), s.as_slice()) {
                ("identity", [a]) => ctx.comp(ctx.d(), a) != *a || ctx.comp(a, ctx.d()) != *a,
                ("idempotency", [a]) => ctx.comp(a, a) != *a,
                ("closure", [a, b]) => {
                    let p = ctx.comp(a, b);
                    !(p.is_strict_valid() && ctx.ideal(&p, TwoSided))
                }
                ("commutativity", [a, b]) => ctx.comp(a, b) != ctx.comp(b, a),
                ("associativity", [a, b, c]) => ctx.comp(&ctx.comp(a, b), c) != ctx.comp(a, &ctx.comp(b, c)),
                _ => false,
            }
        }
    }
}
