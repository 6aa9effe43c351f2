//! Recomputes the facts asserted about the reference tables and sets,
//! and lists every assertion the computation contradicts.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fixtures;
use crate::grade::Grade;
use crate::ideal::{is_if_ideal, IdealViolation};
use crate::ifs::{compose, Ifs, Strictness};
use crate::magma::{FiniteMagma, LawKind};
use crate::subset::{is_crisp_ideal, CrispSubset, IdealKind};

use super::claims::ClaimId;
use super::eval::{verify_claim, ClaimInputs};
use super::report::ClaimReport;
use super::SearchBudget;

/// One asserted fact next to its computed truth value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssertionCheck {
    pub id: &'static str,
    pub assertion: String,
    pub asserted: bool,
    pub computed: bool,
    pub evidence: String,
}

impl AssertionCheck {
    pub fn agrees(&self) -> bool {
        self.asserted == self.computed
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adjudication {
    pub base: usize,
    pub checks: Vec<AssertionCheck>,
    pub reports: Vec<ClaimReport>,
}

impl Adjudication {
    pub fn discrepancies(&self) -> Vec<&AssertionCheck> {
        self.checks.iter().filter(|c| !c.agrees()).collect()
    }

    pub fn any_refuted(&self) -> bool {
        self.reports.iter().any(ClaimReport::is_refuted)
    }

    pub fn to_json(&self) -> Value {
        let check = |c: &AssertionCheck| {
            json!({
                "id": c.id,
                "assertion": c.assertion,
                "asserted": c.asserted,
                "computed": c.computed,
                "agrees": c.agrees(),
                "evidence": c.evidence,
            })
        };
        json!({
            "checks": self.checks.iter().map(check).collect::<Vec<_>>(),
            "discrepancies": self.discrepancies().into_iter().map(check).collect::<Vec<_>>(),
            "reports": self.reports.iter().map(|r| r.to_json(self.base)).collect::<Vec<_>>(),
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::from("assertions:\n");
        for c in &self.checks {
            let _ = writeln!(
                out,
                "  [{}] {}: {} (asserted {}, computed {})\n      {}",
                if c.agrees() { "ok" } else { "MISMATCH" },
                c.id,
                c.assertion,
                c.asserted,
                c.computed,
                c.evidence
            );
        }
        let disc = self.discrepancies();
        let _ = writeln!(out, "discrepancies: {}", disc.len());
        for c in disc {
            let _ = writeln!(out, "  {}: {}", c.id, c.evidence);
        }
        for r in &self.reports {
            out.push('\n');
            out.push_str(&r.render_text(self.base));
        }
        out
    }
}

struct Builder {
    base: usize,
    checks: Vec<AssertionCheck>,
}

impl Builder {
    fn push(
        &mut self,
        id: &'static str,
        assertion: impl Into<String>,
        asserted: bool,
        computed: bool,
        evidence: String,
    ) {
        self.checks.push(AssertionCheck {
            id,
            assertion: assertion.into(),
            asserted,
            computed,
            evidence,
        });
    }

    fn el(&self, x: usize) -> usize {
        x + self.base
    }

    fn elements(&self, xs: impl IntoIterator<Item = usize>) -> String {
        let v: Vec<String> = xs.into_iter().map(|x| (x + self.base).to_string()).collect();
        format!("{{{}}}", v.join(", "))
    }

    fn violation(&self, v: &Option<IdealViolation>) -> String {
        match v {
            None => "every defining inequality holds".into(),
            Some(v) => format!(
                "{} fails for ({}) on {}",
                v.condition.describe(),
                v.elements
                    .iter()
                    .map(|&x| self.el(x).to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
                v.component
            ),
        }
    }

    fn table_facts(&mut self, m: &FiniteMagma, prefix: &'static [&'static str; 3], identity: usize) {
        let li = m.check_law(LawKind::LeftInvertive);
        self.push(
            prefix[0],
            "the table is left invertive",
            true,
            li.holds,
            match &li.witness {
                None => "all 125 triples satisfy (ab)c = (cb)a".into(),
                Some(t) => format!("fails at {}", self.elements(t.iter().copied())),
            },
        );
        let found = m.left_identities();
        self.push(
            prefix[1],
            format!("{} is a left identity", identity + self.base),
            true,
            found.contains(&identity),
            format!("left identities: {}", self.elements(found.iter().copied())),
        );
        let ir = m.intra_regularity();
        let failing = ir.failing_elements();
        let asserted_ir = prefix[2].starts_with("table1");
        self.push(
            prefix[2],
            if asserted_ir {
                "every element is intra-regular".to_string()
            } else {
                "the table is not intra-regular".to_string()
            },
            asserted_ir,
            ir.holds(),
            if failing.is_empty() {
                "every element a has x, y with a = (x(aa))y".into()
            } else {
                format!("elements without a witness: {}", self.elements(failing))
            },
        );
    }

    fn set_is_ifs(&mut self, id: &'static str, name: &str, a: &Ifs) {
        let bad = a.violations();
        let evidence = if bad.is_empty() {
            "mu + gamma <= 1 everywhere".to_string()
        } else {
            bad.iter()
                .map(|&x| format!("element {}: mu + gamma = {} > 1", self.el(x), a.sum_at(x)))
                .collect::<Vec<_>>()
                .join("; ")
        };
        self.push(
            id,
            format!("{name} satisfies mu + gamma <= 1"),
            true,
            bad.is_empty(),
            evidence,
        );
    }

    fn fuzzy(&mut self, id: &'static str, m: &FiniteMagma, name: &str, a: &Ifs, kind: IdealKind, asserted: bool) {
        let v = is_if_ideal(m, a, kind).expect("fixture carrier");
        let assertion = format!(
            "{name} is {}an IF {} ideal",
            if asserted { "" } else { "not " },
            kind.name()
        );
        let evidence = self.violation(&v.witness);
        self.push(id, assertion, asserted, v.holds, evidence);
    }

    fn crisp(&mut self, id: &'static str, m: &FiniteMagma, x: &CrispSubset, kind: IdealKind) {
        let v = is_crisp_ideal(m, x, kind).expect("non-empty cut");
        let evidence = match (v.condition, v.witness) {
            (Some(c), Some(w)) => format!("{c} fails: {} lies outside", self.el(w)),
            _ => "containment holds".into(),
        };
        self.push(
            id,
            format!("the cut {} is a {} ideal", self.elements(x.iter()), kind.name()),
            true,
            v.holds,
            evidence,
        );
    }
}

fn values(xs: &[Grade]) -> Vec<Grade> {
    let mut v = xs.to_vec();
    v.sort();
    v.dedup();
    v
}

fn show(xs: &[Grade]) -> String {
    format!("[{}]", xs.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", "))
}

/// Re-examines every assertion made about the reference examples.
pub fn adjudicate(base: usize, budget: &SearchBudget) -> Result<Adjudication> {
    let mut b = Builder {
        base,
        checks: Vec::new(),
    };
    let g1 = fixtures::g1();
    let g2 = fixtures::g2();

    b.table_facts(
        &g1,
        &["table1.left_invertive", "table1.left_identity", "table1.intra_regular"],
        3,
    );

    let strict = fixtures::example_ifs(Strictness::Strict);
    let example = fixtures::example_ifs(Strictness::Lenient)?;
    b.set_is_ifs("example_set.is_ifs", "the example set", &example);
    if let Err(e) = strict {
        let why = match e {
            Error::ConstraintViolation { element, sum } => format!("element {} has sum {sum}", b.el(element)),
            other => other.to_string(),
        };
        let last = b.checks.last_mut().expect("just pushed");
        last.evidence = format!("{}; strict mode rejects it: {why}", last.evidence);
    }
    b.fuzzy(
        "example_set.two_sided",
        &g1,
        "the example set",
        &example,
        IdealKind::TwoSided,
        true,
    );
    b.fuzzy(
        "example_set.subgroupoid",
        &g1,
        "the example set",
        &example,
        IdealKind::Subgroupoid,
        true,
    );

    let conv = fixtures::converse_ifs();
    let alpha: Grade = fixtures::CONVERSE_ALPHA.parse()?;
    b.set_is_ifs("converse_set.is_ifs", "the converse set", &conv);
    let cut = conv.level_cut(alpha)?;
    let expected = CrispSubset::from_elements(g1.order(), [0, 1])?;
    b.push(
        "converse_set.cut",
        format!("the cut at {alpha} is {{a, b}}, read as {}", b.elements([0, 1])),
        true,
        cut == expected,
        format!(
            "computed cut {}; the letters a, b do not name elements of the numbered carrier",
            b.elements(cut.iter())
        ),
    );
    if !cut.is_empty() {
        b.crisp("converse_set.cut_right", &g1, &cut, IdealKind::Right);
        b.crisp("converse_set.cut_left", &g1, &cut, IdealKind::Left);
        b.crisp("converse_set.cut_bi", &g1, &cut, IdealKind::Bi);
        b.crisp("converse_set.cut_generalized_bi", &g1, &cut, IdealKind::GeneralizedBi);
    }
    b.fuzzy(
        "converse_set.not_right",
        &g1,
        "the converse set",
        &conv,
        IdealKind::Right,
        false,
    );
    b.fuzzy(
        "converse_set.not_left",
        &g1,
        "the converse set",
        &conv,
        IdealKind::Left,
        false,
    );
    b.fuzzy(
        "converse_set.not_bi",
        &g1,
        "the converse set",
        &conv,
        IdealKind::Bi,
        false,
    );
    b.fuzzy(
        "converse_set.not_generalized_bi",
        &g1,
        "the converse set",
        &conv,
        IdealKind::GeneralizedBi,
        false,
    );

    b.table_facts(
        &g2,
        &[
            "table2.left_invertive",
            "table2.left_identity",
            "table2.not_intra_regular",
        ],
        3,
    );
    let ir3 = g2.intra_regular_witness(2)?;
    b.push(
        "table2.element3",
        format!("element {} is not intra-regular", b.el(2)),
        true,
        ir3.is_none(),
        match ir3 {
            None => "no (x, y) among all 25 pairs gives (x(aa))y = a".into(),
            Some(w) => format!("witness ({}, {})", b.el(w.x), b.el(w.y)),
        },
    );
    let (a, bb) = (fixtures::second_a(), fixtures::second_b());
    b.fuzzy("table2.A_two_sided", &g2, "A", &a, IdealKind::TwoSided, true);
    b.fuzzy("table2.B_two_sided", &g2, "B", &bb, IdealKind::TwoSided, true);
    let prod = compose(&g2, &a, &bb)?;
    let meet = a.meet(&bb);
    let mu_diff: Vec<usize> = (0..5).filter(|&x| prod.mu(x) != meet.mu(x)).collect();
    b.push(
        "table2.mu_product_eq_meet",
        "mu of A o B equals mu of A & B at every element",
        true,
        mu_diff.is_empty(),
        format!(
            "A o B mu = {}, A & B mu = {}, differing at {}",
            show(prod.mus()),
            show(meet.mus()),
            b.elements(mu_diff)
        ),
    );
    let (pv, mv) = (values(prod.mus()), values(meet.mus()));
    b.push(
        "table2.mu_value_sets",
        "both mu sides take exactly the values {1/10, 3/10, 2/5}",
        true,
        pv == mv && pv == values(&["1/10".parse()?, "3/10".parse()?, "2/5".parse()?]),
        format!("value sets {} and {}", show(&pv), show(&mv)),
    );
    let gamma_diff: Vec<usize> = (0..5).filter(|&x| prod.gamma(x) != meet.gamma(x)).collect();
    b.push(
        "table2.gamma_product_eq_meet",
        "gamma of A o B equals gamma of A & B (pointwise max) at every element",
        true,
        gamma_diff.is_empty(),
        format!(
            "A o B gamma = {}, A & B gamma = {}, differing at {}",
            show(prod.gammas()),
            show(meet.gammas()),
            b.elements(gamma_diff)
        ),
    );

    let inputs = ClaimInputs::sets(vec![a, bb]);
    let reports = vec![
        verify_claim(ClaimId::ProdEqMeet, &g2, &inputs, None, budget)?,
        verify_claim(ClaimId::ProdEqMeetNonconverse, &g2, &inputs, None, budget)?,
    ];
    Ok(Adjudication {
        base,
        checks: b.checks,
        reports,
    })
}
