use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::grade::Grade;
use crate::ifs::{Component, Ifs};
use crate::magma::FiniteMagma;
use crate::subset::CrispSubset;
use crate::text::{ifs_to_json, magma_to_json, subset_to_json};

use super::claims::{ClaimId, Direction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Confirmed,
    Refuted,
    NotApplicable,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Refuted => "refuted",
            Verdict::NotApplicable => "not_applicable",
        }
    }
}

/// What a verdict quantifies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    /// Every strict IFS whose grades lie in the chain.
    ExhaustiveOverChain,
    /// Every non-empty crisp subset of the carrier.
    ExhaustiveOverSubsets,
    /// A seeded random sample of chain instances.
    Sampled,
    /// Only the given magma and inputs.
    SingleInstance,
}

impl Scope {
    pub fn name(self) -> &'static str {
        match self {
            Scope::ExhaustiveOverChain => "exhaustive-over-chain",
            Scope::ExhaustiveOverSubsets => "exhaustive-over-subsets",
            Scope::Sampled => "sampled",
            Scope::SingleInstance => "single-instance",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Precondition {
    LeftInvertive,
    LeftIdentity,
    IntraRegular,
    NotIntraRegular,
    /// No instance in scope satisfies the claim's hypothesis.
    Hypothesis,
    /// Explicit inputs are not IF two-sided ideals.
    InputsTwoSided,
}

impl Precondition {
    pub fn name(self) -> &'static str {
        match self {
            Precondition::LeftInvertive => "left-invertive",
            Precondition::LeftIdentity => "left identity",
            Precondition::IntraRegular => "intra-regular",
            Precondition::NotIntraRegular => "not intra-regular",
            Precondition::Hypothesis => "hypothesis satisfiable",
            Precondition::InputsTwoSided => "inputs are IF two-sided ideals",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailedPrecondition {
    pub precondition: Precondition,
    /// Elements responsible, e.g. those lacking an intra-regularity witness.
    pub elements: Vec<usize>,
    /// Indices into the report inputs responsible.
    pub inputs: Vec<usize>,
}

/// A concrete instance on which (part of) a claim fails.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Witness {
    /// Which sub-statement failed, e.g. `"left"` or `"(i)<->(viii)"`.
    pub part: String,
    /// Element tuple for equational laws.
    pub tuple: Vec<usize>,
    pub sets: Vec<Ifs>,
    pub subset: Option<CrispSubset>,
    pub alpha: Option<Grade>,
    /// First element where the two compared sides differ.
    pub element: Option<usize>,
    pub component: Option<Component>,
}

impl Witness {
    pub fn part(part: impl Into<String>) -> Self {
        Witness {
            part: part.into(),
            ..Witness::default()
        }
    }

    pub fn with_sets(mut self, sets: Vec<Ifs>) -> Self {
        self.sets = sets;
        self
    }

    pub fn with_subset(mut self, subset: CrispSubset) -> Self {
        self.subset = Some(subset);
        self
    }

    pub fn with_alpha(mut self, alpha: Grade) -> Self {
        self.alpha = Some(alpha);
        self
    }

    pub fn with_tuple(mut self, tuple: Vec<usize>) -> Self {
        self.tuple = tuple;
        self
    }

    pub fn at(mut self, place: Option<(usize, Component)>) -> Self {
        if let Some((x, c)) = place {
            self.element = Some(x);
            self.component = Some(c);
        }
        self
    }
}

/// Two IFSs printed side by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub left_label: String,
    pub right_label: String,
    pub left: Ifs,
    pub right: Ifs,
}

impl Comparison {
    pub fn differing(&self) -> Vec<usize> {
        (0..self.left.carrier())
            .filter(|&x| self.left.mu(x) != self.right.mu(x) || self.left.gamma(x) != self.right.gamma(x))
            .collect()
    }
}

/// Labels of the eight properties compared by the grand equivalence.
pub const GRAND_LABELS: [&str; 8] = [
    "(i) left",
    "(ii) right",
    "(iii) two-sided",
    "(iv) bi",
    "(v) generalized bi",
    "(vi) interior",
    "(vii) quasi",
    "(viii) A o delta = A = delta o A",
];

/// Pairwise coincidence of the eight property classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgreementMatrix {
    /// `separators[p][q]` is the first set with property `p` but not `q`
    /// or vice versa; `None` when the classes coincide.
    pub separators: Vec<Vec<Option<Ifs>>>,
    /// How many sets have each property.
    pub class_sizes: [u64; 8],
}

impl AgreementMatrix {
    pub fn coincide(&self, p: usize, q: usize) -> bool {
        self.separators[p][q].is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DuoSides {
    pub crisp_left: bool,
    pub crisp_right: bool,
    pub fuzzy_left: bool,
    pub fuzzy_right: bool,
    pub crisp_left_witness: Option<CrispSubset>,
    pub crisp_right_witness: Option<CrispSubset>,
    pub fuzzy_left_witness: Option<Ifs>,
    pub fuzzy_right_witness: Option<Ifs>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Details {
    Comparison(Comparison),
    Matrix(AgreementMatrix),
    Duo(DuoSides),
    Semilattice { members: u64 },
}

/// Outcome of auditing one claim on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimReport {
    pub claim: ClaimId,
    pub direction: Direction,
    pub magma: FiniteMagma,
    pub inputs: Vec<Ifs>,
    pub subsets: Vec<CrispSubset>,
    pub alpha: Option<Grade>,
    pub chain: Option<u64>,
    pub verdict: Verdict,
    pub scope: Scope,
    pub witness: Option<Witness>,
    pub failed_precondition: Option<FailedPrecondition>,
    /// Instances in scope that were evaluated.
    pub instances_checked: u64,
    /// Instances on which the hypothesis side held.
    pub hypothesis_instances: u64,
    pub seed: Option<u64>,
    pub details: Option<Details>,
    pub notes: Vec<String>,
}

impl ClaimReport {
    pub fn is_refuted(&self) -> bool {
        self.verdict == Verdict::Refuted
    }

    pub fn to_json(&self, base: usize) -> Value {
        let shift = |v: &[usize]| v.iter().map(|x| x + base).collect::<Vec<_>>();
        let precondition = self.failed_precondition.as_ref().map(|p| {
            json!({
                "name": p.precondition.name(),
                "elements": shift(&p.elements),
                "inputs": p.inputs,
            })
        });
        let witness = self.witness.as_ref().map(|w| {
            json!({
                "part": w.part,
                "tuple": shift(&w.tuple),
                "sets": w.sets.iter().map(|s| ifs_to_json(s, base)).collect::<Vec<_>>(),
                "subset": w.subset.as_ref().map(|s| subset_to_json(s, base)),
                "alpha": w.alpha.map(|a| a.to_string()),
                "element": w.element.map(|x| x + base),
                "component": w.component.map(|c| c.to_string()),
            })
        });
        json!({
            "claim": self.claim.code(),
            "direction": self.direction,
            "statement": self.claim.statement(),
            "verdict": self.verdict.name(),
            "scope": self.scope.name(),
            "instance": {
                "magma": magma_to_json(&self.magma, base),
                "inputs": self.inputs.iter().map(|s| ifs_to_json(s, base)).collect::<Vec<_>>(),
                "subsets": self.subsets.iter().map(|s| subset_to_json(s, base)).collect::<Vec<_>>(),
                "alpha": self.alpha.map(|a| a.to_string()),
                "chain_k": self.chain,
            },
            "instances_checked": self.instances_checked,
            "hypothesis_instances": self.hypothesis_instances,
            "seed": self.seed,
            "failed_precondition": precondition,
            "witness": witness,
            "details": self.details.as_ref().map(|d| details_json(d, base)),
            "notes": self.notes,
        })
    }

    pub fn render_text(&self, base: usize) -> String {
        let mut out = String::new();
        let dir = match self.direction {
            Direction::Forward => "",
            Direction::Converse => " (converse)",
        };
        let _ = writeln!(
            out,
            "{}{dir}: {} [{}]",
            self.claim.code(),
            self.verdict.name(),
            self.scope.name()
        );
        let _ = writeln!(out, "  statement: {}", self.claim.statement());
        let rows: Vec<String> = self
            .magma
            .rows()
            .iter()
            .map(|r| join(r.iter().map(|x| x + base)).replace(", ", " "))
            .collect();
        let _ = writeln!(out, "  table: {}", rows.join(" / "));
        for (i, s) in self.inputs.iter().enumerate() {
            let _ = writeln!(out, "  input {}: {}", i + 1, ifs_inline(s));
        }
        for s in &self.subsets {
            let _ = writeln!(out, "  subset: {{{}}}", join(s.iter().map(|x| x + base)));
        }
        if let Some(a) = self.alpha {
            let _ = writeln!(out, "  alpha: {a}");
        }
        if let Some(k) = self.chain {
            let _ = writeln!(
                out,
                "  chain k={k}: {} instances, hypothesis held on {}",
                self.instances_checked, self.hypothesis_instances
            );
        }
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "  seed: {seed}");
        }
        if let Some(p) = &self.failed_precondition {
            let _ = write!(out, "  precondition failed: {}", p.precondition.name());
            if !p.elements.is_empty() {
                let _ = write!(out, " (elements {})", join(p.elements.iter().map(|x| x + base)));
            }
            if !p.inputs.is_empty() {
                let _ = write!(out, " (inputs {})", join(p.inputs.iter().map(|i| i + 1)));
            }
            out.push('\n');
        }
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "  witness [{}]:", w.part);
            if !w.tuple.is_empty() {
                let _ = writeln!(out, "    tuple: ({})", join(w.tuple.iter().map(|x| x + base)));
            }
            for (i, s) in w.sets.iter().enumerate() {
                let _ = writeln!(out, "    set {}: {}", i + 1, ifs_inline(s));
            }
            if let Some(s) = &w.subset {
                let _ = writeln!(out, "    subset: {{{}}}", join(s.iter().map(|x| x + base)));
            }
            if let Some(a) = w.alpha {
                let _ = writeln!(out, "    alpha: {a}");
            }
            if let (Some(x), Some(c)) = (w.element, w.component) {
                let _ = writeln!(out, "    sides differ at element {} ({c})", x + base);
            }
        }
        if let Some(d) = &self.details {
            render_details(&mut out, d, base);
        }
        for n in &self.notes {
            let _ = writeln!(out, "  note: {n}");
        }
        out
    }
}

fn join<T: ToString>(items: impl Iterator<Item = T>) -> String {
    items.map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn ifs_inline(s: &Ifs) -> String {
    let pairs: Vec<String> = (0..s.carrier())
        .map(|x| format!("({}, {})", s.mu(x), s.gamma(x)))
        .collect();
    pairs.join(" ")
}

fn details_json(d: &Details, base: usize) -> Value {
    match d {
        Details::Comparison(c) => {
            let rows: Vec<Value> = (0..c.left.carrier())
                .map(|x| {
                    json!({
                        "element": x + base,
                        "left_mu": c.left.mu(x).to_string(),
                        "left_gamma": c.left.gamma(x).to_string(),
                        "right_mu": c.right.mu(x).to_string(),
                        "right_gamma": c.right.gamma(x).to_string(),
                        "equal": c.left.mu(x) == c.right.mu(x) && c.left.gamma(x) == c.right.gamma(x),
                    })
                })
                .collect();
            json!({
                "kind": "comparison",
                "left": c.left_label,
                "right": c.right_label,
                "rows": rows,
                "differing": c.differing().iter().map(|x| x + base).collect::<Vec<_>>(),
            })
        }
        Details::Matrix(m) => {
            let cells: Vec<Vec<Value>> = m
                .separators
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|s| match s {
                            None => json!({"coincide": true}),
                            Some(set) => json!({"coincide": false, "separator": ifs_to_json(set, base)}),
                        })
                        .collect()
                })
                .collect();
            json!({
                "kind": "agreement_matrix",
                "labels": GRAND_LABELS,
                "class_sizes": m.class_sizes,
                "cells": cells,
            })
        }
        Details::Duo(s) => json!({
            "kind": "duo",
            "crisp_left_duo": s.crisp_left,
            "crisp_right_duo": s.crisp_right,
            "fuzzy_left_duo": s.fuzzy_left,
            "fuzzy_right_duo": s.fuzzy_right,
            "crisp_left_witness": s.crisp_left_witness.as_ref().map(|x| subset_to_json(x, base)),
            "crisp_right_witness": s.crisp_right_witness.as_ref().map(|x| subset_to_json(x, base)),
            "fuzzy_left_witness": s.fuzzy_left_witness.as_ref().map(|x| ifs_to_json(x, base)),
            "fuzzy_right_witness": s.fuzzy_right_witness.as_ref().map(|x| ifs_to_json(x, base)),
            "fuzzy_side_bounded_by_chain": true,
        }),
        Details::Semilattice { members } => json!({"kind": "semilattice", "members": members}),
    }
}

fn render_details(out: &mut String, d: &Details, base: usize) {
    match d {
        Details::Comparison(c) => {
            let _ = writeln!(
                out,
                "  element | {} (mu, gamma) | {} (mu, gamma) | equal",
                c.left_label, c.right_label
            );
            for x in 0..c.left.carrier() {
                let eq = c.left.mu(x) == c.right.mu(x) && c.left.gamma(x) == c.right.gamma(x);
                let _ = writeln!(
                    out,
                    "  {:>7} | ({}, {}) | ({}, {}) | {}",
                    x + base,
                    c.left.mu(x),
                    c.left.gamma(x),
                    c.right.mu(x),
                    c.right.gamma(x),
                    if eq { "yes" } else { "no" }
                );
            }
        }
        Details::Matrix(m) => {
            let _ = writeln!(out, "  agreement matrix (= coincide, x separated):");
            for (p, label) in GRAND_LABELS.iter().enumerate() {
                let row: String = (0..8).map(|q| if m.coincide(p, q) { '=' } else { 'x' }).collect();
                let _ = writeln!(out, "    {row}  {label} [{}]", m.class_sizes[p]);
            }
        }
        Details::Duo(s) => {
            let _ = writeln!(
                out,
                "  crisp left duo: {}, crisp right duo: {}",
                s.crisp_left, s.crisp_right
            );
            let _ = writeln!(
                out,
                "  fuzzy left duo: {}, fuzzy right duo: {} (bounded by the chain)",
                s.fuzzy_left, s.fuzzy_right
            );
            for (label, w) in [("left", &s.crisp_left_witness), ("right", &s.crisp_right_witness)] {
                if let Some(x) = w {
                    let _ = writeln!(
                        out,
                        "  crisp {label} ideal that is not two-sided: {{{}}}",
                        join(x.iter().map(|e| e + base))
                    );
                }
            }
            for (label, w) in [("left", &s.fuzzy_left_witness), ("right", &s.fuzzy_right_witness)] {
                if let Some(a) = w {
                    let _ = writeln!(out, "  IF {label} ideal that is not two-sided: {}", ifs_inline(a));
                }
            }
        }
        Details::Semilattice { members } => {
            let _ = writeln!(out, "  IF two-sided ideals in scope: {members}");
        }
    }
}
