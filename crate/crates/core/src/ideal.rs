//! Intuitionistic fuzzy ideal predicates.
//!
//! Every predicate scans its defining inequality exhaustively and reports the
//! first violation in a fixed order: `x`, then `y`, then `a` (for the triple
//! forms), each ascending, with the `mu` inequality tested before `gamma`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::ifs::{compose_unchecked, Component, Ifs};
use crate::magma::FiniteMagma;
use crate::subset::{is_crisp_ideal, CrispSubset, CrispVerdict, IdealKind};

pub type FuzzyIdealKind = IdealKind;

/// A concrete failure of one defining inequality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealViolation {
    /// The inequality that failed.
    pub condition: Condition,
    /// `[x, y]` for pair conditions, `[x, a, y]` for triple conditions,
    /// `[x]` for the quasi containment.
    pub elements: Vec<usize>,
    pub component: Component,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// `A(xy) >= A(x) ∧ A(y)`
    Subgroupoid,
    /// `A(xy) >= A(y)`
    Left,
    /// `A(xy) >= A(x)`
    Right,
    /// `A((xa)y) >= A(x) ∧ A(y)`
    GeneralizedBi,
    /// `A((xa)y) >= A(a)`
    Interior,
    /// `(A∘δ) ∩ (δ∘A) ⊆ A` at one element
    Quasi,
}

impl Condition {
    pub fn describe(self) -> &'static str {
        match self {
            Condition::Subgroupoid => "A(xy) >= A(x) & A(y)",
            Condition::Left => "A(xy) >= A(y)",
            Condition::Right => "A(xy) >= A(x)",
            Condition::GeneralizedBi => "A((xa)y) >= A(x) & A(y)",
            Condition::Interior => "A((xa)y) >= A(a)",
            Condition::Quasi => "(A o delta) & (delta o A) <= A",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredicateVerdict {
    pub kind: IdealKind,
    pub holds: bool,
    pub witness: Option<IdealViolation>,
    /// Elements where the set breaks `mu + gamma <= 1`; informational only.
    pub constraint_violations: Vec<usize>,
}

/// Checks the pair condition at `(x, y)`, returning the failing component.
fn pair_failure(magma: &FiniteMagma, a: &Ifs, cond: Condition, x: usize, y: usize) -> Option<Component> {
    let p = magma.mul(x, y);
    let (mu_rhs, gamma_rhs) = match cond {
        Condition::Subgroupoid => (a.mu(x).min(a.mu(y)), a.gamma(x).max(a.gamma(y))),
        Condition::Left => (a.mu(y), a.gamma(y)),
        Condition::Right => (a.mu(x), a.gamma(x)),
        _ => unreachable!("not a pair condition"),
    };
    if a.mu(p) < mu_rhs {
        Some(Component::Mu)
    } else if a.gamma(p) > gamma_rhs {
        Some(Component::Gamma)
    } else {
        None
    }
}

fn triple_failure(magma: &FiniteMagma, a: &Ifs, cond: Condition, x: usize, m: usize, y: usize) -> Option<Component> {
    let p = magma.mul(magma.mul(x, m), y);
    let (mu_rhs, gamma_rhs): (Grade, Grade) = match cond {
        Condition::GeneralizedBi => (a.mu(x).min(a.mu(y)), a.gamma(x).max(a.gamma(y))),
        Condition::Interior => (a.mu(m), a.gamma(m)),
        _ => unreachable!("not a triple condition"),
    };
    if a.mu(p) < mu_rhs {
        Some(Component::Mu)
    } else if a.gamma(p) > gamma_rhs {
        Some(Component::Gamma)
    } else {
        None
    }
}

fn scan_pairs(magma: &FiniteMagma, a: &Ifs, cond: Condition) -> Option<IdealViolation> {
    for x in magma.elements() {
        for y in magma.elements() {
            if let Some(component) = pair_failure(magma, a, cond, x, y) {
                return Some(IdealViolation {
                    condition: cond,
                    elements: vec![x, y],
                    component,
                });
            }
        }
    }
    None
}

fn scan_triples(magma: &FiniteMagma, a: &Ifs, cond: Condition) -> Option<IdealViolation> {
    for x in magma.elements() {
        for y in magma.elements() {
            for m in magma.elements() {
                if let Some(component) = triple_failure(magma, a, cond, x, m, y) {
                    return Some(IdealViolation {
                        condition: cond,
                        elements: vec![x, m, y],
                        component,
                    });
                }
            }
        }
    }
    None
}

/// `(A∘δ) ∩ (δ∘A)`.
pub(crate) fn quasi_hull(magma: &FiniteMagma, a: &Ifs) -> Ifs {
    let delta = Ifs::delta(magma.order());
    compose_unchecked(magma, a, &delta).meet(&compose_unchecked(magma, &delta, a))
}

fn scan_quasi(magma: &FiniteMagma, a: &Ifs) -> Option<IdealViolation> {
    quasi_hull(magma, a)
        .first_not_leq(a)
        .map(|(x, component)| IdealViolation {
            condition: Condition::Quasi,
            elements: vec![x],
            component,
        })
}

fn first_violation(magma: &FiniteMagma, a: &Ifs, kind: IdealKind) -> Option<IdealViolation> {
    use IdealKind::*;
    match kind {
        Subgroupoid => scan_pairs(magma, a, Condition::Subgroupoid),
        Left => scan_pairs(magma, a, Condition::Left),
        Right => scan_pairs(magma, a, Condition::Right),
        TwoSided => scan_pairs(magma, a, Condition::Left).or_else(|| scan_pairs(magma, a, Condition::Right)),
        GeneralizedBi => scan_triples(magma, a, Condition::GeneralizedBi),
        Bi => scan_pairs(magma, a, Condition::Subgroupoid).or_else(|| scan_triples(magma, a, Condition::GeneralizedBi)),
        Interior => scan_triples(magma, a, Condition::Interior),
        Quasi => scan_quasi(magma, a),
    }
}

/// Decides whether `a` is an intuitionistic fuzzy ideal of the given kind.
///
/// Lenient-mode sets are accepted; their constraint violations are carried
/// in the verdict but do not influence it.
pub fn is_if_ideal(magma: &FiniteMagma, a: &Ifs, kind: IdealKind) -> Result<PredicateVerdict> {
    if a.carrier() != magma.order() {
        return Err(Error::CarrierMismatch {
            left: magma.order(),
            right: a.carrier(),
        });
    }
    let witness = first_violation(magma, a, kind);
    Ok(PredicateVerdict {
        kind,
        holds: witness.is_none(),
        witness,
        constraint_violations: a.violations(),
    })
}

/// Re-evaluates a reported violation directly from the definition.
pub fn violation_is_genuine(magma: &FiniteMagma, a: &Ifs, v: &IdealViolation) -> bool {
    let m = |x, y| magma.mul(x, y);
    let (lhs_mu, lhs_gamma, rhs_mu, rhs_gamma) = match (v.condition, v.elements.as_slice()) {
        (Condition::Subgroupoid, &[x, y]) => (
            a.mu(m(x, y)),
            a.gamma(m(x, y)),
            a.mu(x).min(a.mu(y)),
            a.gamma(x).max(a.gamma(y)),
        ),
        (Condition::Left, &[x, y]) => (a.mu(m(x, y)), a.gamma(m(x, y)), a.mu(y), a.gamma(y)),
        (Condition::Right, &[x, y]) => (a.mu(m(x, y)), a.gamma(m(x, y)), a.mu(x), a.gamma(x)),
        (Condition::GeneralizedBi, &[x, s, y]) => (
            a.mu(m(m(x, s), y)),
            a.gamma(m(m(x, s), y)),
            a.mu(x).min(a.mu(y)),
            a.gamma(x).max(a.gamma(y)),
        ),
        (Condition::Interior, &[x, s, y]) => (a.mu(m(m(x, s), y)), a.gamma(m(m(x, s), y)), a.mu(s), a.gamma(s)),
        (Condition::Quasi, &[x]) => {
            // sup over all factorizations, recomputed without the composition helper
            let n = magma.order();
            let mut right_mu = Grade::ZERO;
            let mut right_gamma = Grade::ONE;
            let mut left_mu = Grade::ZERO;
            let mut left_gamma = Grade::ONE;
            for b in 0..n {
                for c in 0..n {
                    if m(b, c) == x {
                        right_mu = right_mu.max(a.mu(b));
                        right_gamma = right_gamma.min(a.gamma(b));
                        left_mu = left_mu.max(a.mu(c));
                        left_gamma = left_gamma.min(a.gamma(c));
                    }
                }
            }
            (a.mu(x), a.gamma(x), right_mu.min(left_mu), right_gamma.max(left_gamma))
        }
        _ => return false,
    };
    match v.component {
        Component::Mu => lhs_mu < rhs_mu,
        Component::Gamma => lhs_gamma > rhs_gamma,
    }
}

/// Truth values of all eight predicates, indexed like [`IdealKind::ALL`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IdealFlags(pub [bool; 8]);

impl IdealFlags {
    pub fn of(magma: &FiniteMagma, a: &Ifs) -> Self {
        let mut flags = [false; 8];
        let sub = scan_pairs(magma, a, Condition::Subgroupoid).is_none();
        let left = scan_pairs(magma, a, Condition::Left).is_none();
        let right = scan_pairs(magma, a, Condition::Right).is_none();
        let gbi = scan_triples(magma, a, Condition::GeneralizedBi).is_none();
        flags[0] = sub;
        flags[1] = left;
        flags[2] = right;
        flags[3] = left && right;
        flags[4] = gbi;
        flags[5] = sub && gbi;
        flags[6] = scan_triples(magma, a, Condition::Interior).is_none();
        flags[7] = scan_quasi(magma, a).is_none();
        IdealFlags(flags)
    }

    pub fn get(&self, kind: IdealKind) -> bool {
        self.0[kind as usize]
    }
}

/// Crisp verdict for `X` next to the fuzzy verdict for its characteristic set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BridgeVerdict {
    pub crisp: CrispVerdict,
    pub fuzzy: PredicateVerdict,
    pub agree: bool,
}

pub fn crisp_fuzzy_bridge(magma: &FiniteMagma, x: &CrispSubset, kind: IdealKind) -> Result<BridgeVerdict> {
    let crisp = is_crisp_ideal(magma, x, kind)?;
    let fuzzy = is_if_ideal(magma, &Ifs::characteristic(x), kind)?;
    let agree = crisp.holds == fuzzy.holds;
    Ok(BridgeVerdict { crisp, fuzzy, agree })
}
