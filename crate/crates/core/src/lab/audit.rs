use rayon::prelude::*;
use serde_json::{json, Value};

use crate::census::enumerate_ag_groupoids_par;
use crate::error::{Error, Result};
use crate::grade::GradeChain;
use crate::ifs::ifs_count;
use crate::magma::FiniteMagma;

use super::claims::{ClaimId, Direction};
use super::eval::{duo_report, evaluate, uses_pool, verify_claim, ClaimInputs, DUO_MAX_ORDER};
use super::profile::Pool;
use super::report::ClaimReport;
use super::SearchBudget;

/// Claims skipped because the chain enumeration exceeded the budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Truncation {
    pub skipped: Vec<ClaimId>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditOutcome {
    pub reports: Vec<ClaimReport>,
    pub truncated: Option<Truncation>,
}

impl AuditOutcome {
    pub fn any_refuted(&self) -> bool {
        self.reports.iter().any(ClaimReport::is_refuted)
    }

    pub fn to_json(&self, base: usize) -> Value {
        json!({
            "reports": self.reports.iter().map(|r| r.to_json(base)).collect::<Vec<_>>(),
            "truncated": self.truncated.as_ref().map(|t| json!({
                "skipped": t.skipped.iter().map(|c| c.code()).collect::<Vec<_>>(),
                "reason": t.reason,
            })),
        })
    }
}

/// Runs every claim against `magma`, quantifying over all strict chain
/// IFSs where needed. Reports follow [`ClaimId::ALL`].
pub fn audit_all(magma: &FiniteMagma, chain: GradeChain, budget: &SearchBudget) -> Result<AuditOutcome> {
    budget.validate()?;
    let (pool, reason) = match Pool::chain(magma, chain, budget.max_instances) {
        Ok(p) => (Some(p), None),
        Err(e @ Error::BudgetExceeded { .. }) => (None, Some(e.to_string())),
        Err(e) => return Err(e),
    };
    let runnable =
        |c: &ClaimId| (pool.is_some() || !uses_pool(*c)) && !(*c == ClaimId::DuoEquiv && magma.order() > DUO_MAX_ORDER);
    let skipped: Vec<ClaimId> = ClaimId::ALL.into_iter().filter(|c| !runnable(c)).collect();
    let inputs = ClaimInputs::default();
    let reports = ClaimId::ALL
        .par_iter()
        .filter(|c| runnable(c))
        .map(|&c| evaluate(c, Direction::Forward, magma, &inputs, pool.as_ref(), budget))
        .collect();
    let truncated = (!skipped.is_empty()).then(|| Truncation {
        skipped,
        reason: reason.unwrap_or_else(|| format!("carrier exceeds {DUO_MAX_ORDER} elements for subset enumeration")),
    });
    Ok(AuditOutcome { reports, truncated })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub claim: ClaimId,
    pub direction: Direction,
    /// The first refuting instance, in order of magma order then table.
    pub found: Option<ClaimReport>,
    pub magmas_examined: u64,
    /// Orders whose census was examined in full.
    pub orders_completed: Vec<usize>,
    /// Set when the search stopped early on a budget bound.
    pub truncated: Option<String>,
}

impl SearchOutcome {
    pub fn to_json(&self, base: usize) -> Value {
        json!({
            "claim": self.claim.code(),
            "direction": self.direction,
            "found": self.found.as_ref().map(|r| r.to_json(base)),
            "magmas_examined": self.magmas_examined,
            "orders_completed": self.orders_completed,
            "truncated": self.truncated,
        })
    }
}

/// Scans the AG-groupoid census order by order, and every strict chain
/// IFS on each table, for the first instance refuting `claim`.
pub fn search_counterexample(claim: ClaimId, direction: Direction, budget: &SearchBudget) -> Result<SearchOutcome> {
    budget.validate()?;
    if direction == Direction::Converse && !claim.has_converse() {
        return Err(Error::Unsupported(format!("{claim} has no converse direction")));
    }
    let chain = budget.chain()?;
    let req = claim.requirements();
    let mut out = SearchOutcome {
        claim,
        direction,
        found: None,
        magmas_examined: 0,
        orders_completed: Vec::new(),
        truncated: None,
    };
    for n in 1..=budget.max_order {
        if uses_pool(claim) && ifs_count(n, chain) > budget.max_instances as u128 {
            out.truncated = Some(format!(
                "order {n}: {} chain IFSs exceed the budget of {}",
                ifs_count(n, chain),
                budget.max_instances
            ));
            break;
        }
        if claim == ClaimId::DuoEquiv && n > DUO_MAX_ORDER {
            out.truncated = Some(format!("order {n} exceeds the subset enumeration bound"));
            break;
        }
        let magmas: Vec<FiniteMagma> =
            enumerate_ag_groupoids_par(n, req.left_identity || budget.require_left_identity, budget.max_order)?
                .into_iter()
                .filter(|m| (!req.intra_regular && !req.not_intra_regular) || m.is_intra_regular() == req.intra_regular)
                .collect();
        let hit = magmas
            .par_iter()
            .enumerate()
            .map(|(i, m)| {
                let inputs = ClaimInputs::default();
                let pool =
                    uses_pool(claim).then(|| Pool::chain(m, chain, budget.max_instances).expect("count checked above"));
                (i, evaluate(claim, direction, m, &inputs, pool.as_ref(), budget))
            })
            .find_first(|(_, r)| r.is_refuted());
        match hit {
            Some((i, report)) => {
                out.magmas_examined += i as u64 + 1;
                out.found = Some(report);
                break;
            }
            None => {
                out.magmas_examined += magmas.len() as u64;
                out.orders_completed.push(n);
            }
        }
    }
    Ok(out)
}

/// Audits the semilattice claim over all strict chain IFS two-sided ideals.
pub fn verify_semilattice(magma: &FiniteMagma, chain: GradeChain, budget: &SearchBudget) -> Result<ClaimReport> {
    verify_claim(
        ClaimId::Semilattice,
        magma,
        &ClaimInputs::default(),
        Some(chain),
        budget,
    )
}

/// Evaluates the crisp/fuzzy duo biconditional without requiring the
/// structural hypotheses; a failing hypothesis is recorded in the notes.
pub fn duo_audit(magma: &FiniteMagma, chain: GradeChain, budget: &SearchBudget) -> Result<ClaimReport> {
    budget.validate()?;
    if magma.order() > DUO_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            n: magma.order(),
            bound: DUO_MAX_ORDER,
        });
    }
    let pool = Pool::chain(magma, chain, budget.max_instances)?;
    Ok(duo_report(magma, &pool))
}
