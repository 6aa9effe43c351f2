//! Executable claims about AG-groupoids and their fuzzy ideals.
//!
//! Each [`ClaimId`] is evaluated extensionally on a concrete magma, either
//! on explicit inputs or over every strict IFS with grades in a finite
//! chain. Refutations carry a structured witness that
//! [`witness_rechecks`] re-evaluates from the definitions.

mod adjudicate;
mod audit;
mod claims;
mod eval;
mod profile;
mod recheck;
mod report;

pub use adjudicate::{adjudicate, Adjudication, AssertionCheck};
pub use audit::{
    audit_all, duo_audit, search_counterexample, verify_semilattice, AuditOutcome, SearchOutcome, Truncation,
};
pub use claims::{ClaimId, Direction, Requirements};
pub use eval::{verify_claim, verify_claim_directed, ClaimInputs, DUO_MAX_ORDER};
pub use recheck::witness_rechecks;
pub use report::{
    AgreementMatrix, ClaimReport, Comparison, Details, DuoSides, FailedPrecondition, Precondition, Scope, Verdict,
    Witness, GRAND_LABELS,
};

use crate::census::DEFAULT_MAX_ORDER;
use crate::error::{Error, Result};
use crate::grade::GradeChain;

/// Bounds for chain enumeration, sampling and counterexample search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest magma order visited by a search.
    pub max_order: usize,
    /// Grade chain used by searches.
    pub chain_k: u64,
    /// Largest number of chain IFSs (or IFS tuples) enumerated per magma.
    pub max_instances: u64,
    /// Random tuples drawn per law when a tuple space is too large.
    pub samples: u64,
    pub seed: Option<u64>,
    /// Restrict searches to magmas with a left identity even when the
    /// claim does not require one.
    pub require_left_identity: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_order: DEFAULT_MAX_ORDER,
            chain_k: 2,
            max_instances: 1_000_000,
            samples: 1_000,
            seed: None,
            require_left_identity: false,
        }
    }
}

impl SearchBudget {
    pub fn validate(&self) -> Result<()> {
        if self.max_order == 0 || self.chain_k == 0 || self.max_instances == 0 || self.samples == 0 {
            return Err(Error::Unsupported("budget bounds must be positive".into()));
        }
        Ok(())
    }

    pub fn chain(&self) -> Result<GradeChain> {
        GradeChain::new(self.chain_k)
    }
}
