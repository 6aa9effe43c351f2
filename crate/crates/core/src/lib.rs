//! An exact-arithmetic workbench for finite AG-groupoids (left-invertive
//! groupoids) and their intuitionistic fuzzy ideals.
//!
//! The crate models Cayley tables ([`magma`]), crisp subsets and ideals
//! ([`subset`]), exact grades ([`grade`]), intuitionistic fuzzy sets with the
//! sup-min composition ([`ifs`]), the eight fuzzy ideal predicates
//! ([`ideal`]), and a registry of structural claims that can be audited on
//! concrete instances or searched for counterexamples ([`lab`]).

pub mod census;
pub mod error;
pub mod fixtures;
pub mod grade;
pub mod ideal;
pub mod ifs;
pub mod lab;
pub mod magma;
pub mod subset;
pub mod text;

pub use census::{enumerate_ag_groupoids, enumerate_ag_groupoids_par, AgCensus, DEFAULT_MAX_ORDER};
pub use error::{Error, Result};
pub use grade::{Grade, GradeChain};
pub use ideal::{crisp_fuzzy_bridge, is_if_ideal, BridgeVerdict, FuzzyIdealKind, PredicateVerdict};
pub use ifs::{compose, enumerate_ifs, Component, Ifs, LatticeOpKind, Strictness};
pub use magma::{FiniteMagma, IntraRegularityWitness, LawKind, LawReport};
pub use subset::{is_crisp_ideal, subset_product, CrispIdealKind, CrispSubset, IdealKind};
