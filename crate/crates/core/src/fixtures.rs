//! The two reference Cayley tables and their fuzzy sets.
//!
//! Tables are given 1-based, as in the source, and shifted to 0-based here.

use crate::error::Result;
use crate::ifs::{Ifs, Strictness};
use crate::magma::FiniteMagma;

/// Intra-regular AG-groupoid of order 5 with left identity 4 (1-based).
pub const G1_ROWS: [[usize; 5]; 5] = [
    [1, 1, 1, 1, 1],
    [1, 2, 2, 2, 2],
    [1, 2, 4, 5, 3],
    [1, 2, 3, 4, 5],
    [1, 2, 5, 3, 4],
];

/// AG-groupoid of order 5 with left identity 4 that is not intra-regular.
pub const G2_ROWS: [[usize; 5]; 5] = [
    [1, 1, 1, 1, 1],
    [1, 5, 5, 3, 5],
    [1, 5, 5, 2, 5],
    [1, 2, 3, 4, 5],
    [1, 5, 5, 5, 5],
];

fn from_one_based(rows: &[[usize; 5]; 5]) -> FiniteMagma {
    let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.iter().map(|v| v - 1).collect()).collect();
    FiniteMagma::from_rows(&rows).expect("fixture table is valid")
}

pub fn g1() -> FiniteMagma {
    from_one_based(&G1_ROWS)
}

pub fn g2() -> FiniteMagma {
    from_one_based(&G2_ROWS)
}

pub const EXAMPLE_MU: [&str; 5] = ["1", "0", "0", "0", "0"];
pub const EXAMPLE_GAMMA: [&str; 5] = ["0.3", "0.4", "0.2", "0.2", "0.2"];

/// The set given with the first table. Its first element has
/// `mu + gamma = 13/10`, so only lenient mode accepts it.
pub fn example_ifs(strictness: Strictness) -> Result<Ifs> {
    Ifs::parse(&EXAMPLE_MU, &EXAMPLE_GAMMA, strictness)
}

pub const CONVERSE_MU: [&str; 5] = ["0.4", "0.8", "0", "0", "0"];
pub const CONVERSE_GAMMA: [&str; 5] = ["0.4", "0.3", "0.9", "0.9", "1"];
pub const CONVERSE_ALPHA: &str = "0.4";

/// The set used on the first table to show level cuts can be ideals while
/// the fuzzy set is not. Element 2 has `mu + gamma = 11/10`, so it is
/// loaded leniently.
pub fn converse_ifs() -> Ifs {
    Ifs::parse(&CONVERSE_MU, &CONVERSE_GAMMA, Strictness::Lenient).expect("well-formed fixture")
}

pub const SECOND_A_MU: [&str; 5] = ["0.3", "0.3", "0.3", "0.1", "0.4"];
pub const SECOND_A_GAMMA: [&str; 5] = ["0.2", "0.3", "0.4", "0.5", "0.2"];
pub const SECOND_B_MU: [&str; 5] = ["0.5", "0.5", "0.5", "0.4", "0.6"];
pub const SECOND_B_GAMMA: [&str; 5] = ["0.3", "0.4", "0.5", "0.6", "0.3"];

pub fn second_a() -> Ifs {
    Ifs::parse(&SECOND_A_MU, &SECOND_A_GAMMA, Strictness::Strict).expect("valid fixture")
}

pub fn second_b() -> Ifs {
    Ifs::parse(&SECOND_B_MU, &SECOND_B_GAMMA, Strictness::Strict).expect("valid fixture")
}
