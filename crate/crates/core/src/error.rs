use thiserror::Error;

/// Errors raised while building or combining the workbench's values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier size must be positive")]
    EmptyCarrier,

    #[error("table dimension mismatch: expected {expected}x{expected}, row {row} has {found} entries")]
    DimensionMismatch { expected: usize, row: usize, found: usize },

    #[error("table has {found} rows, expected {expected}")]
    RowCountMismatch { expected: usize, found: usize },

    #[error("entry {value} at ({row}, {col}) is outside the carrier [0, {n})")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: i64,
        n: usize,
    },

    #[error("element {element} is outside the carrier of size {n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("carrier mismatch: {left} vs {right}")]
    CarrierMismatch { left: usize, right: usize },

    #[error("subset must be non-empty")]
    EmptySubset,

    #[error("grade {0} is outside [0, 1]")]
    GradeOutOfRange(String),

    #[error("invalid grade syntax {0:?}")]
    GradeSyntax(String),

    #[error("level-cut threshold must lie in (0, 1], got {0}")]
    AlphaOutOfRange(String),

    #[error("membership and nonmembership vectors differ in length ({mu} vs {gamma})")]
    LengthMismatch { mu: usize, gamma: usize },

    #[error("element {element}: membership + nonmembership = {sum} > 1")]
    ConstraintViolation { element: usize, sum: String },

    #[error("order {n} exceeds the enumeration bound {bound}")]
    OrderTooLarge { n: usize, bound: usize },

    #[error("chain k must be positive")]
    InvalidChain,

    #[error("budget exceeded: {needed} instances needed, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("claim {claim} expects {expected}, got {found}")]
    Arity {
        claim: &'static str,
        expected: &'static str,
        found: String,
    },

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
