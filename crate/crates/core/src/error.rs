use num::BigUint;
use thiserror::Error;

use crate::report::AxiomReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("indices must satisfy i < j (got {0})")]
    IndexOrder(String),

    #[error("duplicate structure entry at {0}")]
    DuplicateEntry(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("operator search would enumerate {needed} matrices, budget is {budget}")]
    BudgetExceeded { needed: BigUint, budget: u64 },

    #[error("{check} failed:\n{report}")]
    PreconditionFailed {
        check: &'static str,
        report: AxiomReport,
    },

    #[error("not a 2-cocycle: {0}")]
    NotACocycle(String),

    #[error("not a section: projection composed with the candidate is not the identity")]
    NotASection,

    #[error("element {0} does not lie in the ideal")]
    NotInIdeal(String),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported degree {0} (only 1 and 2 are implemented)")]
    UnsupportedDegree(u8),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
