use alloc::string::String;
use core::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// The condition of the invertibility criterion that a matrix violates.
///
/// Row and column indices are 0-based; `Display` prints them 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonInvertibility {
    /// `product(row, col) != 0` for `row != col`, where `product` is
    /// `A A^T` or `A^T A`.
    OffDiagonal {
        product: &'static str,
        row: usize,
        col: usize,
        entry: String,
    },
    /// `product(i, i)` is not a unit.
    NonUnitDiagonal {
        product: &'static str,
        index: usize,
        entry: String,
    },
}

impl fmt::Display for NonInvertibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NonInvertibility::OffDiagonal {
                product,
                row,
                col,
                entry,
            } => write!(
                f,
                "{product} has nonzero off-diagonal entry ({}, {}) = {entry}",
                row + 1,
                col + 1
            ),
            NonInvertibility::NonUnitDiagonal {
                product,
                index,
                entry,
            } => write!(
                f,
                "{product} has non-unit diagonal entry ({0}, {0}) = {entry}",
                index + 1
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("semiring mismatch: {left} vs {right}")]
    SemiringMismatch { left: String, right: String },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("degenerate semiring {0} (0 = 1)")]
    Degenerate(String),
    #[error("invalid semiring parameters: {0}")]
    InvalidSemiring(String),
    #[error("{literal:?} is not an element of {semiring}")]
    InvalidElement { semiring: String, literal: String },
    #[error("malformed tables: {0}")]
    MalformedTables(String),
    #[error("not a commutative semiring: {0}")]
    NotCommutativeSemiring(String),
    #[error("unsupported for {semiring}: {operation}")]
    Unsupported {
        semiring: String,
        operation: &'static str,
    },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("matrix is not invertible: {0}")]
    NotInvertible(NonInvertibility),
    #[error("factorization does not reconstruct the matrix")]
    FactorizationMismatch,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("digraph has a cycle")]
    Cyclic,
    #[error(
        "nonzero diagonal entry ({}, {}): the matrix cannot be written as a sum of nilpotent matrices",
        .0 + 1,
        .0 + 1
    )]
    NonZeroDiagonal(usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid orthogonal decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("invalid coordinates: {0}")]
    InvalidCoordinates(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("{0} must be positive")]
    NonPositive(&'static str),
    #[error("enumeration needs {required} states, budget is {max}")]
    BudgetExceeded { required: String, max: u64 },
    #[error("search space {required} exceeds the limit {max}")]
    SearchTooLarge { required: String, max: u64 },
}
