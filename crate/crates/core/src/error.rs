use thiserror::Error;

use crate::tableaux::Cell;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover relation contains a directed cycle")]
    CycleDetected,

    #[error("element index {index} out of range for poset with {len} elements")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("expected two distinct elements, got {0} twice")]
    SameElement(usize),

    #[error("adding {a} < {b} would create a cycle ({b} is already below {a})")]
    WouldCreateCycle { a: usize, b: usize },

    #[error("elements {a} and {b} are comparable")]
    ComparablePair { a: usize, b: usize },

    #[error("poset is a chain; it has no incomparable pair")]
    IsChain,

    #[error("{what} exceeds the configured limit of {limit}")]
    SizeLimitExceeded { what: &'static str, limit: usize },

    #[error("lower ideal is not contained in the upper ideal")]
    NotNested,

    #[error("element set is not an order ideal")]
    NotAnIdeal,

    #[error("cell {0} lies outside the shape")]
    CellOutsideShape(Cell),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("skew shape cannot be reduced: {0}")]
    NotReducible(String),

    #[error("exact division left a remainder in {0}")]
    NonIntegralResult(&'static str),

    #[error("invalid two-row configuration: {0}")]
    InvalidCase(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
