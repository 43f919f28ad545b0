//! D-type Gelfand–Tsetlin patterns for the chain o(2) ⊂ o(4) ⊂ … ⊂ o(2n).

mod basis;
mod highest;
mod pattern;

pub use basis::{branching, count_patterns, enumerate, weyl_dim, BranchingTable, PatternBasis};
pub use highest::HighestWeight;
pub use pattern::{Pattern, Shift};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("expected {expected} entries, got {got}")]
    Length { expected: usize, got: usize },
    #[error("mixed parity: entries must be all integers or all half-integers")]
    Parity,
    #[error("violates {0}")]
    Inequality(String),
    #[error("malformed pattern: {0}")]
    Shape(String),
    #[error("pattern not in basis: {0}")]
    NotFound(String),
    #[error(transparent)]
    Parse(#[from] crate::arith::ArithError),
}
