//! Generator matrices of o(2n) on the pattern basis.

mod build;
mod coeffs;
mod label;
mod rep;
mod sparse;
mod structure;

pub use build::{
    g2_f21, g2_fm21, matrix_f_diag, matrix_f_lower, matrix_f_raise, matrix_phi_down, matrix_phi_param, u_commutator,
};
pub use coeffs::{coeff_a, coeff_b, coeff_c, coeff_c_parts, zeta, zeta_minus, zeta_plus, LinComb, Sign};
pub use label::{indices, Gen};
pub use rep::{close_generators, seed_generators, BuildOptions, ClosureOrder, Representation};
pub use sparse::{ParamOperator, SparseOperator};
pub use structure::{casimir, defining_matrix, expand, GenComb, StructureConstants};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperatorError {
    #[error("vanishing denominator in {coeff}_{{{k},{i}}}")]
    DegenerateDenominator { coeff: char, k: usize, i: usize },
    /// Entry `(from → to)` has a pole at zero.
    #[error("pole at 0 in the entry from basis vector {from} to {to}: {entry}")]
    Regularization { from: usize, to: usize, entry: String },
    #[error("bracket closure stalled; missing {}", missing.join(", "))]
    ClosureIncomplete { missing: Vec<String> },
    #[error("matrix is not in the span of the generators: {0}")]
    Expansion(String),
    #[error("bad generator label {0:?} (expected \"F(i,j)\")")]
    BadLabel(String),
    #[error("malformed operator data: {0}")]
    Malformed(String),
    #[error("cannot start worker pool: {0}")]
    ThreadPool(String),
}
