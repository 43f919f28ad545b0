//! Irreducible representations of o(2n) in the weight basis indexed by D-type
//! Gelfand–Tsetlin patterns, with exact rational generator matrices.
//!
//! - [`arith`]: half-integers, rationals, polynomials and rational functions in `u`.
//! - [`patterns`]: highest weights, pattern enumeration, Weyl dimension, branching.
//! - [`operators`]: sparse matrices of all generators `F(i,j)`.
//! - [`verify`]: exact checks of a built representation.
//! - [`interface`]: archives and the `o2n` command line.

pub mod arith;
pub mod interface;
pub mod operators;
pub mod patterns;
pub mod verify;
