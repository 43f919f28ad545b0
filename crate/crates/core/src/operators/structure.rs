//! Bracket table of o(2n), read off from the defining 2n×2n matrices.

use std::collections::BTreeMap;

use super::label::indices;
use super::{Gen, OperatorError, SparseOperator};
use crate::arith::Rational;

/// `F_ij` in the defining representation, rows and columns ordered `-n..-1, 1..n`.
pub fn defining_matrix(n: usize, g: Gen) -> SparseOperator {
    let pos = |x: i64| indices(n).iter().position(|&y| y == x).expect("index in range");
    SparseOperator::from_triplets(
        2 * n,
        [(pos(g.j), pos(g.i), Rational::one()), (pos(-g.i), pos(-g.j), Rational::from_int(-1))],
    )
}

/// A combination `Σ c_g F_g` over canonical labels.
pub type GenComb = Vec<(Gen, Rational)>;

#[derive(Clone, Debug)]
pub struct StructureConstants {
    n: usize,
    table: BTreeMap<(Gen, Gen), GenComb>,
}

impl StructureConstants {
    /// Brackets every ordered pair of canonical generators in the defining representation.
    pub fn new(n: usize) -> Result<Self, OperatorError> {
        let gens = Gen::all_canonical(n);
        let mats: Vec<SparseOperator> = gens.iter().map(|&g| defining_matrix(n, g)).collect();
        let mut table = BTreeMap::new();
        for (a, x) in gens.iter().enumerate() {
            for (b, y) in gens.iter().enumerate() {
                let br = mats[a].commutator(&mats[b]);
                table.insert((*x, *y), expand(n, &br)?);
            }
        }
        Ok(StructureConstants { n, table })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `[X, Y]` for canonical `X`, `Y`.
    pub fn bracket(&self, x: Gen, y: Gen) -> &GenComb {
        &self.table[&(x, y)]
    }
}

/// Writes a 2n×2n matrix in the canonical generator basis. The coefficient of
/// canonical `F_ij` is the `(i, j)` entry; the result is checked by rebuilding.
pub fn expand(n: usize, m: &SparseOperator) -> Result<GenComb, OperatorError> {
    let idx = indices(n);
    let pos = |x: i64| idx.iter().position(|&y| y == x).expect("index in range");
    let comb: GenComb = Gen::all_canonical(n)
        .into_iter()
        .map(|g| (g, m.get(pos(g.j), pos(g.i))))
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let rebuilt = comb.iter().fold(SparseOperator::zero(2 * n), |acc, (g, c)| acc.axpy(c, &defining_matrix(n, *g)));
    if &rebuilt != m {
        return Err(OperatorError::Expansion(format!("{:?}", m.to_dense())));
    }
    Ok(comb)
}

/// The quadratic Casimir `Σ F_ij F_ji` over all `i, j ∈ ±1..±n`, as a matrix.
pub fn casimir(n: usize, op: impl Fn(Gen) -> SparseOperator) -> SparseOperator {
    let mut acc: Option<SparseOperator> = None;
    for g in Gen::all(n) {
        if g.is_zero() {
            continue;
        }
        let term = op(g).mul(&op(Gen::new(g.j, g.i)));
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    acc.expect("n ≥ 1")
}
