//! Column-sparse square matrices over the pattern basis.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::OperatorError;
use crate::arith::{Rational, RationalFunction};

/// A linear map stored by source column: `columns[s]` lists `(t, c)` meaning
/// `ζ_s ↦ Σ c ζ_t`. Targets are strictly increasing and no `c` is zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SparseJson", into = "SparseJson")]
pub struct SparseOperator {
    dim: usize,
    columns: Vec<Vec<(usize, Rational)>>,
}

#[derive(Serialize, Deserialize)]
struct SparseJson {
    dim: usize,
    entries: Vec<(usize, usize, Rational)>,
}

impl From<SparseOperator> for SparseJson {
    fn from(op: SparseOperator) -> Self {
        SparseJson { dim: op.dim, entries: op.entries().map(|(s, t, c)| (s, t, c.clone())).collect() }
    }
}

impl TryFrom<SparseJson> for SparseOperator {
    type Error = OperatorError;
    fn try_from(j: SparseJson) -> Result<Self, OperatorError> {
        let mut last: Option<(usize, usize)> = None;
        for (s, t, c) in &j.entries {
            if *s >= j.dim || *t >= j.dim {
                return Err(OperatorError::Malformed(format!("entry ({s},{t}) outside dim {}", j.dim)));
            }
            if c.is_zero() {
                return Err(OperatorError::Malformed(format!("explicit zero at ({s},{t})")));
            }
            if last.is_some_and(|l| l >= (*s, *t)) {
                return Err(OperatorError::Malformed("entries not sorted by (source, target)".into()));
            }
            last = Some((*s, *t));
        }
        Ok(SparseOperator::from_triplets(j.dim, j.entries))
    }
}

fn normalize<T>(col: BTreeMap<usize, T>, is_zero: impl Fn(&T) -> bool) -> Vec<(usize, T)> {
    col.into_iter().filter(|(_, c)| !is_zero(c)).collect()
}

impl SparseOperator {
    pub fn zero(dim: usize) -> Self {
        SparseOperator { dim, columns: vec![Vec::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal((0..dim).map(|_| Rational::one()).collect())
    }

    pub fn diagonal(diag: Vec<Rational>) -> Self {
        let dim = diag.len();
        let columns =
            diag.into_iter().enumerate().map(|(s, c)| if c.is_zero() { Vec::new() } else { vec![(s, c)] }).collect();
        SparseOperator { dim, columns }
    }

    /// Sums duplicate `(source, target, coefficient)` triplets and drops zeros.
    pub fn from_triplets(dim: usize, triplets: impl IntoIterator<Item = (usize, usize, Rational)>) -> Self {
        let mut cols: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); dim];
        for (s, t, c) in triplets {
            assert!(s < dim && t < dim, "index out of range");
            *cols[s].entry(t).or_insert_with(Rational::zero) += c;
        }
        let columns = cols.into_iter().map(|c| normalize(c, Rational::is_zero)).collect();
        SparseOperator { dim, columns }
    }

    /// Builds column `s` from an unsorted list with possible repeats.
    pub fn from_columns(dim: usize, cols: Vec<Vec<(usize, Rational)>>) -> Self {
        assert_eq!(cols.len(), dim);
        let columns = cols
            .into_iter()
            .map(|col| {
                let mut m: BTreeMap<usize, Rational> = BTreeMap::new();
                for (t, c) in col {
                    assert!(t < dim, "index out of range");
                    *m.entry(t).or_insert_with(Rational::zero) += c;
                }
                normalize(m, Rational::is_zero)
            })
            .collect();
        SparseOperator { dim, columns }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, s: usize) -> &[(usize, Rational)] {
        &self.columns[s]
    }

    /// All nonzero entries as `(source, target, coefficient)`, sorted.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.columns.iter().enumerate().flat_map(|(s, col)| col.iter().map(move |(t, c)| (s, *t, c)))
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// Coefficient of `ζ_target` in the image of `ζ_source`.
    pub fn get(&self, source: usize, target: usize) -> Rational {
        let col = &self.columns[source];
        match col.binary_search_by_key(&target, |(t, _)| *t) {
            Ok(pos) => col[pos].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Overwrites one entry; used by the mutation self-tests.
    pub fn set(&mut self, source: usize, target: usize, value: Rational) {
        let col = &mut self.columns[source];
        match col.binary_search_by_key(&target, |(t, _)| *t) {
            Ok(pos) if value.is_zero() => {
                col.remove(pos);
            }
            Ok(pos) => col[pos].1 = value,
            Err(_) if value.is_zero() => {}
            Err(pos) => col.insert(pos, (target, value)),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        let columns = self.columns.iter().map(|col| col.iter().map(|(t, v)| (*t, v * c)).collect()).collect();
        SparseOperator { dim: self.dim, columns }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.axpy(&Rational::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.axpy(&Rational::from_int(-1), other)
    }

    /// `self + a * other`.
    pub fn axpy(&self, a: &Rational, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(x, y)| {
                let mut m: BTreeMap<usize, Rational> = x.iter().cloned().collect();
                for (t, c) in y {
                    *m.entry(*t).or_insert_with(Rational::zero) += a * c;
                }
                normalize(m, Rational::is_zero)
            })
            .collect();
        SparseOperator { dim: self.dim, columns }
    }

    /// Matrix product `self · other` (apply `other` first).
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let columns = other.columns.iter().map(|col| self.apply_sparse(col)).collect();
        SparseOperator { dim: self.dim, columns }
    }

    /// `[self, other] = self·other - other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Image of a sparse vector given as `(index, coefficient)` pairs.
    pub fn apply_sparse(&self, v: &[(usize, Rational)]) -> Vec<(usize, Rational)> {
        let mut m: BTreeMap<usize, Rational> = BTreeMap::new();
        for (k, a) in v {
            for (t, b) in &self.columns[*k] {
                *m.entry(*t).or_insert_with(Rational::zero) += a * b;
            }
        }
        normalize(m, Rational::is_zero)
    }

    /// `Some(c)` when the matrix equals `c·1`.
    pub fn scalar_value(&self) -> Option<Rational> {
        let c = if self.dim == 0 { Rational::zero() } else { self.get(0, 0) };
        let ok = self.columns.iter().enumerate().all(|(s, col)| match col.as_slice() {
            [] => c.is_zero(),
            [(t, v)] => *t == s && *v == c,
            _ => false,
        });
        ok.then_some(c)
    }

    /// Dense rows, `m[target][source]`; for display of small matrices.
    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut m = vec![vec![Rational::zero(); self.dim]; self.dim];
        for (s, t, c) in self.entries() {
            m[t][s] = c.clone();
        }
        m
    }
}

impl std::ops::Neg for &SparseOperator {
    type Output = SparseOperator;
    fn neg(self) -> SparseOperator {
        self.scale(&Rational::from_int(-1))
    }
}

/// Like [`SparseOperator`], with entries rational functions of `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamOperator {
    dim: usize,
    columns: Vec<Vec<(usize, RationalFunction)>>,
}

impl ParamOperator {
    pub fn from_columns(dim: usize, cols: Vec<Vec<(usize, RationalFunction)>>) -> Self {
        assert_eq!(cols.len(), dim);
        let columns = cols
            .into_iter()
            .map(|col| {
                let mut m: BTreeMap<usize, RationalFunction> = BTreeMap::new();
                for (t, f) in col {
                    assert!(t < dim, "index out of range");
                    let e = m.entry(t).or_insert_with(RationalFunction::zero);
                    *e = &*e + &f;
                }
                normalize(m, RationalFunction::is_zero)
            })
            .collect();
        ParamOperator { dim, columns }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, s: usize) -> &[(usize, RationalFunction)] {
        &self.columns[s]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &RationalFunction)> + '_ {
        self.columns.iter().enumerate().flat_map(|(s, col)| col.iter().map(move |(t, c)| (s, *t, c)))
    }

    pub fn get(&self, source: usize, target: usize) -> RationalFunction {
        self.columns[source]
            .iter()
            .find(|(t, _)| *t == target)
            .map(|(_, f)| f.clone())
            .unwrap_or_else(RationalFunction::zero)
    }

    /// Substitutes `u + c` for `u` in every entry.
    pub fn shift(&self, c: &Rational) -> Self {
        let columns = self.columns.iter().map(|col| col.iter().map(|(t, f)| (*t, f.shift(c))).collect()).collect();
        ParamOperator { dim: self.dim, columns }
    }

    /// `self · d`.
    pub fn mul_right(&self, d: &SparseOperator) -> Self {
        assert_eq!(self.dim, d.dim());
        let cols = (0..self.dim)
            .map(|s| {
                d.column(s)
                    .iter()
                    .flat_map(|(m, a)| self.columns[*m].iter().map(move |(t, f)| (*t, f.scale(a))))
                    .collect()
            })
            .collect();
        Self::from_columns(self.dim, cols)
    }

    /// `d · self`.
    pub fn mul_left(&self, d: &SparseOperator) -> Self {
        assert_eq!(self.dim, d.dim());
        let cols = self
            .columns
            .iter()
            .map(|col| col.iter().flat_map(|(m, f)| d.column(*m).iter().map(move |(t, a)| (*t, f.scale(a)))).collect())
            .collect();
        Self::from_columns(self.dim, cols)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let cols = (0..self.dim)
            .map(|s| self.columns[s].iter().cloned().chain(other.columns[s].iter().map(|(t, f)| (*t, -f))).collect())
            .collect();
        Self::from_columns(self.dim, cols)
    }

    /// Entry-wise evaluation; the first entry with a pole at `x` is reported.
    pub fn eval(&self, x: &Rational) -> Result<SparseOperator, OperatorError> {
        let mut cols = Vec::with_capacity(self.dim);
        for (s, col) in self.columns.iter().enumerate() {
            let mut out = Vec::with_capacity(col.len());
            for (t, f) in col {
                let v =
                    f.eval(x).map_err(|_| OperatorError::Regularization { from: s, to: *t, entry: f.to_string() })?;
                out.push((*t, v));
            }
            cols.push(out);
        }
        Ok(SparseOperator::from_columns(self.dim, cols))
    }

    /// Entry-wise coefficient of `u^(-k)` at infinity.
    pub fn limit_coeff(&self, k: u32) -> Result<SparseOperator, crate::arith::ArithError> {
        let mut cols = Vec::with_capacity(self.dim);
        for col in &self.columns {
            let mut out = Vec::with_capacity(col.len());
            for (t, f) in col {
                out.push((*t, f.limit_coeff(k)?));
            }
            cols.push(out);
        }
        Ok(SparseOperator::from_columns(self.dim, cols))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn products_and_commutators() {
        // e = E_01, f = E_10 on a 2-dim space: [e, f] = diag(1, -1)
        let e = SparseOperator::from_triplets(2, [(1, 0, q(1))]);
        let f = SparseOperator::from_triplets(2, [(0, 1, q(1))]);
        let h = e.commutator(&f);
        assert_eq!(h, SparseOperator::diagonal(vec![q(1), q(-1)]));
        assert_eq!(e.mul(&e), SparseOperator::zero(2));
        assert_eq!(h.scalar_value(), None);
        assert_eq!(SparseOperator::identity(3).scale(&q(5)).scalar_value(), Some(q(5)));
    }

    #[test]
    fn triplets_merge_and_cancel() {
        let m = SparseOperator::from_triplets(2, [(0, 1, q(2)), (0, 1, q(-2)), (1, 0, q(3))]);
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.get(1, 0), q(3));
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(json, r#"{"dim":2,"entries":[[1,0,"3"]]}"#);
        assert_eq!(serde_json::from_str::<SparseOperator>(&json).unwrap(), m);
        assert!(serde_json::from_str::<SparseOperator>(r#"{"dim":2,"entries":[[1,0,"0"]]}"#).is_err());
        assert!(serde_json::from_str::<SparseOperator>(r#"{"dim":2,"entries":[[2,0,"1"]]}"#).is_err());
    }

    #[test]
    fn set_inserts_and_removes() {
        let mut m = SparseOperator::zero(3);
        m.set(0, 2, q(1));
        m.set(0, 1, q(4));
        assert_eq!(m.column(0), &[(1, q(4)), (2, q(1))]);
        m.set(0, 2, q(0));
        assert_eq!(m.nnz(), 1);
    }
}
