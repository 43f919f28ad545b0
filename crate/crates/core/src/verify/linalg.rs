//! Exact row reduction on sparse rational vectors.

use std::collections::BTreeMap;

use crate::arith::Rational;

pub type SparseVec = BTreeMap<usize, Rational>;

pub fn from_pairs(v: &[(usize, Rational)]) -> SparseVec {
    v.iter().filter(|(_, c)| !c.is_zero()).cloned().collect()
}

/// Row-echelon basis of a growing subspace, keyed by pivot position.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; the remainder is zero iff `v` is in the span.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        loop {
            let Some((&lead, c)) = v.iter().find(|(k, _)| self.rows.contains_key(k)) else {
                return v;
            };
            let c = c.clone();
            let row = &self.rows[&lead];
            for (k, a) in row {
                let e = v.entry(*k).or_insert_with(Rational::zero);
                *e -= &c * a;
                if e.is_zero() {
                    v.remove(k);
                }
            }
        }
    }

    /// Adds `v` to the basis; returns the reduced vector when it was independent.
    pub fn insert(&mut self, v: SparseVec) -> Option<SparseVec> {
        let v = self.reduce(v);
        let (&lead, c) = v.iter().next()?;
        let inv = c.recip().expect("nonzero pivot");
        let v: SparseVec = v.iter().map(|(k, a)| (*k, a * &inv)).collect();
        // keep existing rows reduced at the new pivot
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&lead).cloned() {
                for (k, a) in &v {
                    let e = row.entry(*k).or_insert_with(Rational::zero);
                    *e -= &c * a;
                    if e.is_zero() {
                        row.remove(k);
                    }
                }
            }
        }
        self.rows.insert(lead, v.clone());
        Some(v)
    }
}

pub fn rank(vectors: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(k, c)| (k, Rational::from_int(c))).filter(|(_, c)| !c.is_zero()).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(rank([v(&[(0, 1), (1, 2)]), v(&[(0, 2), (1, 4)]), v(&[(2, 1)])]), 2);
        assert_eq!(rank([v(&[(0, 1), (1, 1)]), v(&[(0, 1), (1, -1)]), v(&[(1, 3)])]), 2);
        assert_eq!(rank(Vec::<SparseVec>::new()), 0);
    }

    #[test]
    fn membership() {
        let mut e = Echelon::new();
        e.insert(v(&[(0, 1), (2, 1)]));
        e.insert(v(&[(1, 1), (2, -1)]));
        assert!(e.reduce(v(&[(0, 1), (1, 1)])).is_empty());
        assert!(!e.reduce(v(&[(2, 1)])).is_empty());
    }
}
