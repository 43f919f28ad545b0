use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::{HighestWeight, Pattern, PatternError};
use crate::arith::{HalfInt, Rational};

/// Values `hi, hi-1, …, lo` (empty when `hi < lo`).
fn descending(hi: HalfInt, lo: HalfInt) -> impl Iterator<Item = HalfInt> {
    (lo.twice()..=hi.twice()).rev().step_by(2).map(HalfInt::from_twice)
}

/// All `(λ'_{k-1·}, λ_{k-1·})` pairs interlacing the row `top` of length `k ≥ 2`.
fn next_rows(top: &[HalfInt]) -> Vec<(Vec<HalfInt>, Vec<HalfInt>)> {
    let k = top.len();
    let mut primed_rows: Vec<Vec<HalfInt>> = vec![Vec::new()];
    for i in 0..k - 1 {
        let hi = if i == 0 { -top[0].abs() } else { top[i] };
        primed_rows = primed_rows
            .into_iter()
            .flat_map(|row| {
                descending(hi, top[i + 1]).map(move |v| {
                    let mut r = row.clone();
                    r.push(v);
                    r
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for pr in primed_rows {
        let mut rows: Vec<Vec<HalfInt>> = vec![Vec::new()];
        for i in 0..k - 1 {
            let (hi, lo) = if i == 0 { (-pr[0], pr[0]) } else { (pr[i - 1], pr[i]) };
            rows = rows
                .into_iter()
                .flat_map(|row| {
                    descending(hi, lo).map(move |v| {
                        let mut r = row.clone();
                        r.push(v);
                        r
                    })
                })
                .collect();
        }
        out.extend(rows.into_iter().map(|r| (pr.clone(), r)));
    }
    out
}

/// Every pattern with top row `λ`, ascending in the flattened doubled order.
pub fn enumerate(hw: &HighestWeight) -> Vec<Pattern> {
    let mut partial: Vec<Vec<Vec<HalfInt>>> = vec![vec![hw.entries().to_vec()]];
    for _ in (2..=hw.n()).rev() {
        partial = partial
            .into_iter()
            .flat_map(|rows| {
                let top = rows.last().expect("nonempty").clone();
                next_rows(&top).into_iter().map(move |(pr, r)| {
                    let mut rows = rows.clone();
                    rows.push(pr);
                    rows.push(r);
                    rows
                })
            })
            .collect();
    }
    let mut out: Vec<Pattern> =
        partial.into_iter().map(|rows| Pattern::from_rows(rows).expect("well-formed by construction")).collect();
    out.sort();
    out
}

/// Number of patterns with top row `λ`, without materializing them.
pub fn count_patterns(hw: &HighestWeight) -> u64 {
    fn count(top: &[HalfInt], memo: &mut HashMap<Vec<HalfInt>, u64>) -> u64 {
        if top.len() == 1 {
            return 1;
        }
        if let Some(&c) = memo.get(top) {
            return c;
        }
        let c = next_rows(top).into_iter().map(|(_, r)| count(&r, memo)).sum();
        memo.insert(top.to_vec(), c);
        c
    }
    count(hw.entries(), &mut HashMap::new())
}

/// Weyl's dimension formula, after mapping `λ` to the dominant weight
/// `(-λ_n, …, -λ_2, λ_1)` in the usual D_n convention.
pub fn weyl_dim(hw: &HighestWeight) -> BigUint {
    let n = hw.n();
    let e = hw.entries();
    let mu: Vec<i64> = (0..n).map(|i| if i + 1 < n { -e[n - 1 - i].twice() } else { e[0].twice() }).collect();
    // Doubled ℓ and ρ; the factors of 4 cancel in the quotient.
    let ell: Vec<i64> = (0..n).map(|i| mu[i] + 2 * (n - 1 - i) as i64).collect();
    let rho: Vec<i64> = (0..n).map(|i| 2 * (n - 1 - i) as i64).collect();
    let mut q = Rational::one();
    for i in 0..n {
        for j in i + 1..n {
            let num = BigInt::from(ell[i] - ell[j]) * BigInt::from(ell[i] + ell[j]);
            let den = BigInt::from(rho[i] - rho[j]) * BigInt::from(rho[i] + rho[j]);
            q *= &Rational::from_bigints(num, den);
        }
    }
    assert!(q.is_integer() && !q.is_negative(), "Weyl quotient {q} is not a natural number");
    q.numer().to_biguint().expect("nonnegative")
}

/// The ordered basis of one representation, with reverse lookup.
#[derive(Clone, Debug)]
pub struct PatternBasis {
    hw: HighestWeight,
    patterns: Vec<Pattern>,
    index: HashMap<Pattern, usize>,
}

impl PatternBasis {
    pub fn new(hw: &HighestWeight) -> Self {
        Self::from_patterns(hw.clone(), enumerate(hw))
    }

    /// Wraps an already ordered list; used when reading archives.
    pub fn from_patterns(hw: HighestWeight, patterns: Vec<Pattern>) -> Self {
        let index = patterns.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        PatternBasis { hw, patterns, index }
    }

    pub fn highest_weight(&self) -> &HighestWeight {
        &self.hw
    }

    pub fn n(&self) -> usize {
        self.hw.n()
    }

    pub fn dim(&self) -> usize {
        self.patterns.len()
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn get(&self, i: usize) -> &Pattern {
        &self.patterns[i]
    }

    pub fn index_of(&self, p: &Pattern) -> Result<usize, PatternError> {
        self.index.get(p).copied().ok_or_else(|| PatternError::NotFound(p.to_string()))
    }

    /// Index of `p`, or `None` when `p` is not a basis pattern.
    pub fn find(&self, p: &Pattern) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn xi_index(&self) -> usize {
        self.index_of(&Pattern::xi(self.hw.entries())).expect("xi pattern is always a basis pattern")
    }
}

/// Multiplicities `c(μ)` of the o(2n-2) constituents of `V(λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingTable {
    pub multiplicities: BTreeMap<HighestWeight, u64>,
}

impl BranchingTable {
    /// `Σ c(μ) dim V'(μ)`.
    pub fn total_dim(&self) -> BigUint {
        self.multiplicities.iter().map(|(mu, &c)| weyl_dim(mu) * c).sum()
    }
}

/// Keys are written as `"(μ_1,…,μ_{n-1})"`.
impl Serialize for BranchingTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut m = serializer.serialize_map(Some(self.multiplicities.len()))?;
        for (mu, c) in &self.multiplicities {
            m.serialize_entry(&mu.to_string(), c)?;
        }
        m.end()
    }
}

/// Restriction to o(2n-2): each `(ν, μ)` pair of interlacing rows contributes once to `c(μ)`.
pub fn branching(hw: &HighestWeight) -> BranchingTable {
    assert!(hw.n() >= 2, "branching needs n ≥ 2");
    let mut multiplicities = BTreeMap::new();
    for (_, mu) in next_rows(hw.entries()) {
        let mu = HighestWeight::new(mu).expect("interlacing rows are dominant");
        *multiplicities.entry(mu).or_insert(0) += 1;
    }
    BranchingTable { multiplicities }
}
