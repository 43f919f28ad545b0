use std::fmt;

use serde::{Deserialize, Serialize};

use super::PatternError;
use crate::arith::HalfInt;

/// Highest weight `(λ_1, …, λ_n)` of an irreducible o(2n)-module, in the
/// convention `-|λ_1| ≥ λ_2 ≥ … ≥ λ_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "HighestWeightJson", into = "HighestWeightJson")]
pub struct HighestWeight {
    entries: Vec<HalfInt>,
}

#[derive(Serialize, Deserialize)]
struct HighestWeightJson {
    n: usize,
    lambda_twice: Vec<i64>,
}

impl From<HighestWeight> for HighestWeightJson {
    fn from(hw: HighestWeight) -> Self {
        HighestWeightJson { n: hw.n(), lambda_twice: hw.twice() }
    }
}

impl TryFrom<HighestWeightJson> for HighestWeight {
    type Error = PatternError;
    fn try_from(j: HighestWeightJson) -> Result<Self, PatternError> {
        if j.lambda_twice.len() != j.n {
            return Err(PatternError::Length { expected: j.n, got: j.lambda_twice.len() });
        }
        HighestWeight::new(j.lambda_twice.into_iter().map(HalfInt::from_twice).collect())
    }
}

impl HighestWeight {
    pub fn new(entries: Vec<HalfInt>) -> Result<Self, PatternError> {
        check_dominant(&entries)?;
        Ok(HighestWeight { entries })
    }

    pub fn from_twice(twice: &[i64]) -> Result<Self, PatternError> {
        Self::new(twice.iter().copied().map(HalfInt::from_twice).collect())
    }

    /// Parses a comma-separated list such as `"0,-1"` or `"-1/2,-1/2"`.
    pub fn parse(n: usize, s: &str) -> Result<Self, PatternError> {
        let entries = s.split(',').map(|t| t.parse::<HalfInt>()).collect::<Result<Vec<_>, _>>()?;
        if entries.len() != n {
            return Err(PatternError::Length { expected: n, got: entries.len() });
        }
        Self::new(entries)
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[HalfInt] {
        &self.entries
    }

    pub fn twice(&self) -> Vec<i64> {
        self.entries.iter().map(|h| h.twice()).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.entries.iter().all(|h| h.twice() == 0)
    }
}

/// Parity and the chain `-|λ_1| ≥ λ_2 ≥ … ≥ λ_n`. Rank 1 has no inequalities.
pub(crate) fn check_dominant(entries: &[HalfInt]) -> Result<(), PatternError> {
    let Some(&first) = entries.first() else {
        return Err(PatternError::ZeroRank);
    };
    if entries.iter().any(|e| !e.same_parity(first)) {
        return Err(PatternError::Parity);
    }
    if let Some(&second) = entries.get(1) {
        if -first.abs() < second {
            return Err(PatternError::Inequality(format!("-|λ_1| ≥ λ_2 (-|{first}| < {second})")));
        }
    }
    for (i, w) in entries.windows(2).enumerate().skip(1) {
        if w[0] < w[1] {
            return Err(PatternError::Inequality(format!("λ_{} ≥ λ_{} ({} < {})", i + 1, i + 2, w[0], w[1])));
        }
    }
    Ok(())
}

/// Written as `(λ_1,…,λ_n)`, e.g. `(0,-1)` or `(-1/2,-1/2)`.
impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
