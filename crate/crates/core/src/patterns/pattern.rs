use std::fmt;

use serde::{Deserialize, Serialize};

use super::highest::check_dominant;
use super::PatternError;
use crate::arith::HalfInt;

/// A D-type pattern, stored as its rows in the order
/// `λ_n, λ'_{n-1}, λ_{n-1}, …, λ'_1, λ_1`.
///
/// The derived ordering compares rows in that order and entries left to
/// right, which is the lexicographic order on the flattened doubled tuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PatternJson", into = "PatternJson")]
pub struct Pattern {
    rows: Vec<Vec<HalfInt>>,
}

#[derive(Serialize, Deserialize)]
struct PatternJson {
    rows_twice: Vec<Vec<i64>>,
}

impl From<Pattern> for PatternJson {
    fn from(p: Pattern) -> Self {
        PatternJson { rows_twice: p.rows.iter().map(|r| r.iter().map(|h| h.twice()).collect()).collect() }
    }
}

impl TryFrom<PatternJson> for Pattern {
    type Error = PatternError;
    fn try_from(j: PatternJson) -> Result<Self, PatternError> {
        Pattern::from_rows(j.rows_twice.into_iter().map(|r| r.into_iter().map(HalfInt::from_twice).collect()).collect())
    }
}

/// Adds `delta` to one entry: `λ'_{k,i}` when `primed`, else `λ_{k,i}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shift {
    pub primed: bool,
    pub k: usize,
    pub i: usize,
    pub delta: i64,
}

impl Shift {
    pub fn lam(k: usize, i: usize, delta: i64) -> Self {
        Shift { primed: false, k, i, delta }
    }

    pub fn primed(k: usize, i: usize, delta: i64) -> Self {
        Shift { primed: true, k, i, delta }
    }
}

impl Pattern {
    /// Checks row count and row lengths only; see [`Pattern::is_valid`].
    pub fn from_rows(rows: Vec<Vec<HalfInt>>) -> Result<Self, PatternError> {
        if rows.len().is_multiple_of(2) {
            return Err(PatternError::Shape(format!("{} rows (must be odd)", rows.len())));
        }
        let n = rows.len().div_ceil(2);
        for (r, row) in rows.iter().enumerate() {
            let want = n - r.div_ceil(2);
            if row.len() != want {
                return Err(PatternError::Shape(format!("row {r} has {} entries, expected {want}", row.len())));
            }
        }
        Ok(Pattern { rows })
    }

    pub fn from_rows_twice(rows: &[Vec<i64>]) -> Result<Self, PatternError> {
        Self::from_rows(rows.iter().map(|r| r.iter().copied().map(HalfInt::from_twice).collect()).collect())
    }

    /// The pattern whose rows are all prefixes of `λ`; it labels the highest vector.
    pub fn xi(lambda: &[HalfInt]) -> Pattern {
        let n = lambda.len();
        let mut rows = vec![lambda.to_vec()];
        for k in (1..n).rev() {
            rows.push(lambda[1..=k].to_vec());
            rows.push(lambda[..k].to_vec());
        }
        Pattern { rows }
    }

    pub fn n(&self) -> usize {
        self.rows.len().div_ceil(2)
    }

    pub fn rows(&self) -> &[Vec<HalfInt>] {
        &self.rows
    }

    pub fn flattened_twice(&self) -> Vec<i64> {
        self.rows.iter().flatten().map(|h| h.twice()).collect()
    }

    fn lam_pos(&self, k: usize) -> usize {
        2 * (self.n() - k)
    }

    pub fn top(&self) -> &[HalfInt] {
        &self.rows[0]
    }

    /// Row `λ_{k·}`, for `1 ≤ k ≤ n`.
    pub fn lam_row(&self, k: usize) -> &[HalfInt] {
        &self.rows[self.lam_pos(k)]
    }

    /// Row `λ'_{k·}`, for `1 ≤ k < n`.
    pub fn primed_row(&self, k: usize) -> &[HalfInt] {
        &self.rows[self.lam_pos(k) - 1]
    }

    /// `λ_{ki}` with 1-based `i`.
    pub fn lam(&self, k: usize, i: usize) -> HalfInt {
        self.lam_row(k)[i - 1]
    }

    /// `λ'_{ki}` with 1-based `i`.
    pub fn primed(&self, k: usize, i: usize) -> HalfInt {
        self.primed_row(k)[i - 1]
    }

    /// `l_{ki} = λ_{ki} - i + 1`.
    pub fn l(&self, k: usize, i: usize) -> HalfInt {
        self.lam(k, i).add_int(1 - i as i64)
    }

    /// `l'_{ki} = λ'_{ki} - i + 1`.
    pub fn lp(&self, k: usize, i: usize) -> HalfInt {
        self.primed(k, i).add_int(1 - i as i64)
    }

    /// `λ'_{k-1,0} = max(λ_{k1}, λ_{k-1,1})`, for `k ≥ 2`.
    pub fn primed_zero(&self, k: usize) -> HalfInt {
        self.lam(k, 1).max(self.lam(k - 1, 1))
    }

    pub fn shifted(&self, shifts: &[Shift]) -> Pattern {
        let mut p = self.clone();
        for s in shifts {
            let pos = if s.primed { p.lam_pos(s.k) - 1 } else { p.lam_pos(s.k) };
            let e = &mut p.rows[pos][s.i - 1];
            *e = e.add_int(s.delta);
        }
        p
    }

    /// Parity, dominance of the top row, and both interlacing chains at every level.
    pub fn is_valid(&self) -> bool {
        self.violation().is_none()
    }

    /// Like [`Pattern::is_valid`], but also rejects malformed row shapes.
    pub fn validate(&self) -> Result<bool, PatternError> {
        Pattern::from_rows(self.rows.clone())?;
        Ok(self.is_valid())
    }

    /// The first violated condition, if any.
    pub fn violation(&self) -> Option<String> {
        let par = self.rows[0][0];
        if self.rows.iter().flatten().any(|e| !e.same_parity(par)) {
            return Some("parity".into());
        }
        if let Err(e) = check_dominant(self.top()) {
            return Some(e.to_string());
        }
        for k in 2..=self.n() {
            if let Some(v) = self.level_violation(k) {
                return Some(v);
            }
        }
        None
    }

    fn level_violation(&self, k: usize) -> Option<String> {
        let top = self.lam_row(k);
        let pr = self.primed_row(k - 1);
        let bot = self.lam_row(k - 1);
        if -top[0].abs() < pr[0] {
            return Some(format!("-|λ_{k}1| ≥ λ'_{},1", k - 1));
        }
        if -bot[0].abs() < pr[0] {
            return Some(format!("-|λ_{},1| ≥ λ'_{},1", k - 1, k - 1));
        }
        for i in 0..k - 1 {
            if pr[i] < top[i + 1] {
                return Some(format!("λ'_{},{} ≥ λ_{k},{}", k - 1, i + 1, i + 2));
            }
            if i >= 1 {
                if top[i] < pr[i] {
                    return Some(format!("λ_{k},{} ≥ λ'_{},{}", i + 1, k - 1, i + 1));
                }
                if pr[i - 1] < bot[i] || bot[i] < pr[i] {
                    return Some(format!("λ'_{},{} ≥ λ_{},{} ≥ λ'_{},{}", k - 1, i, k - 1, i + 1, k - 1, i + 1));
                }
            }
        }
        None
    }

    /// The eigenvalue of `F_kk` on this basis vector.
    pub fn weight_component(&self, k: usize) -> HalfInt {
        if k == 1 {
            return self.lam(1, 1);
        }
        let sum = |r: &[HalfInt]| r.iter().fold(HalfInt::ZERO, |a, &b| a + b);
        let m = self.primed_zero(k);
        let p = sum(self.primed_row(k - 1));
        m + m + p + p - sum(self.lam_row(k)) - sum(self.lam_row(k - 1))
    }

    /// `(F_11, …, F_nn)` eigenvalues.
    pub fn weight(&self) -> Vec<HalfInt> {
        (1..=self.n()).map(|k| self.weight_component(k)).collect()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "[{}]", rows.join(" | "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(rows: &[&[i64]]) -> Pattern {
        Pattern::from_rows_twice(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn small_validity_cases() {
        assert!(pat(&[&[0, 0], &[0], &[0]]).is_valid());
        // λ = (0,-1), λ'_11 = 0, λ_11 = 1: -|1| < 0
        assert!(!pat(&[&[0, -2], &[0], &[2]]).is_valid());
        assert!(pat(&[&[0, -2], &[-2], &[2]]).is_valid());
        assert!(!pat(&[&[0, -2], &[-1], &[1]]).is_valid());
    }

    #[test]
    fn shape_errors() {
        assert!(Pattern::from_rows_twice(&[vec![0, 0], vec![0]]).is_err());
        assert!(Pattern::from_rows_twice(&[vec![0, 0], vec![0, 0], vec![0]]).is_err());
        assert!(serde_json::from_str::<Pattern>(r#"{"rows_twice":[[0,0],[0],[0,1]]}"#).is_err());
    }

    #[test]
    fn weight_of_vector_rep_vector() {
        let p = pat(&[&[0, -2], &[-2], &[2]]);
        assert_eq!(p.weight(), vec![HalfInt::from_int(1), HalfInt::from_int(0)]);
    }

    #[test]
    fn xi_pattern_has_weight_lambda() {
        let lam: Vec<HalfInt> = [-1, -1, -3].iter().map(|&t| HalfInt::from_twice(t)).collect();
        let xi = Pattern::xi(&lam);
        assert!(xi.is_valid());
        assert_eq!(xi.weight(), lam);
        assert_eq!(xi.primed_row(2), &lam[1..3]);
    }

    #[test]
    fn accessors_and_shift() {
        let p = pat(&[&[0, -4], &[-2], &[0]]);
        assert_eq!(p.l(2, 2).twice(), -6);
        assert_eq!(p.lp(1, 1).twice(), -2);
        assert_eq!(p.primed_zero(2), HalfInt::ZERO);
        let q = p.shifted(&[Shift::primed(1, 1, -1), Shift::lam(1, 1, 1)]);
        assert_eq!(q.flattened_twice(), vec![0, -4, -4, 2]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"rows_twice":[[0,-4],[-2],[0]]}"#);
    }
}
