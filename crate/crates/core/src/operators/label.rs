use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::OperatorError;

/// The generator `F_ij = E_ij - E_{-j,-i}` with `i, j ∈ {-n..-1, 1..n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    pub i: i64,
    pub j: i64,
}

/// `±1..±n` in the order `-n, …, -1, 1, …, n`.
pub fn indices(n: usize) -> Vec<i64> {
    let n = n as i64;
    (-n..=n).filter(|&i| i != 0).collect()
}

impl Gen {
    pub const fn new(i: i64, j: i64) -> Self {
        Gen { i, j }
    }

    /// `F_{-j,-i}`, which equals `-F_ij`.
    pub fn partner(self) -> Gen {
        Gen::new(-self.j, -self.i)
    }

    /// `F_{-i,i}` vanishes identically.
    pub fn is_zero(self) -> bool {
        self.i == -self.j
    }

    /// One label per pair `{F_ij, F_{-j,-i}}`: both indices positive, or
    /// opposite signs with `i + j < 0`.
    pub fn is_canonical(self) -> bool {
        if self.is_zero() {
            return false;
        }
        if (self.i > 0) == (self.j > 0) {
            self.i > 0
        } else {
            self.i + self.j < 0
        }
    }

    /// `(sign, canonical label)` with `F_ij = sign · F_label`; `None` for zero.
    pub fn canonical(self) -> Option<(i64, Gen)> {
        if self.is_zero() {
            None
        } else if self.is_canonical() {
            Some((1, self))
        } else {
            Some((-1, self.partner()))
        }
    }

    /// `i` precedes `j` in `-n, …, -1, 1, …, n`.
    pub fn is_raising(self) -> bool {
        self.i < self.j
    }

    pub fn is_cartan(self) -> bool {
        self.i == self.j
    }

    /// Root `ε_i - ε_j` as doubled coordinates, with `ε_{-a} = -ε_a`.
    pub fn root_twice(self, n: usize) -> Vec<i64> {
        let mut r = vec![0i64; n];
        let mut put = |idx: i64, sign: i64| {
            let s = if idx > 0 { sign } else { -sign };
            r[idx.unsigned_abs() as usize - 1] += 2 * s;
        };
        put(self.i, 1);
        put(self.j, -1);
        r
    }

    pub fn in_range(self, n: usize) -> bool {
        let n = n as i64;
        let ok = |x: i64| x != 0 && x.abs() <= n;
        ok(self.i) && ok(self.j)
    }

    /// The `n(2n-1)` canonical labels in ascending order.
    pub fn all_canonical(n: usize) -> Vec<Gen> {
        let idx = indices(n);
        let mut out: Vec<Gen> =
            idx.iter().flat_map(|&i| idx.iter().map(move |&j| Gen::new(i, j))).filter(|g| g.is_canonical()).collect();
        out.sort();
        out
    }

    /// Every label `F(i,j)`, zero ones included.
    pub fn all(n: usize) -> Vec<Gen> {
        let idx = indices(n);
        idx.iter().flat_map(|&i| idx.iter().map(move |&j| Gen::new(i, j))).collect()
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F({},{})", self.i, self.j)
    }
}

/// Accepts `"F(i,j)"`, with optional spaces.
impl FromStr for Gen {
    type Err = OperatorError;
    fn from_str(s: &str) -> Result<Self, OperatorError> {
        let bad = || OperatorError::BadLabel(s.to_string());
        let inner = s.trim().strip_prefix("F(").and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        let i: i64 = a.trim().parse().map_err(|_| bad())?;
        let j: i64 = b.trim().parse().map_err(|_| bad())?;
        if i == 0 || j == 0 {
            return Err(bad());
        }
        Ok(Gen::new(i, j))
    }
}

impl Serialize for Gen {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Gen {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_counts() {
        for n in 1..=5 {
            assert_eq!(Gen::all_canonical(n).len(), n * (2 * n - 1));
        }
        let want = [(-2, 1), (1, -2), (1, 1), (1, 2), (2, 1), (2, 2)];
        let got: Vec<(i64, i64)> = Gen::all_canonical(2).iter().map(|g| (g.i, g.j)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn partner_signs() {
        assert_eq!(Gen::new(-1, 2).canonical(), Some((-1, Gen::new(-2, 1))));
        assert_eq!(Gen::new(-1, -1).canonical(), Some((-1, Gen::new(1, 1))));
        assert_eq!(Gen::new(-2, 2).canonical(), None);
        assert_eq!(Gen::new(2, -1).canonical(), Some((-1, Gen::new(1, -2))));
    }

    #[test]
    fn parse_and_roots() {
        let g: Gen = "F(1,-2)".parse().unwrap();
        assert_eq!(g, Gen::new(1, -2));
        assert_eq!(g.to_string(), "F(1,-2)");
        assert!("F(0,1)".parse::<Gen>().is_err());
        assert!("G(1,2)".parse::<Gen>().is_err());
        // ε_1 - ε_{-2} = ε_1 + ε_2
        assert_eq!(g.root_twice(2), vec![2, 2]);
        assert_eq!(Gen::new(1, 1).root_twice(2), vec![0, 0]);
        assert!(Gen::new(-2, 1).is_raising());
        assert!(!Gen::new(2, 1).is_raising());
    }
}
