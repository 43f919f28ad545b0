//! Integers and half-integers stored as doubled integers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{ArithError, Rational};

/// An element of `Z ∪ (1/2 + Z)`, stored as twice its value.
///
/// Parity questions ("are these all integers or all half-integers") reduce to
/// the parity of `twice`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(v: i64) -> Self {
        HalfInt { twice: 2 * v }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// True when both values are integers or both are half-integers.
    pub const fn same_parity(self, other: HalfInt) -> bool {
        (self.twice - other.twice) % 2 == 0
    }

    pub fn abs(self) -> Self {
        HalfInt { twice: self.twice.abs() }
    }

    /// `self + v` for an integer `v`.
    pub fn add_int(self, v: i64) -> Self {
        HalfInt { twice: self.twice + 2 * v }
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(self.twice, 2)
    }
}

impl Ord for HalfInt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.twice.cmp(&other.twice)
    }
}

impl PartialOrd for HalfInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice + rhs.twice }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice - rhs.twice }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl From<HalfInt> for Rational {
    fn from(h: HalfInt) -> Rational {
        h.to_rational()
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Accepts `"3"`, `"-1"`, `"1/2"`, `"-3/2"`; also `"4/2"`, which is the integer 2.
impl FromStr for HalfInt {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ArithError::Parse(s.to_string());
        match s.split_once('/') {
            None => s.parse::<i64>().map(HalfInt::from_int).map_err(|_| bad()),
            Some((num, den)) => {
                let num: i64 = num.trim().parse().map_err(|_| bad())?;
                match den.trim() {
                    "1" => Ok(HalfInt::from_int(num)),
                    "2" => Ok(HalfInt::from_twice(num)),
                    _ => Err(bad()),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let h: HalfInt = "-1/2".parse().unwrap();
        assert_eq!(h.twice(), -1);
        assert_eq!(h.to_string(), "-1/2");
        assert_eq!("4/2".parse::<HalfInt>().unwrap(), HalfInt::from_int(2));
        assert_eq!("-3".parse::<HalfInt>().unwrap().to_string(), "-3");
        assert!("1/3".parse::<HalfInt>().is_err());
        assert!("x".parse::<HalfInt>().is_err());
    }

    #[test]
    fn ordering_and_parity() {
        let a = HalfInt::from_twice(-3);
        let b = HalfInt::from_twice(1);
        assert!(a < b);
        assert!(a.same_parity(b));
        assert!(!a.same_parity(HalfInt::from_int(0)));
        assert_eq!((a + b).twice(), -2);
        assert_eq!((-a).abs(), a.abs());
        assert_eq!(a.add_int(2).twice(), 1);
    }

    #[test]
    fn serializes_doubled_value() {
        let h = HalfInt::from_twice(-1);
        assert_eq!(serde_json::to_string(&h).unwrap(), r#"{"twice":-1}"#);
    }
}
