//! Rational functions in one indeterminate `u`, kept in canonical form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{ArithError, Poly, Rational};

/// `num / den` with `gcd(num, den) = 1` and `den` monic; zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    /// Canonicalizes `num / den`. Fails only when `den` is the zero polynomial.
    pub fn new(num: Poly, den: Poly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = Poly::gcd(&num, &den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lc = den.leading().expect("nonzero denominator").recip().expect("nonzero");
        RationalFunction { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn zero() -> Self {
        RationalFunction { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction { num: p, den: Poly::one() }
    }

    /// `1 / (u + c)`.
    pub fn inverse_linear(c: Rational) -> Self {
        RationalFunction { num: Poly::one(), den: Poly::linear(c) }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Re-running canonicalization on an already canonical value is a no-op.
    pub fn recanonicalize(&self) -> Self {
        Self::canonical(self.num.clone(), self.den.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::canonical(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn has_pole_at(&self, x: &Rational) -> bool {
        self.den.eval(x).is_zero()
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational, ArithError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(ArithError::Pole { at: x.clone(), function: self.to_string() });
        }
        Ok(self.num.eval(x) / d)
    }

    /// `f(u + c)`.
    pub fn shift(&self, c: &Rational) -> Self {
        // Substitution preserves coprimality and the leading coefficient.
        RationalFunction { num: self.num.shift(c), den: self.den.shift(c) }
    }

    /// Coefficient of `u^(-k)` in the expansion of `f` at `u = ∞`.
    pub fn limit_coeff(&self, k: u32) -> Result<Rational, ArithError> {
        let (Some(dn), Some(dd)) = (self.num.degree(), self.den.degree()) else {
            return Ok(Rational::zero());
        };
        if dn > dd && k >= 1 {
            return Err(ArithError::Degree { num: dn, den: dd });
        }
        // With v = 1/u: f = v^(dd - dn) * N(v) / D(v), where N and D are the
        // reversed coefficient lists and D(0) = 1.
        let order = i64::from(k) - (dd as i64 - dn as i64);
        if order < 0 {
            return Ok(Rational::zero());
        }
        let order = order as usize;
        let rev = |p: &Poly, deg: usize, i: usize| {
            if i <= deg {
                p.coeff(deg - i)
            } else {
                Rational::zero()
            }
        };
        let mut series: Vec<Rational> = Vec::with_capacity(order + 1);
        for i in 0..=order {
            let mut c = rev(&self.num, dn, i);
            for j in 1..=i.min(dd) {
                c -= rev(&self.den, dd, j) * &series[i - j];
            }
            series.push(c);
        }
        Ok(series.pop().expect("nonempty"))
    }
}

impl From<Rational> for RationalFunction {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::canonical(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::canonical(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
