//! The scalar coefficients `A`, `B`, `C` and the vectors `ζ^±` that enter the
//! matrix elements of the lowering generators.

use std::collections::BTreeMap;

use super::OperatorError;
use crate::arith::{HalfInt, Rational};
use crate::patterns::{Pattern, Shift};

fn q(h: HalfInt) -> Rational {
    h.to_rational()
}

/// Formal combination of patterns. Arrays that are not patterns are dropped,
/// as are zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinComb {
    terms: BTreeMap<Pattern, Rational>,
}

impl LinComb {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(p: Pattern) -> Self {
        let mut lc = Self::new();
        lc.push(p, Rational::one());
        lc
    }

    pub fn push(&mut self, p: Pattern, c: Rational) {
        if c.is_zero() || !p.is_valid() {
            return;
        }
        let e = self.terms.entry(p).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Pattern, &Rational)> {
        self.terms.iter()
    }
}

/// `A_ki = Π_{a ≠ i} 1 / (l²_{k-1,i} - l²_{k-1,a})`, `a = 1..k-1`.
pub fn coeff_a(p: &Pattern, k: usize, i: usize) -> Result<Rational, OperatorError> {
    let li = q(p.l(k - 1, i));
    let mut den = Rational::one();
    for a in (1..k).filter(|&a| a != i) {
        let la = q(p.l(k - 1, a));
        den *= &(&li * &li - &la * &la);
    }
    den.recip().map_err(|_| OperatorError::DegenerateDenominator { coeff: 'A', k, i })
}

/// `B_kj(x) = Π_{a ≠ j} (x + l'_{k-1,a})(x - l'_{k-1,a} + 1) / (l'_{k-1,a} - l'_{k-1,j})`.
pub fn coeff_b(p: &Pattern, k: usize, j: usize, x: &Rational) -> Result<Rational, OperatorError> {
    let lj = q(p.lp(k - 1, j));
    let mut num = Rational::one();
    let mut den = Rational::one();
    for a in (1..k).filter(|&a| a != j) {
        let la = q(p.lp(k - 1, a));
        num *= &((x + &la) * (x - &la + Rational::one()));
        den *= &(&la - &lj);
    }
    num.checked_div(&den).map_err(|_| OperatorError::DegenerateDenominator { coeff: 'B', k, i: j })
}

/// `C_ki` split as `(rest, bottom)` with `C_ki = rest · bottom`, where
/// `bottom = l_kk - l'_{k-1,i} + 1` is the only factor involving `λ_kk`.
pub fn coeff_c_parts(p: &Pattern, k: usize, i: usize) -> Result<(Rational, Rational), OperatorError> {
    let lp = q(p.lp(k - 1, i));
    let one = Rational::one();
    let hi = q(p.primed_zero(k));
    let lo = q(p.lam(k, 1).min(p.lam(k - 1, 1)));
    let mut rest = (&hi + &lp - &one) * (&lo - &lp + &one);
    for a in 2..k {
        rest *= &(q(p.l(k, a)) - &lp + &one);
        rest *= &(q(p.l(k - 1, a)) - &lp + &one);
    }
    let mut den = Rational::one();
    for a in (1..k).filter(|&a| a != i) {
        den *= &(q(p.lp(k - 1, a)) - &lp);
    }
    let rest = rest.checked_div(&den).map_err(|_| OperatorError::DegenerateDenominator { coeff: 'C', k, i })?;
    let bottom = q(p.l(k, k)) - &lp + &one;
    Ok((rest, bottom))
}

pub fn coeff_c(p: &Pattern, k: usize, i: usize) -> Result<Rational, OperatorError> {
    let (rest, bottom) = coeff_c_parts(p, k, i)?;
    Ok(rest * bottom)
}

/// Which of the two signs of `ζ^±_Λ(k, i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `Σ_j Σ_m B_kj(x) B_{k-1,m}(x) ζ_{Λ + δ'_{k-1,j} ± δ_{k-1,i} + δ'_{k-2,m}}`.
fn double_sum(p: &Pattern, k: usize, i: usize, x: &Rational, d: i64) -> Result<LinComb, OperatorError> {
    let mut out = LinComb::new();
    for j in 1..k {
        let bj = coeff_b(p, k, j, x)?;
        for m in 1..k - 1 {
            let bm = coeff_b(p, k - 1, m, x)?;
            let t = p.shifted(&[Shift::primed(k - 1, j, 1), Shift::lam(k - 1, i, d), Shift::primed(k - 2, m, 1)]);
            out.push(t, &bj * &bm);
        }
    }
    Ok(out)
}

/// `Σ_j B_kj(x) ζ_{Λ + δ'_{k-1,j} ± δ_{k-1,1}}`.
fn upper_sum(p: &Pattern, k: usize, x: &Rational, d: i64) -> Result<LinComb, OperatorError> {
    let mut out = LinComb::new();
    for j in 1..k {
        let t = p.shifted(&[Shift::primed(k - 1, j, 1), Shift::lam(k - 1, 1, d)]);
        out.push(t, coeff_b(p, k, j, x)?);
    }
    Ok(out)
}

/// `Σ_m B_{k-1,m}(x) ζ_{Λ ± δ_{k-1,1} + δ'_{k-2,m}}`.
fn lower_sum(p: &Pattern, k: usize, x: &Rational, d: i64) -> Result<LinComb, OperatorError> {
    let mut out = LinComb::new();
    for m in 1..k - 1 {
        let t = p.shifted(&[Shift::lam(k - 1, 1, d), Shift::primed(k - 2, m, 1)]);
        out.push(t, coeff_b(p, k - 1, m, x)?);
    }
    Ok(out)
}

/// `ζ^+_Λ(k, i)` or `ζ^-_Λ(k, i)` for `2 ≤ k ≤ n`, `1 ≤ i ≤ k-1`.
///
/// For `i = 1` the shape depends on how `a = λ_{k-1,1}` compares with
/// `b = λ_k1` and `c = λ_{k-2,1}`; at `k = 2` there is no `c` and it acts as
/// `-∞`, so the sums over `m` are empty.
pub fn zeta(p: &Pattern, k: usize, i: usize, sign: Sign) -> Result<LinComb, OperatorError> {
    let x = q(p.l(k - 1, i));
    if i >= 2 {
        return match sign {
            Sign::Plus => double_sum(p, k, i, &x, 1),
            Sign::Minus => Ok(LinComb::single(p.shifted(&[Shift::lam(k - 1, i, -1)]))),
        };
    }
    let a = p.lam(k - 1, 1);
    let b = p.lam(k, 1);
    let c = (k >= 3).then(|| p.lam(k - 2, 1));
    // comparisons against c, with c = -∞ when absent
    let lt_c = c.is_some_and(|c| a < c);
    let le_c = c.is_some_and(|c| a <= c);
    match sign {
        Sign::Plus => {
            if a < b && lt_c {
                double_sum(p, k, 1, &x, 1)
            } else if a >= b && !lt_c {
                Ok(LinComb::single(p.shifted(&[Shift::lam(k - 1, 1, 1)])))
            } else if a < b {
                upper_sum(p, k, &x, 1)
            } else {
                lower_sum(p, k, &x, 1)
            }
        }
        Sign::Minus => {
            let x = x - Rational::one();
            if a <= b && le_c {
                Ok(LinComb::single(p.shifted(&[Shift::lam(k - 1, 1, -1)])))
            } else if a > b && le_c {
                upper_sum(p, k, &x, -1)
            } else if a <= b {
                lower_sum(p, k, &x, -1)
            } else {
                double_sum(p, k, 1, &x, -1)
            }
        }
    }
}

pub fn zeta_plus(p: &Pattern, k: usize, i: usize) -> Result<LinComb, OperatorError> {
    zeta(p, k, i, Sign::Plus)
}

pub fn zeta_minus(p: &Pattern, k: usize, i: usize) -> Result<LinComb, OperatorError> {
    zeta(p, k, i, Sign::Minus)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(rows: &[&[i64]]) -> Pattern {
        Pattern::from_rows_twice(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn coefficient_a() {
        // λ_2· = (0,-2), so l_2· = (0,-3)
        let p = pat(&[&[0, -4, -4], &[-4, -4], &[0, -4], &[-4], &[0]]);
        assert_eq!(coeff_a(&p, 3, 1).unwrap(), r(-1, 9));
        assert_eq!(coeff_a(&p, 3, 2).unwrap(), r(1, 9));
        assert_eq!(coeff_a(&p, 2, 1).unwrap(), r(1, 1));
    }

    #[test]
    fn coefficient_b() {
        // λ'_2· = (0,-1), so l'_2· = (0,-2)
        let p = pat(&[&[0, 0, -2], &[0, -2], &[0, 0], &[0], &[0]]);
        let x = r(1, 1);
        assert_eq!(coeff_b(&p, 3, 1, &x).unwrap(), r(2, 1));
        assert_eq!(coeff_b(&p, 3, 2, &x).unwrap(), r(1, 1));
        assert_eq!(coeff_b(&p, 2, 1, &x).unwrap(), r(1, 1));
    }

    #[test]
    fn coefficient_c() {
        let p = pat(&[&[0, -2], &[-2], &[0]]);
        assert_eq!(coeff_c(&p, 2, 1).unwrap(), r(0, 1));
        // λ = (0,-2): (0 - 1 - 1)(0 + 1 + 1)(-3 + 1 + 1) = 4
        let p = pat(&[&[0, -4], &[-2], &[0]]);
        assert_eq!(coeff_c(&p, 2, 1).unwrap(), r(4, 1));
        let (rest, bottom) = coeff_c_parts(&p, 2, 1).unwrap();
        assert_eq!((rest, bottom), (r(-4, 1), r(-1, 1)));
    }

    #[test]
    fn zeta_at_level_two() {
        // λ = (0,-1), the ξ pattern: λ'_11 = -1, λ_11 = 0
        let p = pat(&[&[0, -2], &[-2], &[0]]);
        let plus = zeta_plus(&p, 2, 1).unwrap();
        assert_eq!(plus, LinComb::single(pat(&[&[0, -2], &[-2], &[2]])));
        assert!(zeta_minus(&p, 2, 1).unwrap().is_empty());
    }
}
