//! Generator matrices on the pattern basis.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::coeffs::{coeff_a, coeff_c, coeff_c_parts, zeta, Sign};
use super::{OperatorError, ParamOperator, SparseOperator};
use crate::arith::{HalfInt, Poly, Rational, RationalFunction};
use crate::patterns::{Pattern, PatternBasis, Shift};

fn q(h: HalfInt) -> Rational {
    h.to_rational()
}

fn par_columns<T: Send>(
    dim: usize,
    f: impl Fn(usize) -> Result<Vec<T>, OperatorError> + Sync + Send,
) -> Result<Vec<Vec<T>>, OperatorError> {
    (0..dim).into_par_iter().map(f).collect()
}

/// `F_kk`: diagonal with the weight component `k` of each pattern.
pub fn matrix_f_diag(basis: &PatternBasis, k: usize) -> SparseOperator {
    SparseOperator::diagonal(basis.patterns().iter().map(|p| q(p.weight_component(k))).collect())
}

/// Calls `f(target, i, coefficient, sign)` for every term of `ζ^±_Λ(k, i)`.
fn for_each_zeta_term(
    p: &Pattern,
    k: usize,
    mut f: impl FnMut(&Pattern, usize, Rational, Sign),
) -> Result<(), OperatorError> {
    for i in 1..k {
        let a = coeff_a(p, k, i)?;
        for sign in [Sign::Plus, Sign::Minus] {
            for (t, c) in zeta(p, k, i, sign)?.iter() {
                f(t, i, &a * c, sign);
            }
        }
    }
    Ok(())
}

/// `F_{k-1,-k} ζ_Λ = Σ_i A_ki (ζ^+_Λ(k,i) - ζ^-_Λ(k,i))`.
pub fn matrix_f_lower(basis: &PatternBasis, k: usize) -> Result<SparseOperator, OperatorError> {
    let cols = par_columns(basis.dim(), |s| {
        let mut col = Vec::new();
        for_each_zeta_term(basis.get(s), k, |t, _, c, sign| {
            if let Some(t) = basis.find(t) {
                col.push((t, if sign == Sign::Plus { c } else { -c }));
            }
        })?;
        Ok(col)
    })?;
    Ok(SparseOperator::from_columns(basis.dim(), cols))
}

/// `Φ_{-k,k} ζ_Λ = Σ_i C_ki (F_kk - l'_{k-1,i} + 2) ζ_{Λ - δ'_{k-1,i}}`, with
/// `F_kk` evaluated on the shifted pattern.
pub fn matrix_phi_down(basis: &PatternBasis, k: usize) -> Result<SparseOperator, OperatorError> {
    let cols = par_columns(basis.dim(), |s| {
        let p = basis.get(s);
        let mut col = Vec::new();
        for i in 1..k {
            let t = p.shifted(&[Shift::primed(k - 1, i, -1)]);
            let Some(ti) = basis.find(&t) else { continue };
            let w = q(t.weight_component(k));
            let c = coeff_c(p, k, i)? * (w - q(p.lp(k - 1, i)) + Rational::from_int(2));
            col.push((ti, c));
        }
        Ok(col)
    })?;
    Ok(SparseOperator::from_columns(basis.dim(), cols))
}

/// `Φ_{k-1,-k}(u) ζ_Λ = Σ_i A_ki [ζ^+ / (u + l_{k-1,i} + F_kk - 1) - ζ^- / (u - l_{k-1,i} + F_kk - 1)]`,
/// with `F_kk` evaluated on each target pattern.
pub fn matrix_phi_param(basis: &PatternBasis, k: usize) -> Result<ParamOperator, OperatorError> {
    let cols = par_columns(basis.dim(), |s| {
        let p = basis.get(s);
        let mut col = Vec::new();
        for_each_zeta_term(p, k, |t, i, c, sign| {
            let Some(ti) = basis.find(t) else { return };
            let l = q(p.l(k - 1, i));
            let w = q(t.weight_component(k));
            let (shift, c) = match sign {
                Sign::Plus => (l + w - Rational::one(), c),
                Sign::Minus => (w - l - Rational::one(), -c),
            };
            col.push((ti, RationalFunction::inverse_linear(shift).scale(&c)));
        })?;
        Ok(col)
    })?;
    Ok(ParamOperator::from_columns(basis.dim(), cols))
}

/// `Φ_{k-1,-k}(u+2) Φ_{-k,k} - Φ_{-k,k} Φ_{k-1,-k}(u)` with canonical entries,
/// together with its value at `u = 0`.
///
/// Every entry must be regular at `u = 0`; a pole is reported as
/// [`OperatorError::Regularization`] with the offending `(source, target)`.
pub fn u_commutator(basis: &PatternBasis, k: usize) -> Result<(ParamOperator, SparseOperator), OperatorError> {
    let p = matrix_phi_param(basis, k)?;
    let d = matrix_phi_down(basis, k)?;
    let m = p.shift(&Rational::from_int(2)).mul_right(&d).sub(&p.mul_left(&d));
    let at_zero = m.eval(&Rational::zero())?;
    Ok((m, at_zero))
}

/// The extended set of intermediate patterns for [`matrix_f_raise`]: basis
/// patterns first, then arrays that are patterns except for
/// `λ'_{k-1,k-1} = λ_kk - 1`.
struct Intermediates<'a> {
    basis: &'a PatternBasis,
    extra: Vec<Pattern>,
    extra_index: HashMap<Pattern, usize>,
}

impl<'a> Intermediates<'a> {
    fn is_virtual(p: &Pattern, k: usize) -> bool {
        p.primed(k - 1, k - 1) == p.lam(k, k).add_int(-1) && p.shifted(&[Shift::primed(k - 1, k - 1, 1)]).is_valid()
    }

    fn get(&self, e: usize) -> &Pattern {
        if e < self.basis.dim() {
            self.basis.get(e)
        } else {
            &self.extra[e - self.basis.dim()]
        }
    }

    fn len(&self) -> usize {
        self.basis.dim() + self.extra.len()
    }
}

/// `F_{k-1,k}`, the value at `u = 0` of the commutator in [`u_commutator`],
/// obtained by analytic continuation in the bottom entry of the top row.
///
/// Every coefficient is computed with `λ_kk` replaced by `λ_kk + τ`, which
/// touches only the bottom factor of `C_ki` and lowers every `F_kk`
/// eigenvalue by `τ`. Intermediate vectors of `Φ_{-k,k}` may then include
/// arrays with `λ'_{k-1,k-1} = λ_kk - 1`, which become patterns for generic `τ`. The
/// product is formed at `u = 0` exactly, as a rational function of `τ`, and
/// evaluated at `τ = 0`.
///
/// Literal evaluation of the `u`-commutator at `u = 0` loses two kinds of
/// contributions: terms of the form `u/u` on degenerate hyperplanes, and the
/// whole product when `Φ_{-k,k}` vanishes on a subspace. The continuation
/// restores both.
pub fn matrix_f_raise(basis: &PatternBasis, k: usize) -> Result<SparseOperator, OperatorError> {
    let dim = basis.dim();
    let two = Rational::from_int(2);

    // Φ_{-k,k}(τ): polynomial entries, basis source → extended target.
    let d_cols = par_columns(dim, |s| {
        let p = basis.get(s);
        let mut col = Vec::new();
        for i in 1..k {
            let t = p.shifted(&[Shift::primed(k - 1, i, -1)]);
            if !t.is_valid() && !Intermediates::is_virtual(&t, k) {
                continue;
            }
            let (rest, bottom) = coeff_c_parts(p, k, i)?;
            // rest · (bottom + τ) · (w - τ - l' + 2)
            let w = q(t.weight_component(k)) - q(p.lp(k - 1, i)) + &two;
            let poly = &Poly::new(vec![&rest * &bottom, rest.clone()]) * &Poly::new(vec![w, Rational::from_int(-1)]);
            col.push((t, poly));
        }
        Ok(col)
    })?;

    let mut extra: Vec<Pattern> =
        d_cols.iter().flatten().filter(|(t, _)| basis.find(t).is_none()).map(|(t, _)| t.clone()).collect();
    extra.sort();
    extra.dedup();
    let extra_index = extra.iter().cloned().enumerate().map(|(i, p)| (p, dim + i)).collect();
    let ext = Intermediates { basis, extra, extra_index };
    let ext_id = |t: &Pattern| basis.find(t).unwrap_or_else(|| ext.extra_index[t]);
    let d: Vec<Vec<(usize, Poly)>> =
        d_cols.into_iter().map(|col| col.into_iter().map(|(t, poly)| (ext_id(&t), poly)).collect()).collect();

    // Φ_{k-1,-k}(u0)(τ) applied to one pattern; targets are basis patterns.
    let phi_at = |p: &Pattern, u0: &Rational| -> Result<Vec<(usize, RationalFunction)>, OperatorError> {
        let mut col = Vec::new();
        for_each_zeta_term(p, k, |t, i, c, sign| {
            let Some(ti) = basis.find(t) else { return };
            let l = q(p.l(k - 1, i));
            let w = q(t.weight_component(k));
            let (shift, c) = match sign {
                Sign::Plus => (u0 + &l + &w - Rational::one(), c),
                Sign::Minus => (u0 - &l + &w - Rational::one(), -c),
            };
            // c / (shift - τ) = -c / (τ - shift)
            col.push((ti, RationalFunction::inverse_linear(-shift).scale(&-c)));
        })?;
        Ok(col)
    };
    let p2: Vec<Vec<(usize, RationalFunction)>> =
        (0..ext.len()).into_par_iter().map(|e| phi_at(ext.get(e), &two)).collect::<Result<_, _>>()?;
    let p0: Vec<Vec<(usize, RationalFunction)>> =
        (0..dim).into_par_iter().map(|s| phi_at(basis.get(s), &Rational::zero())).collect::<Result<_, _>>()?;

    let cols = par_columns(dim, |s| {
        let mut acc: BTreeMap<usize, RationalFunction> = BTreeMap::new();
        let mut add = |t: usize, f: RationalFunction| {
            let e = acc.entry(t).or_insert_with(RationalFunction::zero);
            *e = &*e + &f;
        };
        for (e, poly) in &d[s] {
            let dp = RationalFunction::from_poly(poly.clone());
            for (t, f) in &p2[*e] {
                add(*t, f * &dp);
            }
        }
        for (m, f) in &p0[s] {
            for (e, poly) in &d[*m] {
                if *e < dim {
                    add(*e, -&(f * &RationalFunction::from_poly(poly.clone())));
                }
            }
        }
        let mut col = Vec::new();
        for (t, f) in acc {
            let v = f.eval(&Rational::zero()).map_err(|_| OperatorError::Regularization {
                from: s,
                to: t,
                entry: f.to_string(),
            })?;
            col.push((t, v));
        }
        Ok(col)
    })?;
    Ok(SparseOperator::from_columns(dim, cols))
}

/// Coordinates of a pattern inside its o(4) tower: the exponents `(a, b)` of
/// `F_21^a F_{1,-2}^b` applied to the tower's extremal vector, and the string
/// lengths `p`, `q` of the two sl(2) factors.
struct Tower {
    a: i64,
    b: i64,
    p: i64,
    q: i64,
}

fn int(h: HalfInt) -> i64 {
    debug_assert!(h.is_integer());
    h.twice() / 2
}

impl Tower {
    fn of(pat: &Pattern) -> Tower {
        let (l21, l22) = (pat.lam(2, 1), pat.lam(2, 2));
        let l11 = pat.lam(1, 1);
        let top = l21.max(l11);
        let c = int(pat.primed(1, 1) - l22);
        Tower { a: int(top - l11) + c, b: int(top - l21) + c, p: int(l21 - l22), q: -int(l21 + l22) }
    }

    /// The pattern with the same upper rows and tower coordinates `(a, b)`.
    fn pattern(pat: &Pattern, a: i64, b: i64) -> Pattern {
        let (l21, l22) = (pat.lam(2, 1), pat.lam(2, 2));
        let l11 = l21.add_int(b - a);
        let top = l21.max(l11);
        let c = a - int(top - l11);
        let lp11 = l22.add_int(c);
        pat.shifted(&[Shift::primed(1, 1, int(lp11 - pat.primed(1, 1))), Shift::lam(1, 1, int(l11 - pat.lam(1, 1)))])
    }
}

fn tower_move(basis: &PatternBasis, s: usize, a: i64, b: i64, c: Rational) -> Vec<(usize, Rational)> {
    let t = Tower::pattern(basis.get(s), a, b);
    let ti = basis.find(&t).expect("tower moves stay inside the basis");
    vec![(ti, c)]
}

/// `F_21`: raises the exponent of `F_21` by one, with coefficient 1.
pub fn g2_f21(basis: &PatternBasis) -> SparseOperator {
    let cols = (0..basis.dim())
        .map(|s| {
            let tw = Tower::of(basis.get(s));
            if tw.a < tw.p {
                tower_move(basis, s, tw.a + 1, tw.b, Rational::one())
            } else {
                Vec::new()
            }
        })
        .collect();
    SparseOperator::from_columns(basis.dim(), cols)
}

/// `F_{-2,1}`: lowers the exponent of `F_{1,-2}` by one along its sl(2) string.
pub fn g2_fm21(basis: &PatternBasis) -> SparseOperator {
    let cols = (0..basis.dim())
        .map(|s| {
            let tw = Tower::of(basis.get(s));
            if tw.b >= 1 {
                tower_move(basis, s, tw.a, tw.b - 1, Rational::from_int(tw.b * (tw.q - tw.b + 1)))
            } else {
                Vec::new()
            }
        })
        .collect();
    SparseOperator::from_columns(basis.dim(), cols)
}
