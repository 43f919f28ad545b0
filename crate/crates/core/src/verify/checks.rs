use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use super::linalg::{from_pairs, rank, Echelon, SparseVec};
use super::{Counterexample, Suite, VerifyReport};
use crate::arith::Rational;
use crate::operators::{
    casimir, matrix_f_raise, matrix_phi_down, matrix_phi_param, u_commutator, Gen, GenComb, Representation,
    SparseOperator, StructureConstants,
};
use crate::patterns::{branching, weyl_dim, HighestWeight};

/// First entry where `got` differs from `expected`.
fn first_difference(context: &str, expected: &SparseOperator, got: &SparseOperator) -> Option<Counterexample> {
    if expected == got {
        return None;
    }
    let diff = expected.sub(got);
    let (s, t, _) = diff.entries().next().expect("matrices differ");
    Some(Counterexample::new(format!("{context}, entry {s} -> {t}"), expected.get(s, t), got.get(s, t)))
}

fn comb_to_string(comb: &GenComb) -> String {
    if comb.is_empty() {
        return "0".into();
    }
    comb.iter().map(|(g, c)| format!("({c}){g}")).collect::<Vec<_>>().join(" + ")
}

fn combination(r: &Representation, comb: &GenComb) -> SparseOperator {
    comb.iter().fold(SparseOperator::zero(r.dim()), |acc, (g, c)| acc.axpy(c, &r.generators()[g]))
}

/// `[X, Y]` against the structure constants, for every unordered pair of
/// distinct canonical generators.
pub fn check_brackets(r: &Representation, sc: &StructureConstants) -> VerifyReport {
    let gens = Gen::all_canonical(r.n());
    let pairs: Vec<(Gen, Gen)> =
        gens.iter().enumerate().flat_map(|(a, x)| gens[a + 1..].iter().map(move |y| (*x, *y))).collect();
    let found: Vec<Counterexample> = pairs
        .par_iter()
        .filter_map(|&(x, y)| {
            let got = r.generators()[&x].commutator(&r.generators()[&y]);
            let comb = sc.bracket(x, y);
            let want = combination(r, comb);
            first_difference(&format!("[{x},{y}] = {}", comb_to_string(comb)), &want, &got)
        })
        .collect();
    VerifyReport::new(Suite::Brackets, r, found)
}

/// Every nonzero entry of every `F(i,j)` moves the weight by `ε_i - ε_j`.
pub fn check_weights(r: &Representation) -> VerifyReport {
    let n = r.n();
    let weights: Vec<Vec<i64>> =
        r.basis().patterns().iter().map(|p| p.weight().iter().map(|h| h.twice()).collect()).collect();
    let mut found = Vec::new();
    for g in Gen::all(n).into_iter().filter(|g| !g.is_zero()) {
        let root = g.root_twice(n);
        for (s, t, _) in r.op(g).entries() {
            let shift: Vec<i64> = (0..n).map(|a| weights[t][a] - weights[s][a]).collect();
            if shift != root {
                found.push(Counterexample::new(
                    format!("{g}, entry {s} -> {t} (doubled weight shift)"),
                    format!("{root:?}"),
                    format!("{shift:?}"),
                ));
            }
        }
    }
    VerifyReport::new(Suite::Weights, r, found)
}

/// The ξ vector is killed by every raising `F(i,j)` and has weight `λ`.
pub fn check_highest(r: &Representation) -> VerifyReport {
    let xi = r.basis().xi_index();
    let mut found = Vec::new();
    for g in Gen::all(r.n()).into_iter().filter(|g| g.is_raising() && !g.is_zero()) {
        let col = r.op(g).column(xi).to_vec();
        if !col.is_empty() {
            found.push(Counterexample::new(format!("{g} on the highest vector"), "0", format!("{col:?}")));
        }
    }
    for (k, lam) in r.highest_weight().entries().iter().enumerate() {
        let g = Gen::new(k as i64 + 1, k as i64 + 1);
        let want: Vec<(usize, Rational)> = if lam.twice() == 0 { Vec::new() } else { vec![(xi, lam.to_rational())] };
        let got = r.op(g).column(xi).to_vec();
        if got != want {
            found.push(Counterexample::new(
                format!("{g} on the highest vector"),
                format!("{want:?}"),
                format!("{got:?}"),
            ));
        }
    }
    VerifyReport::new(Suite::Highest, r, found)
}

/// Pattern count against the Weyl formula, the branching sum, and (for
/// `n ≥ 2`, where the algebra is perfect) vanishing traces of all generators.
pub fn check_dimension(r: &Representation) -> VerifyReport {
    let hw = r.highest_weight();
    let weyl = weyl_dim(hw);
    let mut found = Vec::new();
    if BigUint::from(r.dim()) != weyl {
        found.push(Counterexample::new("pattern count", &weyl, r.dim()));
    }
    if hw.n() >= 2 {
        let total = branching(hw).total_dim();
        if total != weyl {
            found.push(Counterexample::new("Σ c(μ) dim V(μ)", &weyl, total));
        }
        for (g, m) in r.generators() {
            if m.dim() != r.dim() {
                found.push(Counterexample::new(format!("size of {g}"), r.dim(), m.dim()));
                continue;
            }
            let tr: Rational = (0..m.dim()).map(|s| m.get(s, s)).sum();
            if !tr.is_zero() {
                found.push(Counterexample::new(format!("trace of {g}"), 0, tr));
            }
        }
    }
    VerifyReport::new(Suite::Dim, r, found)
}

/// Dimension of the common kernel of `ops` on the span of `sources`.
fn joint_kernel_dim(ops: &[SparseOperator], sources: &[usize], dim: usize) -> usize {
    let images = sources.iter().map(|&s| {
        let mut v = SparseVec::new();
        for (o, op) in ops.iter().enumerate() {
            for (t, c) in op.column(s) {
                v.insert(o * dim + t, c.clone());
            }
        }
        v
    });
    sources.len() - rank(images)
}

/// The branching sum identity, and the multiplicities `c(μ)` recomputed from
/// the matrices: the o(2n-2) highest vectors of weight `μ` span the common
/// kernel of its raising generators inside the `μ` weight space.
pub fn check_branching(r: &Representation) -> VerifyReport {
    let hw = r.highest_weight();
    let n = hw.n();
    let mut found = Vec::new();
    if n < 2 {
        return VerifyReport::new(Suite::Branching, r, found);
    }
    let table = branching(hw);
    let weyl = weyl_dim(hw);
    if table.total_dim() != weyl {
        found.push(Counterexample::new("Σ c(μ) dim V(μ)", &weyl, table.total_dim()));
    }

    let cartan: Vec<SparseOperator> = (1..n as i64).map(|k| r.op(Gen::new(k, k))).collect();
    let mut spaces: BTreeMap<Vec<Rational>, Vec<usize>> = BTreeMap::new();
    for s in 0..r.dim() {
        let mut w = Vec::with_capacity(n - 1);
        for (k, h) in cartan.iter().enumerate() {
            let col = h.column(s);
            if col.iter().any(|(t, _)| *t != s) {
                found.push(Counterexample::new(
                    format!("F({},{}) column {s}", k + 1, k + 1),
                    "diagonal",
                    format!("{col:?}"),
                ));
            }
            w.push(h.get(s, s));
        }
        spaces.entry(w).or_default().push(s);
    }
    let raising: Vec<SparseOperator> =
        Gen::all_canonical(n - 1).into_iter().filter(|g| g.is_raising()).map(|g| r.op(g)).collect();
    let mut derived: BTreeMap<Vec<Rational>, u64> = BTreeMap::new();
    for (w, idx) in &spaces {
        let c = joint_kernel_dim(&raising, idx, r.dim());
        if c > 0 {
            derived.insert(w.clone(), c as u64);
        }
    }
    let expected: BTreeMap<Vec<Rational>, u64> = table
        .multiplicities
        .iter()
        .map(|(mu, c)| (mu.entries().iter().map(|e| e.to_rational()).collect(), *c))
        .collect();
    if derived != expected {
        let show = |m: &BTreeMap<Vec<Rational>, u64>| {
            m.iter()
                .map(|(w, c)| format!("{}: {c}", w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
                .collect::<Vec<_>>()
                .join("; ")
        };
        found.push(Counterexample::new("multiplicities from the matrices", show(&expected), show(&derived)));
    }
    VerifyReport::new(Suite::Branching, r, found)
}

/// `Ω = Σ F_ij F_ji` predicted from `λ`: on the highest vector every term with
/// `i > j` vanishes and each `i < j` term reduces to the Cartan element `[F_ij, F_ji]`.
pub fn expected_casimir(hw: &HighestWeight, sc: &StructureConstants) -> Rational {
    let n = hw.n();
    let lam = |g: Gen| -> Rational {
        if g.is_cartan() && g.i > 0 {
            hw.entries()[g.i as usize - 1].to_rational()
        } else {
            Rational::zero()
        }
    };
    let mut total: Rational = hw
        .entries()
        .iter()
        .map(|e| {
            let x = e.to_rational();
            &x * &x * Rational::from_int(2)
        })
        .sum();
    for x in Gen::all(n).into_iter().filter(|g| g.is_raising() && !g.is_zero()) {
        let (s1, cx) = x.canonical().expect("nonzero");
        let (s2, cy) = Gen::new(x.j, x.i).canonical().expect("nonzero");
        let sign = Rational::from_int(s1 * s2);
        for (g, c) in sc.bracket(cx, cy) {
            total += &sign * c * lam(*g);
        }
    }
    total
}

/// The scalar by which `Ω` acts, if it is a scalar matrix.
pub fn casimir_scalar(r: &Representation) -> Option<Rational> {
    casimir(r.n(), |g| r.op(g)).scalar_value()
}

pub fn check_casimir(r: &Representation, sc: &StructureConstants) -> VerifyReport {
    let omega = casimir(r.n(), |g| r.op(g));
    let want = expected_casimir(r.highest_weight(), sc);
    let mut found = Vec::new();
    match omega.scalar_value() {
        Some(c) if c == want => {}
        Some(c) => found.push(Counterexample::new("Casimir scalar", &want, c)),
        None => {
            let scalar = SparseOperator::identity(r.dim()).scale(&want);
            found.extend(first_difference("Casimir is not scalar", &scalar, &omega));
        }
    }
    VerifyReport::new(Suite::Casimir, r, found)
}

/// The highest vector generates everything, and it spans the common kernel of
/// the raising generators.
pub fn check_irreducible(r: &Representation) -> VerifyReport {
    let dim = r.dim();
    let xi = r.basis().xi_index();
    let ops: Vec<&SparseOperator> = r.generators().values().collect();
    let mut span = Echelon::new();
    let mut queue: Vec<SparseVec> = Vec::new();
    if let Some(v) = span.insert(SparseVec::from([(xi, Rational::one())])) {
        queue.push(v);
    }
    while let Some(v) = queue.pop() {
        let pairs: Vec<(usize, Rational)> = v.into_iter().collect();
        for op in &ops {
            if let Some(w) = span.insert(from_pairs(&op.apply_sparse(&pairs))) {
                queue.push(w);
            }
            if span.rank() == dim {
                queue.clear();
                break;
            }
        }
    }
    let mut found = Vec::new();
    if span.rank() != dim {
        found.push(Counterexample::new("span of the orbit of the highest vector", dim, span.rank()));
    }
    let raising: Vec<SparseOperator> =
        Gen::all_canonical(r.n()).into_iter().filter(|g| g.is_raising()).map(|g| r.op(g)).collect();
    let all: Vec<usize> = (0..dim).collect();
    let kernel = joint_kernel_dim(&raising, &all, dim);
    let xi_killed = raising.iter().all(|m| m.column(xi).is_empty());
    if kernel != 1 || !xi_killed {
        found.push(Counterexample::new(
            "common kernel of the raising generators",
            "the line through the highest vector",
            format!("dimension {kernel}, contains highest vector: {xi_killed}"),
        ));
    }
    VerifyReport::new(Suite::Irreducible, r, found)
}

/// `Φ_{-k,k} = Σ_{i=1}^{k-1} F_{-k,i} F_{ik}` and `u Φ_{k-1,-k}(u) → F_{k-1,-k}` as `u → ∞`.
pub fn check_phi(r: &Representation) -> VerifyReport {
    let mut found = Vec::new();
    for k in 2..=r.n() {
        let ki = k as i64;
        match matrix_phi_down(r.basis(), k) {
            Ok(d) => {
                let sum = (1..ki).fold(SparseOperator::zero(r.dim()), |acc, i| {
                    acc.add(&r.op(Gen::new(-ki, i)).mul(&r.op(Gen::new(i, ki))))
                });
                found.extend(first_difference(&format!("Φ(-{k},{k}) against Σ F(-{k},i)F(i,{k})"), &d, &sum));
            }
            Err(e) => found.push(Counterexample::new(format!("Φ(-{k},{k})"), "a matrix", e)),
        }
        let lower = r.op(Gen::new(ki - 1, -ki));
        match matrix_phi_param(r.basis(), k).map(|p| p.limit_coeff(1)) {
            Ok(Ok(lim)) => {
                found.extend(first_difference(
                    &format!("1/u coefficient of Φ({},-{k})(u) against F({},-{k})", k - 1, k - 1),
                    &lim,
                    &lower,
                ));
            }
            Ok(Err(e)) => found.push(Counterexample::new(format!("Φ({},-{k})(u) at infinity", k - 1), "decay", e)),
            Err(e) => found.push(Counterexample::new(format!("Φ({},-{k})(u)", k - 1), "a matrix", e)),
        }
    }
    VerifyReport::new(Suite::Phi, r, found)
}

/// The `u`-commutator is regular at `u = 0`, and `F_{k-1,k}` equals its
/// continued value.
pub fn check_regularization(r: &Representation) -> VerifyReport {
    let mut found = Vec::new();
    for k in 2..=r.n() {
        let ki = k as i64;
        if let Err(e) = u_commutator(r.basis(), k) {
            found.push(Counterexample::new(format!("u-commutator for k = {k}"), "no pole at u = 0", e));
        }
        match matrix_f_raise(r.basis(), k) {
            Ok(m) => found.extend(first_difference(&format!("F({},{k})", k - 1), &m, &r.op(Gen::new(ki - 1, ki)))),
            Err(e) => found.push(Counterexample::new(format!("F({},{k})", k - 1), "a matrix", e)),
        }
    }
    VerifyReport::new(Suite::Regularization, r, found)
}

/// A copy of `r` with one matrix entry changed, chosen so that `suite` must
/// notice it.
pub fn mutant(r: &Representation, suite: Suite) -> Representation {
    let mut m = r.clone();
    let xi = r.basis().xi_index();
    let g = match (suite, r.n()) {
        (_, 1) => Gen::new(1, 1),
        (Suite::Brackets | Suite::Dim | Suite::Branching | Suite::Casimir, _) => Gen::new(1, 1),
        (Suite::Phi, _) => Gen::new(1, -2),
        (Suite::Weights | Suite::Highest | Suite::Irreducible | Suite::Regularization, _) => Gen::new(1, 2),
    };
    // a third never turns a half-integer weight into its negative
    let v = r.generators()[&g].get(xi, xi) + Rational::new(1, 3);
    m.corrupt(g, xi, xi, v);
    m
}
