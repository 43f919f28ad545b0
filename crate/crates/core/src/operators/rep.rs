use std::collections::BTreeMap;

use super::build::{g2_f21, g2_fm21, matrix_f_diag, matrix_f_lower, matrix_f_raise, u_commutator};
use super::{Gen, OperatorError, SparseOperator, StructureConstants};
use crate::arith::Rational;
use crate::patterns::{HighestWeight, PatternBasis};

/// Order in which [`close_generators`] scans pairs of known generators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ClosureOrder {
    #[default]
    Forward,
    Reverse,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct BuildOptions {
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
    pub order: ClosureOrder,
}

/// The generators given explicitly by matrix-element formulas:
/// `F_kk`, `F_{k-1,-k}`, `F_{k-1,k}`, `F_21` and `F_{-2,1}`.
pub fn seed_generators(basis: &PatternBasis) -> Result<BTreeMap<Gen, SparseOperator>, OperatorError> {
    let n = basis.n() as i64;
    let mut gens = BTreeMap::new();
    for k in 1..=n {
        gens.insert(Gen::new(k, k), matrix_f_diag(basis, k as usize));
    }
    for k in 2..=n {
        let ku = k as usize;
        gens.insert(Gen::new(k - 1, -k), matrix_f_lower(basis, ku)?);
        // The literal commutator must be free of poles at u = 0 even though its
        // value there is not used.
        u_commutator(basis, ku)?;
        gens.insert(Gen::new(k - 1, k), matrix_f_raise(basis, ku)?);
    }
    if n >= 2 {
        gens.insert(Gen::new(2, 1), g2_f21(basis));
        gens.insert(Gen::new(-2, 1), g2_fm21(basis));
    }
    Ok(gens)
}

/// Fills in every canonical generator from brackets of known ones: whenever
/// the expansion of `[X, Y]` has exactly one unknown term `Z`, solve for `Z`.
pub fn close_generators(
    mut gens: BTreeMap<Gen, SparseOperator>,
    sc: &StructureConstants,
    order: ClosureOrder,
) -> Result<BTreeMap<Gen, SparseOperator>, OperatorError> {
    let all = Gen::all_canonical(sc.n());
    loop {
        if gens.len() == all.len() {
            return Ok(gens);
        }
        let mut known: Vec<Gen> = gens.keys().copied().collect();
        if order == ClosureOrder::Reverse {
            known.reverse();
        }
        let before = gens.len();
        for &x in &known {
            for &y in &known {
                let exp = sc.bracket(x, y);
                let mut unknown = exp.iter().filter(|(g, _)| !gens.contains_key(g));
                let (Some((z, cz)), None) = (unknown.next(), unknown.next()) else { continue };
                let (z, cz) = (*z, cz.clone());
                let mut m = gens[&x].commutator(&gens[&y]);
                for (g, c) in exp.iter().filter(|(g, _)| *g != z) {
                    m = m.axpy(&-c, &gens[g]);
                }
                gens.insert(z, m.scale(&cz.recip().expect("nonzero coefficient")));
            }
        }
        if gens.len() == before {
            let missing = all.iter().filter(|g| !gens.contains_key(g)).map(|g| g.to_string()).collect();
            return Err(OperatorError::ClosureIncomplete { missing });
        }
    }
}

/// A highest weight, its ordered pattern basis and the matrices of all
/// canonical generators.
#[derive(Clone, Debug)]
pub struct Representation {
    basis: PatternBasis,
    gens: BTreeMap<Gen, SparseOperator>,
}

impl Representation {
    pub fn build(hw: &HighestWeight) -> Result<Self, OperatorError> {
        Self::build_with(hw, BuildOptions::default())
    }

    pub fn build_with(hw: &HighestWeight, opts: BuildOptions) -> Result<Self, OperatorError> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| OperatorError::ThreadPool(e.to_string()))?;
        pool.install(|| {
            let basis = PatternBasis::new(hw);
            let sc = StructureConstants::new(hw.n())?;
            let gens = close_generators(seed_generators(&basis)?, &sc, opts.order)?;
            Ok(Representation { basis, gens })
        })
    }

    /// Assembles a representation from stored parts, checking labels and sizes.
    pub fn from_parts(basis: PatternBasis, gens: BTreeMap<Gen, SparseOperator>) -> Result<Self, OperatorError> {
        let want = Gen::all_canonical(basis.n());
        if gens.keys().copied().collect::<Vec<_>>() != want {
            return Err(OperatorError::Malformed("generator labels are not the canonical set".into()));
        }
        if let Some((g, _)) = gens.iter().find(|(_, m)| m.dim() != basis.dim()) {
            return Err(OperatorError::Malformed(format!("{g} has the wrong size")));
        }
        Ok(Representation { basis, gens })
    }

    pub fn basis(&self) -> &PatternBasis {
        &self.basis
    }

    pub fn highest_weight(&self) -> &HighestWeight {
        self.basis.highest_weight()
    }

    pub fn n(&self) -> usize {
        self.basis.n()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// Matrices of the canonical generators.
    pub fn generators(&self) -> &BTreeMap<Gen, SparseOperator> {
        &self.gens
    }

    /// The matrix of any `F(i,j)`, via `F_{-j,-i} = -F_ij` and `F_{-i,i} = 0`.
    pub fn op(&self, g: Gen) -> SparseOperator {
        assert!(g.in_range(self.n()), "{g} out of range for n = {}", self.n());
        match g.canonical() {
            None => SparseOperator::zero(self.dim()),
            Some((1, c)) => self.gens[&c].clone(),
            Some((_, c)) => -&self.gens[&c],
        }
    }

    /// Every label `F(i,j)` with its matrix.
    pub fn all_ops(&self) -> BTreeMap<Gen, SparseOperator> {
        Gen::all(self.n()).into_iter().map(|g| (g, self.op(g))).collect()
    }

    /// Replaces one entry of a canonical generator; for harness self-tests.
    pub fn corrupt(&mut self, g: Gen, source: usize, target: usize, value: Rational) {
        self.gens.get_mut(&g).expect("canonical label").set(source, target, value);
    }

    /// Replaces a canonical generator's matrix.
    pub fn replace(&mut self, g: Gen, m: SparseOperator) {
        assert_eq!(m.dim(), self.dim());
        *self.gens.get_mut(&g).expect("canonical label") = m;
    }
}
