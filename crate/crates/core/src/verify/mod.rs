//! Verification suites for a constructed representation. Every comparison is exact.

mod checks;
pub mod linalg;

pub use checks::{
    casimir_scalar, check_brackets, check_branching, check_casimir, check_dimension, check_highest, check_irreducible,
    check_phi, check_regularization, check_weights, expected_casimir, mutant,
};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::operators::{Representation, StructureConstants};

/// One failed comparison, with exact values rendered as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub context: String,
    pub expected: String,
    pub got: String,
}

impl Counterexample {
    pub fn new(context: impl Into<String>, expected: impl ToString, got: impl ToString) -> Self {
        Counterexample { context: context.into(), expected: expected.to_string(), got: got.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub n: usize,
    pub lambda_twice: Vec<i64>,
    pub pass: bool,
    pub counterexamples: Vec<Counterexample>,
}

/// At most this many counterexamples are kept per report.
pub const MAX_COUNTEREXAMPLES: usize = 20;

impl VerifyReport {
    pub fn new(suite: Suite, r: &Representation, mut counterexamples: Vec<Counterexample>) -> Self {
        counterexamples.truncate(MAX_COUNTEREXAMPLES);
        VerifyReport {
            suite: suite.to_string(),
            n: r.n(),
            lambda_twice: r.highest_weight().twice(),
            pass: counterexamples.is_empty(),
            counterexamples,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Brackets,
    Weights,
    Highest,
    Dim,
    Branching,
    Casimir,
    Irreducible,
    Phi,
    Regularization,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Brackets,
        Suite::Weights,
        Suite::Highest,
        Suite::Dim,
        Suite::Branching,
        Suite::Casimir,
        Suite::Irreducible,
        Suite::Phi,
        Suite::Regularization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Brackets => "brackets",
            Suite::Weights => "weights",
            Suite::Highest => "highest",
            Suite::Dim => "dim",
            Suite::Branching => "branching",
            Suite::Casimir => "casimir",
            Suite::Irreducible => "irreducible",
            Suite::Phi => "phi",
            Suite::Regularization => "regularization",
        }
    }

    /// Parses one suite name, or `all`.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>, String> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        s.split(',').map(|t| t.trim().parse()).collect()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Runs one suite.
pub fn run(suite: Suite, r: &Representation, sc: &StructureConstants) -> VerifyReport {
    match suite {
        Suite::Brackets => check_brackets(r, sc),
        Suite::Weights => check_weights(r),
        Suite::Highest => check_highest(r),
        Suite::Dim => check_dimension(r),
        Suite::Branching => check_branching(r),
        Suite::Casimir => check_casimir(r, sc),
        Suite::Irreducible => check_irreducible(r),
        Suite::Phi => check_phi(r),
        Suite::Regularization => check_regularization(r),
    }
}
