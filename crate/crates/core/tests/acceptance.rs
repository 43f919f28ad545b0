//! Acceptance criteria over the fixed representation corpus. Prints one
//! PASS/FAIL line per criterion and exits nonzero if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use o2n::arith::Rational;
use o2n::operators::{
    casimir, defining_matrix, matrix_f_lower, matrix_f_raise, matrix_phi_down, matrix_phi_param, u_commutator, Gen,
    Representation, SparseOperator, StructureConstants,
};
use o2n::patterns::{branching, enumerate, weyl_dim, HighestWeight};
use o2n::verify::{self, casimir_scalar, mutant, Suite};

const CORPUS: &[(usize, &str)] = &[
    (2, "0,0"),
    (2, "0,-1"),
    (2, "-1/2,-1/2"),
    (2, "1/2,-1/2"),
    (2, "-1,-1"),
    (2, "0,-2"),
    (2, "1,-1"),
    (3, "0,0,-1"),
    (3, "0,-1,-1"),
    (3, "-1/2,-1/2,-1/2"),
    (3, "-1,-1,-2"),
    (4, "0,0,0,-1"),
];

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Member {
    r: Representation,
    sc: StructureConstants,
}

struct Outcome {
    failures: Vec<String>,
    detail: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new(), detail: String::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

fn label(r: &Representation) -> String {
    format!("n={} λ={}", r.n(), r.highest_weight())
}

fn dimension() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let mut dims = Vec::new();
    for &(n, lam) in CORPUS {
        let hw = HighestWeight::parse(n, lam).unwrap();
        let count = enumerate(&hw).len();
        let weyl = weyl_dim(&hw);
        o.check(BigUint::from(count) == weyl, || format!("n={n} λ={hw}: {count} patterns, weyl {weyl}"));
        dims.push(count.to_string());
    }
    let t = start.elapsed();
    o.check(t < Duration::from_secs(5), || format!("took {t:?}"));
    o.detail = format!("dims {} in {t:.2?}", dims.join(","));
    o
}

fn brackets(corpus: &[Member]) -> Outcome {
    let mut o = Outcome::new();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let start = Instant::now();
    let mut pairs = 0;
    for m in corpus {
        let g = m.r.generators().len();
        pairs += g * (g - 1) / 2;
        let rep = pool.install(|| verify::check_brackets(&m.r, &m.sc));
        o.check(rep.pass, || format!("{}: {:?}", label(&m.r), rep.counterexamples.first()));
    }
    let t = start.elapsed();
    o.check(t < Duration::from_secs(600), || format!("took {t:?}"));
    o.detail = format!("{pairs} pairs, single thread, {t:.2?}");
    o
}

fn suite(corpus: &[Member], s: Suite) -> Outcome {
    let mut o = Outcome::new();
    for m in corpus {
        let rep = verify::run(s, &m.r, &m.sc);
        o.check(rep.pass, || format!("{}: {:?}", label(&m.r), rep.counterexamples.first()));
    }
    o.detail = format!("{} members", corpus.len());
    o
}

fn regularization(corpus: &[Member]) -> Outcome {
    let mut o = Outcome::new();
    let mut runs = 0;
    for m in corpus {
        for k in 2..=m.r.n() {
            runs += 1;
            let lit = u_commutator(m.r.basis(), k);
            o.check(lit.is_ok(), || format!("{} k={k}: {:?}", label(&m.r), lit.as_ref().err()));
            let raise = matrix_f_raise(m.r.basis(), k);
            o.check(raise.is_ok(), || format!("{} k={k}: {:?}", label(&m.r), raise.as_ref().err()));
        }
    }
    o.detail = format!("{runs} (member, k) pairs pole-free at u = 0");
    o
}

fn phi_consistency(corpus: &[Member]) -> Outcome {
    let mut o = Outcome::new();
    for m in corpus {
        let r = &m.r;
        for k in 2..=r.n() {
            let ki = k as i64;
            let sum = (1..ki).fold(SparseOperator::zero(r.dim()), |acc, i| {
                acc.add(&r.op(Gen::new(-ki, i)).mul(&r.op(Gen::new(i, ki))))
            });
            let ok = matrix_phi_down(r.basis(), k).map(|d| d == sum).unwrap_or(false);
            o.check(ok, || format!("{} k={k}", label(r)));
        }
    }
    o.detail = "Φ(-k,k) = Σ_i F(-k,i) F(i,k) for all k".into();
    o
}

fn asymptotics(corpus: &[Member]) -> Outcome {
    let mut o = Outcome::new();
    for m in corpus {
        let r = &m.r;
        for k in 2..=r.n() {
            let lower = matrix_f_lower(r.basis(), k).unwrap();
            let lim = matrix_phi_param(r.basis(), k).unwrap().limit_coeff(1).unwrap();
            o.check(lim == lower, || format!("{} k={k}: 1/u coefficient differs from F({},-{k})", label(r), k - 1));
            o.check(lower == r.op(Gen::new(k as i64 - 1, -(k as i64))), || {
                format!("{} k={k}: formula vs generator", label(r))
            });
        }
    }
    o.detail = "1/u coefficient equals F(k-1,-k) entry-wise".into();
    o
}

fn branching_rule(corpus: &[Member]) -> Outcome {
    let mut o = Outcome::new();
    for m in corpus.iter().filter(|m| m.r.n() >= 2) {
        let hw = m.r.highest_weight();
        let t = branching(hw);
        o.check(t.total_dim() == weyl_dim(hw), || format!("{}: Σ c(μ) dim V(μ) = {}", label(&m.r), t.total_dim()));
        let rep = verify::check_branching(&m.r);
        o.check(rep.pass, || format!("{}: {:?}", label(&m.r), rep.counterexamples.first()));
    }
    let hw = HighestWeight::parse(2, "0,-1").unwrap();
    let got: BTreeMap<Vec<i64>, u64> =
        branching(&hw).multiplicities.into_iter().map(|(mu, c)| (mu.twice(), c)).collect();
    let want = BTreeMap::from([(vec![0], 2), (vec![2], 1), (vec![-2], 1)]);
    o.check(got == want, || format!("(0,-1) table {got:?}"));
    o.detail = "sum identity on every member; (0,-1) → {0:2, 1:1, -1:1}".into();
    o
}

fn casimir_criterion(corpus: &[Member]) -> Outcome {
    let mut o = Outcome::new();
    let mut scalars = BTreeMap::new();
    for m in corpus {
        let rep = verify::check_casimir(&m.r, &m.sc);
        o.check(rep.pass, || format!("{}: {:?}", label(&m.r), rep.counterexamples.first()));
        let s = casimir_scalar(&m.r);
        o.check(s.is_some(), || format!("{}: not scalar", label(&m.r)));
        scalars.insert((m.r.n(), m.r.highest_weight().twice()), s);
    }
    let defining = casimir(2, |g| defining_matrix(2, g)).scalar_value();
    let vector = &scalars[&(2, vec![0, -2])];
    o.check(defining.is_some() && vector == &defining, || format!("vector {vector:?} vs defining {defining:?}"));
    let (a, b) = (&scalars[&(2, vec![-1, -1])], &scalars[&(2, vec![1, -1])]);
    o.check(a.is_some() && a == b, || format!("half-spin scalars {a:?} vs {b:?}"));
    let show = |s: &Option<Rational>| s.as_ref().map_or("-".to_string(), |x| x.to_string());
    o.detail = format!("vector {} = defining {}; half-spins {} = {}", show(vector), show(&defining), show(a), show(b));
    o
}

fn mutation(corpus: &[Member]) -> Outcome {
    let mut o = Outcome::new();
    let mut runs = 0;
    for m in corpus {
        for s in Suite::ALL {
            runs += 1;
            let rep = verify::run(s, &mutant(&m.r, s), &m.sc);
            o.check(!rep.pass, || format!("{} {s}: mutant passed", label(&m.r)));
        }
    }
    o.detail = format!("{runs} (member, suite) mutants all rejected");
    o
}

fn main() -> ExitCode {
    let corpus: Vec<Member> = CORPUS
        .iter()
        .map(|&(n, lam)| {
            let hw = HighestWeight::parse(n, lam).unwrap();
            Member {
                r: Representation::build(&hw).unwrap_or_else(|e| panic!("n={n} λ={lam}: {e}")),
                sc: StructureConstants::new(n).unwrap(),
            }
        })
        .collect();

    let criteria: Vec<Criterion> = vec![
        ("dimension", Box::new(dimension)),
        ("bracket fidelity", Box::new(|| brackets(&corpus))),
        ("highest vector", Box::new(|| suite(&corpus, Suite::Highest))),
        ("regularization", Box::new(|| regularization(&corpus))),
        ("phi consistency", Box::new(|| phi_consistency(&corpus))),
        ("asymptotics", Box::new(|| asymptotics(&corpus))),
        ("branching", Box::new(|| branching_rule(&corpus))),
        ("weight-shift audit", Box::new(|| suite(&corpus, Suite::Weights))),
        ("casimir", Box::new(|| casimir_criterion(&corpus))),
        ("irreducibility", Box::new(|| suite(&corpus, Suite::Irreducible))),
        ("mutation self-tests", Box::new(|| mutation(&corpus))),
    ];

    let mut failed = 0;
    for (name, run) in &criteria {
        let out = run();
        if out.failures.is_empty() {
            println!("PASS  {name:<20} {}", out.detail);
        } else {
            failed += 1;
            println!("FAIL  {name:<20} {}", out.detail);
            for f in out.failures.iter().take(5) {
                println!("        {f}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
