use o2n::arith::Rational;
use o2n::operators::{Gen, Representation, StructureConstants};
use o2n::patterns::HighestWeight;
use o2n::verify::{self, casimir_scalar, check_brackets, check_irreducible, expected_casimir, mutant, Suite};

fn build(n: usize, lam: &str) -> Representation {
    Representation::build(&HighestWeight::parse(n, lam).unwrap()).unwrap()
}

/// `2 Σ λ_a² + Σ (λ_i - λ_j)` over pairs `i < j` in the order `-n..n`, `i ≠ -j`,
/// writing `λ_{-a} = -λ_a`.
fn casimir_closed_form(hw: &HighestWeight) -> Rational {
    let n = hw.n() as i64;
    let lam = |i: i64| {
        let v = hw.entries()[(i.unsigned_abs() - 1) as usize].to_rational();
        if i < 0 {
            -v
        } else {
            v
        }
    };
    let idx: Vec<i64> = (-n..=n).filter(|&i| i != 0).collect();
    let mut total: Rational =
        hw.entries().iter().map(|e| &e.to_rational() * &e.to_rational() * Rational::from_int(2)).sum();
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a + 1..] {
            if i != -j {
                total += lam(i) - lam(j);
            }
        }
    }
    total
}

#[test]
fn trivial_rep_passes_everything() {
    for n in 1..=3 {
        let r = build(n, &vec!["0"; n].join(","));
        let sc = StructureConstants::new(n).unwrap();
        for s in Suite::ALL {
            assert!(verify::run(s, &r, &sc).pass, "n={n} {s}");
        }
        assert_eq!(casimir_scalar(&r), Some(Rational::zero()));
    }
}

#[test]
fn spin_rep_passes_everything() {
    let r = build(2, "-1/2,-1/2");
    let sc = StructureConstants::new(2).unwrap();
    for s in Suite::ALL {
        assert!(verify::run(s, &r, &sc).pass, "{s}");
    }
}

#[test]
fn every_suite_catches_its_mutant() {
    for (n, lam) in [(2, "0,0"), (2, "0,-1"), (2, "1/2,-1/2"), (3, "0,0,-1"), (3, "-1/2,-1/2,-1/2")] {
        let r = build(n, lam);
        let sc = StructureConstants::new(n).unwrap();
        for s in Suite::ALL {
            let report = verify::run(s, &mutant(&r, s), &sc);
            assert!(!report.pass, "λ={lam} {s} missed its mutant");
            assert!(!report.counterexamples.is_empty());
        }
    }
}

#[test]
fn bracket_counterexample_names_the_corrupted_pair() {
    let r = build(2, "0,-1");
    let sc = StructureConstants::new(2).unwrap();
    let mut bad = r.clone();
    let xi = r.basis().xi_index();
    bad.corrupt(Gen::new(-2, 1), xi, xi, Rational::one());
    let report = check_brackets(&bad, &sc);
    assert!(!report.pass);
    assert!(report.counterexamples.iter().all(|c| c.context.contains("F(-2,1)")));
}

#[test]
fn zeroing_a_column_breaks_cyclicity() {
    let r = build(2, "1/2,-1/2");
    assert!(check_irreducible(&r).pass);
    let xi = r.basis().xi_index();
    let mut bad = r.clone();
    for g in Gen::all_canonical(2) {
        let m = &r.generators()[&g];
        let col: Vec<_> = m.column(xi).to_vec();
        for (t, _) in col {
            bad.corrupt(g, xi, t, Rational::zero());
        }
    }
    let report = check_irreducible(&bad);
    assert!(!report.pass);
}

#[test]
fn casimir_matches_closed_form() {
    for (n, lam) in [
        (2, "0,-1"),
        (2, "1/2,-1/2"),
        (2, "-1/2,-1/2"),
        (2, "0,-2"),
        (3, "0,-1,-1"),
        (3, "-1/2,-1/2,-1/2"),
        (4, "0,0,0,-1"),
    ] {
        let r = build(n, lam);
        let sc = StructureConstants::new(n).unwrap();
        let want = casimir_closed_form(r.highest_weight());
        assert_eq!(expected_casimir(r.highest_weight(), &sc), want, "λ={lam}");
        assert_eq!(casimir_scalar(&r), Some(want), "λ={lam}");
    }
}

#[test]
fn casimir_on_vector_rep_is_twice_2n_minus_1() {
    for n in 2..=4 {
        let mut lam = vec!["0"; n];
        lam[n - 1] = "-1";
        let r = build(n, &lam.join(","));
        assert_eq!(casimir_scalar(&r), Some(Rational::from_int(2 * (2 * n as i64 - 1))));
    }
}

#[test]
fn report_json_shape() {
    let r = build(2, "0,-1");
    let sc = StructureConstants::new(2).unwrap();
    let report = verify::run(Suite::Brackets, &r, &sc);
    let v: serde_json::Value = serde_json::to_value(&report).unwrap();
    assert_eq!(v["suite"], "brackets");
    assert_eq!(v["n"], 2);
    assert_eq!(v["lambda_twice"], serde_json::json!([0, -2]));
    assert_eq!(v["pass"], true);
    assert_eq!(v["counterexamples"], serde_json::json!([]));
}

#[test]
fn suite_names_parse() {
    assert_eq!(Suite::parse_list("all").unwrap().len(), 9);
    assert_eq!(Suite::parse_list("dim, casimir").unwrap(), vec![Suite::Dim, Suite::Casimir]);
    assert!(Suite::parse_list("bogus").is_err());
}
