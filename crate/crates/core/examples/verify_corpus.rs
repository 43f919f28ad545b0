//! Builds each representation in a small corpus and runs every verification
//! suite on it, together with a single-entry mutant per suite.

use o2n::operators::{Representation, StructureConstants};
use o2n::patterns::HighestWeight;
use o2n::verify::{self, mutant, Suite};

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

/// Pass `N LAMBDA` pairs to check other representations instead.
fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cases: Vec<(usize, String)> = if args.is_empty() {
        CORPUS.iter().map(|&(n, l)| (n, l.to_string())).collect()
    } else {
        args.chunks(2).map(|c| (c[0].parse().expect("rank"), c[1].clone())).collect()
    };
    let mut failures = 0;
    for (n, lam) in cases {
        let hw = HighestWeight::parse(n, &lam).expect("dominant");
        let r = Representation::build(&hw).expect("construction");
        let sc = StructureConstants::new(n).expect("structure constants");
        let mut line = format!("n={n} λ={hw} dim={:<3}", r.dim());
        for suite in Suite::ALL {
            let rep = verify::run(suite, &r, &sc);
            let caught = !verify::run(suite, &mutant(&r, suite), &sc).pass;
            if !rep.pass || !caught {
                failures += 1;
                for c in &rep.counterexamples {
                    eprintln!("  {suite}: {} expected {} got {}", c.context, c.expected, c.got);
                }
            }
            line += &format!(
                " {suite}:{}{}",
                if rep.pass { "ok" } else { "FAIL" },
                if caught { "" } else { "(mutant missed)" }
            );
        }
        println!("{line}");
    }
    println!("{failures} failures");
}
