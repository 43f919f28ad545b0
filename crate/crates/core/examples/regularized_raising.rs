//! Compares the literal value at `u = 0` of the `u`-commutator with the
//! continued value used for `F_{k-1,k}`. Each candidate is swapped into the
//! representation and the bracket relations are rechecked.

use o2n::operators::{matrix_f_raise, u_commutator, Gen, Representation, StructureConstants};
use o2n::patterns::HighestWeight;
use o2n::verify::check_brackets;

fn main() {
    for (n, lam) in [(2, "0,-1"), (2, "0,-2"), (2, "1/2,-1/2"), (3, "-1/2,-1/2,-1/2"), (3, "0,-1,-1")] {
        let hw = HighestWeight::parse(n, lam).expect("dominant");
        let r = Representation::build(&hw).expect("construction");
        let sc = StructureConstants::new(n).expect("structure constants");
        println!("n = {n}, λ = {hw}, dim {}", r.dim());
        for k in 2..=n {
            let g = Gen::new(k as i64 - 1, k as i64);
            let (_, literal) = u_commutator(r.basis(), k).expect("regular at 0");
            let continued = matrix_f_raise(r.basis(), k).expect("continuation");
            let brackets_with = |m| {
                let mut s = r.clone();
                s.replace(g, m);
                if check_brackets(&s, &sc).pass {
                    "hold"
                } else {
                    "fail"
                }
            };
            println!(
                "  {g}: literal nnz {} (brackets {}), continued nnz {} (brackets {})",
                literal.nnz(),
                brackets_with(literal.clone()),
                continued.nnz(),
                brackets_with(continued.clone()),
            );
        }
    }
}
