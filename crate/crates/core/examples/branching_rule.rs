//! Restriction multiplicities from o(2n) to o(2n-2), and the dimension identity.

use o2n::patterns::{branching, weyl_dim, HighestWeight};

fn main() {
    for (n, lam) in [(2, "0,-1"), (2, "1/2,-3/2"), (3, "0,-1,-1"), (3, "-1,-1,-2"), (4, "0,0,-1,-2")] {
        let hw = HighestWeight::parse(n, lam).expect("dominant");
        let table = branching(&hw);
        println!("λ = {hw}");
        for (mu, c) in &table.multiplicities {
            println!("  μ = {mu:<12} c = {c}  dim V(μ) = {}", weyl_dim(mu));
        }
        println!("  Σ c(μ) dim V(μ) = {}, dim V(λ) = {}", table.total_dim(), weyl_dim(&hw));
    }
}
