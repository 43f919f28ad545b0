//! Enumerates the D-type patterns of a highest weight with their weights.

use o2n::patterns::{HighestWeight, PatternBasis};

fn main() {
    let hw = HighestWeight::parse(2, "0,-1").expect("dominant");
    let basis = PatternBasis::new(&hw);
    println!("λ = {hw}: {} patterns, ξ at index {}", basis.dim(), basis.xi_index());
    for (i, p) in basis.patterns().iter().enumerate() {
        let w: Vec<String> = p.weight().iter().map(|h| h.to_string()).collect();
        println!("{i:>3}  {p}  weight ({})", w.join(","));
    }

    // rows in flattened order: λ_2, λ'_1, λ_1
    let spin = HighestWeight::parse(3, "-1/2,-1/2,-1/2").expect("dominant");
    for p in PatternBasis::new(&spin).patterns() {
        println!("{p}");
    }
}
