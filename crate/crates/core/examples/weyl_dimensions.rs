//! Weyl dimensions against pattern counts for a few highest weights.

use o2n::patterns::{count_patterns, weyl_dim, HighestWeight};

fn main() {
    let cases = [
        (1, "3"),
        (2, "0,-1"),
        (2, "-1/2,-1/2"),
        (2, "3/2,-5/2"),
        (3, "0,-1,-1"),
        (3, "-1,-1,-2"),
        (4, "0,0,0,-1"),
        (4, "1/2,-1/2,-1/2,-1/2"),
        (5, "0,-1,-2,-2,-3"),
    ];
    for (n, lam) in cases {
        let hw = HighestWeight::parse(n, lam).expect("dominant");
        println!(
            "o({:>2}) λ = {:<24} weyl {:>8}  patterns {:>8}",
            2 * n,
            hw.to_string(),
            weyl_dim(&hw),
            count_patterns(&hw)
        );
    }
}
