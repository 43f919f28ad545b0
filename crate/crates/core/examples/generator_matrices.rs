//! Builds the vector representation of o(4) and prints every generator,
//! including the non-canonical labels obtained from `F_{-j,-i} = -F_ij`.

use o2n::operators::{Gen, Representation};
use o2n::patterns::HighestWeight;

fn main() {
    let hw = HighestWeight::parse(2, "0,-1").expect("dominant");
    let r = Representation::build(&hw).expect("construction");
    for (g, m) in r.all_ops() {
        let mark = if g.is_canonical() { "" } else { " (derived)" };
        println!("{g}{mark}");
        for row in m.to_dense() {
            let row: Vec<String> = row.iter().map(|c| format!("{:>4}", c.to_string())).collect();
            println!("  {}", row.join(""));
        }
    }
    let commutator = r.op(Gen::new(1, 2)).commutator(&r.op(Gen::new(2, 1)));
    let cartan = r.op(Gen::new(1, 1)).sub(&r.op(Gen::new(2, 2)));
    println!("[F(1,2), F(2,1)] == F(1,1) - F(2,2): {}", commutator == cartan);
}
