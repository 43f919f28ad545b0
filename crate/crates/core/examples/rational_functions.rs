//! Exact arithmetic on rationals and univariate rational functions in `u`.

use o2n::arith::{Poly, Rational, RationalFunction};

fn main() {
    let a: Rational = "3/4".parse().expect("rational");
    let b: Rational = "-5/6".parse().expect("rational");
    println!("{a} + {b} = {}, {a} * {b} = {}", &a + &b, &a * &b);

    // (u^2 - 1)/(u^2 + u) reduces to (u - 1)/u
    let f = RationalFunction::new(Poly::from_ints(&[-1, 0, 1]), Poly::from_ints(&[0, 1, 1])).expect("nonzero");
    println!("f = {f}");
    println!("f(2) = {}", f.eval(&Rational::from_int(2)).expect("regular"));
    match f.eval(&Rational::zero()) {
        Ok(v) => println!("f(0) = {v}"),
        Err(e) => println!("f(0): {e}"),
    }

    // 1/(u+2) - 1/u has a pole at 0; shifting u by 2 moves it away
    let g =
        &RationalFunction::inverse_linear(Rational::from_int(2)) - &RationalFunction::inverse_linear(Rational::zero());
    println!("g = {g}, pole at 0: {}", g.has_pole_at(&Rational::zero()));
    println!("g(u+1) at 0 = {}", g.shift(&Rational::one()).eval(&Rational::zero()).expect("regular"));
    println!("g ~ {}/u + {}/u^2 as u → ∞", g.limit_coeff(1).expect("decays"), g.limit_coeff(2).expect("decays"));
}
