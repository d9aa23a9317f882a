//! Berezinian of even supermatrices, and why the inverse in its formula matters.

use superspace::matrix::Mat;
use superspace::random::{random_invertible_supermatrix, rng};
use superspace::supermatrix::{BlockShape, SuperMatrix};
use superspace::{GrassmannAlgebra, SuperNumber};

fn main() -> superspace::Result<()> {
    let alg = GrassmannAlgebra::default_working();
    let x = |k| SuperNumber::generator(&alg, k).unwrap();

    // 1|1: Ber [[a, alpha], [beta, d]] = a/d - alpha beta / d^2.
    let a = &SuperNumber::from_int(&alg, 2) + &(&x(1) * &x(2));
    let d = SuperNumber::from_int(&alg, 3);
    let m = Mat::from_rows(&alg, vec![vec![a, x(5)], vec![x(6), d]])?;
    let g = SuperMatrix::even(BlockShape::new(1, 1)?, m)?;
    println!("Ber = {}", g.berezinian()?);

    let shape = BlockShape::new(4, 1)?;
    let mut r = rng(7);
    let g = random_invertible_supermatrix(&mut r, &alg, shape);
    let h = random_invertible_supermatrix(&mut r, &alg, shape);
    let gh = g.mul(&h)?;
    let lhs = gh.berezinian()?;
    let rhs = &g.berezinian()? * &h.berezinian()?;
    println!("4|1: Ber(gh) == Ber(g) Ber(h): {}", lhs == rhs);
    println!("Ber(g^-1) Ber(g) = {}", &g.inverse()?.berezinian()? * &g.berezinian()?);

    // det(s^-1) det(p - q s r) looks similar but is not multiplicative.
    let shape = BlockShape::new(2, 1)?;
    let mut r = rng(0);
    let g = random_invertible_supermatrix(&mut r, &alg, shape);
    let h = random_invertible_supermatrix(&mut r, &alg, shape);
    let lhs = g.mul(&h)?.berezinian_without_inverse()?;
    let rhs = &g.berezinian_without_inverse()? * &h.berezinian_without_inverse()?;
    println!("2|1 without the inverse: multiplicative? {}", lhs == rhs);
    println!("  difference = {}", &lhs - &rhs);
    Ok(())
}
