//! Arithmetic in the Grassmann algebra with eight generators.

use superspace::{GaussianRational, GrassmannAlgebra, SuperNumber};

fn main() -> superspace::Result<()> {
    // x1..x4 paired with x5..x8 under the bar involution.
    let alg = GrassmannAlgebra::default_working();
    let x = |k| SuperNumber::generator(&alg, k);
    let (x1, x2, x5) = (x(1)?, x(2)?, x(5)?);

    println!("x1*x2 = {}", &x1 * &x2);
    println!("x2*x1 = {}", &x2 * &x1);
    println!("x1*x1 = {}", &x1 * &x1);
    println!("bar(x1) = {}", x1.bar());

    let c = GaussianRational::from_parts((1, 2), (3, 1));
    let z = &(&x1 * &x5).scale(&c) + &x2;
    println!("z = {z}, parity {:?}", z.parity());
    println!("bar(z) = {}", z.bar());
    println!("bar(bar(z)) == z: {}", z.bar().bar() == z);

    // Units are exactly the elements with nonzero body.
    let u = &SuperNumber::from_int(&alg, 2) + &(&x1 * &x2);
    let inv = u.invert()?;
    println!("(2 + x1*x2)^-1 = {inv}");
    println!("check: {}", &u * &inv);

    let soul = &(&x1 * &x5) + &(&x2 * &x(6)?);
    for k in 1..=3 {
        println!("soul^{k} = {}", soul.pow(k));
    }
    Ok(())
}
