//! The conjugations sigma, theta and xi, and the sign of j fixed by requiring d(xi) = sigma.

use superspace::random::{random_big_cell_group_element, rng};
use superspace::realform::{self, ConjugationConfig};
use superspace::GrassmannAlgebra;

fn main() -> superspace::Result<()> {
    let fixed = realform::sigma_fixed_basis();
    println!("sigma-fixed real form: real dimension {:?}", fixed.real_dims());

    let j = realform::bootstrap_j_sign()?;
    println!("bootstrapped j = {j}");
    let cfg = ConjugationConfig::new(j);

    let alg = GrassmannAlgebra::default_working();
    let mut r = rng(3);
    let g = random_big_cell_group_element(&mut r, &alg);
    let h = random_big_cell_group_element(&mut r, &alg);
    let xi_g = realform::xi_group(&g, &cfg)?;
    println!("xi(xi(g)) == g: {}", realform::xi_group(&xi_g, &cfg)? == g);
    let hg = h.mul(&g)?;
    let lhs = realform::theta_group(&hg, &cfg)?;
    let rhs = realform::theta_group(&g, &cfg)?.mul(&realform::theta_group(&h, &cfg)?)?;
    println!("(hg)^theta == g^theta h^theta: {}", lhs == rhs);
    // xi sends Ber to the inverse of its bar, so Ber = 1 is preserved.
    println!("Ber(xi(g)) * bar(Ber(g)) = {}", &xi_g.berezinian()? * &g.berezinian()?.bar());
    Ok(())
}
