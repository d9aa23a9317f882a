//! The big cell of the super flag: chart map, super Poincare action and real points.

use superspace::random::{random_big_cell_group_element, random_bigcell_point, random_superpoincare, rng};
use superspace::realform::{ConjugationConfig, JSign};
use superspace::superflag::{self, FlagChartPair};
use superspace::GrassmannAlgebra;

fn main() -> superspace::Result<()> {
    let alg = GrassmannAlgebra::default_working();
    let mut r = rng(11);

    let g = random_big_cell_group_element(&mut r, &alg);
    let p = random_superpoincare(&mut r, &alg);
    let pg = p.to_supermatrix().mul(&g)?;
    let lhs = superflag::pi_chart(&pg)?;
    let rhs = superflag::superpoincare_act(&p, &superflag::pi_chart(&g)?)?;
    println!("pi(P g) == P . pi(g): {}", lhs == rhs);

    let pt = random_bigcell_point(&mut r, &alg);
    println!("twistor relation A = B + beta alpha: {}", superflag::twistor_check(&FlagChartPair::from_point(&pt)));

    let cfg = ConjugationConfig::new(JSign::MinusI);
    let xi = superflag::xi_bigcell(&pt, &cfg)?;
    println!("xi is an involution: {}", superflag::xi_bigcell(&xi, &cfg)? == pt);

    // Real points from a skew-hermitian A' and a free alpha.
    let (a_prime, alpha) = superflag::real_coordinates(&pt, &cfg);
    let skew = &a_prime - &a_prime.dagger();
    let half = superspace::GaussianRational::from_parts((1, 2), (0, 1));
    let real = superflag::point_from_real_coordinates(&skew.scale(&half), &alpha, &cfg)?;
    println!("constructed point is xi-fixed: {}", superflag::xi_bigcell(&real, &cfg)? == real);
    println!("reality conditions (A, beta): {:?}", superflag::reality_conditions(&real, &cfg));
    println!("d(pi) at the identity bijective: {}", superflag::dpi_is_bijective()?);
    Ok(())
}
