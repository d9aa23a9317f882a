//! sl(4|1) as the sum of the super Poincare algebra p and the translations n.

use superspace::liesuper::{self, bracket, AlgebraElement, PatternName, SubspacePattern};
use superspace::{GaussianRational, GrassmannAlgebra};

fn main() -> superspace::Result<()> {
    for name in [PatternName::Sl, PatternName::P, PatternName::N] {
        let s = SubspacePattern::get(name);
        println!("{:>2}: dim {:?}, closed {}", name.as_str(), s.dims(), s.is_closed_under_bracket());
    }

    let t = liesuper::verify_translation_algebra(PatternName::N);
    println!("n0 dim {}, n1 dim {}, translation algebra {}", t.even_dim, t.odd_dim, t.is_translation_algebra());

    // Two odd translations bracket into an even one.
    let alg = GrassmannAlgebra::real(0);
    let q1 = AlgebraElement::unit(&alg, 0, 4);
    let q2 = AlgebraElement::unit(&alg, 4, 2);
    let b = bracket(&q1, &q2);
    println!("[E_04, E_42] = E_02? {}", b == AlgebraElement::unit(&alg, 0, 2));

    let x = AlgebraElement::elementary(&alg, 0, 0, GaussianRational::one())
        .add(&AlgebraElement::elementary(&alg, 4, 4, GaussianRational::one()))?
        .add(&AlgebraElement::elementary(&alg, 1, 3, GaussianRational::from_int(5)))?
        .add(&AlgebraElement::elementary(&alg, 2, 0, GaussianRational::from_int(-2)))?;
    let (p, n) = liesuper::split_pn(&x)?;
    println!("x splits: p part in p {}, n part in n {}", SubspacePattern::get(PatternName::P).contains(&p), SubspacePattern::get(PatternName::N).contains(&n));

    let roots: Vec<String> = liesuper::poincare_roots().iter().map(ToString::to_string).collect();
    println!("roots of p: {}", roots.join(" "));
    Ok(())
}
