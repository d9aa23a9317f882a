use proptest::prelude::*;
use superspace::matrix::Mat;
use superspace::random::{self, rng};
use superspace::supermatrix::{BlockShape, MatrixParity, SuperMatrix};
use superspace::{GrassmannAlgebra, SuperNumber};

const SHAPES: [(usize, usize); 4] = [(1, 1), (2, 1), (2, 2), (4, 1)];

fn pair(seed: u64, shape: (usize, usize)) -> (SuperMatrix, SuperMatrix) {
    let alg = GrassmannAlgebra::default_working();
    let shape = BlockShape::new(shape.0, shape.1).unwrap();
    let mut r = rng(seed);
    (
        random::random_invertible_supermatrix(&mut r, &alg, shape),
        random::random_invertible_supermatrix(&mut r, &alg, shape),
    )
}

/// Second Schur form `det(p) / det(s − r p⁻¹ q)`.
fn ber_other_schur(m: &SuperMatrix) -> SuperNumber {
    let (p, q, r, s) = m.blocks();
    let schur = &s - &(&(&r * &p.inverse().unwrap()) * &q);
    &p.det().unwrap() * &schur.det().unwrap().invert().unwrap()
}

#[test]
fn one_one_closed_form() {
    let alg = GrassmannAlgebra::default_working();
    let x = |k| SuperNumber::generator(&alg, k).unwrap();
    let n = |k| SuperNumber::from_int(&alg, k);
    // [[a, α], [β, d]] with a = 2 + ξ1ξ2, d = 3 + ξ3ξ4
    let a = &n(2) + &(&x(1) * &x(2));
    let d = &n(3) + &(&x(3) * &x(4));
    let (al, be) = (&x(5) + &x(6), x(7));
    let m = SuperMatrix::even(
        BlockShape::new(1, 1).unwrap(),
        Mat::from_rows(&alg, vec![vec![a.clone(), al.clone()], vec![be.clone(), d.clone()]]).unwrap(),
    )
    .unwrap();
    let dinv = d.invert().unwrap();
    let expected = &(&a * &dinv) - &(&(&al * &be) * &(&dinv * &dinv));
    assert_eq!(m.berezinian().unwrap(), expected);
}

#[test]
fn triangular_reduces_to_determinant_ratio() {
    let alg = GrassmannAlgebra::default_working();
    let p = Mat::from_ints(&alg, &[&[2, 1], &[0, 3]]).unwrap();
    let s = Mat::from_ints(&alg, &[&[5]]).unwrap();
    let mut r = rng(3);
    let q = random::random_block(&mut r, &alg, 2, 1, true);
    let zero = Mat::zeros(&alg, 1, 2);
    let m = SuperMatrix::from_blocks(&p, &q, &zero, &s, MatrixParity::Even).unwrap();
    assert_eq!(m.berezinian().unwrap(), SuperNumber::scalar(&alg, superspace::GaussianRational::from_frac(6, 5)));
}

#[test]
fn variant_without_inverse_is_not_multiplicative() {
    let alg = GrassmannAlgebra::default_working();
    let x = |k| SuperNumber::generator(&alg, k).unwrap();
    let n = |k| SuperNumber::from_int(&alg, k);
    let shape = BlockShape::new(1, 1).unwrap();
    let g = SuperMatrix::even(shape, Mat::from_rows(&alg, vec![vec![n(1), x(1)], vec![x(2), n(2)]]).unwrap()).unwrap();
    let h = SuperMatrix::even(shape, Mat::from_rows(&alg, vec![vec![n(1), x(3)], vec![x(4), n(3)]]).unwrap()).unwrap();
    let gh = g.mul(&h).unwrap();
    assert_ne!(g.berezinian_without_inverse().unwrap(), g.berezinian().unwrap());
    assert_eq!(gh.berezinian().unwrap(), &g.berezinian().unwrap() * &h.berezinian().unwrap());
    assert_ne!(
        gh.berezinian_without_inverse().unwrap(),
        &g.berezinian_without_inverse().unwrap() * &h.berezinian_without_inverse().unwrap()
    );
}

#[test]
fn singular_body_is_rejected() {
    let alg = GrassmannAlgebra::default_working();
    let x = SuperNumber::generator(&alg, 1).unwrap();
    let m = SuperMatrix::even(
        BlockShape::new(1, 1).unwrap(),
        Mat::from_rows(&alg, vec![vec![x.clone() * x.clone(), SuperNumber::zero(&alg)], vec![SuperNumber::zero(&alg), SuperNumber::one(&alg)]]).unwrap(),
    )
    .unwrap();
    assert!(m.berezinian().is_err());
    assert!(m.inverse().is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn berezinian_is_multiplicative(seed in any::<u64>(), k in 0..SHAPES.len()) {
        let (g, h) = pair(seed, SHAPES[k]);
        let gh = g.mul(&h).unwrap();
        prop_assert_eq!(gh.berezinian().unwrap(), &g.berezinian().unwrap() * &h.berezinian().unwrap());
    }

    #[test]
    fn schur_forms_agree(seed in any::<u64>(), k in 0..SHAPES.len()) {
        let (g, _) = pair(seed, SHAPES[k]);
        prop_assert_eq!(g.berezinian().unwrap(), ber_other_schur(&g));
    }

    #[test]
    fn inverse_and_supertrace(seed in any::<u64>(), k in 0..SHAPES.len()) {
        let (g, h) = pair(seed, SHAPES[k]);
        let id = SuperMatrix::identity(g.algebra(), g.shape());
        let inv = g.inverse().unwrap();
        prop_assert_eq!(g.mul(&inv).unwrap(), id.clone());
        prop_assert_eq!(inv.mul(&g).unwrap(), id);
        prop_assert_eq!(inv.berezinian().unwrap(), g.berezinian().unwrap().invert().unwrap());
        prop_assert_eq!(g.mul(&h).unwrap().supertrace().unwrap(), h.mul(&g).unwrap().supertrace().unwrap());
    }
}
