use proptest::prelude::*;
use superspace::liesuper::{self, bracket, subspace_membership, AlgebraElement, PatternName, SubspacePattern};
use superspace::matrix::Mat;
use superspace::random::{self, rng};
use superspace::realform::{self, sigma, ConjugationConfig, JSign};
use superspace::supermatrix::{BlockShape, MatrixParity};
use superspace::{GaussianRational, GrassmannAlgebra, SuperNumber};

fn shape41() -> BlockShape {
    BlockShape { m: 4, n: 1 }
}

fn coeffs() -> [GaussianRational; 3] {
    [GaussianRational::one(), GaussianRational::i(), GaussianRational::from_parts((1, 1), (1, 1))]
}

#[test]
fn sigma_is_antilinear_and_involutive() {
    let alg = GrassmannAlgebra::real(0);
    for b in liesuper::gl_basis(&alg) {
        for c in coeffs() {
            let x = b.scale(&c);
            assert_eq!(sigma(&x), sigma(&b).scale(&c.conj()));
            assert_eq!(sigma(&sigma(&x)), x);
        }
    }
}

#[test]
fn sigma_preserves_bracket_parity_and_summands() {
    let alg = GrassmannAlgebra::real(0);
    let basis = liesuper::gl_basis(&alg);
    let i = GaussianRational::i();
    for x in &basis {
        assert_eq!(sigma(x).parity(), x.parity());
        let ix = x.scale(&i);
        for y in &basis {
            assert_eq!(sigma(&bracket(x, y)), bracket(&sigma(x), &sigma(y)));
            assert_eq!(sigma(&bracket(&ix, y)), bracket(&sigma(&ix), &sigma(y)));
        }
    }
    for name in [PatternName::P, PatternName::N] {
        for b in SubspacePattern::get(name).basis(&alg) {
            assert!(subspace_membership(&sigma(&b), name), "{name:?}");
            assert!(subspace_membership(&sigma(&b.scale(&i)), name));
        }
    }
}

#[test]
fn fixed_basis_is_closed_and_real() {
    let basis = realform::sigma_fixed_basis();
    assert_eq!(basis.real_dims(), (16, 8));
    let all: Vec<&AlgebraElement> = basis.all().collect();
    for x in &all {
        assert!(realform::is_sigma_fixed(x));
        assert!(x.in_sl());
        for y in &all {
            assert!(realform::is_sigma_fixed(&bracket(x, y)));
        }
    }
}

// σ on the translation part: A ↦ −A†, γ ↦ iδ†, δ ↦ iγ†, so fixed points have
// skew-hermitian A and δ = iγ†. The variant δ = γ† is not σ-invariant.
#[test]
fn translation_fixed_points() {
    let alg = GrassmannAlgebra::real(0);
    let c = |re: i64, im: i64| GaussianRational::from_parts((re, 1), (im, 1));
    let mut x = Mat::zeros(&alg, 5, 5);
    let a = [[c(0, 1), c(2, 3)], [c(-2, 3), c(0, -5)]];
    for i in 0..2 {
        for j in 0..2 {
            x.set(i, j + 2, SuperNumber::scalar(&alg, a[i][j].clone()));
        }
    }
    let skew = AlgebraElement::from_mat(x.clone()).unwrap();
    assert!(realform::is_sigma_fixed(&skew));
    x.set(0, 2, SuperNumber::scalar(&alg, c(1, 0)));
    assert!(!realform::is_sigma_fixed(&AlgebraElement::from_mat(x).unwrap()));

    let gamma = Mat::from_scalars(&alg, &[vec![c(1, 2)], vec![c(-3, 1)]]).unwrap();
    let derived = gamma.dagger().scale(&GaussianRational::i());
    let v = liesuper::n1_element(&gamma, &derived).unwrap();
    assert!(realform::is_sigma_fixed(&v));
    let printed = liesuper::n1_element(&gamma, &gamma.dagger()).unwrap();
    assert!(!realform::is_sigma_fixed(&printed));
}

#[test]
fn real_lorentz_preserves_skew_hermitian_cell() {
    let alg = GrassmannAlgebra::real(0);
    let mut r = rng(11);
    for _ in 0..20 {
        let x = random::random_gl_scalar(&mut r, &alg, 2);
        let a0 = random::random_gl_scalar(&mut r, &alg, 2);
        let a = &a0 - &a0.dagger();
        let moved = realform::real_lorentz_act(&x, &a).unwrap();
        assert_eq!(moved, -&moved.dagger());
        // agrees with conjugation by diag(x, x†⁻¹) inside the algebra
        let mut m = Mat::zeros(&alg, 5, 5);
        m.set_block(0, 2, &a);
        let el = AlgebraElement::from_mat(m).unwrap();
        let y = x.dagger().inverse().unwrap();
        let conj = liesuper::lorentz_conjugate(&x, &y, &el).unwrap();
        assert_eq!(liesuper::n0_block(&conj).unwrap(), moved);
    }
}

#[test]
fn differential_formula_and_j_dependence() {
    let alg = GrassmannAlgebra::real(0);
    let f = realform::f_matrix(&alg);
    for j in [JSign::PlusI, JSign::MinusI] {
        let cfg = ConjugationConfig::new(j);
        let mj = -&cfg.j();
        for b in liesuper::gl_basis(&alg) {
            let x = b.scale(&GaussianRational::from_parts((1, 1), (2, 1)));
            let (m, mu, nu, s) = x.conformal_blocks();
            let expected = AlgebraElement::from_conformal_blocks(
                &-&(&(&f * &m.dagger()) * &f),
                &(&f * &nu.dagger()).scale(&mj),
                &(&mu.dagger() * &f).scale(&mj),
                &-&s.bar(),
            )
            .unwrap();
            let d = realform::xi_differential(&x, &cfg).unwrap();
            assert_eq!(d, expected);
            if x.parity() == MatrixParity::Even {
                assert_eq!(d, sigma(&x));
            }
        }
    }
    assert_eq!(realform::bootstrap_j_sign().unwrap(), JSign::MinusI);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn theta_reverses_products(seed in any::<u64>()) {
        let alg = GrassmannAlgebra::default_working();
        let mut r = rng(seed);
        let g = random::random_invertible_supermatrix(&mut r, &alg, shape41());
        let h = random::random_invertible_supermatrix(&mut r, &alg, shape41());
        for j in [JSign::PlusI, JSign::MinusI] {
            let cfg = ConjugationConfig::new(j);
            let lhs = realform::theta_group(&h.mul(&g).unwrap(), &cfg).unwrap();
            let rhs = realform::theta_group(&g, &cfg).unwrap().mul(&realform::theta_group(&h, &cfg).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn xi_is_an_involutive_homomorphism(seed in any::<u64>()) {
        let alg = GrassmannAlgebra::default_working();
        let mut r = rng(seed);
        let g = random::random_invertible_supermatrix(&mut r, &alg, shape41());
        let h = random::random_invertible_supermatrix(&mut r, &alg, shape41());
        let cfg = ConjugationConfig::default();
        let xi = |m| realform::xi_group(m, &cfg).unwrap();
        let xg = xi(&g);
        prop_assert_eq!(xi(&xg), g.clone());
        let hg = h.mul(&g).unwrap();
        prop_assert_eq!(xi(&hg), xi(&h).mul(&xg).unwrap());
    }

    #[test]
    fn xi_keeps_unimodular_elements_unimodular(seed in any::<u64>()) {
        let alg = GrassmannAlgebra::default_working();
        let mut r = rng(seed);
        let g = random::random_invertible_supermatrix(&mut r, &alg, shape41());
        // rescale the last row so that Ber = 1
        let ber = g.berezinian().unwrap();
        let mut m = g.as_mat().clone();
        for c in 0..5 {
            m.set(4, c, &ber * m.get(4, c));
        }
        let g1 = superspace::supermatrix::SuperMatrix::even(shape41(), m).unwrap();
        prop_assert!(g1.berezinian().unwrap().is_one());
        let x = realform::xi_group(&g1, &ConjugationConfig::default()).unwrap();
        prop_assert!(x.berezinian().unwrap().is_one());
    }

    #[test]
    fn real_poincare_elements_are_xi_fixed(seed in any::<u64>()) {
        let alg = GrassmannAlgebra::default_working();
        let mut r = rng(seed);
        let cfg = ConjugationConfig::default();
        let rm = random::random_invertible_even_block(&mut r, &alg, 2);
        let varphi = random::random_block(&mut r, &alg, 1, 2, true);
        let m0 = random::random_block(&mut r, &alg, 2, 2, false);
        let skew = &m0 - &m0.dagger();
        let d = SuperNumber::scalar(&alg, GaussianRational::from_parts((3, 5), (4, 5)));
        let p = realform::real_poincare_element(&rm, &varphi, &skew, &d, &cfg).unwrap();
        let report = realform::reality_conditions_poincare(&p.to_supermatrix(), &cfg).unwrap();
        prop_assert!(report.all_hold());
        prop_assert!(report.m_shifted_skew_hermitian);
        prop_assert!(report.fixed_by_xi);
    }

    #[test]
    fn broken_chi_condition_is_detected(seed in any::<u64>()) {
        let alg = GrassmannAlgebra::default_working();
        let mut r = rng(seed);
        let cfg = ConjugationConfig::default();
        let rm = random::random_invertible_even_block(&mut r, &alg, 2);
        let varphi = random::random_block(&mut r, &alg, 1, 2, true);
        prop_assume!(!varphi.is_zero());
        let zero = Mat::zeros(&alg, 2, 2);
        let mut p = realform::real_poincare_element(&rm, &varphi, &zero, &SuperNumber::one(&alg), &cfg).unwrap();
        p.chi = p.chi.scale(&GaussianRational::from_int(2));
        let g = p.to_supermatrix();
        let report = realform::reality_conditions_poincare(&g, &cfg).unwrap();
        prop_assert!(!report.chi_condition);
        prop_assert!(!report.fixed_by_xi);
        prop_assert_ne!(realform::xi_group(&g, &cfg).unwrap(), g);
    }
}
