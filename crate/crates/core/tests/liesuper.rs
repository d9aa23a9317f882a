use std::sync::Arc;

use proptest::prelude::*;
use superspace::liesuper::*;
use superspace::matrix::Mat;
use superspace::random::{self, rng};
use superspace::supermatrix::MatrixParity;
use superspace::{GaussianRational, GrassmannAlgebra};

fn scalars() -> Arc<GrassmannAlgebra> {
    GrassmannAlgebra::real(0)
}

/// Homogeneous element with scalar entries supported on positions of the given parity.
fn homogeneous(seed: u64, odd: bool) -> AlgebraElement {
    let alg = scalars();
    let mut r = rng(seed);
    let mut acc = AlgebraElement::zero(&alg);
    for i in 0..DIM {
        for j in 0..DIM {
            if position_is_odd(i, j) == odd {
                let c = random::small_complex(&mut r);
                acc = acc.add(&AlgebraElement::elementary(&alg, i, j, c)).unwrap();
            }
        }
    }
    acc
}

fn sign(a: bool, b: bool) -> GaussianRational {
    GaussianRational::from_int(if a && b { -1 } else { 1 })
}

/// `[E_ij, E_kl] = δ_jk E_il − (−1)^{|ij||kl|} δ_li E_kj`
fn unit_bracket(alg: &Arc<GrassmannAlgebra>, (i, j): (usize, usize), (k, l): (usize, usize)) -> AlgebraElement {
    let mut out = AlgebraElement::zero(alg);
    if j == k {
        out = out.add(&AlgebraElement::unit(alg, i, l)).unwrap();
    }
    if l == i {
        let s = -sign(position_is_odd(i, j), position_is_odd(k, l));
        out = out.add(&AlgebraElement::elementary(alg, k, j, s)).unwrap();
    }
    out
}

#[test]
fn bracket_matches_structure_constants() {
    let alg = scalars();
    let idx: Vec<(usize, usize)> = (0..DIM).flat_map(|i| (0..DIM).map(move |j| (i, j))).collect();
    for &a in &idx {
        for &b in &idx {
            let lhs = bracket(&AlgebraElement::unit(&alg, a.0, a.1), &AlgebraElement::unit(&alg, b.0, b.1));
            assert_eq!(lhs, unit_bracket(&alg, a, b), "E{a:?}, E{b:?}");
        }
    }
}

#[test]
fn poincare_plus_translation_is_sl() {
    let p = SubspacePattern::get(PatternName::P);
    let n = SubspacePattern::get(PatternName::N);
    assert_eq!(p.dims(), (12, 4));
    assert_eq!(n.dims(), (4, 4));
    assert_eq!(SubspacePattern::get(PatternName::Sl).dims(), (16, 8));
    assert!(p.is_closed_under_bracket());
    assert!(n.is_closed_under_bracket());
    for i in 0..DIM {
        for j in 0..DIM {
            if i != j {
                assert!(p.allows(i, j) != n.allows(i, j), "({i},{j}) must lie in exactly one summand");
            }
        }
    }
}

#[test]
fn translation_brackets() {
    let report = verify_translation_algebra(PatternName::N);
    assert!(report.is_translation_algebra(), "{report:?}");
    let alg = scalars();
    let (n0, n1) = SubspacePattern::get(PatternName::N).graded_basis(&alg);
    for x in &n0 {
        for y in n0.iter().chain(&n1) {
            assert!(bracket(x, y).is_zero());
        }
    }
    let mut nonzero = false;
    for v in &n1 {
        for w in &n1 {
            let b = bracket(v, w);
            assert!(subspace_membership(&b, PatternName::N0));
            nonzero |= !b.is_zero();
        }
    }
    assert!(nonzero);
}

#[test]
fn root_lists_match_patterns() {
    let p = SubspacePattern::get(PatternName::P);
    let n = SubspacePattern::get(PatternName::N);
    let proots = poincare_roots();
    let nroots = translation_roots();
    assert_eq!(proots.len(), 12);
    assert_eq!(nroots.len(), 8);
    for r in &proots {
        let (i, j) = r.position();
        assert!(p.allows(i, j), "{r}");
        assert_eq!(r.summand(), Summand::P);
    }
    for r in &nroots {
        let (i, j) = r.position();
        assert!(n.allows(i, j), "{r}");
        assert_eq!(r.summand(), Summand::N);
    }
    assert_eq!(nroots.iter().filter(|r| r.is_odd()).count(), 4);
    // n consists of positive roots only: no negative of an n root is in n
    for r in &nroots {
        assert!(!nroots.contains(&r.negate()));
    }
}

#[test]
fn scalar_odd_pairing() {
    let alg = scalars();
    let g1 = Mat::from_ints(&alg, &[&[1], &[2]]).unwrap();
    let d1 = Mat::from_ints(&alg, &[&[3, -1]]).unwrap();
    let g2 = Mat::from_ints(&alg, &[&[0], &[5]]).unwrap();
    let d2 = Mat::from_ints(&alg, &[&[1, 1]]).unwrap();
    let v = n1_element(&g1, &d1).unwrap();
    let w = n1_element(&g2, &d2).unwrap();
    assert_eq!(v.parity(), MatrixParity::Odd);
    let a = n0_block(&odd_pair(&v, &w).unwrap()).unwrap();
    assert_eq!(a, &(&g1 * &d2) + &(&g2 * &d1));
    // [v, v] = 2γδ has rank one, so q vanishes on it
    let vv = odd_pair(&v, &v).unwrap();
    assert!(quadratic_form(&vv).unwrap().is_zero());
}

#[test]
fn split_rejects_non_supertraceless() {
    let alg = scalars();
    assert!(split_pn(&AlgebraElement::unit(&alg, 0, 0)).is_err());
    let x = homogeneous(4, true);
    let (xp, xn) = split_pn(&x).unwrap();
    assert!(subspace_membership(&xp, PatternName::P));
    assert!(subspace_membership(&xn, PatternName::N));
    assert_eq!(xp.add(&xn).unwrap(), x);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn graded_jacobi(sx in any::<u64>(), sy in any::<u64>(), sz in any::<u64>(),
                     ox in any::<bool>(), oy in any::<bool>(), oz in any::<bool>()) {
        let (x, y, z) = (homogeneous(sx, ox), homogeneous(sy, oy), homogeneous(sz, oz));
        let t1 = bracket(&x, &bracket(&y, &z)).scale(&sign(ox, oz));
        let t2 = bracket(&y, &bracket(&z, &x)).scale(&sign(oy, ox));
        let t3 = bracket(&z, &bracket(&x, &y)).scale(&sign(oz, oy));
        prop_assert!(t1.add(&t2).unwrap().add(&t3).unwrap().is_zero());
        // graded antisymmetry
        prop_assert_eq!(bracket(&x, &y), bracket(&y, &x).scale(&-sign(ox, oy)));
    }

    #[test]
    fn split_and_roots_recombine(seed in any::<u64>(), odd in any::<bool>()) {
        let mut x = homogeneous(seed, odd);
        if !odd {
            // remove the supertrace through the (0,0) entry
            let st = x.supertrace().body();
            x = x.sub(&AlgebraElement::elementary(&scalars(), 0, 0, st)).unwrap();
        }
        prop_assert!(x.in_sl());
        let (xp, xn) = split_pn(&x).unwrap();
        prop_assert!(subspace_membership(&xp, PatternName::P));
        prop_assert!(subspace_membership(&xn, PatternName::N));
        prop_assert_eq!(xp.add(&xn).unwrap(), x.clone());
        let d = root_decomposition(&x);
        prop_assert_eq!(d.recombine(), x);
        for (root, comp) in &d.components {
            prop_assert!(root.is_valid());
            let want = if subspace_membership(comp, PatternName::P) { Summand::P } else { Summand::N };
            prop_assert_eq!(root.summand(), want);
        }
    }

    #[test]
    fn lorentz_action_on_translations(seed in any::<u64>()) {
        let alg = GrassmannAlgebra::default_working();
        let mut r = rng(seed);
        let x = random::random_gl_scalar(&mut r, &alg, 2);
        let y = random::random_gl_scalar(&mut r, &alg, 2);
        let g1 = random::random_block(&mut r, &alg, 2, 1, true);
        let d1 = random::random_block(&mut r, &alg, 1, 2, true);
        let g2 = random::random_block(&mut r, &alg, 2, 1, true);
        let d2 = random::random_block(&mut r, &alg, 1, 2, true);
        let v = n1_element(&g1, &d1).unwrap();
        let w = n1_element(&g2, &d2).unwrap();

        // conjugation acts on the odd part as (γ, δ) ↦ (xγ, δy⁻¹)
        let cv = lorentz_conjugate(&x, &y, &v).unwrap();
        let (xg, dy) = lorentz_act(&x, &y, &g1, &d1).unwrap();
        prop_assert_eq!(n1_components(&cv).unwrap(), (xg, dy));

        // with Grassmann-odd entries v, w are even matrices and the pairing is a commutator
        let pair = odd_pair(&v, &w).unwrap();
        prop_assert_eq!(n0_block(&pair).unwrap(), &(&g1 * &d2) - &(&g2 * &d1));
        let cw = lorentz_conjugate(&x, &y, &w).unwrap();
        prop_assert_eq!(odd_pair(&cv, &cw).unwrap(), lorentz_conjugate(&x, &y, &pair).unwrap());

        // q(gAg⁻¹) = det x · det y⁻¹ · q(A) on a random n0 element
        let a = random::random_block(&mut r, &alg, 2, 2, false);
        let mut m = Mat::zeros(&alg, DIM, DIM);
        m.set_block(0, 2, &a);
        let big_a = AlgebraElement::from_mat(m).unwrap();
        prop_assert_eq!(big_a.parity(), MatrixParity::Even);
        let ca = lorentz_conjugate(&x, &y, &big_a).unwrap();
        let factor = &x.det().unwrap() * &y.det().unwrap().invert().unwrap();
        prop_assert_eq!(quadratic_form(&ca).unwrap(), &factor * &quadratic_form(&big_a).unwrap());
        if x.det().unwrap() == y.det().unwrap() {
            prop_assert_eq!(quadratic_form(&ca).unwrap(), quadratic_form(&big_a).unwrap());
        }
    }
}
