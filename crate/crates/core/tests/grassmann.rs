use std::sync::Arc;

use proptest::prelude::*;
use superspace::random::{self, rng, Grade};
use superspace::{GaussianRational, GrassmannAlgebra, Parity, SuperNumber};

/// Sign of concatenating two ascending index lists, by bubble sort.
fn bubble_sign(a: &[usize], b: &[usize]) -> Option<i64> {
    let mut seq: Vec<usize> = a.iter().chain(b).copied().collect();
    let mut sign = 1;
    for i in 0..seq.len() {
        for j in 0..seq.len() - 1 - i {
            if seq[j] == seq[j + 1] {
                return None;
            }
            if seq[j] > seq[j + 1] {
                seq.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if seq.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sign)
}

fn indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

fn element(alg: &Arc<GrassmannAlgebra>, seed: u64, grade: Grade) -> SuperNumber {
    let mut r = rng(seed);
    match grade {
        Grade::Even => random::random_even(&mut r, alg),
        Grade::Odd => random::random_odd(&mut r, alg),
        Grade::Any => random::random_element(&mut r, alg, 4),
    }
}

fn parity_sign(a: &SuperNumber, b: &SuperNumber) -> GaussianRational {
    let odd = |x: &SuperNumber| x.parity() == Parity::Odd;
    GaussianRational::from_int(if odd(a) && odd(b) { -1 } else { 1 })
}

#[test]
fn monomial_products_match_bubble_sort() {
    for q in 0..=4usize {
        let alg = GrassmannAlgebra::real(q);
        for a in 0..1u64 << q {
            for b in 0..1u64 << q {
                let prod = &SuperNumber::monomial(&alg, a, GaussianRational::one()) * &SuperNumber::monomial(&alg, b, GaussianRational::one());
                match bubble_sign(&indices(a), &indices(b)) {
                    None => assert!(prod.is_zero()),
                    Some(s) => assert_eq!(prod, SuperNumber::monomial(&alg, a | b, GaussianRational::from_int(s))),
                }
            }
        }
    }
}

#[test]
fn exhaustive_axioms_on_monomials() {
    for q in 0..=4usize {
        let alg = GrassmannAlgebra::paired(q / 2);
        let alg = if q % 2 == 1 { alg.extended(1).unwrap() } else { alg };
        let monos: Vec<SuperNumber> = (0..1u64 << q)
            .map(|m| SuperNumber::monomial(&alg, m, GaussianRational::from_parts((1, 1), (m as i64, 1))))
            .collect();
        for x in &monos {
            assert_eq!(x.bar().bar(), *x);
            for y in &monos {
                assert_eq!(x * y, (y * x).scale(&parity_sign(x, y)));
                assert_eq!((x * y).bar(), &x.bar() * &y.bar());
                for z in &monos {
                    assert_eq!(&(x * y) * z, x * &(y * z));
                    assert_eq!(x * &(y + z), &(x * y) + &(x * z));
                }
            }
        }
    }
}

#[test]
fn paired_conjugation_examples() {
    let alg = GrassmannAlgebra::default_working();
    let x = |k| SuperNumber::generator(&alg, k).unwrap();
    // ξ2 ξ1 = −ξ1 ξ2 and conj(ξ1 ξ5) = ξ5 ξ1 = −ξ1 ξ5
    assert_eq!(&x(2) * &x(1), -&(&x(1) * &x(2)));
    let p = &x(1) * &x(5);
    assert_eq!(p.bar(), -&p);
    assert_eq!(GrassmannAlgebra::new(3, &[2, 1, 3]).unwrap().pairing(), vec![2, 1, 3]);
    assert!(GrassmannAlgebra::new(3, &[2, 3, 1]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_axioms_at_q8(sa in any::<u64>(), sb in any::<u64>(), sc in any::<u64>(),
                           ga in prop::sample::select(vec![Grade::Even, Grade::Odd]),
                           gb in prop::sample::select(vec![Grade::Even, Grade::Odd])) {
        let alg = GrassmannAlgebra::default_working();
        let a = element(&alg, sa, ga);
        let b = element(&alg, sb, gb);
        let c = element(&alg, sc, Grade::Any);
        prop_assert_eq!(&a * &b, (&b * &a).scale(&parity_sign(&a, &b)));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &c).bar(), &a.bar() * &c.bar());
        prop_assert_eq!(c.bar().bar(), c.clone());
        prop_assert_eq!(c.scale(&GaussianRational::i()).bar(), c.bar().scale(&-GaussianRational::i()));
    }

    #[test]
    fn soul_is_nilpotent(seed in any::<u64>()) {
        let alg = GrassmannAlgebra::default_working();
        let x = element(&alg, seed, Grade::Any);
        prop_assert!(x.soul().pow(9).is_zero());
    }

    #[test]
    fn inverse_of_units(seed in any::<u64>()) {
        let alg = GrassmannAlgebra::default_working();
        let mut r = rng(seed);
        let x = &random::random_even_unit(&mut r, &alg) + &random::random_odd(&mut r, &alg);
        let inv = x.invert().unwrap();
        prop_assert!((&x * &inv).is_one());
        prop_assert!((&inv * &x).is_one());
    }
}
