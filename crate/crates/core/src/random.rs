//! Seeded random generators for the property suites.
//!
//! Bodies are drawn from a small set of rationals so that exact arithmetic stays
//! cheap; souls are sparse sums of random monomials.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::grassmann::{GrassmannAlgebra, SuperNumber};
use crate::matrix::Mat;
use crate::scalar::GaussianRational;
use crate::supermatrix::{BlockShape, MatrixParity, SuperMatrix};

pub type SuiteRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(seed)
}

const SMALL: [(i64, i64); 6] = [(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2)];

/// A value in `{±1, ±2, ±1/2}`.
pub fn small_rational(rng: &mut impl Rng) -> GaussianRational {
    let (n, d) = *SMALL.choose(rng).unwrap();
    GaussianRational::from_frac(n, d)
}

/// Small Gaussian rational, possibly zero, with independent real and imaginary parts.
pub fn small_complex(rng: &mut impl Rng) -> GaussianRational {
    let part = |rng: &mut dyn rand::RngCore| -> (i64, i64) {
        if rng.gen_bool(0.25) {
            (0, 1)
        } else {
            *SMALL.choose(rng).unwrap()
        }
    };
    let re = part(rng);
    let im = part(rng);
    GaussianRational::from_parts(re, im)
}

/// Nonzero small Gaussian rational.
pub fn small_nonzero_complex(rng: &mut impl Rng) -> GaussianRational {
    loop {
        let c = small_complex(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Which graded piece a random supernumber should come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grade {
    Even,
    Odd,
    Any,
}

/// Random monomial mask of the requested grade, using at most `max_degree` factors.
pub fn random_mask(rng: &mut impl Rng, q: usize, grade: Grade, max_degree: usize) -> Option<u64> {
    if q == 0 {
        return None;
    }
    for _ in 0..64 {
        let degree = rng.gen_range(1..=max_degree.clamp(1, q));
        let ok = match grade {
            Grade::Even => degree % 2 == 0,
            Grade::Odd => degree % 2 == 1,
            Grade::Any => true,
        };
        if !ok {
            continue;
        }
        let mut idx: Vec<usize> = (0..q).collect();
        idx.shuffle(rng);
        return Some(idx[..degree].iter().fold(0u64, |m, &i| m | 1 << i));
    }
    None
}

/// Sparse random soul with up to `max_terms` monomials of the given grade.
pub fn random_soul(rng: &mut impl Rng, alg: &Arc<GrassmannAlgebra>, grade: Grade, max_terms: usize) -> SuperNumber {
    let q = alg.num_generators();
    let terms = rng.gen_range(0..=max_terms);
    let mut out = SuperNumber::zero(alg);
    for _ in 0..terms {
        if let Some(mask) = random_mask(rng, q, grade, 3) {
            out = &out + &SuperNumber::monomial(alg, mask, small_complex(rng));
        }
    }
    out
}

/// Random odd element (never has a body).
pub fn random_odd(rng: &mut impl Rng, alg: &Arc<GrassmannAlgebra>) -> SuperNumber {
    random_soul(rng, alg, Grade::Odd, 3)
}

/// Random even element: a small body (possibly zero) plus a sparse even soul.
pub fn random_even(rng: &mut impl Rng, alg: &Arc<GrassmannAlgebra>) -> SuperNumber {
    let body = if rng.gen_bool(0.3) { GaussianRational::zero() } else { small_complex(rng) };
    &SuperNumber::scalar(alg, body) + &random_soul(rng, alg, Grade::Even, 2)
}

/// Random even element with a body drawn from `{±1, ±2, ±1/2}`.
pub fn random_even_unit(rng: &mut impl Rng, alg: &Arc<GrassmannAlgebra>) -> SuperNumber {
    &SuperNumber::scalar(alg, small_rational(rng)) + &random_soul(rng, alg, Grade::Even, 2)
}

/// Random general element of any parity.
pub fn random_element(rng: &mut impl Rng, alg: &Arc<GrassmannAlgebra>, max_terms: usize) -> SuperNumber {
    let body = if rng.gen_bool(0.5) { small_complex(rng) } else { GaussianRational::zero() };
    &SuperNumber::scalar(alg, body) + &random_soul(rng, alg, Grade::Any, max_terms)
}

/// Random `rows × cols` block with entries of the requested grade.
pub fn random_block(rng: &mut impl Rng, alg: &Arc<GrassmannAlgebra>, rows: usize, cols: usize, odd: bool) -> Mat {
    let mut m = Mat::zeros(alg, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            let v = if odd { random_odd(rng, alg) } else { random_even(rng, alg) };
            m.set(i, j, v);
        }
    }
    m
}

/// Random even `k × k` block whose body is invertible.
pub fn random_invertible_even_block(rng: &mut impl Rng, alg: &Arc<GrassmannAlgebra>, k: usize) -> Mat {
    loop {
        let mut m = Mat::zeros(alg, k, k);
        for i in 0..k {
            for j in 0..k {
                m.set(i, j, random_even_unit(rng, alg));
            }
        }
        if k == 0 || !m.det().expect("square").body().is_zero() {
            return m;
        }
    }
}

/// Random even supermatrix with invertible diagonal-block bodies.
pub fn random_invertible_supermatrix(rng: &mut impl Rng, alg: &Arc<GrassmannAlgebra>, shape: BlockShape) -> SuperMatrix {
    let p = random_invertible_even_block(rng, alg, shape.m);
    let s = random_invertible_even_block(rng, alg, shape.n);
    let q = random_block(rng, alg, shape.m, shape.n, true);
    let r = random_block(rng, alg, shape.n, shape.m, true);
    SuperMatrix::from_blocks(&p, &q, &r, &s, MatrixParity::Even).expect("layout is even by construction")
}

/// Random `k × k` scalar matrix with determinant one (product of elementary shears).
pub fn random_sl_scalar(rng: &mut impl Rng, alg: &Arc<GrassmannAlgebra>, k: usize) -> Mat {
    let mut m = Mat::identity(alg, k);
    for _ in 0..(2 * k) {
        let i = rng.gen_range(0..k);
        let j = rng.gen_range(0..k);
        if i == j {
            continue;
        }
        let mut e = Mat::identity(alg, k);
        e.set(i, j, SuperNumber::scalar(alg, small_complex(rng)));
        m = &e * &m;
    }
    m
}

/// Random invertible `k × k` scalar matrix.
pub fn random_gl_scalar(rng: &mut impl Rng, alg: &Arc<GrassmannAlgebra>, k: usize) -> Mat {
    loop {
        let mut m = Mat::zeros(alg, k, k);
        for i in 0..k {
            for j in 0..k {
                m.set(i, j, SuperNumber::scalar(alg, small_complex(rng)));
            }
        }
        if !m.det().expect("square").is_zero() {
            return m;
        }
    }
}

/// Random big-cell point `(A, α, β)`.
pub fn random_bigcell_point(rng: &mut impl Rng, alg: &Arc<GrassmannAlgebra>) -> crate::superflag::BigCellPoint {
    crate::superflag::BigCellPoint::new(
        random_block(rng, alg, 2, 2, false),
        random_block(rng, alg, 1, 2, true),
        random_block(rng, alg, 2, 1, true),
    )
    .expect("parities by construction")
}

/// Random super-Poincaré element with invertible `L`, `R`, `d`.
pub fn random_superpoincare(rng: &mut impl Rng, alg: &Arc<GrassmannAlgebra>) -> crate::superflag::SuperPoincareElement {
    crate::superflag::SuperPoincareElement::new(
        random_invertible_even_block(rng, alg, 2),
        random_invertible_even_block(rng, alg, 2),
        random_block(rng, alg, 2, 2, false),
        random_block(rng, alg, 2, 1, true),
        random_block(rng, alg, 1, 2, true),
        random_even_unit(rng, alg),
    )
    .expect("invertible by construction")
}

/// Random even 4|1 supermatrix whose top-left 2×2 block has invertible body,
/// so that it projects into the big cell.
pub fn random_big_cell_group_element(rng: &mut impl Rng, alg: &Arc<GrassmannAlgebra>) -> SuperMatrix {
    loop {
        let g = random_invertible_supermatrix(rng, alg, BlockShape { m: 4, n: 1 });
        if crate::superflag::pi_chart(&g).is_ok() {
            return g;
        }
    }
}

/// Random rank-2 plane in `C⁴` with small complex entries.
pub fn random_plane(rng: &mut impl Rng) -> crate::geometry::Plane {
    loop {
        let a: [GaussianRational; 4] = std::array::from_fn(|_| small_complex(rng));
        let b: [GaussianRational; 4] = std::array::from_fn(|_| small_complex(rng));
        if let Ok(p) = crate::geometry::Plane::from_columns(a, b) {
            return p;
        }
    }
}
