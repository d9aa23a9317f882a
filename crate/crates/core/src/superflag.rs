//! The big cell of the super flag `F(2|0, 2|1; 4|1)`.
//!
//! A point is a triple `(A, α, β)`: `A` a 2×2 even block, `α` an odd 1×2 row,
//! `β` an odd 2×1 column. Its unipotent representative in `SL(4|1)` is
//!
//! ```text
//!   ⎡ I  0  0 ⎤
//!   ⎢ A  I  β ⎥
//!   ⎣ α  0  1 ⎦
//! ```
//!
//! and `π` recovers the triple from any group element whose top-left 2×2 block
//! has invertible body.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grassmann::{GrassmannAlgebra, Parity, SuperNumber};
use crate::linalg;
use crate::matrix::Mat;
use crate::realform::{self, ConjugationConfig};
use crate::scalar::GaussianRational;
use crate::supermatrix::{BlockShape, SuperMatrix};

fn check_block(name: &str, m: &Mat, rows: usize, cols: usize, odd: bool) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::ShapeMismatch(format!(
            "{name} must be {rows}x{cols}, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let want = Parity::from_bit(odd);
    if let Some(bad) = m.entries().find(|e| !e.is_zero() && e.parity() != want) {
        return Err(Error::ParityViolation(format!(
            "{name} entries must be {}, found {bad}",
            if odd { "odd" } else { "even" }
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigCellPoint {
    pub a: Mat,
    pub alpha: Mat,
    pub beta: Mat,
}

impl BigCellPoint {
    pub fn new(a: Mat, alpha: Mat, beta: Mat) -> Result<Self> {
        check_block("A", &a, 2, 2, false)?;
        check_block("alpha", &alpha, 1, 2, true)?;
        check_block("beta", &beta, 2, 1, true)?;
        Ok(Self { a, alpha, beta })
    }

    pub fn origin(alg: &Arc<GrassmannAlgebra>) -> Self {
        Self {
            a: Mat::zeros(alg, 2, 2),
            alpha: Mat::zeros(alg, 1, 2),
            beta: Mat::zeros(alg, 2, 1),
        }
    }

    pub fn algebra(&self) -> &Arc<GrassmannAlgebra> {
        self.a.algebra()
    }

    pub fn is_origin(&self) -> bool {
        self.a.is_zero() && self.alpha.is_zero() && self.beta.is_zero()
    }

    /// The unipotent representative `[[I,0,0],[A,I,β],[α,0,1]]`.
    pub fn representative(&self) -> Mat {
        unipotent(&self.a, &self.alpha, &self.beta)
    }

    pub fn representative_supermatrix(&self) -> SuperMatrix {
        SuperMatrix::even(BlockShape { m: 4, n: 1 }, self.representative()).expect("layout is even")
    }
}

fn unipotent(a: &Mat, alpha: &Mat, beta: &Mat) -> Mat {
    let alg = a.algebra();
    let mut g = Mat::identity(alg, 5);
    g.set_block(2, 0, a);
    g.set_block(2, 4, beta);
    g.set_block(4, 0, alpha);
    g
}

/// Element `[[L,0,0],[NL,R,Rχ],[dφ,0,d]]` of the super-Poincaré supergroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperPoincareElement {
    pub l: Mat,
    pub r: Mat,
    pub n: Mat,
    /// odd 2×1
    pub chi: Mat,
    /// odd 1×2
    pub varphi: Mat,
    pub d: SuperNumber,
}

impl SuperPoincareElement {
    pub fn new(l: Mat, r: Mat, n: Mat, chi: Mat, varphi: Mat, d: SuperNumber) -> Result<Self> {
        check_block("L", &l, 2, 2, false)?;
        check_block("R", &r, 2, 2, false)?;
        check_block("N", &n, 2, 2, false)?;
        check_block("chi", &chi, 2, 1, true)?;
        check_block("varphi", &varphi, 1, 2, true)?;
        if !d.is_zero() && d.parity() != Parity::Even {
            return Err(Error::ParityViolation("d must be even".into()));
        }
        for (name, m) in [("L", &l), ("R", &r)] {
            if m.det()?.body().is_zero() {
                return Err(Error::NotInvertible(format!("{name} is singular")));
            }
        }
        if d.body().is_zero() {
            return Err(Error::NotInvertible("d has zero body".into()));
        }
        Ok(Self { l, r, n, chi, varphi, d })
    }

    pub fn identity(alg: &Arc<GrassmannAlgebra>) -> Self {
        Self {
            l: Mat::identity(alg, 2),
            r: Mat::identity(alg, 2),
            n: Mat::zeros(alg, 2, 2),
            chi: Mat::zeros(alg, 2, 1),
            varphi: Mat::zeros(alg, 1, 2),
            d: SuperNumber::one(alg),
        }
    }

    /// A pure translation by `N`.
    pub fn translation(n: Mat) -> Result<Self> {
        let alg = n.algebra().clone();
        Self::new(
            Mat::identity(&alg, 2),
            Mat::identity(&alg, 2),
            n,
            Mat::zeros(&alg, 2, 1),
            Mat::zeros(&alg, 1, 2),
            SuperNumber::one(&alg),
        )
    }

    pub fn algebra(&self) -> &Arc<GrassmannAlgebra> {
        self.l.algebra()
    }

    pub fn to_matrix(&self) -> Mat {
        let alg = self.algebra();
        let mut g = Mat::zeros(alg, 5, 5);
        g.set_block(0, 0, &self.l);
        g.set_block(2, 0, &(&self.n * &self.l));
        g.set_block(2, 2, &self.r);
        g.set_block(2, 4, &(&self.r * &self.chi));
        g.set_block(4, 0, &self.varphi.scale_left(&self.d));
        g.set(4, 4, self.d.clone());
        g
    }

    pub fn to_supermatrix(&self) -> SuperMatrix {
        SuperMatrix::even(BlockShape { m: 4, n: 1 }, self.to_matrix()).expect("layout is even")
    }

    /// Parses a 5×5 matrix in the super-Poincaré pattern.
    pub fn from_matrix(g: &Mat) -> Result<Self> {
        if g.rows() != 5 || g.cols() != 5 {
            return Err(Error::ShapeMismatch("expected a 5x5 matrix".into()));
        }
        if !is_poincare_pattern(g) {
            return Err(Error::PatternViolation("matrix is not in the super-Poincare pattern".into()));
        }
        let l = g.block(0, 0, 2, 2);
        let r = g.block(2, 2, 2, 2);
        let d = g.get(4, 4).clone();
        let l_inv = l.inverse()?;
        let n = &g.block(2, 0, 2, 2) * &l_inv;
        let chi = &r.inverse()? * &g.block(2, 4, 2, 1);
        let varphi = g.block(4, 0, 1, 2).scale_left(&d.invert()?);
        Self::new(l, r, n, chi, varphi, d)
    }

    /// Matrix product `self · other`, reparsed into the pattern.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        Self::from_matrix(&(&self.to_matrix() * &other.to_matrix()))
    }

    pub fn berezinian(&self) -> Result<SuperNumber> {
        self.to_supermatrix().berezinian()
    }
}

/// Zeros in rows 1–2 / columns 3–5 and in row 5 / columns 3–4 (1-based).
pub fn is_poincare_pattern(g: &Mat) -> bool {
    let zero_at = |i: usize, j: usize| g.get(i, j).is_zero();
    (0..2).all(|i| (2..5).all(|j| zero_at(i, j))) && (2..4).all(|j| zero_at(4, j))
}

/// Whether `g` lies in the stabilizer `H` of the base point: zeros in
/// rows 3–4 / columns 1–2 and 5, and in row 5 / columns 1–2 (1-based), with
/// invertible body.
pub fn stabilizer_membership(g: &Mat) -> bool {
    if g.rows() != 5 || g.cols() != 5 {
        return false;
    }
    let zero_at = |i: usize, j: usize| g.get(i, j).is_zero();
    let pattern = (2..4).all(|i| [0, 1, 4].into_iter().all(|j| zero_at(i, j))) && (0..2).all(|j| zero_at(4, j));
    pattern && g.inverse().is_ok()
}

/// Flag coordinates on the product of the two Grassmannian charts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagChartPair {
    pub a_g1: Mat,
    pub alpha_g1: Mat,
    pub b: Mat,
    pub beta2: Mat,
}

impl FlagChartPair {
    /// The pair lying over a big-cell point: `B = A − βα`.
    pub fn from_point(pt: &BigCellPoint) -> Self {
        Self {
            a_g1: pt.a.clone(),
            alpha_g1: pt.alpha.clone(),
            b: &pt.a - &(&pt.beta * &pt.alpha),
            beta2: pt.beta.clone(),
        }
    }
}

/// `A = B + βα`.
pub fn twistor_check(pair: &FlagChartPair) -> bool {
    pair.a_g1 == &pair.b + &(&pair.beta2 * &pair.alpha_g1)
}

/// `π` on a raw 5×5 matrix, without parity checks: returns `(A, α, β)`.
pub fn pi_chart_mat(g: &Mat) -> Result<(Mat, Mat, Mat)> {
    if g.rows() != 5 || g.cols() != 5 {
        return Err(Error::ShapeMismatch("expected a 5x5 matrix".into()));
    }
    let z = g.block(0, 0, 2, 2);
    let w = g.block(2, 0, 2, 2);
    let rho1 = g.block(4, 0, 1, 2);
    let tau1 = g.block(0, 4, 2, 1);
    let tau2 = g.block(2, 4, 2, 1);
    let z_inv = z.inverse().map_err(|_| Error::NotInBigCell)?;
    let wz = &w * &z_inv;
    let rz = &rho1 * &z_inv;
    let denom = g.get(4, 4) - (&rz * &tau1).get(0, 0);
    let d = denom.invert().map_err(|_| Error::NotInBigCell)?;
    let beta = (&tau2 - &(&wz * &tau1)).scale_right(&d);
    Ok((wz, rz, beta))
}

pub fn pi_chart(g: &SuperMatrix) -> Result<BigCellPoint> {
    if g.shape() != (BlockShape { m: 4, n: 1 }) {
        return Err(Error::ShapeMismatch(format!("expected 4|1, got {}", g.shape())));
    }
    let (a, alpha, beta) = pi_chart_mat(g.as_mat())?;
    BigCellPoint::new(a, alpha, beta)
}

/// `A → R(A+χα)L⁻¹ + N`, `α → d(α+φ)L⁻¹`, `β → d⁻¹R(β+χ)`.
pub fn superpoincare_act(p: &SuperPoincareElement, pt: &BigCellPoint) -> Result<BigCellPoint> {
    let l_inv = p.l.inverse()?;
    let d_inv = p.d.invert()?;
    let a = &(&(&p.r * &(&pt.a + &(&p.chi * &pt.alpha))) * &l_inv) + &p.n;
    let alpha = &(&pt.alpha + &p.varphi).scale_left(&p.d) * &l_inv;
    let beta = (&p.r * &(&pt.beta + &p.chi)).scale_left(&d_inv);
    BigCellPoint::new(a, alpha, beta)
}

/// `P1·(P2·pt) = (P1P2)·pt`.
pub fn act_homomorphism_check(p1: &SuperPoincareElement, p2: &SuperPoincareElement, pt: &BigCellPoint) -> Result<bool> {
    let sequential = superpoincare_act(p1, &superpoincare_act(p2, pt)?)?;
    let product = p1.compose(p2)?;
    Ok(sequential == superpoincare_act(&product, pt)?)
}

/// Whether `g` keeps every big-cell point inside the cell.
///
/// For `g·rep(A, α, β)` the chart block is `Z = g₁₁ + g₁₂A + g₁₃α`, whose body
/// is `body(g₁₁) + body(g₁₂)·body(A)`, and the scalar denominator has body
/// `body(g₅₅)`. So the cell is preserved iff `body(g₁₂) = 0`, `body(g₁₁)` is
/// invertible and `body(g₅₅) ≠ 0` (block indices for the `2 + 2 + 1` split).
pub fn big_cell_invariance_check(g: &Mat) -> bool {
    let g11 = g.block(0, 0, 2, 2);
    let g12 = g.block(0, 2, 2, 2);
    let body_zero = |m: &Mat| m.entries().all(|e| e.body().is_zero());
    body_zero(&g12) && g11.inverse().is_ok() && !g.get(4, 4).body().is_zero()
}

/// A point that `g` pushes out of the big cell, if any.
pub fn cell_exit_witness(g: &Mat) -> Option<BigCellPoint> {
    let alg = GrassmannAlgebra::real(0);
    let origin = BigCellPoint::origin(&alg);
    let b0: Vec<linalg::Row> = g.block(0, 0, 2, 2).body();
    let b1: Vec<linalg::Row> = g.block(0, 2, 2, 2).body();
    let to_mat = |rows: &[linalg::Row]| Mat::from_scalars(&alg, rows).expect("2x2");
    let m0 = to_mat(&b0);
    let Ok(m0_inv) = m0.inverse() else {
        return Some(origin);
    };
    if g.get(4, 4).body().is_zero() {
        return Some(origin);
    }
    // det(B0 + B1 t u vᵀ) = det(B0)(1 + t vᵀB0⁻¹B1u); pick v = e_k, u = e_l with (B0⁻¹B1)_kl ≠ 0
    let c = &m0_inv * &to_mat(&b1);
    let (k, l) = (0..2).flat_map(|k| (0..2).map(move |l| (k, l))).find(|&(k, l)| !c.get(k, l).is_zero())?;
    let t = -c.get(k, l).body().inv().ok()?;
    let mut a = Mat::zeros(&alg, 2, 2);
    a.set(l, k, SuperNumber::scalar(&alg, t));
    Some(BigCellPoint { a, ..origin })
}

/// `ξ` on the big cell: conjugate the unipotent representative and read off the
/// chart. `π` is constant on `H`-cosets, so this equals renormalizing
/// `ξ(rep)` back to unipotent form.
pub fn xi_bigcell(pt: &BigCellPoint, cfg: &ConjugationConfig) -> Result<BigCellPoint> {
    let h = realform::xi_mat(&pt.representative(), &cfg.j())?;
    let (a, alpha, beta) = pi_chart_mat(&h)?;
    BigCellPoint::new(a, alpha, beta)
}

/// Closed form of [`xi_bigcell`]: `(−A† − α†β†, −jβ†, −jα†)`.
pub fn xi_bigcell_formula(pt: &BigCellPoint, cfg: &ConjugationConfig) -> BigCellPoint {
    let mj = -&cfg.j();
    BigCellPoint {
        a: &(-&pt.a.dagger()) - &(&pt.alpha.dagger() * &pt.beta.dagger()),
        alpha: pt.beta.dagger().scale(&mj),
        beta: pt.alpha.dagger().scale(&mj),
    }
}

/// The two reality conditions `A = −A† − jα†α` and `β = −jα†`.
pub fn reality_conditions(pt: &BigCellPoint, cfg: &ConjugationConfig) -> (bool, bool) {
    let j = cfg.j();
    let alpha_sq = (&pt.alpha.dagger() * &pt.alpha).scale(&j);
    let a_ok = pt.a == &(-&pt.a.dagger()) - &alpha_sq;
    let beta_ok = pt.beta == pt.alpha.dagger().scale(&-&j);
    (a_ok, beta_ok)
}

/// `A' = A + ½ jα†α`, returned with `α`.
pub fn real_coordinates(pt: &BigCellPoint, cfg: &ConjugationConfig) -> (Mat, Mat) {
    let half_j = cfg.j() * GaussianRational::from_frac(1, 2);
    let shift = (&pt.alpha.dagger() * &pt.alpha).scale(&half_j);
    (&pt.a + &shift, pt.alpha.clone())
}

/// Inverse of [`real_coordinates`] on the real locus: `A = A' − ½ jα†α`, `β = −jα†`.
pub fn point_from_real_coordinates(a_prime: &Mat, alpha: &Mat, cfg: &ConjugationConfig) -> Result<BigCellPoint> {
    let j = cfg.j();
    let half_j = &j * &GaussianRational::from_frac(1, 2);
    let shift = (&alpha.dagger() * alpha).scale(&half_j);
    BigCellPoint::new(a_prime - &shift, alpha.clone(), alpha.dagger().scale(&-&j))
}

/// Tangent vector `(Ȧ, α̇, β̇)` of `π` at the identity in direction `X`,
/// computed from `π(I + εX)` with `ε = ηη'`.
pub fn dpi_at_identity(x: &Mat) -> Result<(Mat, Mat, Mat)> {
    let base = x.algebra();
    let q = base.num_generators();
    let ext = base.extended(2)?;
    let eps_mask = 0b11u64 << q;
    let eps = SuperNumber::monomial(&ext, eps_mask, GaussianRational::one());
    let lifted = x.lift(&ext)?.scale_left(&eps);
    let (a, alpha, beta) = pi_chart_mat(&(&Mat::identity(&ext, 5) + &lifted))?;
    let first = |m: &Mat| -> Result<Mat> {
        let mut out = Mat::zeros(base, m.rows(), m.cols());
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                out.set(r, c, m.get(r, c).split_highest(eps_mask, base)?.1);
            }
        }
        Ok(out)
    };
    Ok((first(&a)?, first(&alpha)?, first(&beta)?))
}

/// Positions of the `n`-transpose pattern (`W̃`, then `τ̃₂`, then `ρ̃₁`), 0-based.
pub fn n_transpose_positions() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 2..4 {
        for j in 0..2 {
            out.push((i, j));
        }
    }
    out.extend([(2, 4), (3, 4), (4, 0), (4, 1)]);
    out
}

/// Matrix of `dπ|_I` restricted to the `n`-transpose directions, as rows of
/// `(Ȧ₁₁, Ȧ₁₂, Ȧ₂₁, Ȧ₂₂, α̇₁, α̇₂, β̇₁, β̇₂)`.
pub fn dpi_matrix() -> Result<Vec<linalg::Row>> {
    let alg = GrassmannAlgebra::real(0);
    n_transpose_positions()
        .into_iter()
        .map(|(i, j)| {
            let mut x = Mat::zeros(&alg, 5, 5);
            x.set(i, j, SuperNumber::one(&alg));
            let (a, alpha, beta) = dpi_at_identity(&x)?;
            Ok(a.entries().chain(alpha.entries()).chain(beta.entries()).map(SuperNumber::body).collect())
        })
        .collect()
}

/// Whether `dπ|_I` maps the `n`-transpose pattern bijectively onto the 4|4
/// tangent coordinates, even directions to `Ȧ` and odd ones to `(α̇, β̇)`.
pub fn dpi_is_bijective() -> Result<bool> {
    let rows = dpi_matrix()?;
    let graded = rows.iter().enumerate().all(|(k, row)| {
        let even_dir = k < 4;
        row.iter().enumerate().all(|(c, v)| v.is_zero() || (c < 4) == even_dir)
    });
    Ok(graded && linalg::rank(&rows) == 8)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(alg: &Arc<GrassmannAlgebra>, k: usize) -> SuperNumber {
        SuperNumber::generator(alg, k).unwrap()
    }

    #[test]
    fn pi_of_identity_and_representative() {
        let alg = GrassmannAlgebra::default_working();
        let id = SuperMatrix::identity(&alg, BlockShape { m: 4, n: 1 });
        assert!(pi_chart(&id).unwrap().is_origin());
        let a = Mat::from_rows(&alg, vec![vec![SuperNumber::from_int(&alg, 1), &g(&alg, 1) * &g(&alg, 2)], vec![
            SuperNumber::zero(&alg),
            SuperNumber::from_int(&alg, 3),
        ]])
        .unwrap();
        let alpha = Mat::from_rows(&alg, vec![vec![g(&alg, 3), g(&alg, 5)]]).unwrap();
        let beta = Mat::from_rows(&alg, vec![vec![g(&alg, 4)], vec![g(&alg, 6)]]).unwrap();
        let pt = BigCellPoint::new(a, alpha, beta).unwrap();
        assert_eq!(pi_chart(&pt.representative_supermatrix()).unwrap(), pt);
    }

    #[test]
    fn twistor_examples() {
        let alg = GrassmannAlgebra::default_working();
        let a = Mat::from_ints(&alg, &[&[1, 2], &[3, 4]]).unwrap();
        let alpha = Mat::from_rows(&alg, vec![vec![g(&alg, 1), g(&alg, 2)]]).unwrap();
        let beta = Mat::from_rows(&alg, vec![vec![g(&alg, 3)], vec![g(&alg, 4)]]).unwrap();
        let pt = BigCellPoint::new(a.clone(), alpha.clone(), beta.clone()).unwrap();
        assert!(twistor_check(&FlagChartPair::from_point(&pt)));
        let bad = FlagChartPair { a_g1: a.clone(), alpha_g1: alpha, b: a, beta2: beta };
        assert!(!twistor_check(&bad));
    }

    #[test]
    fn poincare_element_matches_pi() {
        let alg = GrassmannAlgebra::default_working();
        let l = Mat::from_ints(&alg, &[&[1, 1], &[0, 1]]).unwrap();
        let r = Mat::from_ints(&alg, &[&[2, 0], &[1, 1]]).unwrap();
        let n = Mat::from_ints(&alg, &[&[0, 1], &[-1, 2]]).unwrap();
        let chi = Mat::from_rows(&alg, vec![vec![g(&alg, 1)], vec![g(&alg, 2)]]).unwrap();
        let varphi = Mat::from_rows(&alg, vec![vec![g(&alg, 3), g(&alg, 4)]]).unwrap();
        let p = SuperPoincareElement::new(l, r, n, chi, varphi, SuperNumber::from_int(&alg, 2)).unwrap();
        let origin = BigCellPoint::origin(&alg);
        assert_eq!(pi_chart(&p.to_supermatrix()).unwrap(), superpoincare_act(&p, &origin).unwrap());
        assert_eq!(SuperPoincareElement::from_matrix(&p.to_matrix()).unwrap(), p);
        assert!(big_cell_invariance_check(&p.to_matrix()));
        assert!(!stabilizer_membership(&p.to_matrix()));
    }

    #[test]
    fn cell_exit_witness_for_upper_right_block() {
        let alg = GrassmannAlgebra::real(0);
        let mut g = Mat::identity(&alg, 5);
        g.set(0, 2, SuperNumber::one(&alg));
        assert!(!big_cell_invariance_check(&g));
        let pt = cell_exit_witness(&g).unwrap();
        assert_eq!(pi_chart_mat(&(&g * &pt.representative())), Err(Error::NotInBigCell));
        assert!(cell_exit_witness(&Mat::identity(&alg, 5)).is_none());
    }

    #[test]
    fn dpi_is_an_isomorphism() {
        assert!(dpi_is_bijective().unwrap());
    }

    #[test]
    fn xi_fixes_origin() {
        let alg = GrassmannAlgebra::default_working();
        let cfg = ConjugationConfig::default();
        assert!(xi_bigcell(&BigCellPoint::origin(&alg), &cfg).unwrap().is_origin());
    }
}
