//! Conjugations and real forms.
//!
//! * `σ` on `gl(4|1)`: `(X, μ, ν, x) ↦ (−F X† F, i F ν†, i μ† F, −x̄)`.
//! * `θ` on the supergroup: `(D τ; ρ d) ↦ (D† jρ†; jτ† d̄)`, an anti-homomorphism.
//! * `ξ(g) = L (g^θ)⁻¹ L` with `L = diag(F, 1)`, a homomorphism and involution.
//!
//! `j` is either `i` or `−i`. The default is the value for which the
//! differential of `ξ` at the identity equals `σ`; [`bootstrap_j_sign`]
//! recomputes it.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grassmann::{GrassmannAlgebra, SuperNumber};
use crate::liesuper::{self, AlgebraElement, PatternName, SubspacePattern};
use crate::linalg;
use crate::matrix::Mat;
use crate::scalar::GaussianRational;
use crate::superflag::SuperPoincareElement;
use crate::supermatrix::{MatrixParity, SuperMatrix};

/// Default is the sign the bootstrap selects.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum JSign {
    PlusI,
    #[default]
    MinusI,
}

impl JSign {
    pub fn value(self) -> GaussianRational {
        match self {
            JSign::PlusI => GaussianRational::i(),
            JSign::MinusI => -GaussianRational::i(),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            JSign::PlusI => "+i",
            JSign::MinusI => "-i",
        }
    }
}

impl fmt::Display for JSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for JSign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+i" | "i" => Ok(JSign::PlusI),
            "-i" => Ok(JSign::MinusI),
            other => Err(Error::Config(format!("j must be +i or -i, got {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ConjugationConfig {
    pub j: JSign,
}

impl ConjugationConfig {
    pub fn new(j: JSign) -> Self {
        Self { j }
    }

    pub fn j(&self) -> GaussianRational {
        self.j.value()
    }
}

/// `F = [[0, I2], [I2, 0]]`.
pub fn f_matrix(alg: &Arc<GrassmannAlgebra>) -> Mat {
    let mut f = Mat::zeros(alg, 4, 4);
    for k in 0..2 {
        f.set(k, k + 2, SuperNumber::one(alg));
        f.set(k + 2, k, SuperNumber::one(alg));
    }
    f
}

/// `L = diag(F, 1)`.
pub fn l_matrix(alg: &Arc<GrassmannAlgebra>) -> Mat {
    let mut l = Mat::zeros(alg, 5, 5);
    l.set_block(0, 0, &f_matrix(alg));
    l.set(4, 4, SuperNumber::one(alg));
    l
}

pub fn sigma(x: &AlgebraElement) -> AlgebraElement {
    let alg = x.algebra();
    let f = f_matrix(alg);
    let i = GaussianRational::i();
    let (m, mu, nu, s) = x.conformal_blocks();
    let m2 = -&(&(&f * &m.dagger()) * &f);
    let mu2 = (&f * &nu.dagger()).scale(&i);
    let nu2 = (&mu.dagger() * &f).scale(&i);
    let s2 = -&s.bar();
    AlgebraElement::from_conformal_blocks(&m2, &mu2, &nu2, &s2).expect("blocks have the right shapes")
}

pub fn is_sigma_fixed(x: &AlgebraElement) -> bool {
    &sigma(x) == x
}

/// Real bases of the even and odd parts of `{X ∈ sl(4|1) : σ(X) = X}`.
#[derive(Clone, Debug)]
pub struct FixedBasis {
    pub even: Vec<AlgebraElement>,
    pub odd: Vec<AlgebraElement>,
}

impl FixedBasis {
    pub fn real_dims(&self) -> (usize, usize) {
        (self.even.len(), self.odd.len())
    }

    pub fn all(&self) -> impl Iterator<Item = &AlgebraElement> {
        self.even.iter().chain(&self.odd)
    }
}

fn real_coordinates(x: &AlgebraElement) -> linalg::Row {
    x.coordinates()
        .into_iter()
        .flat_map(|c| [GaussianRational::from_real(c.re()), GaussianRational::from_real(c.im())])
        .collect()
}

/// The fixed set is the image of `X ↦ X + σ(X)`; applying it to the complex
/// basis and its `i`-multiples and keeping a real-independent subset gives a
/// real basis.
pub fn sigma_fixed_basis() -> FixedBasis {
    let alg = GrassmannAlgebra::real(0);
    let i = GaussianRational::i();
    let (even, odd) = SubspacePattern::get(PatternName::Sl).graded_basis(&alg);
    let select = |part: Vec<AlgebraElement>| {
        let mut kept: Vec<AlgebraElement> = Vec::new();
        let mut rows: Vec<linalg::Row> = Vec::new();
        for b in part.iter().flat_map(|b| [b.clone(), b.scale(&i)]) {
            let v = b.add(&sigma(&b)).expect("same algebra");
            rows.push(real_coordinates(&v));
            if linalg::rank(&rows) > kept.len() {
                kept.push(v);
            } else {
                rows.pop();
            }
        }
        kept
    };
    FixedBasis { even: select(even), odd: select(odd) }
}

fn check_group_element(g: &SuperMatrix) -> Result<()> {
    if g.shape() != liesuper::shape() {
        return Err(Error::ShapeMismatch(format!("expected 4|1, got {}", g.shape())));
    }
    if g.parity() != MatrixParity::Even {
        return Err(Error::ParityViolation("group elements must be even supermatrices".into()));
    }
    Ok(())
}

/// `θ` on a raw 5×5 matrix; no parity requirements.
pub fn theta_mat(g: &Mat, j: &GaussianRational) -> Mat {
    let alg = g.algebra();
    let d = g.block(0, 0, 4, 4);
    let tau = g.block(0, 4, 4, 1);
    let rho = g.block(4, 0, 1, 4);
    let s = Mat::from_rows(alg, vec![vec![g.get(4, 4).bar()]]).expect("1x1");
    let top = rho.dagger().scale(j);
    let bottom = tau.dagger().scale(j);
    Mat::from_blocks(alg, &[&[&d.dagger(), &top], &[&bottom, &s]]).expect("5x5")
}

/// `ξ` on a raw 5×5 matrix.
pub fn xi_mat(g: &Mat, j: &GaussianRational) -> Result<Mat> {
    let l = l_matrix(g.algebra());
    let inv = theta_mat(g, j).inverse()?;
    Ok(&(&l * &inv) * &l)
}

pub fn theta_group(g: &SuperMatrix, cfg: &ConjugationConfig) -> Result<SuperMatrix> {
    check_group_element(g)?;
    // invertible over Λ iff the body is
    if linalg::rank(&g.as_mat().body()) < liesuper::DIM {
        return Err(Error::NotInvertible("group element has singular body".into()));
    }
    SuperMatrix::even(g.shape(), theta_mat(g.as_mat(), &cfg.j()))
}

pub fn xi_group(g: &SuperMatrix, cfg: &ConjugationConfig) -> Result<SuperMatrix> {
    check_group_element(g)?;
    SuperMatrix::even(g.shape(), xi_mat(g.as_mat(), &cfg.j())?)
}

/// First-order part of `ξ(I + εX)`, with `ε = ηη'` built from two adjoined
/// self-conjugate generators so that `ε² = 0` and `ε̄ = ε`.
pub fn xi_differential(x: &AlgebraElement, cfg: &ConjugationConfig) -> Result<AlgebraElement> {
    let base = x.algebra();
    let q = base.num_generators();
    let ext = base.extended(2)?;
    let eps_mask = 0b11u64 << q;
    let eps = SuperNumber::monomial(&ext, eps_mask, GaussianRational::one());
    let lifted = x.as_mat().lift(&ext)?.scale_left(&eps);
    let g = &Mat::identity(&ext, liesuper::DIM) + &lifted;
    let h = xi_mat(&g, &cfg.j())?;
    let mut out = Mat::zeros(base, liesuper::DIM, liesuper::DIM);
    for r in 0..liesuper::DIM {
        for c in 0..liesuper::DIM {
            let (_, first) = h.get(r, c).split_highest(eps_mask, base)?;
            out.set(r, c, first);
        }
    }
    AlgebraElement::from_mat(out)
}

/// Finds the unique `j` for which `dξ|_I = σ` on `gl(4|1)` with coefficients `1` and `i`.
pub fn bootstrap_j_sign() -> Result<JSign> {
    let alg = GrassmannAlgebra::real(0);
    let i = GaussianRational::i();
    let probes: Vec<AlgebraElement> = liesuper::gl_basis(&alg)
        .into_iter()
        .flat_map(|b| [b.clone(), b.scale(&i)])
        .collect();
    let mut winners = Vec::new();
    for j in [JSign::PlusI, JSign::MinusI] {
        let cfg = ConjugationConfig::new(j);
        let mut agree = true;
        for x in &probes {
            if xi_differential(x, &cfg)? != sigma(x) {
                agree = false;
                break;
            }
        }
        if agree {
            winners.push(j);
        }
    }
    match winners.as_slice() {
        [j] => Ok(*j),
        _ => Err(Error::Config(format!("expected exactly one j sign, found {winners:?}"))),
    }
}

/// Reality conditions for a super-Poincaré group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareRealityReport {
    /// `L = R†⁻¹`
    pub l_condition: bool,
    /// `χ = −jφ†`
    pub chi_condition: bool,
    /// `ML⁻¹ = −(ML⁻¹)† − j L†⁻¹ φ†φ L⁻¹`
    pub m_condition: bool,
    /// `M' = ML⁻¹ + ½ j L†⁻¹ φ†φ L⁻¹`; with the other conditions, the
    /// M-condition says `M'` is skew-hermitian.
    pub m_shifted: Mat,
    pub m_shifted_skew_hermitian: bool,
    /// `d d̄ = 1`
    pub d_condition: bool,
    pub fixed_by_xi: bool,
}

impl PoincareRealityReport {
    pub fn all_hold(&self) -> bool {
        self.l_condition && self.chi_condition && self.m_condition && self.d_condition
    }
}

fn odd_square_term(p: &SuperPoincareElement, j: &GaussianRational) -> Result<Mat> {
    let l_inv = p.l.inverse()?;
    let phi_l = &p.varphi * &l_inv;
    Ok((&phi_l.dagger() * &phi_l).scale(j))
}

pub fn reality_conditions_poincare(g: &SuperMatrix, cfg: &ConjugationConfig) -> Result<PoincareRealityReport> {
    check_group_element(g)?;
    let p = SuperPoincareElement::from_matrix(g.as_mat())?;
    let j = cfg.j();
    let r_dagger_inv = p.r.dagger().inverse()?;
    let l_condition = p.l == r_dagger_inv;
    let chi_condition = p.chi == p.varphi.dagger().scale(&-&j);
    // M L⁻¹ is the translation block N
    let s = odd_square_term(&p, &j)?;
    let ml = &p.n;
    let m_condition = ml == &(&(-&ml.dagger()) - &s);
    let m_shifted = ml + &s.scale(&GaussianRational::from_frac(1, 2));
    let m_shifted_skew_hermitian = m_shifted == -&m_shifted.dagger();
    let d_condition = (&p.d * &p.d.bar()).is_one();
    let fixed_by_xi = &xi_group(g, cfg)? == g;
    Ok(PoincareRealityReport {
        l_condition,
        chi_condition,
        m_condition,
        m_shifted,
        m_shifted_skew_hermitian,
        d_condition,
        fixed_by_xi,
    })
}

/// A super-Poincaré element satisfying the reality conditions, built from
/// `R`, `φ`, a skew-hermitian `M'` and `d` with `dd̄ = 1`.
pub fn real_poincare_element(
    r: &Mat,
    varphi: &Mat,
    m_shifted: &Mat,
    d: &SuperNumber,
    cfg: &ConjugationConfig,
) -> Result<SuperPoincareElement> {
    let l = r.dagger().inverse()?;
    let chi = varphi.dagger().scale(&-&cfg.j());
    let provisional = SuperPoincareElement::new(l, r.clone(), m_shifted.clone(), chi, varphi.clone(), d.clone())?;
    let s = odd_square_term(&provisional, &cfg.j())?;
    let n = m_shifted - &s.scale(&GaussianRational::from_frac(1, 2));
    SuperPoincareElement::new(provisional.l, provisional.r, n, provisional.chi, provisional.varphi, provisional.d)
}

/// Real Lorentz action on the big cell: `diag(x, x†⁻¹)` acting on `A` by `x A x†`.
pub fn real_lorentz_act(x: &Mat, a: &Mat) -> Result<Mat> {
    if x.det()?.body().is_zero() {
        return Err(Error::NotInvertible("x is singular".into()));
    }
    Ok(&(x * a) * &x.dagger())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg() -> Arc<GrassmannAlgebra> {
        GrassmannAlgebra::real(0)
    }

    #[test]
    fn f_and_l_square_to_identity() {
        let a = alg();
        assert_eq!(&f_matrix(&a) * &f_matrix(&a), Mat::identity(&a, 4));
        assert_eq!(&l_matrix(&a) * &l_matrix(&a), Mat::identity(&a, 5));
    }

    #[test]
    fn sigma_on_translation_block_is_minus_dagger() {
        let a = alg();
        let x = AlgebraElement::elementary(&a, 0, 3, GaussianRational::from_parts((1, 1), (2, 1)));
        let s = sigma(&x);
        // A[0][1] = 1+2i maps to −conj at A[1][0]
        assert_eq!(s, AlgebraElement::elementary(&a, 1, 2, GaussianRational::from_parts((-1, 1), (2, 1))));
    }

    #[test]
    fn sigma_swaps_lorentz_blocks() {
        let a = alg();
        // L = E_12, R = 0 gives R' = −L† = −E_21 at (3, 2)
        let l = AlgebraElement::unit(&a, 0, 1);
        assert_eq!(sigma(&l), AlgebraElement::elementary(&a, 3, 2, GaussianRational::from_int(-1)));
    }

    #[test]
    fn sigma_is_involutive_on_basis() {
        let a = alg();
        for b in liesuper::gl_basis(&a) {
            for c in [GaussianRational::one(), GaussianRational::i()] {
                let x = b.scale(&c);
                assert_eq!(sigma(&sigma(&x)), x);
            }
        }
    }

    #[test]
    fn fixed_dimensions() {
        assert_eq!(sigma_fixed_basis().real_dims(), (16, 8));
    }

    #[test]
    fn default_j_is_the_bootstrap_winner() {
        assert_eq!(bootstrap_j_sign().unwrap(), JSign::default());
    }

    #[test]
    fn identity_is_fixed_by_group_maps() {
        let a = alg();
        let id = SuperMatrix::identity(&a, liesuper::shape());
        let cfg = ConjugationConfig::default();
        assert_eq!(theta_group(&id, &cfg).unwrap(), id);
        assert_eq!(xi_group(&id, &cfg).unwrap(), id);
        let report = reality_conditions_poincare(&id, &cfg).unwrap();
        assert!(report.all_hold() && report.fixed_by_xi);
    }

    #[test]
    fn j_sign_parsing() {
        assert_eq!("+i".parse::<JSign>().unwrap(), JSign::PlusI);
        assert_eq!("-i".parse::<JSign>().unwrap(), JSign::MinusI);
        assert!("1".parse::<JSign>().is_err());
    }
}
