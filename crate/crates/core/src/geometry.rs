//! Planes in `C⁴`, Plücker coordinates and the Klein quadric.
//!
//! Coordinates are always ordered `(y12, y23, y31, y14, y24, y34)`, with
//! `y31 = −y13`. The big cell is `y12 ≠ 0`; its points are the planes spanned
//! by the columns of `(I; A)`.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::grassmann::{GrassmannAlgebra, SuperNumber};
use crate::linalg;
use crate::matrix::Mat;
use crate::scalar::GaussianRational;

/// Index pairs (0-based) in coordinate order.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)];

pub fn scalars() -> Arc<GrassmannAlgebra> {
    GrassmannAlgebra::real(0)
}

fn scalar_entries(m: &Mat) -> Result<Vec<linalg::Row>> {
    if m.entries().any(|e| !e.is_scalar()) {
        return Err(Error::InvalidPoint("entries must be plain complex numbers".into()));
    }
    Ok(m.body())
}

/// A plane in `C⁴` given by a 4×2 basis.
#[derive(Clone, Debug)]
pub struct Plane {
    basis: Mat,
}

impl Plane {
    pub fn new(basis: Mat) -> Result<Self> {
        if basis.rows() != 4 || basis.cols() != 2 {
            return Err(Error::ShapeMismatch("a plane needs a 4x2 basis".into()));
        }
        if linalg::rank(&scalar_entries(&basis)?) < 2 {
            return Err(Error::DegeneratePlane);
        }
        Ok(Self { basis })
    }

    pub fn from_columns(a: [GaussianRational; 4], b: [GaussianRational; 4]) -> Result<Self> {
        let rows: Vec<Vec<GaussianRational>> = (0..4).map(|i| vec![a[i].clone(), b[i].clone()]).collect();
        Self::new(Mat::from_scalars(&scalars(), &rows)?)
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    fn column(&self, k: usize) -> Vec<GaussianRational> {
        (0..4).map(|i| self.basis.get(i, k).body()).collect()
    }

    /// Same column span.
    pub fn same_plane(&self, other: &Plane) -> bool {
        let rows: Vec<linalg::Row> = (0..4)
            .map(|i| (0..2).flat_map(|k| [self.basis.get(i, k).body(), other.basis.get(i, k).body()]).collect())
            .collect();
        linalg::rank(&rows) == 2
    }

    /// `g · plane`.
    pub fn transform(&self, g: &Mat) -> Result<Plane> {
        Plane::new(g.try_mul(&self.basis)?)
    }
}

impl PartialEq for Plane {
    fn eq(&self, other: &Self) -> bool {
        self.same_plane(other)
    }
}

/// A vector of `Λ²C⁴` in Plücker order; need not be decomposable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bivector {
    pub y: [GaussianRational; 6],
}

impl Bivector {
    pub fn new(y: [GaussianRational; 6]) -> Self {
        Self { y }
    }

    pub fn from_ints(y: [i64; 6]) -> Self {
        Self { y: y.map(GaussianRational::from_int) }
    }

    pub fn is_zero(&self) -> bool {
        self.y.iter().all(GaussianRational::is_zero)
    }

    /// `Q(y) = y12 y34 + y23 y14 + y31 y24`.
    pub fn quadratic_form(&self) -> GaussianRational {
        let y = &self.y;
        &(&(&y[0] * &y[5]) + &(&y[1] * &y[3])) + &(&y[2] * &y[4])
    }

    /// Antisymmetric 4×4 matrix `Y` with `Y_ij = y_ij`.
    fn antisymmetric(&self) -> Vec<Vec<GaussianRational>> {
        let mut m = vec![vec![GaussianRational::zero(); 4]; 4];
        for ((i, j), v) in PAIRS.iter().zip(&self.y) {
            m[*i][*j] = v.clone();
            m[*j][*i] = -v;
        }
        m
    }

    fn from_antisymmetric(m: &[Vec<GaussianRational>]) -> Self {
        Self { y: PAIRS.map(|(i, j)| m[i][j].clone()) }
    }

    /// `(g∧g)(y)`, i.e. `Y ↦ g Y gᵀ`.
    pub fn wedge_act(&self, g: &[Vec<GaussianRational>]) -> Self {
        let y = self.antisymmetric();
        let mut out = vec![vec![GaussianRational::zero(); 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                for k in 0..4 {
                    for l in 0..4 {
                        if y[k][l].is_zero() {
                            continue;
                        }
                        *slot += &(&(&g[i][k] * &y[k][l]) * &g[j][l]);
                    }
                }
            }
        }
        Self::from_antisymmetric(&out)
    }

    /// Complex conjugation followed by swapping the `y31`, `y24` slots.
    pub fn theta(&self) -> Self {
        let mut y = self.y.clone().map(|c| c.conj());
        y.swap(2, 4);
        Self { y }
    }

    /// Proportionality `self = λ·other` for some nonzero `λ`.
    pub fn projectively_equal(&self, other: &Self) -> bool {
        let Some(k) = other.y.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        if self.y[k].is_zero() {
            return false;
        }
        let lambda = &self.y[k] * &other.y[k].inv().expect("nonzero");
        self.y.iter().zip(&other.y).all(|(a, b)| a == &(&lambda * b))
    }
}

impl fmt::Display for Bivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.y.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A nonzero point of the Klein quadric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerPoint(Bivector);

impl PluckerPoint {
    pub fn new(y: [GaussianRational; 6]) -> Result<Self> {
        let v = Bivector::new(y);
        if v.is_zero() {
            return Err(Error::InvalidPoint("all Plucker coordinates vanish".into()));
        }
        if !v.quadratic_form().is_zero() {
            return Err(Error::InvalidPoint(format!("{v} violates the Klein relation")));
        }
        Ok(Self(v))
    }

    pub fn from_ints(y: [i64; 6]) -> Result<Self> {
        Self::new(y.map(GaussianRational::from_int))
    }

    pub fn coords(&self) -> &[GaussianRational; 6] {
        &self.0.y
    }

    pub fn bivector(&self) -> &Bivector {
        &self.0
    }

    pub fn projectively_equal(&self, other: &Self) -> bool {
        self.0.projectively_equal(&other.0)
    }
}

impl fmt::Display for PluckerPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The six minors `a_i b_j − a_j b_i` of a 4×2 matrix with commuting entries.
pub fn plucker_minors(basis: &Mat) -> [SuperNumber; 6] {
    let e = |i: usize, k: usize| basis.get(i, k);
    PAIRS.map(|(i, j)| &(e(i, 0) * e(j, 1)) - &(e(j, 0) * e(i, 1)))
}

/// `y_ij = a_i b_j − a_j b_i`.
pub fn plucker(p: &Plane) -> PluckerPoint {
    let a = p.column(0);
    let b = p.column(1);
    let y = PAIRS.map(|(i, j)| &(&a[i] * &b[j]) - &(&a[j] * &b[i]));
    PluckerPoint::new(y).expect("a rank-2 plane gives a nonzero Klein point")
}

/// `A = [[−y23, −y31], [−y24, y14]]` after scaling to `y12 = 1`.
pub fn chart_to_cell(y: &PluckerPoint) -> Result<Mat> {
    let c = y.coords();
    let s = c[0].inv().map_err(|_| Error::NotInBigCell)?;
    let n = |k: usize| &c[k] * &s;
    let rows = vec![vec![-&n(1), -&n(2)], vec![-&n(4), n(3)]];
    Mat::from_scalars(&scalars(), &rows)
}

/// The plane spanned by the columns of `(I; A)`.
pub fn cell_to_plane(a: &Mat) -> Result<Plane> {
    if a.rows() != 2 || a.cols() != 2 {
        return Err(Error::ShapeMismatch("A must be 2x2".into()));
    }
    let alg = a.algebra();
    Plane::new(Mat::from_blocks(alg, &[&[&Mat::identity(alg, 2)], &[a]])?)
}

/// `(1, −α, −β, δ, −γ, αδ − βγ)` for `A = [[α, β], [γ, δ]]`, valid over any
/// commutative coefficients.
pub fn big_cell_coordinates(a: &Mat) -> [SuperNumber; 6] {
    let (al, be, ga, de) = (a.get(0, 0), a.get(0, 1), a.get(1, 0), a.get(1, 1));
    [
        SuperNumber::one(a.algebra()),
        -al,
        -be,
        de.clone(),
        -ga,
        &(al * de) - &(be * ga),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeClass {
    BigCell,
    AffineCone,
    ProjectiveQuadric,
}

impl ConeClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConeClass::BigCell => "big_cell",
            ConeClass::AffineCone => "affine_cone",
            ConeClass::ProjectiveQuadric => "projective_quadric",
        }
    }
}

pub fn cone_membership(y: &Bivector) -> Result<ConeClass> {
    if y.is_zero() || !y.quadratic_form().is_zero() {
        return Err(Error::InvalidPoint(format!("{y} is not on the Klein quadric")));
    }
    let c = &y.y;
    if !c[0].is_zero() {
        return Ok(ConeClass::BigCell);
    }
    let residual = &(&c[1] * &c[3]) + &(&c[2] * &c[4]);
    assert!(residual.is_zero(), "y12 = 0 on the quadric forces the cone equation");
    Ok(if c[5].is_zero() { ConeClass::ProjectiveQuadric } else { ConeClass::AffineCone })
}

fn require_invertible(name: &str, m: &Mat) -> Result<Mat> {
    m.inverse().map_err(|_| Error::NotInvertible(format!("{name} is singular")))
}

/// Complex Poincaré parameters `(L, R, N)`, acting by `A ↦ N + RAL⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareParams {
    pub l: Mat,
    pub r: Mat,
    pub n: Mat,
}

impl PoincareParams {
    pub fn new(l: Mat, r: Mat, n: Mat) -> Result<Self> {
        require_invertible("L", &l)?;
        require_invertible("R", &r)?;
        Ok(Self { l, r, n })
    }

    /// `[[L, 0], [NL, R]]`.
    pub fn matrix(&self) -> Mat {
        let alg = self.l.algebra();
        let z = Mat::zeros(alg, 2, 2);
        Mat::from_blocks(alg, &[&[&self.l, &z], &[&(&self.n * &self.l), &self.r]]).expect("4x4")
    }

    /// `self ∘ first`: `(L₂L₁, R₂R₁, N₂ + R₂N₁L₂⁻¹)`.
    pub fn compose(&self, first: &PoincareParams) -> Result<Self> {
        let l2_inv = require_invertible("L", &self.l)?;
        let n = &self.n + &(&(&self.r * &first.n) * &l2_inv);
        Self::new(&self.l * &first.l, &self.r * &first.r, n)
    }
}

pub fn poincare_act(l: &Mat, r: &Mat, n: &Mat, a: &Mat) -> Result<Mat> {
    let l_inv = require_invertible("L", l)?;
    Ok(n + &(&(r * a) * &l_inv))
}

fn scalar_square(g: &Mat) -> Result<Vec<linalg::Row>> {
    if g.rows() != 4 || g.cols() != 4 {
        return Err(Error::ShapeMismatch("g must be 4x4".into()));
    }
    scalar_entries(g)
}

pub fn conformal_act_wedge(g: &Mat, y: &Bivector) -> Result<Bivector> {
    let rows = scalar_square(g)?;
    if g.det()?.is_zero() {
        return Err(Error::NotInvertible("g is singular".into()));
    }
    Ok(y.wedge_act(&rows))
}

pub fn theta_plucker(y: &PluckerPoint) -> PluckerPoint {
    PluckerPoint::new(y.0.theta().y).expect("theta preserves the quadric up to conjugation")
}

/// Real coordinates `(y12, y23, y14, y34, u, v)` of the θ-fixed subspace, with
/// `y31 = u + iv` and `y24 = u − iv`.
pub fn real_slice(coords: &[BigRational; 6]) -> Bivector {
    let r = |k: usize| GaussianRational::from_real(coords[k].clone());
    let y31 = GaussianRational::new(coords[4].clone(), coords[5].clone());
    Bivector::new([r(0), r(1), y31.clone(), r(2), y31.conj(), r(3)])
}

/// Gram matrix of `Q_R` on the θ-fixed real subspace, by polarization.
pub fn qr_gram() -> Vec<Vec<BigRational>> {
    let basis: Vec<[BigRational; 6]> = (0..6)
        .map(|k| std::array::from_fn(|t| if t == k { BigRational::from_integer(1.into()) } else { BigRational::from_integer(0.into()) }))
        .collect();
    let q = |v: &[BigRational; 6]| {
        let val = real_slice(v).quadratic_form();
        assert!(val.is_real(), "Q is real on the θ-fixed subspace");
        val.re()
    };
    let two = BigRational::from_integer(2.into());
    (0..6)
        .map(|i| {
            (0..6)
                .map(|j| {
                    let sum: [BigRational; 6] = std::array::from_fn(|t| &basis[i][t] + &basis[j][t]);
                    (q(&sum) - q(&basis[i]) - q(&basis[j])) / &two
                })
                .collect()
        })
        .collect()
}

/// `(positives, negatives)` of `Q_R`.
pub fn qr_signature() -> (usize, usize) {
    let (p, n, _) = linalg::inertia(&qr_gram());
    (p, n)
}

pub fn is_hermitian(m: &Mat) -> bool {
    m == &m.dagger()
}

/// `A ↦ N + L†⁻¹ A L⁻¹` with hermitian `N`.
pub fn real_poincare_act(l: &Mat, n: &Mat, a: &Mat) -> Result<Mat> {
    if !is_hermitian(n) {
        return Err(Error::NonHermitianTranslation);
    }
    let l_inv = require_invertible("L", l)?;
    Ok(n + &(&(&l.dagger().inverse()? * a) * &l_inv))
}

/// `(L₂, N₂) ∘ (L₁, N₁) = (L₂L₁, N₂ + L₂†⁻¹ N₁ L₂⁻¹)`.
pub fn real_poincare_compose(l2: &Mat, n2: &Mat, l1: &Mat, n1: &Mat) -> Result<(Mat, Mat)> {
    Ok((l2 * l1, real_poincare_act(l2, n2, n1)?))
}
