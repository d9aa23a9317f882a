//! The conformal superalgebra `gl(4|1) ⊃ sl(4|1)` and its Poincaré/translation splitting.
//!
//! Elements are 5×5 supermatrices; rows and columns `0..4` are even, index `4`
//! is odd. In block form relative to the splitting `2 + 2 + 1`:
//!
//! ```text
//!        ⎡ L  0  0 ⎤              ⎡ 0  A  γ ⎤
//!   p =  ⎢ M  R  α ⎥         n =  ⎢ 0  0  0 ⎥
//!        ⎣ β  0  c ⎦              ⎣ 0  δ  0 ⎦
//! ```
//!
//! with `c = tr L + tr R` inside `sl(4|1)`. `γ` is a 2×1 column and `δ` a 1×2
//! row, following their placement in the matrix.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grassmann::{GrassmannAlgebra, SuperNumber};
use crate::linalg;
use crate::matrix::Mat;
use crate::scalar::GaussianRational;
use crate::supermatrix::{BlockShape, MatrixParity, SuperMatrix};

/// Size of the defining representation `C^{4|1}`.
pub const DIM: usize = 5;
/// Index of the odd basis vector.
pub const ODD: usize = 4;

pub fn shape() -> BlockShape {
    BlockShape { m: 4, n: 1 }
}

/// Parity of the elementary matrix `E_ij` (0-based indices).
pub fn position_is_odd(i: usize, j: usize) -> bool {
    (i == ODD) != (j == ODD)
}

/// An element of `gl(4|1)`.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    matrix: SuperMatrix,
}

impl AlgebraElement {
    pub fn new(matrix: SuperMatrix) -> Result<Self> {
        if matrix.shape() != shape() {
            return Err(Error::ShapeMismatch(format!("expected 4|1, got {}", matrix.shape())));
        }
        Ok(Self { matrix })
    }

    /// Wraps a 5×5 matrix, inferring its parity from the occupied positions.
    pub fn from_mat(mat: Mat) -> Result<Self> {
        Self::new(SuperMatrix::with_inferred_parity(shape(), mat)?)
    }

    pub fn zero(alg: &Arc<GrassmannAlgebra>) -> Self {
        Self { matrix: SuperMatrix::zero(alg, shape()) }
    }

    /// `c · E_ij` (0-based).
    pub fn elementary(alg: &Arc<GrassmannAlgebra>, i: usize, j: usize, c: GaussianRational) -> Self {
        let mut m = Mat::zeros(alg, DIM, DIM);
        m.set(i, j, SuperNumber::scalar(alg, c));
        Self::from_mat(m).expect("elementary matrices are homogeneous")
    }

    pub fn unit(alg: &Arc<GrassmannAlgebra>, i: usize, j: usize) -> Self {
        Self::elementary(alg, i, j, GaussianRational::one())
    }

    pub fn matrix(&self) -> &SuperMatrix {
        &self.matrix
    }

    pub fn as_mat(&self) -> &Mat {
        self.matrix.as_mat()
    }

    pub fn algebra(&self) -> &Arc<GrassmannAlgebra> {
        self.matrix.algebra()
    }

    pub fn parity(&self) -> MatrixParity {
        self.matrix.parity()
    }

    pub fn get(&self, i: usize, j: usize) -> &SuperNumber {
        self.matrix.get(i, j)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Self::from_mat(self.as_mat().try_add(other.as_mat())?)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Self::from_mat(self.as_mat().try_sub(other.as_mat())?)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::from_mat(self.as_mat().scale(c)).expect("scaling keeps the layout")
    }

    /// `tr(X_{4×4}) − X_{55}`, evaluated on every entry irrespective of parity.
    pub fn supertrace(&self) -> SuperNumber {
        let m = self.as_mat();
        let top = (0..4).fold(SuperNumber::zero(m.algebra()), |acc, i| &acc + m.get(i, i));
        &top - m.get(ODD, ODD)
    }

    pub fn in_sl(&self) -> bool {
        self.supertrace().is_zero()
    }

    /// Splits by position into the even (diagonal-block) and odd parts.
    pub fn homogeneous_parts(&self) -> (Self, Self) {
        let m = self.as_mat();
        let mut even = Mat::zeros(m.algebra(), DIM, DIM);
        let mut odd = Mat::zeros(m.algebra(), DIM, DIM);
        for i in 0..DIM {
            for j in 0..DIM {
                let target = if position_is_odd(i, j) { &mut odd } else { &mut even };
                target.set(i, j, m.get(i, j).clone());
            }
        }
        (
            Self::from_mat(even).expect("even part"),
            Self::from_mat(odd).expect("odd part"),
        )
    }

    /// Entries flattened row-major; only the bodies (scalar part) are kept.
    pub fn coordinates(&self) -> linalg::Row {
        self.as_mat().entries().map(SuperNumber::body).collect()
    }

    /// `X_{4×4}`, `μ` (4×1), `ν` (1×4), `x`.
    pub fn conformal_blocks(&self) -> (Mat, Mat, Mat, SuperNumber) {
        let (x, mu, nu, s) = self.matrix.blocks();
        (x, mu, nu, s.get(0, 0).clone())
    }

    pub fn from_conformal_blocks(x: &Mat, mu: &Mat, nu: &Mat, scalar: &SuperNumber) -> Result<Self> {
        let alg = x.algebra();
        let s = Mat::from_rows(alg, vec![vec![scalar.clone()]])?;
        Self::from_mat(Mat::from_blocks(alg, &[&[x, mu], &[nu, &s]])?)
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.matrix)
    }
}

fn homogeneous_bracket(x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    let px = x.parity().bit().expect("homogeneous");
    let py = y.parity().bit().expect("homogeneous");
    let xy = x.as_mat() * y.as_mat();
    let yx = y.as_mat() * x.as_mat();
    let out = if px * py == 1 { &xy + &yx } else { &xy - &yx };
    AlgebraElement::from_mat(out).expect("bracket of homogeneous elements is homogeneous")
}

/// Superbracket `[X, Y] = XY − (−1)^{|X||Y|} YX`, extended bilinearly.
pub fn bracket(x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    if x.parity() != MatrixParity::Inhomogeneous && y.parity() != MatrixParity::Inhomogeneous {
        return homogeneous_bracket(x, y);
    }
    let (x0, x1) = x.homogeneous_parts();
    let (y0, y1) = y.homogeneous_parts();
    let mut acc = AlgebraElement::zero(x.algebra());
    for a in [&x0, &x1] {
        for b in [&y0, &y1] {
            acc = acc.add(&homogeneous_bracket(a, b)).expect("same algebra");
        }
    }
    acc
}

/// The 25 elementary matrices `E_ij` of `gl(4|1)`, row-major.
pub fn gl_basis(alg: &Arc<GrassmannAlgebra>) -> Vec<AlgebraElement> {
    (0..DIM)
        .flat_map(|i| (0..DIM).map(move |j| (i, j)))
        .map(|(i, j)| AlgebraElement::unit(alg, i, j))
        .collect()
}

/// Named linear subspaces of `gl(4|1)` given by a support mask and an optional
/// supertrace constraint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternName {
    /// `sl(4|1)` itself.
    Sl,
    P,
    N,
    N0,
    N1,
    L0,
    H,
    P1,
    P2,
    P3,
    P4,
}

impl PatternName {
    pub const ALL: [PatternName; 11] = [
        PatternName::Sl,
        PatternName::P,
        PatternName::N,
        PatternName::N0,
        PatternName::N1,
        PatternName::L0,
        PatternName::H,
        PatternName::P1,
        PatternName::P2,
        PatternName::P3,
        PatternName::P4,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            PatternName::Sl => "sl",
            PatternName::P => "p",
            PatternName::N => "n",
            PatternName::N0 => "n0",
            PatternName::N1 => "n1",
            PatternName::L0 => "l0",
            PatternName::H => "h",
            PatternName::P1 => "p1",
            PatternName::P2 => "p2",
            PatternName::P3 => "p3",
            PatternName::P4 => "p4",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::PatternViolation(format!("unknown pattern {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspacePattern {
    pub name: PatternName,
    pub mask: [[bool; DIM]; DIM],
    pub supertrace_zero: bool,
}

fn mask_from(rows: [&str; DIM]) -> [[bool; DIM]; DIM] {
    let mut m = [[false; DIM]; DIM];
    for (i, r) in rows.iter().enumerate() {
        for (j, ch) in r.chars().enumerate() {
            m[i][j] = ch == '*';
        }
    }
    m
}

impl SubspacePattern {
    pub fn get(name: PatternName) -> Self {
        let rows = match name {
            PatternName::Sl => ["*****", "*****", "*****", "*****", "*****"],
            PatternName::P => ["**...", "**...", "*****", "*****", "**..*"],
            PatternName::N => ["..***", "..***", ".....", ".....", "..**."],
            PatternName::N0 => ["..**.", "..**.", ".....", ".....", "....."],
            PatternName::N1 => ["....*", "....*", ".....", ".....", "..**."],
            PatternName::L0 => ["**...", "**...", "..**.", "..**.", "....."],
            PatternName::H => ["*....", ".*...", "..*..", "...*.", "....*"],
            PatternName::P1 => ["**...", "**...", "****.", "****.", "*****"],
            PatternName::P2 => ["**...", "**...", "****.", "*****", "***.*"],
            PatternName::P3 => ["**...", "**..*", "*****", "*****", "*...*"],
            PatternName::P4 => ["**..*", "**..*", "*****", "*****", "....*"],
        };
        Self { name, mask: mask_from(rows), supertrace_zero: true }
    }

    pub fn allows(&self, i: usize, j: usize) -> bool {
        self.mask[i][j]
    }

    /// True iff every masked-out entry vanishes and the constraint holds.
    pub fn contains(&self, x: &AlgebraElement) -> bool {
        for i in 0..DIM {
            for j in 0..DIM {
                if !self.mask[i][j] && !x.get(i, j).is_zero() {
                    return false;
                }
            }
        }
        !self.supertrace_zero || x.in_sl()
    }

    /// A basis over the scalars: masked off-diagonal units, plus diagonal
    /// elements solving the supertrace constraint when it applies.
    pub fn basis(&self, alg: &Arc<GrassmannAlgebra>) -> Vec<AlgebraElement> {
        let mut out = Vec::new();
        for i in 0..DIM {
            for j in 0..DIM {
                if i != j && self.mask[i][j] {
                    out.push(AlgebraElement::unit(alg, i, j));
                }
            }
        }
        let diag: Vec<usize> = (0..DIM).filter(|&i| self.mask[i][i]).collect();
        if !self.supertrace_zero {
            out.extend(diag.iter().map(|&i| AlgebraElement::unit(alg, i, i)));
            return out;
        }
        // supertrace weight of E_ii is +1 for even i and −1 for the odd index
        let weight = |i: usize| if i == ODD { -1 } else { 1 };
        let pivot = diag.iter().copied().find(|&i| i == ODD).or_else(|| diag.first().copied());
        if let Some(r) = pivot {
            for &i in diag.iter().filter(|&&i| i != r) {
                let coeff = GaussianRational::from_int(-weight(i) * weight(r));
                let el = AlgebraElement::unit(alg, i, i)
                    .add(&AlgebraElement::elementary(alg, r, r, coeff))
                    .expect("same algebra");
                out.push(el);
            }
        }
        out
    }

    /// Even and odd basis vectors separately.
    pub fn graded_basis(&self, alg: &Arc<GrassmannAlgebra>) -> (Vec<AlgebraElement>, Vec<AlgebraElement>) {
        self.basis(alg).into_iter().partition(|b| b.parity() == MatrixParity::Even)
    }

    /// `(even dim, odd dim)`.
    pub fn dims(&self) -> (usize, usize) {
        let (e, o) = self.graded_basis(&GrassmannAlgebra::real(0));
        (e.len(), o.len())
    }

    /// Whether the bracket of any two basis elements stays in the subspace.
    pub fn is_closed_under_bracket(&self) -> bool {
        let basis = self.basis(&GrassmannAlgebra::real(0));
        basis
            .iter()
            .all(|x| basis.iter().all(|y| self.contains(&bracket(x, y))))
    }
}

/// `subspace_membership`.
pub fn subspace_membership(x: &AlgebraElement, pattern: PatternName) -> bool {
    SubspacePattern::get(pattern).contains(x)
}

/// Splits an `sl(4|1)` element as `X = X_p + X_n` by entrywise projection.
pub fn split_pn(x: &AlgebraElement) -> Result<(AlgebraElement, AlgebraElement)> {
    if !x.in_sl() {
        return Err(Error::NotSupertraceless);
    }
    let p = SubspacePattern::get(PatternName::P);
    let m = x.as_mat();
    let mut xp = Mat::zeros(m.algebra(), DIM, DIM);
    let mut xn = Mat::zeros(m.algebra(), DIM, DIM);
    for i in 0..DIM {
        for j in 0..DIM {
            let target = if p.allows(i, j) { &mut xp } else { &mut xn };
            target.set(i, j, m.get(i, j).clone());
        }
    }
    Ok((AlgebraElement::from_mat(xp)?, AlgebraElement::from_mat(xn)?))
}

/// Outcome of checking the translation-superalgebra axioms on a subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranslationReport {
    pub pattern: PatternName,
    pub even_abelian: bool,
    pub even_acts_trivially_on_odd: bool,
    pub odd_bracket_in_even: bool,
    pub odd_bracket_nonzero: bool,
    pub even_dim: usize,
    pub odd_dim: usize,
}

impl TranslationReport {
    pub fn is_translation_algebra(&self) -> bool {
        self.even_abelian
            && self.even_acts_trivially_on_odd
            && self.odd_bracket_in_even
            && self.odd_bracket_nonzero
            && self.even_dim == 4
            && self.odd_dim == 4
    }
}

/// Checks by exhaustive basis brackets whether a subspace is a translation
/// superalgebra: abelian 4-dimensional even part acting trivially on a
/// 4-dimensional odd part, with a nonzero odd bracket landing in the even part.
pub fn verify_translation_algebra(pattern: PatternName) -> TranslationReport {
    let pat = SubspacePattern::get(pattern);
    let alg = GrassmannAlgebra::real(0);
    let (even, odd) = pat.graded_basis(&alg);
    let even_abelian = even.iter().all(|x| even.iter().all(|y| bracket(x, y).is_zero()));
    let even_acts_trivially_on_odd = even.iter().all(|x| odd.iter().all(|y| bracket(x, y).is_zero()));
    let mut odd_bracket_in_even = true;
    let mut odd_bracket_nonzero = false;
    for x in &odd {
        for y in &odd {
            let b = bracket(x, y);
            if !b.is_zero() {
                odd_bracket_nonzero = true;
            }
            if !(pat.contains(&b) && b.parity() == MatrixParity::Even) {
                odd_bracket_in_even = false;
            }
        }
    }
    TranslationReport {
        pattern,
        even_abelian,
        even_acts_trivially_on_odd,
        odd_bracket_in_even,
        odd_bracket_nonzero,
        even_dim: even.len(),
        odd_dim: odd.len(),
    }
}

/// A root `a_i − a_j` of the diagonal Cartan subalgebra, stored as a
/// coefficient vector with one `+1` and one `−1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub coefficients: [i8; DIM],
}

impl Root {
    /// Root of `E_ij` (0-based): `a_i − a_j`.
    pub fn of_position(i: usize, j: usize) -> Self {
        assert!(i != j, "diagonal positions carry no root");
        let mut c = [0i8; DIM];
        c[i] = 1;
        c[j] = -1;
        Self { coefficients: c }
    }

    /// The position `(i, j)` whose root space this is.
    pub fn position(&self) -> (usize, usize) {
        let i = self.coefficients.iter().position(|&c| c == 1).expect("valid root");
        let j = self.coefficients.iter().position(|&c| c == -1).expect("valid root");
        (i, j)
    }

    pub fn is_valid(&self) -> bool {
        self.coefficients.iter().filter(|&&c| c == 1).count() == 1
            && self.coefficients.iter().filter(|&&c| c == -1).count() == 1
            && self.coefficients.iter().all(|&c| (-1..=1).contains(&c))
    }

    pub fn negate(&self) -> Self {
        let mut c = self.coefficients;
        for x in &mut c {
            *x = -*x;
        }
        Self { coefficients: c }
    }

    pub fn is_odd(&self) -> bool {
        let (i, j) = self.position();
        position_is_odd(i, j)
    }

    /// Which summand of `g = p ⊕ n` the root space belongs to.
    pub fn summand(&self) -> Summand {
        let (i, j) = self.position();
        if SubspacePattern::get(PatternName::P).allows(i, j) {
            Summand::P
        } else {
            Summand::N
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = self.position();
        write!(f, "a{}-a{}", i + 1, j + 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Summand {
    P,
    N,
}

impl Summand {
    pub fn as_str(&self) -> &'static str {
        match self {
            Summand::P => "p",
            Summand::N => "n",
        }
    }
}

/// Roots whose root spaces make up `p` (besides the Cartan part), written as
/// `±(a1−a2), ±(a3−a4), a3−ai, a4−ai, a5−ai (i = 1, 2), aj−a5 (j = 3, 4)`.
pub fn poincare_roots() -> Vec<Root> {
    // 1-based pairs (i, j) for a_i − a_j
    let mut pairs = vec![(1, 2), (2, 1), (3, 4), (4, 3)];
    for i in [1, 2] {
        pairs.extend([(3, i), (4, i), (5, i)]);
    }
    pairs.extend([(3, 5), (4, 5)]);
    pairs.into_iter().map(|(i, j)| Root::of_position(i - 1, j - 1)).collect()
}

/// Roots of `n`: `aj − ai, a5 − ai, aj − a5` for `i = 3, 4`, `j = 1, 2`.
pub fn translation_roots() -> Vec<Root> {
    let mut pairs = Vec::new();
    for i in [3, 4] {
        for j in [1, 2] {
            pairs.push((j, i));
        }
        pairs.push((5, i));
    }
    for j in [1, 2] {
        pairs.push((j, 5));
    }
    pairs.into_iter().map(|(i, j)| Root::of_position(i - 1, j - 1)).collect()
}

/// `X = cartan + Σ_root component`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDecomposition {
    pub cartan: AlgebraElement,
    pub components: BTreeMap<Root, AlgebraElement>,
}

impl RootDecomposition {
    pub fn recombine(&self) -> AlgebraElement {
        self.components
            .values()
            .fold(self.cartan.clone(), |acc, c| acc.add(c).expect("same algebra"))
    }
}

pub fn root_decomposition(x: &AlgebraElement) -> RootDecomposition {
    let m = x.as_mat();
    let alg = m.algebra();
    let mut cartan = Mat::zeros(alg, DIM, DIM);
    let mut components = BTreeMap::new();
    for i in 0..DIM {
        for j in 0..DIM {
            let v = m.get(i, j);
            if i == j {
                cartan.set(i, i, v.clone());
            } else if !v.is_zero() {
                let mut c = Mat::zeros(alg, DIM, DIM);
                c.set(i, j, v.clone());
                components.insert(Root::of_position(i, j), AlgebraElement::from_mat(c).expect("single entry"));
            }
        }
    }
    RootDecomposition {
        cartan: AlgebraElement::from_mat(cartan).expect("diagonal is even"),
        components,
    }
}

/// `(γ, δ) ↦ (xγ, δ y⁻¹)` for 2×2 `x, y`, 2×1 `γ`, 1×2 `δ`.
pub fn lorentz_act(x: &Mat, y: &Mat, gamma: &Mat, delta: &Mat) -> Result<(Mat, Mat)> {
    for (name, m) in [("x", x), ("y", y)] {
        if m.rows() != 2 || m.cols() != 2 {
            return Err(Error::ShapeMismatch(format!("{name} must be 2x2")));
        }
        if m.det()?.body().is_zero() {
            return Err(Error::NotInvertible(format!("{name} is singular")));
        }
    }
    Ok((x.try_mul(gamma)?, delta.try_mul(&y.inverse()?)?))
}

/// Assembles the `n1` element with the given `γ` (2×1) and `δ` (1×2).
pub fn n1_element(gamma: &Mat, delta: &Mat) -> Result<AlgebraElement> {
    let alg = gamma.algebra();
    let mut m = Mat::zeros(alg, DIM, DIM);
    if gamma.rows() != 2 || gamma.cols() != 1 || delta.rows() != 1 || delta.cols() != 2 {
        return Err(Error::ShapeMismatch("gamma must be 2x1 and delta 1x2".into()));
    }
    m.set_block(0, ODD, gamma);
    m.set_block(ODD, 2, delta);
    AlgebraElement::from_mat(m)
}

/// `(γ, δ)` of an element of `n1`.
pub fn n1_components(v: &AlgebraElement) -> Result<(Mat, Mat)> {
    if !subspace_membership(v, PatternName::N1) {
        return Err(Error::PatternViolation("element is not in n1".into()));
    }
    Ok((v.as_mat().block(0, ODD, 2, 1), v.as_mat().block(ODD, 2, 1, 2)))
}

/// The `A` block of an element of `n0`.
pub fn n0_block(x: &AlgebraElement) -> Result<Mat> {
    if !subspace_membership(x, PatternName::N0) {
        return Err(Error::PatternViolation("element is not in n0".into()));
    }
    Ok(x.as_mat().block(0, 2, 2, 2))
}

/// The odd commutator `n1 × n1 → n0`. For scalar entries its `A` block is
/// `γδ' + γ'δ`; with Grassmann-odd entries the sign flips to `γδ' − γ'δ`.
pub fn odd_pair(v: &AlgebraElement, w: &AlgebraElement) -> Result<AlgebraElement> {
    n1_components(v)?;
    n1_components(w)?;
    Ok(bracket(v, w))
}

/// `q(X) = det A` on `n0`.
pub fn quadratic_form(x: &AlgebraElement) -> Result<SuperNumber> {
    n0_block(x)?.det()
}

/// `diag(x, y, 1) · v · diag(x⁻¹, y⁻¹, 1)`.
pub fn lorentz_conjugate(x: &Mat, y: &Mat, v: &AlgebraElement) -> Result<AlgebraElement> {
    let alg = v.algebra();
    let one = Mat::identity(alg, 1);
    let z22 = Mat::zeros(alg, 2, 2);
    let z21 = Mat::zeros(alg, 2, 1);
    let z12 = Mat::zeros(alg, 1, 2);
    let g = Mat::from_blocks(alg, &[&[x, &z22, &z21], &[&z22, y, &z21], &[&z12, &z12, &one]])?;
    let g_inv = g.inverse()?;
    AlgebraElement::from_mat(&(&g * v.as_mat()) * &g_inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg() -> Arc<GrassmannAlgebra> {
        GrassmannAlgebra::real(0)
    }

    #[test]
    fn bracket_examples() {
        let a = alg();
        let x = AlgebraElement::unit(&a, 0, 1).add(&AlgebraElement::unit(&a, 2, 2)).unwrap();
        assert!(bracket(&x, &x).is_zero());
        let e15 = AlgebraElement::unit(&a, 0, 4);
        let e51 = AlgebraElement::unit(&a, 4, 0);
        let expected = AlgebraElement::unit(&a, 0, 0).add(&AlgebraElement::unit(&a, 4, 4)).unwrap();
        assert_eq!(bracket(&e15, &e51), expected);
    }

    #[test]
    fn pattern_dimensions() {
        assert_eq!(SubspacePattern::get(PatternName::Sl).dims(), (16, 8));
        assert_eq!(SubspacePattern::get(PatternName::P).dims(), (12, 4));
        assert_eq!(SubspacePattern::get(PatternName::N).dims(), (4, 4));
        assert_eq!(SubspacePattern::get(PatternName::N0).dims(), (4, 0));
        assert_eq!(SubspacePattern::get(PatternName::N1).dims(), (0, 4));
        assert_eq!(SubspacePattern::get(PatternName::H).dims(), (4, 0));
    }

    #[test]
    fn membership_examples() {
        let a = alg();
        let zero = AlgebraElement::zero(&a);
        for name in PatternName::ALL {
            assert!(subspace_membership(&zero, name), "{name:?}");
        }
        // diag(L, R, 0) with tr L + tr R = 0
        let l0 = AlgebraElement::unit(&a, 0, 1)
            .add(&AlgebraElement::unit(&a, 3, 2))
            .unwrap()
            .add(&AlgebraElement::unit(&a, 0, 0))
            .unwrap()
            .add(&AlgebraElement::elementary(&a, 3, 3, GaussianRational::from_int(-1)))
            .unwrap();
        assert!(subspace_membership(&l0, PatternName::L0));
        assert!(subspace_membership(&l0, PatternName::P));
        let n = AlgebraElement::unit(&a, 0, 2);
        assert!(!subspace_membership(&n, PatternName::P));
        assert!(subspace_membership(&n, PatternName::N0));
        // trace constraint
        assert!(!subspace_membership(&AlgebraElement::unit(&a, 0, 0), PatternName::P));
    }

    #[test]
    fn split_examples() {
        let a = alg();
        let xp = AlgebraElement::unit(&a, 2, 0);
        assert_eq!(split_pn(&xp).unwrap(), (xp.clone(), AlgebraElement::zero(&a)));
        let xn = AlgebraElement::unit(&a, 1, 3);
        assert_eq!(split_pn(&xn).unwrap(), (AlgebraElement::zero(&a), xn.clone()));
        assert_eq!(split_pn(&AlgebraElement::unit(&a, 1, 1)), Err(Error::NotSupertraceless));
    }

    #[test]
    fn translation_reports() {
        assert!(verify_translation_algebra(PatternName::N).is_translation_algebra());
        let p = verify_translation_algebra(PatternName::P);
        assert!(!p.even_abelian);
        assert!(!p.is_translation_algebra());
        let n0 = verify_translation_algebra(PatternName::N0);
        assert!(n0.even_abelian);
        assert_eq!((n0.even_dim, n0.odd_dim), (4, 0));
    }

    #[test]
    fn root_examples() {
        let a = alg();
        let diag = AlgebraElement::unit(&a, 1, 1);
        let d = root_decomposition(&diag);
        assert!(d.components.is_empty());
        assert_eq!(d.cartan, diag);
        let e12 = AlgebraElement::unit(&a, 0, 1);
        let d = root_decomposition(&e12);
        let root = *d.components.keys().next().unwrap();
        assert_eq!(root.to_string(), "a1-a2");
        assert_eq!(root.summand(), Summand::P);
    }

    #[test]
    fn lorentz_identity_and_singular() {
        let a = alg();
        let id = Mat::identity(&a, 2);
        let gamma = Mat::from_ints(&a, &[&[1], &[2]]).unwrap();
        let delta = Mat::from_ints(&a, &[&[3, 4]]).unwrap();
        assert_eq!(lorentz_act(&id, &id, &gamma, &delta).unwrap(), (gamma.clone(), delta.clone()));
        let sing = Mat::from_ints(&a, &[&[1, 1], &[1, 1]]).unwrap();
        assert!(matches!(lorentz_act(&id, &sing, &gamma, &delta), Err(Error::NotInvertible(_))));
    }
}
