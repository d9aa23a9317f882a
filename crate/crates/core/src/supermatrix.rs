//! Block `(m|n) × (m|n)` supermatrices: the concrete `GL(m|n)` and `SL(m|n)`.
//!
//! An even supermatrix `[[p, q], [r, s]]` has even entries in the diagonal
//! blocks `p` (m×m) and `s` (n×n) and odd entries in `q` (m×n) and `r` (n×m).
//! Odd supermatrices reverse that layout.
//!
//! # Berezinian
//!
//! [`SuperMatrix::berezinian`] computes `det(p − q s⁻¹ r) · det(s)⁻¹`. A formula
//! occasionally printed as `det(s⁻¹) det(p − q s r)` drops the inverse on the
//! middle factor; it is kept as [`SuperMatrix::berezinian_without_inverse`]
//! only so tests can show that it is not multiplicative.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grassmann::{GrassmannAlgebra, Parity, SuperNumber};
use crate::matrix::Mat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BlockShape {
    pub m: usize,
    pub n: usize,
}

impl BlockShape {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m + n == 0 {
            return Err(Error::ShapeMismatch("block shape 0|0".into()));
        }
        Ok(Self { m, n })
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    /// Whether position `(i, j)` lies in an off-diagonal (odd for even matrices) block.
    pub fn is_off_diagonal(&self, i: usize, j: usize) -> bool {
        (i < self.m) != (j < self.m)
    }
}

impl fmt::Display for BlockShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.m, self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixParity {
    Even,
    Odd,
    Inhomogeneous,
}

impl MatrixParity {
    pub fn as_str(&self) -> &'static str {
        match self {
            MatrixParity::Even => "even",
            MatrixParity::Odd => "odd",
            MatrixParity::Inhomogeneous => "inhomogeneous",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "even" => Ok(MatrixParity::Even),
            "odd" => Ok(MatrixParity::Odd),
            "inhomogeneous" => Ok(MatrixParity::Inhomogeneous),
            other => Err(Error::Json(format!("unknown parity {other:?}"))),
        }
    }

    /// 0/1 for homogeneous parities.
    pub fn bit(&self) -> Option<u8> {
        match self {
            MatrixParity::Even => Some(0),
            MatrixParity::Odd => Some(1),
            MatrixParity::Inhomogeneous => None,
        }
    }

    pub fn from_bit(bit: u8) -> Self {
        if bit.is_multiple_of(2) {
            MatrixParity::Even
        } else {
            MatrixParity::Odd
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct SuperMatrix {
    shape: BlockShape,
    parity: MatrixParity,
    mat: Mat,
}

impl SuperMatrix {
    /// Wraps a square matrix, checking the entry layout against `parity`.
    pub fn new(shape: BlockShape, mat: Mat, parity: MatrixParity) -> Result<Self> {
        if mat.rows() != shape.size() || mat.cols() != shape.size() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix for shape {shape}",
                mat.rows(),
                mat.cols()
            )));
        }
        if let Some(bit) = parity.bit() {
            for i in 0..shape.size() {
                for j in 0..shape.size() {
                    let want_odd = shape.is_off_diagonal(i, j) ^ (bit == 1);
                    let e = mat.get(i, j);
                    let ok = e.is_zero() || e.parity() == Parity::from_bit(want_odd);
                    if !ok {
                        return Err(Error::ParityViolation(format!(
                            "entry ({}, {}) = {e} should be {} in a {} supermatrix",
                            i + 1,
                            j + 1,
                            if want_odd { "odd" } else { "even" },
                            parity.as_str()
                        )));
                    }
                }
            }
        }
        Ok(Self { shape, parity, mat })
    }

    pub fn even(shape: BlockShape, mat: Mat) -> Result<Self> {
        Self::new(shape, mat, MatrixParity::Even)
    }

    /// Wraps `mat` with the finest parity its entries admit.
    pub fn with_inferred_parity(shape: BlockShape, mat: Mat) -> Result<Self> {
        Self::new(shape, mat.clone(), MatrixParity::Even)
            .or_else(|_| Self::new(shape, mat.clone(), MatrixParity::Odd))
            .or_else(|_| Self::new(shape, mat, MatrixParity::Inhomogeneous))
    }

    pub fn identity(alg: &Arc<GrassmannAlgebra>, shape: BlockShape) -> Self {
        Self { shape, parity: MatrixParity::Even, mat: Mat::identity(alg, shape.size()) }
    }

    pub fn zero(alg: &Arc<GrassmannAlgebra>, shape: BlockShape) -> Self {
        Self { shape, parity: MatrixParity::Even, mat: Mat::zeros(alg, shape.size(), shape.size()) }
    }

    pub fn from_blocks(p: &Mat, q: &Mat, r: &Mat, s: &Mat, parity: MatrixParity) -> Result<Self> {
        let shape = BlockShape::new(p.rows(), s.rows())?;
        let mat = Mat::from_blocks(p.algebra(), &[&[p, q], &[r, s]])?;
        Self::new(shape, mat, parity)
    }

    pub fn shape(&self) -> BlockShape {
        self.shape
    }

    pub fn parity(&self) -> MatrixParity {
        self.parity
    }

    pub fn algebra(&self) -> &Arc<GrassmannAlgebra> {
        self.mat.algebra()
    }

    pub fn as_mat(&self) -> &Mat {
        &self.mat
    }

    pub fn into_mat(self) -> Mat {
        self.mat
    }

    pub fn get(&self, i: usize, j: usize) -> &SuperNumber {
        self.mat.get(i, j)
    }

    /// `(p, q, r, s)`.
    pub fn blocks(&self) -> (Mat, Mat, Mat, Mat) {
        let (m, n) = (self.shape.m, self.shape.n);
        (
            self.mat.block(0, 0, m, m),
            self.mat.block(0, m, m, n),
            self.mat.block(m, 0, n, m),
            self.mat.block(m, m, n, n),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(format!("{} vs {}", self.shape, other.shape)));
        }
        Ok(())
    }

    /// Ordinary matrix product over the Grassmann algebra.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let parity = match (self.parity.bit(), other.parity.bit()) {
            (Some(a), Some(b)) => MatrixParity::from_bit(a + b),
            _ => MatrixParity::Inhomogeneous,
        };
        let mat = self.mat.try_mul(&other.mat)?;
        Ok(Self { shape: self.shape, parity, mat })
    }

    fn combine(&self, other: &Self, mat: Mat) -> Self {
        let parity = if self.parity == other.parity || other.is_zero() {
            self.parity
        } else if self.is_zero() {
            other.parity
        } else {
            MatrixParity::Inhomogeneous
        };
        Self { shape: self.shape, parity, mat }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let mat = self.mat.try_add(&other.mat)?;
        Ok(self.combine(other, mat))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let mat = self.mat.try_sub(&other.mat)?;
        Ok(self.combine(other, mat))
    }

    pub fn neg(&self) -> Self {
        Self { shape: self.shape, parity: self.parity, mat: -&self.mat }
    }

    /// `tr(p) − tr(s)`; defined here for even supermatrices only.
    pub fn supertrace(&self) -> Result<SuperNumber> {
        self.require_even("supertrace")?;
        let (p, _, _, s) = self.blocks();
        Ok(&p.trace()? - &s.trace()?)
    }

    fn require_even(&self, what: &str) -> Result<()> {
        if self.parity != MatrixParity::Even {
            return Err(Error::ParityViolation(format!(
                "{what} needs an even supermatrix, got {}",
                self.parity.as_str()
            )));
        }
        Ok(())
    }

    fn invertible_diagonal_blocks(&self) -> Result<(Mat, Mat, Mat, Mat)> {
        self.require_even("this operation")?;
        let (p, q, r, s) = self.blocks();
        if p.det()?.body().is_zero() {
            return Err(Error::NotInvertible("even diagonal block p has singular body".into()));
        }
        if s.det()?.body().is_zero() {
            return Err(Error::NotInvertible("odd diagonal block s has singular body".into()));
        }
        Ok((p, q, r, s))
    }

    /// Berezinian `det(p − q s⁻¹ r) · det(s)⁻¹`.
    pub fn berezinian(&self) -> Result<SuperNumber> {
        let (p, q, r, s) = self.invertible_diagonal_blocks()?;
        let s_inv = s.inverse()?;
        let schur = &p - &(&(&q * &s_inv) * &r);
        Ok(&schur.det()? * &s.det()?.invert()?)
    }

    /// `det(s⁻¹) · det(p − q s r)`, the variant without the inverse in the middle
    /// factor. Not multiplicative; retained as a regression witness.
    pub fn berezinian_without_inverse(&self) -> Result<SuperNumber> {
        let (p, q, r, s) = self.invertible_diagonal_blocks()?;
        let middle = &p - &(&(&q * &s) * &r);
        Ok(&s.inverse()?.det()? * &middle.det()?)
    }

    /// Two-sided inverse through the Schur complement `S = s − r p⁻¹ q`.
    pub fn inverse(&self) -> Result<Self> {
        let (p, q, r, s) = self.invertible_diagonal_blocks()?;
        let p_inv = p.inverse()?;
        let schur = &s - &(&(&r * &p_inv) * &q);
        let schur_inv = schur.inverse()?;
        let pq = &p_inv * &q;
        let rp = &r * &p_inv;
        let top_left = &p_inv + &(&(&pq * &schur_inv) * &rp);
        let top_right = -&(&pq * &schur_inv);
        let bottom_left = -&(&schur_inv * &rp);
        Self::from_blocks(&top_left, &top_right, &bottom_left, &schur_inv, MatrixParity::Even)
    }

    /// Blockwise conjugate transpose with no extra signs.
    pub fn dagger(&self) -> Self {
        Self { shape: self.shape, parity: self.parity, mat: self.mat.dagger() }
    }

    /// Entrywise conjugation without transposing.
    pub fn bar(&self) -> Self {
        Self { shape: self.shape, parity: self.parity, mat: self.mat.bar() }
    }
}

impl fmt::Debug for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperMatrix<{}, {}> {:?}", self.shape, self.parity.as_str(), self.mat)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational;

    fn gen(alg: &Arc<GrassmannAlgebra>, k: usize) -> SuperNumber {
        SuperNumber::generator(alg, k).unwrap()
    }

    fn shape(m: usize, n: usize) -> BlockShape {
        BlockShape::new(m, n).unwrap()
    }

    #[test]
    fn product_of_odd_corners() {
        let alg = GrassmannAlgebra::real(2);
        let one = SuperNumber::one(&alg);
        let (x1, x2) = (gen(&alg, 1), gen(&alg, 2));
        let a = SuperMatrix::even(
            shape(1, 1),
            Mat::from_rows(&alg, vec![vec![one.clone(), x1.clone()], vec![x2.clone(), one.clone()]]).unwrap(),
        )
        .unwrap();
        let b = SuperMatrix::even(
            shape(1, 1),
            Mat::from_rows(&alg, vec![vec![one.clone(), -&x1], vec![-&x2, one.clone()]]).unwrap(),
        )
        .unwrap();
        let x12 = &x1 * &x2;
        let x21 = &x2 * &x1;
        let expected = Mat::from_rows(
            &alg,
            vec![
                vec![&one - &x12, SuperNumber::zero(&alg)],
                vec![SuperNumber::zero(&alg), &one - &x21],
            ],
        )
        .unwrap();
        assert_eq!(a.mul(&b).unwrap().as_mat(), &expected);
        let id = SuperMatrix::identity(&alg, shape(1, 1));
        assert_eq!(id.mul(&a).unwrap(), a);
    }

    #[test]
    fn parity_layout_is_enforced() {
        let alg = GrassmannAlgebra::real(1);
        let x1 = gen(&alg, 1);
        let mut m = Mat::identity(&alg, 2);
        m.set(0, 0, x1.clone());
        assert!(matches!(SuperMatrix::even(shape(1, 1), m.clone()), Err(Error::ParityViolation(_))));
        let mut odd = Mat::zeros(&alg, 2, 2);
        odd.set(0, 0, x1);
        odd.set(0, 1, SuperNumber::one(&alg));
        let sm = SuperMatrix::with_inferred_parity(shape(1, 1), odd).unwrap();
        assert_eq!(sm.parity(), MatrixParity::Odd);
        assert_eq!(
            SuperMatrix::with_inferred_parity(shape(1, 1), m).unwrap().parity(),
            MatrixParity::Inhomogeneous
        );
    }

    #[test]
    fn supertrace_examples() {
        let alg = GrassmannAlgebra::real(0);
        let id = SuperMatrix::identity(&alg, shape(4, 1));
        assert_eq!(id.supertrace().unwrap(), SuperNumber::from_int(&alg, 3));
        let mut m = Mat::zeros(&alg, 2, 2);
        m.set(0, 1, SuperNumber::one(&alg));
        let odd = SuperMatrix::new(shape(1, 1), m, MatrixParity::Odd).unwrap();
        assert!(matches!(odd.supertrace(), Err(Error::ParityViolation(_))));
    }

    #[test]
    fn berezinian_examples() {
        let alg = GrassmannAlgebra::real(2);
        for (m, n) in [(1, 1), (2, 1), (4, 1), (2, 2)] {
            let id = SuperMatrix::identity(&alg, shape(m, n));
            assert!(id.berezinian().unwrap().is_one());
        }
        let diag = SuperMatrix::even(shape(1, 1), Mat::from_ints(&alg, &[&[2, 0], &[0, 3]]).unwrap()).unwrap();
        assert_eq!(
            diag.berezinian().unwrap(),
            SuperNumber::scalar(&alg, GaussianRational::from_frac(2, 3))
        );
        let one = SuperNumber::one(&alg);
        let (x1, x2) = (gen(&alg, 1), gen(&alg, 2));
        let a = SuperMatrix::even(
            shape(1, 1),
            Mat::from_rows(&alg, vec![vec![one.clone(), x1.clone()], vec![x2.clone(), one.clone()]]).unwrap(),
        )
        .unwrap();
        assert_eq!(a.berezinian().unwrap(), &one - &(&x1 * &x2));
        let singular = SuperMatrix::even(shape(1, 1), Mat::from_ints(&alg, &[&[1, 0], &[0, 0]]).unwrap()).unwrap();
        assert!(matches!(singular.berezinian(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn inverse_of_identity_and_unipotent() {
        let alg = GrassmannAlgebra::real(2);
        let id = SuperMatrix::identity(&alg, shape(2, 1));
        assert_eq!(id.inverse().unwrap(), id);
        let one = SuperNumber::one(&alg);
        let (x1, x2) = (gen(&alg, 1), gen(&alg, 2));
        let a = SuperMatrix::even(
            shape(1, 1),
            Mat::from_rows(&alg, vec![vec![one.clone(), x1], vec![x2, one]]).unwrap(),
        )
        .unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), SuperMatrix::identity(&alg, shape(1, 1)));
        assert_eq!(inv.mul(&a).unwrap(), SuperMatrix::identity(&alg, shape(1, 1)));
    }

    #[test]
    fn dagger_examples() {
        let alg = GrassmannAlgebra::real(0);
        let m = SuperMatrix::even(shape(2, 0), Mat::from_ints(&alg, &[&[1, 2], &[0, 3]]).unwrap()).unwrap();
        assert_eq!(m.dagger().as_mat(), &m.as_mat().transpose());
        let i = SuperMatrix::even(
            shape(1, 0),
            Mat::from_scalars(&alg, &[vec![GaussianRational::i()]]).unwrap(),
        )
        .unwrap();
        assert_eq!(i.dagger().get(0, 0).body(), -GaussianRational::i());
    }
}
