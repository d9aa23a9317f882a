//! Dense rectangular matrices over a Grassmann algebra.
//!
//! This is the block-level workhorse under [`crate::supermatrix::SuperMatrix`]:
//! products, sub-blocks, conjugate transposes, and determinants/inverses of
//! blocks whose entries commute.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grassmann::{GrassmannAlgebra, SuperNumber};
use crate::scalar::GaussianRational;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    alg: Arc<GrassmannAlgebra>,
    rows: usize,
    cols: usize,
    data: Vec<SuperNumber>,
}

impl Mat {
    pub fn zeros(alg: &Arc<GrassmannAlgebra>, rows: usize, cols: usize) -> Self {
        Self {
            alg: alg.clone(),
            rows,
            cols,
            data: vec![SuperNumber::zero(alg); rows * cols],
        }
    }

    pub fn identity(alg: &Arc<GrassmannAlgebra>, n: usize) -> Self {
        let mut m = Self::zeros(alg, n, n);
        for i in 0..n {
            m.set(i, i, SuperNumber::one(alg));
        }
        m
    }

    pub fn from_rows(alg: &Arc<GrassmannAlgebra>, rows: Vec<Vec<SuperNumber>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::ShapeMismatch("ragged rows".into()));
            }
            for x in row {
                if x.algebra() != alg {
                    return Err(Error::AlgebraMismatch);
                }
                data.push(x);
            }
        }
        Ok(Self { alg: alg.clone(), rows: nrows, cols: ncols, data })
    }

    /// Matrix with scalar entries.
    pub fn from_scalars(alg: &Arc<GrassmannAlgebra>, rows: &[Vec<GaussianRational>]) -> Result<Self> {
        Self::from_rows(
            alg,
            rows.iter()
                .map(|r| r.iter().map(|c| SuperNumber::scalar(alg, c.clone())).collect())
                .collect(),
        )
    }

    /// Matrix with small integer entries.
    pub fn from_ints(alg: &Arc<GrassmannAlgebra>, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            alg,
            rows.iter()
                .map(|r| r.iter().map(|&n| SuperNumber::from_int(alg, n)).collect())
                .collect(),
        )
    }

    pub fn algebra(&self) -> &Arc<GrassmannAlgebra> {
        &self.alg
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &SuperNumber {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: SuperNumber) {
        assert!(v.algebra() == &self.alg, "entry from a different algebra");
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = &SuperNumber> {
        self.data.iter()
    }

    pub fn row_vecs(&self) -> Vec<Vec<SuperNumber>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[_]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(SuperNumber::is_zero)
    }

    pub fn map(&self, f: impl Fn(&SuperNumber) -> SuperNumber) -> Self {
        Self {
            alg: self.alg.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// The same matrix over a larger algebra.
    pub fn lift(&self, target: &Arc<GrassmannAlgebra>) -> Result<Self> {
        let data = self.data.iter().map(|e| e.lift(target)).collect::<Result<_>>()?;
        Ok(Self { alg: target.clone(), rows: self.rows, cols: self.cols, data })
    }

    /// Copy of the `nr × nc` block starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Self {
        assert!(r0 + nr <= self.rows && c0 + nc <= self.cols, "block out of range");
        let mut out = Self::zeros(&self.alg, nr, nc);
        for i in 0..nr {
            for j in 0..nc {
                out.set(i, j, self.get(r0 + i, c0 + j).clone());
            }
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Mat) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols, "block out of range");
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    /// Assembles a matrix from a grid of blocks with consistent row/column sizes.
    pub fn from_blocks(alg: &Arc<GrassmannAlgebra>, grid: &[&[&Mat]]) -> Result<Self> {
        let heights: Vec<usize> = grid.iter().map(|r| r.first().map_or(0, |b| b.rows)).collect();
        let widths: Vec<usize> = grid.first().map_or(vec![], |r| r.iter().map(|b| b.cols).collect());
        let mut out = Self::zeros(alg, heights.iter().sum(), widths.iter().sum());
        let mut r0 = 0;
        for (bi, row) in grid.iter().enumerate() {
            if row.len() != widths.len() {
                return Err(Error::ShapeMismatch("block grid is ragged".into()));
            }
            let mut c0 = 0;
            for (bj, b) in row.iter().enumerate() {
                if b.rows != heights[bi] || b.cols != widths[bj] {
                    return Err(Error::ShapeMismatch("block sizes do not line up".into()));
                }
                if b.algebra() != alg {
                    return Err(Error::AlgebraMismatch);
                }
                out.set_block(r0, c0, b);
                c0 += b.cols;
            }
            r0 += heights[bi];
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.alg != other.alg {
            return Err(Error::AlgebraMismatch);
        }
        let mut out = Self::zeros(&self.alg, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    fn zip(&self, other: &Mat, f: impl Fn(&SuperNumber, &SuperNumber) -> SuperNumber) -> Result<Mat> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.alg != other.alg {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Mat {
            alg: self.alg.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn try_add(&self, other: &Mat) -> Result<Mat> {
        self.zip(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &Mat) -> Result<Mat> {
        self.zip(other, |a, b| a - b)
    }

    /// `c · M` with `c` multiplied from the left on every entry.
    pub fn scale_left(&self, c: &SuperNumber) -> Mat {
        self.map(|x| c * x)
    }

    /// `M · c` with `c` multiplied from the right on every entry.
    pub fn scale_right(&self, c: &SuperNumber) -> Mat {
        self.map(|x| x * c)
    }

    pub fn scale(&self, c: &GaussianRational) -> Mat {
        self.map(|x| x.scale(c))
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Self::zeros(&self.alg, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Entrywise conjugation, no transpose.
    pub fn bar(&self) -> Mat {
        self.map(SuperNumber::bar)
    }

    /// Conjugate transpose: entry `(i, j)` of the result is `bar(M[j][i])`.
    pub fn dagger(&self) -> Mat {
        self.transpose().bar()
    }

    pub fn trace(&self) -> Result<SuperNumber> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("trace of a non-square matrix".into()));
        }
        Ok((0..self.rows).fold(SuperNumber::zero(&self.alg), |acc, i| &acc + self.get(i, i)))
    }

    /// Matrix of bodies.
    pub fn body(&self) -> Vec<Vec<GaussianRational>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).body()).collect())
            .collect()
    }

    /// Leibniz expansion. Only meaningful when entries commute pairwise
    /// (e.g. all even), which is the caller's responsibility.
    pub fn det(&self) -> Result<SuperNumber> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut total = SuperNumber::zero(&self.alg);
        for (perm, odd) in permutations(n) {
            let mut term = SuperNumber::one(&self.alg);
            for (i, &p) in perm.iter().enumerate() {
                term = &term * self.get(i, p);
                if term.is_zero() {
                    break;
                }
            }
            total = if odd { &total - &term } else { &total + &term };
        }
        Ok(total)
    }

    /// Two-sided inverse by Gauss–Jordan elimination with left row operations,
    /// pivoting on entries with nonzero body. Valid over the full (non-commutative)
    /// Grassmann algebra whenever the body matrix is invertible.
    pub fn inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(&self.alg, n);
        for k in 0..n {
            let pivot_row = (k..n)
                .find(|&r| !a.get(r, k).body().is_zero())
                .ok_or_else(|| Error::NotInvertible("matrix body is singular".into()))?;
            if pivot_row != k {
                a.swap_rows(k, pivot_row);
                inv.swap_rows(k, pivot_row);
            }
            let p = a.get(k, k).invert()?;
            a.left_scale_row(k, &p);
            inv.left_scale_row(k, &p);
            for r in 0..n {
                if r == k {
                    continue;
                }
                let f = a.get(r, k).clone();
                if f.is_zero() {
                    continue;
                }
                a.row_axpy(r, k, &f);
                inv.row_axpy(r, k, &f);
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        for j in 0..self.cols {
            self.data.swap(r1 * self.cols + j, r2 * self.cols + j);
        }
    }

    fn left_scale_row(&mut self, r: usize, c: &SuperNumber) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            self.data[idx] = c * &self.data[idx];
        }
    }

    // row_r -= f * row_k
    fn row_axpy(&mut self, r: usize, k: usize, f: &SuperNumber) {
        for j in 0..self.cols {
            let v = f * self.get(k, j);
            let idx = r * self.cols + j;
            self.data[idx] = &self.data[idx] - &v;
        }
    }
}

/// All permutations of `0..n` with their signs (`true` = odd).
pub(crate) fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, odd: bool, out: &mut Vec<(Vec<usize>, bool)>) {
        let n = used.len();
        if prefix.len() == n {
            out.push((prefix.clone(), odd));
            return;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            // number of unused values smaller than v = inversions contributed
            let smaller_unused = (0..v).filter(|&u| !used[u]).count();
            used[v] = true;
            prefix.push(v);
            go(prefix, used, odd ^ (smaller_unused % 2 == 1), out);
            prefix.pop();
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], false, &mut out);
    out
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for row in self.row_vecs() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Mul for &Mat {
    type Output = Mat;
    /// Panics on shape or algebra mismatch; see [`Mat::try_mul`].
    fn mul(self, rhs: &Mat) -> Mat {
        self.try_mul(rhs).expect("matrix product mismatch")
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        self.try_add(rhs).expect("matrix sum mismatch")
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        self.try_sub(rhs).expect("matrix difference mismatch")
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        self.map(|x| -x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_signs() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        let odd = perms.iter().filter(|(_, o)| *o).count();
        assert_eq!(odd, 3);
        assert!(perms.contains(&(vec![1, 0, 2], true)));
        assert!(perms.contains(&(vec![1, 2, 0], false)));
    }

    #[test]
    fn det_and_inverse_scalar() {
        let alg = GrassmannAlgebra::real(0);
        let m = Mat::from_ints(&alg, &[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]).unwrap();
        assert_eq!(m.det().unwrap(), SuperNumber::from_int(&alg, 18));
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Mat::identity(&alg, 3));
        assert_eq!(&inv * &m, Mat::identity(&alg, 3));
        let sing = Mat::from_ints(&alg, &[&[1, 2], &[2, 4]]).unwrap();
        assert!(matches!(sing.inverse(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn inverse_with_odd_entries_needs_pivoting() {
        let alg = GrassmannAlgebra::real(2);
        let x1 = SuperNumber::generator(&alg, 1).unwrap();
        let x2 = SuperNumber::generator(&alg, 2).unwrap();
        let one = SuperNumber::one(&alg);
        // [[x1, 1], [1, x2]] has a nilpotent (1,1) entry
        let m = Mat::from_rows(&alg, vec![vec![x1, one.clone()], vec![one, x2]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Mat::identity(&alg, 2));
        assert_eq!(&inv * &m, Mat::identity(&alg, 2));
    }

    #[test]
    fn blocks_roundtrip() {
        let alg = GrassmannAlgebra::real(0);
        let m = Mat::from_ints(&alg, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).unwrap();
        let a = m.block(0, 0, 2, 2);
        let b = m.block(0, 2, 2, 1);
        let c = m.block(2, 0, 1, 2);
        let d = m.block(2, 2, 1, 1);
        assert_eq!(Mat::from_blocks(&alg, &[&[&a, &b], &[&c, &d]]).unwrap(), m);
        assert!(Mat::from_blocks(&alg, &[&[&a, &b], &[&d, &c]]).is_err());
    }
}
