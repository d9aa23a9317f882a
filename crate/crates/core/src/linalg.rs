//! Exact Gaussian elimination over `Q(i)`.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::scalar::GaussianRational;

pub type Row = Vec<GaussianRational>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut [Row]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..nrows {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in c..ncols {
                let v = &f * &rows[r][j];
                rows[i][j] -= &v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Row]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Solves `Σ_k c_k · vectors[k] = target`, returning one solution if it exists.
pub fn solve_combination(vectors: &[Row], target: &Row) -> Option<Vec<GaussianRational>> {
    let n = vectors.len();
    let dim = target.len();
    // augmented system: columns are the vectors, last column the target
    let mut rows: Vec<Row> = (0..dim)
        .map(|i| {
            let mut row: Row = vectors.iter().map(|v| v[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut rows);
    if pivots.contains(&n) {
        return None;
    }
    let mut sol = vec![GaussianRational::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        sol[c] = rows[r][n].clone();
    }
    Some(sol)
}

/// Inertia `(positive, negative, zero)` of a real symmetric matrix, by
/// congruence diagonalization (Sylvester's law of inertia).
pub fn inertia(sym: &[Vec<BigRational>]) -> (usize, usize, usize) {
    let n = sym.len();
    let mut a: Vec<Vec<BigRational>> = sym.to_vec();
    let mut diag = Vec::with_capacity(n);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        // pick a nonzero diagonal pivot; otherwise create one from an off-diagonal entry
        let pivot = active.iter().copied().find(|&i| !a[i][i].is_zero());
        let k = match pivot {
            Some(k) => k,
            None => {
                let pair = active
                    .iter()
                    .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !a[i][j].is_zero());
                match pair {
                    None => {
                        diag.extend(std::iter::repeat_n(BigRational::zero(), active.len()));
                        break;
                    }
                    Some((i, j)) => {
                        // e_i <- e_i + e_j gives a[i][i] = 2 a[i][j] (+ a[j][j] = 0)
                        for t in 0..n {
                            let v = a[j][t].clone();
                            a[i][t] += v;
                        }
                        for t in 0..n {
                            let v = a[t][j].clone();
                            a[t][i] += v;
                        }
                        i
                    }
                }
            }
        };
        let piv = a[k][k].clone();
        for &i in active.iter().filter(|&&i| i != k) {
            let f = &a[i][k] / &piv;
            if f.is_zero() {
                continue;
            }
            for t in 0..n {
                let v = &f * &a[k][t];
                a[i][t] -= v;
            }
            for t in 0..n {
                let v = &f * &a[t][k];
                a[t][i] -= v;
            }
        }
        diag.push(piv);
        active.retain(|&i| i != k);
    }
    let pos = diag.iter().filter(|d| d.is_positive()).count();
    let neg = diag.iter().filter(|d| d.is_negative()).count();
    (pos, neg, n - pos - neg)
}
