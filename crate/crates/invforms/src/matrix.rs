//! Exact dense linear algebra over the Gaussian rationals.
//!
//! Everything downstream — operator blocks, joint kernels, Lefschetz and
//! Hodge decompositions — reduces to the handful of primitives here:
//! reduced row echelon form, kernel bases, consistent solves, and
//! minimal-norm solves. All of them are exact; ranks and dimensions are
//! decided, never estimated.

use crate::scalar::Scalar;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A dense `rows × cols` matrix of [`Scalar`]s, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Build from column vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        for col in columns {
            assert_eq!(col.len(), rows, "column length mismatch");
        }
        Matrix::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Conjugate transpose; the adjoint with respect to the Hermitian inner
    /// product that makes the standard basis orthonormal.
    pub fn conj_transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).conj())
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for c in 0..self.cols {
                    let e = self.at(r, c);
                    if !e.is_zero() && !v[c].is_zero() {
                        acc += &(e * &v[c]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) * s)
    }

    /// Stack blocks vertically (equal column counts).
    pub fn vstack(blocks: &[&Matrix]) -> Matrix {
        assert!(!blocks.is_empty());
        let cols = blocks[0].cols;
        assert!(blocks.iter().all(|b| b.cols == cols), "column count mismatch");
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            data.extend(b.data.iter().cloned());
        }
        Matrix { rows, cols, data }
    }

    /// Reduced row echelon form; returns the reduced matrix and the pivot
    /// column indices (ascending). Deterministic: the pivot of each step is
    /// the first nonzero entry in the leftmost unfinished column.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pivot_row) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, pivot_row);
            let inv = m
                .at(row, col)
                .checked_recip()
                .expect("pivot is nonzero by construction");
            m.scale_row(row, &inv);
            for r in 0..m.rows {
                if r != row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    m.sub_scaled_row(r, row, &factor);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `ker(self)`, one vector per free column in ascending
    /// order; each vector has a `1` in its free coordinate. Deterministic.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = Some(i);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![Scalar::zero(); self.cols];
            vec[free] = Scalar::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                vec[pcol] = -r.at(prow, free);
            }
            basis.push(vec);
        }
        basis
    }

    /// One solution of `self · x = b` with all free variables zero, or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = r.at(prow, self.cols).clone();
        }
        Some(x)
    }

    /// The unique minimal-norm solution of `self · x = b`, i.e. the solution
    /// orthogonal to `ker(self)`, or `None` when `b` is not in the column
    /// space. Computed as `x = A† z` with `(A A†) z = b`, `†` the conjugate
    /// transpose.
    pub fn solve_min_norm(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        let adj = self.conj_transpose();
        let gram = self * &adj;
        let z = gram.solve(b)?;
        let x = adj.apply(&z);
        // `gram` is consistent exactly on im(A A†) = im(A); but a solve that
        // succeeded spuriously (numerically impossible here, structurally
        // cheap to confirm) would silently corrupt decompositions.
        if self.apply(&x) != b {
            return None;
        }
        Some(x)
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, n + r, Scalar::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r.at(i, n + j).clone()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Scalar) {
        for c in 0..self.cols {
            let v = self.at(r, c) * s;
            self.set(r, c, v);
        }
    }

    /// row[r] -= factor · row[src]
    fn sub_scaled_row(&mut self, r: usize, src: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let v = self.at(r, c) - &(self.at(src, c) * factor);
            self.set(r, c, v);
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = Scalar::zero();
            for k in 0..self.cols {
                let a = self.at(r, k);
                if !a.is_zero() {
                    acc += &(a * rhs.at(k, c));
                }
            }
            acc
        })
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in sum");
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) + rhs.at(r, c))
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in difference");
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) - rhs.at(r, c))
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| -self.at(r, c))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn rref_and_rank() {
        // [[1, 2], [2, 4]] has rank 1.
        let m = Matrix::from_fn(2, 2, |r, c| s([[1, 2], [2, 4]][r][c]));
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0]);
        assert_eq!(r.at(0, 1), &s(2));
        assert!(r.at(1, 0).is_zero() && r.at(1, 1).is_zero());
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_of_complex_row() {
        // ker [1, i] = span{(−i, 1)}.
        let mut m = Matrix::zeros(1, 2);
        m.set(0, 0, Scalar::one());
        m.set(0, 1, Scalar::i());
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        assert_eq!(ker[0], vec![-Scalar::i(), Scalar::one()]);
        assert!(m.apply(&ker[0]).iter().all(Scalar::is_zero));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Matrix::from_fn(2, 2, |r, c| s([[1, 1], [2, 2]][r][c]));
        assert_eq!(m.solve(&[s(3), s(6)]), Some(vec![s(3), s(0)]));
        assert_eq!(m.solve(&[s(3), s(5)]), None);
    }

    #[test]
    fn min_norm_solution_is_orthogonal_to_kernel() {
        // A = [1, 1]: solutions of A x = 2 form a line; the minimal-norm one
        // is (1, 1).
        let m = Matrix::from_fn(1, 2, |_, _| s(1));
        let x = m.solve_min_norm(&[s(2)]).unwrap();
        assert_eq!(x, vec![s(1), s(1)]);
        for k in m.kernel_basis() {
            let dot = x
                .iter()
                .zip(&k)
                .fold(Scalar::zero(), |acc, (a, b)| acc + (a * &b.conj()));
            assert!(dot.is_zero());
        }
        assert_eq!(m.solve_min_norm(&[s(0)]), Some(vec![s(0), s(0)]));
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_fn(2, 2, |r, c| {
            let base = [[1, 1], [0, 1]][r][c];
            if r == 0 && c == 1 {
                Scalar::i()
            } else {
                s(base)
            }
        });
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        assert_eq!(&inv * &m, Matrix::identity(2));
        let singular = Matrix::from_fn(2, 2, |r, c| s([[1, 2], [2, 4]][r][c]));
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn conj_transpose_is_an_involution() {
        let m = Matrix::from_fn(2, 3, |r, c| {
            &s((r * 3 + c) as i64) + &(&Scalar::i() * &s(c as i64))
        });
        assert_eq!(m.conj_transpose().conj_transpose(), m);
    }

    #[test]
    fn rank_nullity_holds() {
        let m = Matrix::from_fn(3, 5, |r, c| s(((r + 1) * (c + 2) % 7) as i64));
        assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
    }
}
