//! Small dense linear algebra: just enough for desk-scale spectral work.
//!
//! Everything here is written for matrices of order at most a few hundred.
//! The symmetric eigensolver is cyclic Jacobi (accurate to a few ulps of the
//! matrix norm), the nonsymmetric one is balancing followed by the Francis
//! double-shift QR iteration on an upper Hessenberg matrix, which is all that
//! companion matrices need.

use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            m.data[i * c..(i + 1) * c].copy_from_slice(row);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Leading `k`×`k` principal submatrix.
    pub fn leading(&self, k: usize) -> Matrix {
        let mut m = Matrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                m[(i, j)] = self[(i, j)];
            }
        }
        m
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, x| acc.max(x.abs()))
    }

    fn is_square(&self) -> bool {
        self.rows == self.cols
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Eigendecomposition of a real symmetric matrix.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    /// Eigenvalues in descending order.
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors, column `k` belongs to `values[k]`.
    pub vectors: Matrix,
}

/// Eigendecomposition of a symmetric matrix; only the lower triangle is
/// read.
pub fn symmetric_eigen(a: &Matrix) -> Result<SymmetricEigen> {
    assert!(a.is_square(), "symmetric_eigen needs a square matrix");
    let n = a.rows();
    if n == 0 {
        return Ok(SymmetricEigen {
            values: Vec::new(),
            vectors: Matrix::zeros(0, 0),
        });
    }
    let eig = nalgebra::SymmetricEigen::try_new(to_dmatrix(a), f64::EPSILON, 0)
        .ok_or_else(|| Error::NoConvergence("symmetric eigensolver".into()))?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[j].total_cmp(&eig.eigenvalues[i]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vectors = Matrix::zeros(n, n);
    for (new, &old) in order.iter().enumerate() {
        for k in 0..n {
            vectors[(k, new)] = eig.eigenvectors[(k, old)];
        }
    }
    Ok(SymmetricEigen { values, vectors })
}

fn to_dmatrix(a: &Matrix) -> nalgebra::DMatrix<f64> {
    nalgebra::DMatrix::from_row_slice(a.rows(), a.cols(), &a.data)
}


/// A complex number as a plain pair; only used to report eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

/// Diagonal similarity scaling that makes row and column norms comparable.
/// Keeps Hessenberg structure intact.
fn balance(a: &mut Matrix) {
    const RADIX: f64 = 2.0;
    let sqrdx = RADIX * RADIX;
    let n = a.rows();
    loop {
        let mut done = true;
        for i in 0..n {
            let mut r = 0.0;
            let mut c = 0.0;
            for j in 0..n {
                if j != i {
                    c += a[(j, i)].abs();
                    r += a[(i, j)].abs();
                }
            }
            if c != 0.0 && r != 0.0 {
                let mut g = r / RADIX;
                let mut f = 1.0;
                let s = c + r;
                while c < g {
                    f *= RADIX;
                    c *= sqrdx;
                }
                g = r * RADIX;
                while c > g {
                    f /= RADIX;
                    c /= sqrdx;
                }
                if (c + r) / f < 0.95 * s {
                    done = false;
                    let g = 1.0 / f;
                    for j in 0..n {
                        a[(i, j)] *= g;
                    }
                    for j in 0..n {
                        a[(j, i)] *= f;
                    }
                }
            }
        }
        if done {
            break;
        }
    }
}

/// Eigenvalues of a real upper Hessenberg matrix (entries below the first
/// subdiagonal are ignored). The matrix is balanced first.
pub fn hessenberg_eigenvalues(h: &Matrix) -> Result<Vec<Complex>> {
    assert!(h.is_square(), "hessenberg_eigenvalues needs a square matrix");
    let n = h.rows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut a = h.clone();
    for i in 0..n {
        for j in 0..i.saturating_sub(1) {
            a[(i, j)] = 0.0;
        }
    }
    balance(&mut a);
    let schur = nalgebra::Schur::try_new(to_dmatrix(&a), f64::EPSILON, 0)
        .ok_or_else(|| Error::NoConvergence("Schur decomposition".into()))?;
    Ok(schur
        .complex_eigenvalues()
        .iter()
        .map(|z| Complex { re: z.re, im: z.im })
        .collect())
}


/// Coefficients of `det(xI - A)` in ascending powers of `x` (Berkowitz).
///
/// Division free, so it does not care about the structure of `A`.
pub fn characteristic_polynomial(a: &Matrix) -> Vec<f64> {
    assert!(a.is_square(), "characteristic polynomial needs a square matrix");
    let n = a.rows();
    // descending coefficients of the leading r×r block
    let mut p = vec![1.0];
    for r in 0..n {
        let mut col = vec![0.0; r + 2];
        col[0] = 1.0;
        col[1] = -a[(r, r)];
        // walk = M^k c, where M is the leading r×r block and c = A[0..r, r]
        let mut walk: Vec<f64> = (0..r).map(|i| a[(i, r)]).collect();
        for entry in col.iter_mut().skip(2) {
            let dot: f64 = (0..r).map(|j| a[(r, j)] * walk[j]).sum();
            *entry = -dot;
            walk = (0..r)
                .map(|i| (0..r).map(|j| a[(i, j)] * walk[j]).sum())
                .collect();
        }
        let mut next = vec![0.0; r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, pj) in p.iter().enumerate().take(i + 1) {
                *slot += col[i - j] * pj;
            }
        }
        p = next;
    }
    p.reverse();
    p
}

/// Inverse of a lower-triangular matrix by forward substitution.
pub fn lower_triangular_inverse(l: &Matrix, tol: f64) -> Result<Matrix> {
    assert!(l.is_square(), "triangular inverse needs a square matrix");
    let n = l.rows();
    for i in 0..n {
        if l[(i, i)].abs() <= tol {
            return Err(Error::SingularOmega(format!(
                "diagonal entry {i} is {:e}",
                l[(i, i)]
            )));
        }
    }
    let mut inv = Matrix::zeros(n, n);
    for col in 0..n {
        for i in col..n {
            let mut s = if i == col { 1.0 } else { 0.0 };
            for k in col..i {
                s -= l[(i, k)] * inv[(k, col)];
            }
            inv[(i, col)] = s / l[(i, i)];
        }
    }
    Ok(inv)
}
