//! Minimal dense matrix support sized for small regression problems.
//!
//! The fitters solve symmetric positive-definite systems of at most a few
//! dozen parameters, so a hand-rolled Cholesky factorization is all the
//! linear algebra the crate needs.

/// Row-major dense matrix of `f64`.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    /// Build from a flat row-major buffer. Panics if the length disagrees.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix buffer length mismatch");
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Self { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Keep only the listed columns, in the given order.
    pub fn select_columns(&self, keep: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, keep.len());
        for i in 0..self.rows {
            let src = self.row(i);
            let dst = out.row_mut(i);
            for (t, &j) in keep.iter().enumerate() {
                dst[t] = src[j];
            }
        }
        out
    }

    /// Keep only the listed rows, in the given order (duplicates allowed).
    pub fn select_rows(&self, keep: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(keep.len() * self.cols);
        for &i in keep {
            data.extend_from_slice(self.row(i));
        }
        Matrix::from_vec(keep.len(), self.cols, data)
    }
}

/// Cholesky factorization `A = L L^T` of a symmetric positive-definite
/// matrix, stored as the lower triangle of a dense square buffer.
#[derive(Debug, Clone)]
pub struct Cholesky {
    l: Vec<f64>,
    n: usize,
}

/// Factor a dense symmetric matrix given as a flat row-major `n*n` slice.
/// Returns `None` when the matrix is not numerically positive definite.
pub fn cholesky(a: &[f64], n: usize) -> Option<Cholesky> {
    assert_eq!(a.len(), n * n);
    let mut max_diag: f64 = 0.0;
    for j in 0..n {
        max_diag = max_diag.max(a[j * n + j].abs());
    }
    let floor = 1e-12 * max_diag.max(1.0);
    let mut l = vec![0.0; n * n];
    for j in 0..n {
        let mut d = a[j * n + j];
        for k in 0..j {
            d -= l[j * n + k] * l[j * n + k];
        }
        if !(d.is_finite()) || d <= floor {
            return None;
        }
        let dj = d.sqrt();
        l[j * n + j] = dj;
        for i in (j + 1)..n {
            let mut s = a[i * n + j];
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = s / dj;
        }
    }
    Some(Cholesky { l, n })
}

impl Cholesky {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Solve `A x = b`.
    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        let mut x = b.to_vec();
        self.solve_in_place(&mut x);
        x
    }

    pub fn solve_in_place(&self, x: &mut [f64]) {
        let n = self.n;
        // forward: L y = b
        for i in 0..n {
            let mut s = x[i];
            for k in 0..i {
                s -= self.l[i * n + k] * x[k];
            }
            x[i] = s / self.l[i * n + i];
        }
        // backward: L^T x = y
        for i in (0..n).rev() {
            let mut s = x[i];
            for k in (i + 1)..n {
                s -= self.l[k * n + i] * x[k];
            }
            x[i] = s / self.l[i * n + i];
        }
    }

    /// `log det A` via the factor diagonal.
    pub fn log_det(&self) -> f64 {
        let n = self.n;
        2.0 * (0..n).map(|j| self.l[j * n + j].ln()).sum::<f64>()
    }

    /// Quadratic form `x^T A^{-1} x` via one forward substitution.
    pub fn inv_quadratic(&self, x: &[f64]) -> f64 {
        let n = self.n;
        let mut y = x.to_vec();
        for i in 0..n {
            let mut s = y[i];
            for k in 0..i {
                s -= self.l[i * n + k] * y[k];
            }
            y[i] = s / self.l[i * n + i];
        }
        y.iter().map(|v| v * v).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cholesky_solves_spd_system() {
        // A = [[4,2],[2,3]], b = [2,1] -> x = [0.5, 0]
        let a = vec![4.0, 2.0, 2.0, 3.0];
        let ch = cholesky(&a, 2).unwrap();
        let x = ch.solve(&[2.0, 1.0]);
        assert!((x[0] - 0.5).abs() < 1e-12);
        assert!(x[1].abs() < 1e-12);
        // det A = 8
        assert!((ch.log_det() - 8.0f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn cholesky_rejects_singular() {
        let a = vec![1.0, 1.0, 1.0, 1.0];
        assert!(cholesky(&a, 2).is_none());
    }

    #[test]
    fn inv_quadratic_matches_solve() {
        let a = vec![5.0, 1.0, 0.5, 1.0, 4.0, 0.2, 0.5, 0.2, 3.0];
        let ch = cholesky(&a, 3).unwrap();
        let x = [1.0, -2.0, 0.7];
        let sol = ch.solve(&x);
        let direct: f64 = x.iter().zip(&sol).map(|(a, b)| a * b).sum();
        assert!((ch.inv_quadratic(&x) - direct).abs() < 1e-12);
    }

    #[test]
    fn select_columns_and_rows() {
        let m = Matrix::from_rows(&[vec![1.0, 2.0, 3.0], vec![4.0, 5.0, 6.0]]);
        let c = m.select_columns(&[2, 0]);
        assert_eq!(c.row(0), &[3.0, 1.0]);
        let r = m.select_rows(&[1, 1, 0]);
        assert_eq!(r.rows(), 3);
        assert_eq!(r.row(0), &[4.0, 5.0, 6.0]);
        assert_eq!(r.row(2), &[1.0, 2.0, 3.0]);
    }
}
