use num_complex::Complex64;

use crate::error::{Result, ZeonError};

/// Dense complex matrix, row-major. Used for the scalar-part image of zeon
/// matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix {
            rows,
            cols,
            data: vec![Complex64::default(); rows * cols],
        }
    }

    pub fn identity(m: usize) -> Self {
        let mut out = Self::zeros(m, m);
        for i in 0..m {
            out[(i, i)] = Complex64::new(1.0, 0.0);
        }
        out
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ComplexMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn mul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols != other.rows {
            return Err(ZeonError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(ComplexMatrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).map(|k| self[(i, k)] * other[(k, j)]).sum()
        }))
    }

    /// Gauss-Jordan inverse with partial pivoting. A pivot of modulus at or
    /// below `scalar_zero * max(1, max|a_ij|)` makes the matrix singular.
    pub fn inverse(&self, scalar_zero: f64) -> Result<ComplexMatrix> {
        if self.rows != self.cols {
            return Err(ZeonError::Dimension("inverse needs a square matrix".into()));
        }
        let m = self.rows;
        let threshold = scalar_zero * self.max_abs().max(1.0);
        let mut a = self.clone();
        let mut inv = ComplexMatrix::identity(m);
        for col in 0..m {
            let p = (col..m)
                .max_by(|&x, &y| a[(x, col)].norm().total_cmp(&a[(y, col)].norm()))
                .expect("non-empty range");
            if a[(p, col)].norm() <= threshold {
                return Err(ZeonError::Singular(format!(
                    "scalar-part matrix is singular (column {col})"
                )));
            }
            a.swap_rows(p, col);
            inv.swap_rows(p, col);
            let pivot_inv = 1.0 / a[(col, col)];
            for j in 0..m {
                a[(col, j)] *= pivot_inv;
                inv[(col, j)] *= pivot_inv;
            }
            for r in 0..m {
                if r == col {
                    continue;
                }
                let f = a[(r, col)];
                if f == Complex64::default() {
                    continue;
                }
                for j in 0..m {
                    let (av, iv) = (a[(col, j)], inv[(col, j)]);
                    a[(r, j)] -= f * av;
                    inv[(r, j)] -= f * iv;
                }
            }
        }
        Ok(inv)
    }

    /// Determinant by partial-pivoting LU.
    pub fn determinant(&self) -> Complex64 {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let m = self.rows;
        let mut a = self.clone();
        let mut det = Complex64::new(1.0, 0.0);
        for col in 0..m {
            let p = (col..m)
                .max_by(|&x, &y| a[(x, col)].norm().total_cmp(&a[(y, col)].norm()))
                .expect("non-empty range");
            if a[(p, col)] == Complex64::default() {
                return Complex64::default();
            }
            if p != col {
                a.swap_rows(p, col);
                det = -det;
            }
            let pivot = a[(col, col)];
            det *= pivot;
            for r in col + 1..m {
                let f = a[(r, col)] / pivot;
                for j in col..m {
                    let v = a[(col, j)];
                    a[(r, j)] -= f * v;
                }
            }
        }
        det
    }

    /// Nilpotency test: `C^m` vanishes within `tol * max(1, max|c_ij|)^m`.
    pub fn is_nilpotent(&self, tol: f64) -> bool {
        let m = self.rows;
        let scale = self.max_abs().max(1.0).powi(m as i32);
        let mut p = self.clone();
        for _ in 1..m {
            p = p.mul(self).expect("square");
        }
        p.max_abs() <= tol * scale
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}
