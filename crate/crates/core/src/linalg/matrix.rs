use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{ComplexMatrix, ZeonVector};
use crate::element::ZeonElement;
use crate::error::{Result, ZeonError};
use crate::tolerance::Tolerances;

/// A `rows x cols` matrix of zeon elements sharing one generator count.
/// Row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeonMatrix {
    rows: usize,
    cols: usize,
    n: usize,
    entries: Vec<ZeonElement>,
}

impl ZeonMatrix {
    pub fn new(rows: usize, cols: usize, n: usize, entries: Vec<ZeonElement>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(ZeonError::Dimension(format!(
                "{} entries given for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| e.n() != n) {
            return Err(ZeonError::Dimension(format!(
                "entry over {} generators in a matrix over {n}",
                bad.n()
            )));
        }
        Ok(ZeonMatrix {
            rows,
            cols,
            n,
            entries,
        })
    }

    /// Builds a matrix from rows; `n` is taken from the first entry.
    pub fn from_rows(rows: Vec<Vec<ZeonElement>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(ZeonError::Dimension("matrix must be non-empty".into()));
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(ZeonError::Dimension("ragged rows".into()));
        }
        let n = rows[0][0].n();
        Self::new(r, c, n, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize, n: usize) -> Self {
        ZeonMatrix {
            rows,
            cols,
            n,
            entries: vec![ZeonElement::zero(n); rows * cols],
        }
    }

    pub fn identity(m: usize, n: usize) -> Self {
        let mut out = Self::zeros(m, m, n);
        for i in 0..m {
            out.set(i, i, ZeonElement::one(n));
        }
        out
    }

    pub fn diagonal(diag: Vec<ZeonElement>) -> Result<Self> {
        let m = diag.len();
        let n = diag
            .first()
            .map(ZeonElement::n)
            .ok_or_else(|| ZeonError::Dimension("diagonal must be non-empty".into()))?;
        let mut out = Self::zeros(m, m, n);
        for (i, d) in diag.into_iter().enumerate() {
            if d.n() != n {
                return Err(ZeonError::Dimension("mixed generator counts".into()));
            }
            out.set(i, i, d);
        }
        Ok(out)
    }

    /// Embeds a complex matrix (all entries scalar).
    pub fn from_complex(c: &ComplexMatrix, n: usize) -> Self {
        let mut out = Self::zeros(c.rows(), c.cols(), n);
        for i in 0..c.rows() {
            for j in 0..c.cols() {
                out.set(i, j, ZeonElement::scalar(n, c[(i, j)]));
            }
        }
        out
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[ZeonVector]) -> Result<Self> {
        let first = columns
            .first()
            .ok_or_else(|| ZeonError::Dimension("no columns given".into()))?;
        let (m, n) = (first.len(), first.n());
        let mut out = Self::zeros(m, columns.len(), n);
        for (j, col) in columns.iter().enumerate() {
            if col.len() != m || col.n() != n {
                return Err(ZeonError::Dimension("columns differ in shape".into()));
            }
            for i in 0..m {
                out.set(i, j, col[i].clone());
            }
        }
        Ok(out)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &ZeonElement {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: ZeonElement) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        assert_eq!(value.n(), self.n, "entry generator count mismatch");
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[ZeonElement] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub(crate) fn row_mut(&mut self, i: usize) -> &mut [ZeonElement] {
        &mut self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &ZeonElement> {
        self.entries.iter()
    }

    pub fn column(&self, j: usize) -> ZeonVector {
        ZeonVector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
            .expect("matrix columns are non-empty")
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn same_shape(&self, other: &ZeonMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols || self.n != other.n {
            return Err(ZeonError::Dimension(format!(
                "shapes differ: {}x{} over {} vs {}x{} over {}",
                self.rows, self.cols, self.n, other.rows, other.cols, other.n
            )));
        }
        Ok(())
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(ZeonError::Dimension(format!(
                "expected a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    pub fn try_add(&self, other: &ZeonMatrix) -> Result<ZeonMatrix> {
        self.same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &ZeonMatrix) -> Result<ZeonMatrix> {
        self.same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(
        &self,
        other: &ZeonMatrix,
        f: impl Fn(&ZeonElement, &ZeonElement) -> ZeonElement,
    ) -> ZeonMatrix {
        ZeonMatrix {
            rows: self.rows,
            cols: self.cols,
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&ZeonElement) -> ZeonElement) -> ZeonMatrix {
        ZeonMatrix {
            rows: self.rows,
            cols: self.cols,
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_mul(&self, other: &ZeonMatrix) -> Result<ZeonMatrix> {
        if self.cols != other.rows || self.n != other.n {
            return Err(ZeonError::Dimension(format!(
                "cannot multiply {}x{} (n={}) by {}x{} (n={})",
                self.rows, self.cols, self.n, other.rows, other.cols, other.n
            )));
        }
        let mut out = ZeonMatrix::zeros(self.rows, other.cols, self.n);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vector(&self, x: &ZeonVector) -> Result<ZeonVector> {
        if self.cols != x.len() || self.n != x.n() {
            return Err(ZeonError::Dimension(format!(
                "cannot apply {}x{} matrix to a length-{} vector",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        let out = (0..self.rows)
            .map(|i| {
                let mut acc = ZeonElement::zero(self.n);
                for (a, b) in self.row(i).iter().zip(x.iter()) {
                    acc += &(a * b);
                }
                acc
            })
            .collect();
        ZeonVector::new(out)
    }

    /// Multiplies every entry by the zeon scalar `alpha`.
    pub fn scale(&self, alpha: &ZeonElement) -> ZeonMatrix {
        self.map(|a| a * alpha)
    }

    pub fn scale_complex(&self, c: Complex64) -> ZeonMatrix {
        self.map(|a| a.scale(c))
    }

    pub fn transpose(&self) -> ZeonMatrix {
        let mut out = ZeonMatrix::zeros(self.cols, self.rows, self.n);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Conjugate transpose `A^dag`.
    pub fn adjoint(&self) -> ZeonMatrix {
        let mut out = ZeonMatrix::zeros(self.cols, self.rows, self.n);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conjugate());
            }
        }
        out
    }

    /// Entrywise scalar parts, as a complex matrix.
    pub fn scalar_part(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).scalar_part())
    }

    /// Entrywise dual parts; every entry nilpotent.
    pub fn dual_part(&self) -> ZeonMatrix {
        self.map(ZeonElement::dual_part)
    }

    pub fn trace(&self) -> Result<ZeonElement> {
        self.require_square()?;
        let mut t = ZeonElement::zero(self.n);
        for i in 0..self.rows {
            t += self.get(i, i);
        }
        Ok(t)
    }

    pub fn pow(&self, k: u32) -> Result<ZeonMatrix> {
        self.require_square()?;
        let mut acc = ZeonMatrix::identity(self.rows, self.n);
        for _ in 0..k {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// Largest coefficient modulus over all entries.
    pub fn max_abs(&self) -> f64 {
        self.entries
            .iter()
            .map(ZeonElement::max_abs)
            .fold(0.0, f64::max)
    }

    /// Largest entrywise coefficient difference; infinite on shape mismatch.
    pub fn distance(&self, other: &ZeonMatrix) -> f64 {
        if self.same_shape(other).is_err() {
            return f64::INFINITY;
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.distance(b))
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &ZeonMatrix, tol: f64) -> bool {
        self.distance(other) <= tol
    }

    pub fn pruned(&self, threshold: f64) -> ZeonMatrix {
        self.map(|a| a.clone().pruned(threshold))
    }

    /// `A` is nilpotent exactly when its scalar-part matrix is.
    pub fn is_nilpotent(&self, tol: &Tolerances) -> Result<bool> {
        self.require_square()?;
        Ok(self.scalar_part().is_nilpotent(tol.compare))
    }

    /// Max coefficient of `A - A^dag`.
    pub fn self_adjoint_residual(&self) -> Result<f64> {
        self.require_square()?;
        Ok(self.distance(&self.adjoint()))
    }

    pub fn is_self_adjoint(&self, tol: &Tolerances) -> Result<bool> {
        Ok(self.self_adjoint_residual()? <= tol.compare)
    }

    /// Inverse via `A^-1 = C^-1 sum_l (-1)^l (D C^-1)^l`, with `C` the scalar
    /// part and `D` the dual part. The series stops once a power is entrywise
    /// below the prune tolerance, and after at most `n + 1` terms since
    /// `(D C^-1)^(n+1) = 0`.
    pub fn inverse(&self, tol: &Tolerances) -> Result<ZeonMatrix> {
        self.require_square()?;
        let c_inv = self.scalar_part().inverse(tol.scalar_zero)?;
        let c_inv = ZeonMatrix::from_complex(&c_inv, self.n);
        let neg_ratio = self
            .dual_part()
            .try_mul(&c_inv)?
            .scale_complex(Complex64::new(-1.0, 0.0));
        let mut term = ZeonMatrix::identity(self.rows, self.n);
        let mut sum = term.clone();
        for _ in 0..self.n {
            term = term.try_mul(&neg_ratio)?;
            if term.max_abs() <= tol.prune {
                break;
            }
            sum = sum.try_add(&term)?;
        }
        Ok(c_inv.try_mul(&sum)?.pruned(tol.prune))
    }
}

macro_rules! matrix_op {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&ZeonMatrix> for &ZeonMatrix {
            type Output = ZeonMatrix;
            fn $method(self, rhs: &ZeonMatrix) -> ZeonMatrix {
                self.$try(rhs).expect("conforming zeon matrices")
            }
        }
        impl $trait<ZeonMatrix> for ZeonMatrix {
            type Output = ZeonMatrix;
            fn $method(self, rhs: ZeonMatrix) -> ZeonMatrix {
                (&self).$method(&rhs)
            }
        }
    };
}

matrix_op!(Add, add, try_add);
matrix_op!(Sub, sub, try_sub);
matrix_op!(Mul, mul, try_mul);

/// JSON form: `{"rows": 3, "cols": 3, "n": 3, "entries": [[elem, ...], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixRepr {
    pub rows: usize,
    pub cols: usize,
    pub n: usize,
    pub entries: Vec<Vec<ZeonElement>>,
}

impl From<&ZeonMatrix> for MatrixRepr {
    fn from(m: &ZeonMatrix) -> Self {
        MatrixRepr {
            rows: m.rows,
            cols: m.cols,
            n: m.n,
            entries: (0..m.rows).map(|i| m.row(i).to_vec()).collect(),
        }
    }
}

impl TryFrom<MatrixRepr> for ZeonMatrix {
    type Error = ZeonError;

    fn try_from(r: MatrixRepr) -> Result<Self> {
        if r.rows == 0 || r.cols == 0 {
            return Err(ZeonError::Parse("matrix must be non-empty".into()));
        }
        if r.entries.len() != r.rows || r.entries.iter().any(|row| row.len() != r.cols) {
            return Err(ZeonError::Parse(format!(
                "entries do not form a {}x{} grid",
                r.rows, r.cols
            )));
        }
        ZeonMatrix::new(
            r.rows,
            r.cols,
            r.n,
            r.entries.into_iter().flatten().collect(),
        )
        .map_err(|e| ZeonError::Parse(e.to_string()))
    }
}

impl Serialize for ZeonMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for ZeonMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        ZeonMatrix::try_from(MatrixRepr::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl std::fmt::Display for ZeonMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let digits = f.precision().unwrap_or(6);
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_pretty(digits)).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: Tolerances = Tolerances::DEFAULT;

    fn s(n: usize, c: f64) -> ZeonElement {
        ZeonElement::scalar(n, c)
    }

    fn z(n: usize, g: &[usize], c: f64) -> ZeonElement {
        ZeonElement::blade(n, g, c)
    }

    fn sample() -> ZeonMatrix {
        ZeonMatrix::from_rows(vec![
            vec![s(2, 2.0) + z(2, &[1], 1.0), z(2, &[2], 1.0)],
            vec![z(2, &[1, 2], 3.0), s(2, -1.0) + z(2, &[2], 0.5)],
        ])
        .unwrap()
    }

    #[test]
    fn identity_and_adjoint() {
        let a = sample();
        let i = ZeonMatrix::identity(2, 2);
        assert_eq!(&a * &i, a);
        assert_eq!(&i * &a, a);
        assert_eq!(a.adjoint().adjoint(), a);
    }

    #[test]
    fn inverse_examples() {
        let i = ZeonMatrix::identity(3, 2);
        assert_eq!(i.inverse(&TOL).unwrap(), i);

        let d = ZeonMatrix::diagonal(vec![s(1, 2.0) + z(1, &[1], 1.0), s(1, 1.0)]).unwrap();
        let expect = ZeonMatrix::diagonal(vec![s(1, 0.5) + z(1, &[1], -0.25), s(1, 1.0)]).unwrap();
        assert!(d.inverse(&TOL).unwrap().approx_eq(&expect, 1e-15));

        let a = sample();
        let inv = a.inverse(&TOL).unwrap();
        assert!((&a * &inv).approx_eq(&ZeonMatrix::identity(2, 2), 1e-14));
        assert!((&inv * &a).approx_eq(&ZeonMatrix::identity(2, 2), 1e-14));
    }

    #[test]
    fn singular_scalar_part() {
        let a = ZeonMatrix::from_rows(vec![
            vec![z(1, &[1], 1.0), s(1, 1.0)],
            vec![s(1, 0.0), z(1, &[1], 2.0)],
        ])
        .unwrap();
        assert!(matches!(a.inverse(&TOL), Err(ZeonError::Singular(_))));
    }

    #[test]
    fn nilpotent_and_self_adjoint() {
        let strict = ZeonMatrix::from_rows(vec![
            vec![z(2, &[1], 1.0), s(2, 1.0) + z(2, &[2], 1.0)],
            vec![s(2, 0.0), z(2, &[1, 2], 4.0)],
        ])
        .unwrap();
        assert!(strict.is_nilpotent(&TOL).unwrap());
        assert!(!ZeonMatrix::identity(3, 1).is_nilpotent(&TOL).unwrap());

        let i = Complex64::new(0.0, 1.0);
        let h = ZeonMatrix::from_rows(vec![
            vec![s(1, 1.0), z(1, &[1], 1.0).scale(i)],
            vec![z(1, &[1], 1.0).scale(-i), s(1, 2.0)],
        ])
        .unwrap();
        assert!(h.is_self_adjoint(&TOL).unwrap());
        assert!(!sample().is_self_adjoint(&TOL).unwrap());
    }

    #[test]
    fn shape_errors() {
        let a = sample();
        let b = ZeonMatrix::identity(3, 2);
        assert!(a.try_mul(&b).is_err());
        assert!(a.try_add(&b).is_err());
        assert!(ZeonMatrix::new(2, 2, 1, vec![]).is_err());
        assert!(ZeonMatrix::from_rows(vec![vec![s(1, 1.0)], vec![]]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let a = sample();
        let text = serde_json::to_string(&a).unwrap();
        let back: ZeonMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(a, back);
        let bad = r#"{"rows": 2, "cols": 2, "n": 1, "entries": [[{"n":1,"terms":[]}]]}"#;
        assert!(serde_json::from_str::<ZeonMatrix>(bad).is_err());
    }
}
