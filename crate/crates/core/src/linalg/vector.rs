use std::ops::Index;

use serde::{Deserialize, Serialize};

use super::ZeonMatrix;
use crate::element::ZeonElement;
use crate::error::{Result, ZeonError};
use crate::tolerance::Tolerances;

/// An element of the module of length-`m` zeon columns.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeonVector {
    entries: Vec<ZeonElement>,
}

impl ZeonVector {
    pub fn new(entries: Vec<ZeonElement>) -> Result<Self> {
        let Some(first) = entries.first() else {
            return Err(ZeonError::Dimension(
                "vector must have at least one entry".into(),
            ));
        };
        let n = first.n();
        if entries.iter().any(|e| e.n() != n) {
            return Err(ZeonError::Dimension(
                "vector entries differ in generator count".into(),
            ));
        }
        Ok(ZeonVector { entries })
    }

    pub fn zeros(m: usize, n: usize) -> Self {
        assert!(m >= 1);
        ZeonVector {
            entries: vec![ZeonElement::zero(n); m],
        }
    }

    /// The standard basis vector `e_j` (0-based `j`).
    pub fn unit(m: usize, n: usize, j: usize) -> Self {
        let mut v = Self::zeros(m, n);
        v.entries[j] = ZeonElement::one(n);
        v
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn n(&self) -> usize {
        self.entries[0].n()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ZeonElement> {
        self.entries.iter()
    }

    pub fn into_entries(self) -> Vec<ZeonElement> {
        self.entries
    }

    fn check_conforming(&self, other: &ZeonVector) -> Result<()> {
        if self.len() != other.len() || self.n() != other.n() {
            return Err(ZeonError::Dimension(format!(
                "vectors differ: length {} over {} vs length {} over {}",
                self.len(),
                self.n(),
                other.len(),
                other.n()
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &ZeonVector) -> Result<ZeonVector> {
        self.check_conforming(other)?;
        ZeonVector::new(self.iter().zip(other.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn try_sub(&self, other: &ZeonVector) -> Result<ZeonVector> {
        self.check_conforming(other)?;
        ZeonVector::new(self.iter().zip(other.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, alpha: &ZeonElement) -> ZeonVector {
        ZeonVector {
            entries: self.iter().map(|a| a * alpha).collect(),
        }
    }

    pub fn conjugate(&self) -> ZeonVector {
        ZeonVector {
            entries: self.iter().map(ZeonElement::conjugate).collect(),
        }
    }

    pub fn pruned(&self, threshold: f64) -> ZeonVector {
        ZeonVector {
            entries: self.iter().map(|a| a.clone().pruned(threshold)).collect(),
        }
    }

    /// `<x, y> = y^dag x = sum_l conj(y_l) x_l`; linear in `x`.
    pub fn inner_product(&self, y: &ZeonVector) -> Result<ZeonElement> {
        self.check_conforming(y)?;
        let mut acc = ZeonElement::zero(self.n());
        for (xl, yl) in self.iter().zip(y.iter()) {
            acc += &(&yl.conjugate() * xl);
        }
        Ok(acc)
    }

    /// `(C<x, x>)^(1/2)`: the square root of the scalar part of `<x, x>`.
    pub fn spectral_seminorm(&self) -> f64 {
        let s: f64 = self.iter().map(|e| e.scalar_part().norm_sqr()).sum();
        s.sqrt()
    }

    /// Whether every entry is nilpotent (seminorm zero).
    pub fn is_null(&self, tol: &Tolerances) -> bool {
        self.spectral_seminorm().powi(2) <= tol.scalar_zero
    }

    pub fn has_invertible_component(&self, scalar_zero: f64) -> bool {
        self.iter().any(|e| e.is_invertible(scalar_zero))
    }

    /// `x -> (<x, x>^-1)^(1/2) x`, using the principal square root.
    pub fn normalize(&self, tol: &Tolerances) -> Result<ZeonVector> {
        let gram = self.inner_product(self)?;
        if gram.scalar_part().norm() <= tol.scalar_zero {
            return Err(ZeonError::Singular(
                "cannot normalize a null vector (all entries nilpotent)".into(),
            ));
        }
        let factor = gram.inverse(tol)?.kth_root(2, tol)?;
        Ok(self.scale(&factor).pruned(tol.prune))
    }

    /// The rank-one matrix `x y^dag`.
    pub fn outer(&self, y: &ZeonVector) -> Result<ZeonMatrix> {
        if self.n() != y.n() {
            return Err(ZeonError::Dimension("generator counts differ".into()));
        }
        let mut out = ZeonMatrix::zeros(self.len(), y.len(), self.n());
        for (i, xi) in self.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                out.set(i, j, xi * &yj.conjugate());
            }
        }
        Ok(out)
    }

    pub fn to_column(&self) -> ZeonMatrix {
        ZeonMatrix::from_columns(std::slice::from_ref(self)).expect("single column")
    }

    pub fn distance(&self, other: &ZeonVector) -> f64 {
        if self.check_conforming(other).is_err() {
            return f64::INFINITY;
        }
        self.iter()
            .zip(other.iter())
            .map(|(a, b)| a.distance(b))
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.iter().map(ZeonElement::max_abs).fold(0.0, f64::max)
    }
}

impl Index<usize> for ZeonVector {
    type Output = ZeonElement;
    fn index(&self, i: usize) -> &ZeonElement {
        &self.entries[i]
    }
}

/// Gram-Schmidt with the zeon inner product. Each vector has its projections
/// onto the previous ones removed and is then normalized; a vector that
/// becomes null is a singularity error.
pub fn orthonormalize(vectors: &[ZeonVector], tol: &Tolerances) -> Result<Vec<ZeonVector>> {
    let mut basis: Vec<ZeonVector> = Vec::with_capacity(vectors.len());
    for (k, v) in vectors.iter().enumerate() {
        let mut w = v.clone();
        for u in &basis {
            let coeff = w.inner_product(u)?;
            w = w.try_sub(&u.scale(&coeff))?;
        }
        if w.is_null(tol) {
            return Err(ZeonError::Singular(format!(
                "vector {k} is dependent on the previous ones"
            )));
        }
        basis.push(w.normalize(tol)?);
    }
    Ok(basis)
}

impl Serialize for ZeonVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_column().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ZeonVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m = ZeonMatrix::deserialize(d)?;
        if m.cols() != 1 {
            return Err(serde::de::Error::custom(format!(
                "a vector is a rows x 1 matrix, got {} columns",
                m.cols()
            )));
        }
        Ok(m.column(0))
    }
}

impl std::fmt::Display for ZeonVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let digits = f.precision().unwrap_or(6);
        let parts: Vec<String> = self.iter().map(|e| e.to_pretty(digits)).collect();
        write!(f, "({})", parts.join(", "))
    }
}
