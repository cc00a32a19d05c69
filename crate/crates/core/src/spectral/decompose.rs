use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::element::ZeonElement;
use crate::error::{Result, ZeonError};
use crate::linalg::{ZeonMatrix, ZeonVector};
use crate::tolerance::Tolerances;

use super::charpoly::cayley_hamilton_residual;
use super::eigen::{eigenpairs, eigenvalues, Eigenpair};

/// `v v^dag` for a normalized `v`.
pub fn projection(v: &ZeonVector, tol: &Tolerances) -> Result<ZeonMatrix> {
    let gram = v.inner_product(v)?;
    let off = gram.distance(&ZeonElement::one(v.n()));
    if off > tol.compare {
        return Err(ZeonError::Domain(format!(
            "projection needs a normalized vector, <v, v> = {gram}"
        )));
    }
    v.outer(v)
}

/// `<v, v>^-1 v v^dag`, the projection onto the span of any vector whose
/// self inner product is invertible.
pub fn projection_unnormalized(v: &ZeonVector, tol: &Tolerances) -> Result<ZeonMatrix> {
    let gram_inv = v.inner_product(v)?.inverse(tol)?;
    Ok(v.outer(v)?.scale(&gram_inv).pruned(tol.prune))
}

/// `sum_j u_j u_j^dag` for an orthonormal family.
pub fn resolution_of_identity(vs: &[ZeonVector], tol: &Tolerances) -> Result<ZeonMatrix> {
    let Some(first) = vs.first() else {
        return Err(ZeonError::Dimension("empty vector family".into()));
    };
    let (m, n) = (first.len(), first.n());
    let mut worst = (0.0, 0, 0);
    for (i, u) in vs.iter().enumerate() {
        for (j, w) in vs.iter().enumerate().skip(i) {
            let target = if i == j {
                ZeonElement::one(n)
            } else {
                ZeonElement::zero(n)
            };
            let off = u.inner_product(w)?.distance(&target);
            if off > worst.0 {
                worst = (off, i, j);
            }
        }
    }
    if worst.0 > tol.compare {
        return Err(ZeonError::Domain(format!(
            "vectors are not orthonormal: pair ({}, {}) is off by {:.3e}",
            worst.1, worst.2, worst.0
        )));
    }
    let mut sum = ZeonMatrix::zeros(m, m, n);
    for u in vs {
        sum = sum.try_add(&u.outer(u)?)?;
    }
    Ok(sum)
}

/// Max-coefficient residuals of the decomposition identities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralChecks {
    /// `max_j |pi_j^2 - pi_j|`.
    pub idempotent: f64,
    /// `max_{j != k} |pi_j pi_k|`.
    pub orthogonal: f64,
    /// `|sum_j pi_j - I|`.
    pub identity: f64,
    /// `|sum_j lambda_j pi_j - A|`, relative to the largest entry of `A`.
    pub reconstruction: f64,
    pub cayley_hamilton: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDecomposition {
    pub eigenpairs: Vec<Eigenpair>,
    pub projections: Vec<ZeonMatrix>,
    pub checks: SpectralChecks,
}

impl SpectralDecomposition {
    pub fn eigenvalues(&self) -> Vec<ZeonElement> {
        self.eigenpairs.iter().map(|p| p.value.clone()).collect()
    }

    /// `sum_j lambda_j pi_j`.
    pub fn reconstruct(&self) -> Result<ZeonMatrix> {
        let first = &self.projections[0];
        let mut sum = ZeonMatrix::zeros(first.rows(), first.cols(), first.n());
        for (p, pi) in self.eigenpairs.iter().zip(&self.projections) {
            sum = sum.try_add(&pi.scale(&p.value))?;
        }
        Ok(sum)
    }
}

/// Serialized as `{"eigenvalues", "eigenvectors", "projections", "checks"}`
/// with the normalized eigenvectors.
impl Serialize for SpectralDecomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let vectors: Vec<&ZeonVector> = self.eigenpairs.iter().map(|p| &p.normalized).collect();
        let mut st = s.serialize_struct("SpectralDecomposition", 4)?;
        st.serialize_field("eigenvalues", &self.eigenvalues())?;
        st.serialize_field("eigenvectors", &vectors)?;
        st.serialize_field("projections", &self.projections)?;
        st.serialize_field("checks", &self.checks)?;
        st.end()
    }
}

/// `A = sum_j lambda_j v_j v_j^dag` for a self-adjoint matrix whose scalar
/// part has `m` distinct eigenvalues.
pub fn spectral_decompose(a: &ZeonMatrix, tol: &Tolerances) -> Result<SpectralDecomposition> {
    let residual = a.self_adjoint_residual()?;
    if residual > tol.compare * (1.0 + a.max_abs()) {
        return Err(ZeonError::NotSelfAdjoint { residual });
    }
    let ev = eigenvalues(a, tol)?;
    if let Some(root) = ev.skipped.first() {
        return Err(ZeonError::NotSpectrallySimple {
            root: root.value,
            detail: format!("eigenvalue of multiplicity {}", root.multiplicity),
        });
    }
    let pairs = eigenpairs(a, tol)?;
    let projections = pairs
        .iter()
        .map(|p| projection(&p.normalized, tol))
        .collect::<Result<Vec<_>>>()?;

    let (m, n) = (a.rows(), a.n());
    let mut idempotent: f64 = 0.0;
    let mut orthogonal: f64 = 0.0;
    let mut sum = ZeonMatrix::zeros(m, m, n);
    for (j, pj) in projections.iter().enumerate() {
        idempotent = idempotent.max(pj.try_mul(pj)?.distance(pj));
        for (k, pk) in projections.iter().enumerate() {
            if j != k {
                orthogonal = orthogonal.max(pj.try_mul(pk)?.max_abs());
            }
        }
        sum = sum.try_add(pj)?;
    }
    let identity = sum.distance(&ZeonMatrix::identity(m, n));
    let decomposition = SpectralDecomposition {
        eigenpairs: pairs,
        projections,
        checks: SpectralChecks {
            idempotent,
            orthogonal,
            identity,
            reconstruction: 0.0,
            cayley_hamilton: cayley_hamilton_residual(a)?,
        },
    };
    let scale = if a.max_abs() > 0.0 { a.max_abs() } else { 1.0 };
    let reconstruction = decomposition.reconstruct()?.distance(a) / scale;
    Ok(SpectralDecomposition {
        checks: SpectralChecks {
            reconstruction,
            ..decomposition.checks
        },
        ..decomposition
    })
}
