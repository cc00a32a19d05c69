use crate::element::ZeonElement;
use crate::error::{Result, ZeonError};
use crate::linalg::{eliminate, ComplexMatrix, EliminationOptions, ZeonMatrix, ZeonVector};
use crate::poly::{complex_roots, lift_simple_zero, Root};
use crate::tolerance::Tolerances;

use super::charpoly::{charpoly, check_square};

/// Lifted eigenvalues of a zeon matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigenvalues {
    /// One zeon eigenvalue per simple eigenvalue of the scalar part, in the
    /// root finder's order (descending real part).
    pub values: Vec<ZeonElement>,
    /// Whether every eigenvalue of the scalar part is simple.
    pub spectrally_simple: bool,
    /// Repeated eigenvalues of the scalar part that were not lifted.
    pub skipped: Vec<Root>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Eigenpair {
    pub value: ZeonElement,
    /// Solution of `(lambda I - A) x = 0` with its free coordinate set to 1.
    pub vector: ZeonVector,
    pub normalized: ZeonVector,
    pub spectrally_simple: bool,
}

pub fn eigenvalues(a: &ZeonMatrix, tol: &Tolerances) -> Result<Eigenvalues> {
    let chi = charpoly(a)?;
    let report = complex_roots(&chi.induce_complex())?;
    let mut values = Vec::new();
    let mut skipped = Vec::new();
    for root in report.roots {
        if root.simple {
            values.push(lift_simple_zero(&chi, root.value, tol)?);
        } else {
            skipped.push(root);
        }
    }
    Ok(Eigenvalues {
        values,
        spectrally_simple: skipped.is_empty(),
        skipped,
    })
}

/// An eigenvector for the spectrally simple eigenvalue `lambda`.
///
/// `lambda I - A` is reduced with invertible pivots; exactly `m - 1` pivots
/// must appear. The remaining coordinate is set to 1 and the pivot
/// coordinates are solved by back-substitution.
pub fn eigenvector(a: &ZeonMatrix, lambda: &ZeonElement, tol: &Tolerances) -> Result<ZeonVector> {
    check_square(a)?;
    if lambda.n() != a.n() {
        return Err(ZeonError::Dimension(
            "eigenvalue and matrix differ in generator count".into(),
        ));
    }
    let (m, n) = (a.rows(), a.n());
    let shifted = ZeonMatrix::identity(m, n).scale(lambda).try_sub(a)?;
    let rep = eliminate(&shifted, EliminationOptions::default(), tol);
    if rep.pivot_count == m {
        return Err(ZeonError::Domain(format!(
            "{lambda} is not an eigenvalue: lambda I - A has {m} invertible pivots"
        )));
    }
    if rep.pivot_count + 1 != m {
        return Err(ZeonError::NotSpectrallySimple {
            root: lambda.scalar_part(),
            detail: format!(
                "lambda I - A has {} invertible pivots, expected {}",
                rep.pivot_count,
                m - 1
            ),
        });
    }
    let free = rep.free_columns()[0];
    let u = &rep.upper;

    let scale = 1.0 + shifted.max_abs();
    let leftover = u
        .row(m - 1)
        .iter()
        .map(ZeonElement::max_abs)
        .fold(0.0, f64::max);
    if leftover > tol.compare * scale.powi(m as i32) {
        return Err(ZeonError::Domain(format!(
            "{lambda} is not an eigenvalue: elimination leaves a residual row of size {leftover:.3e}"
        )));
    }

    let mut x = vec![ZeonElement::zero(n); m];
    x[free] = ZeonElement::one(n);
    for &(row, col) in rep.pivots.iter().rev() {
        let mut acc = ZeonElement::zero(n);
        for (j, xj) in x.iter().enumerate() {
            if j != col {
                acc += &(u.get(row, j) * xj);
            }
        }
        let pivot_inv = u.get(row, col).inverse(tol)?;
        x[col] = -(&acc * &pivot_inv).pruned(tol.prune);
    }
    ZeonVector::new(x)
}

/// Eigenpairs for every spectrally simple eigenvalue of `a`.
pub fn eigenpairs(a: &ZeonMatrix, tol: &Tolerances) -> Result<Vec<Eigenpair>> {
    let ev = eigenvalues(a, tol)?;
    ev.values
        .into_iter()
        .map(|value| {
            let vector = eigenvector(a, &value, tol)?;
            let normalized = vector.normalize(tol)?;
            Ok(Eigenpair {
                value,
                vector,
                normalized,
                spectrally_simple: true,
            })
        })
        .collect()
}

/// Whether the eigenvectors are independent: the Gram matrix of the
/// normalized scalar parts of the vectors has a nonzero determinant.
pub fn eigen_independence_check(pairs: &[Eigenpair], tol: &Tolerances) -> bool {
    let columns: Vec<Vec<num_complex::Complex64>> = pairs
        .iter()
        .map(|p| {
            let c: Vec<_> = p.vector.iter().map(ZeonElement::scalar_part).collect();
            let norm = c.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
            c.into_iter().map(|x| x / norm).collect()
        })
        .collect();
    if columns.iter().any(|c| c.iter().any(|x| !x.is_finite())) {
        return false;
    }
    let k = columns.len();
    let gram = ComplexMatrix::from_fn(k, k, |i, j| {
        columns[i]
            .iter()
            .zip(&columns[j])
            .map(|(x, y)| x.conj() * y)
            .sum()
    });
    gram.determinant().norm() > tol.scalar_zero
}
