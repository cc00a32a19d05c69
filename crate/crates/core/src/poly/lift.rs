//! Lifting simple complex roots of the induced polynomial to zeon zeros.

use num_complex::Complex64;

use super::roots::{complex_roots_with, is_simple_root, RootFinderOptions};
use super::{ComplexPolynomial, ZeonPolynomial};
use crate::element::{SubsetIndex, ZeonElement};
use crate::error::{Result, ZeonError};
use crate::tolerance::Tolerances;

/// A prepared lift: the monic polynomial, the polished root and `g(lambda_0)`
/// for the deflated complex polynomial `g = f / (z - lambda_0)`.
struct Setup {
    monic: ZeonPolynomial,
    lambda0: Complex64,
    g0: Complex64,
    threshold: f64,
}

fn setup(phi: &ZeonPolynomial, lambda0: Complex64, tol: &Tolerances) -> Result<Setup> {
    let monic = phi.monic(tol)?;
    if monic.degree().unwrap_or(0) == 0 {
        return Err(ZeonError::Domain(
            "a constant polynomial has no zeros".into(),
        ));
    }
    let f = monic.induce_complex();
    let opts = RootFinderOptions::default();
    let scale = f.magnitude_at(lambda0);
    let (value, slope) = f.eval_with_derivative(lambda0);

    let near_zero = value.norm() <= opts.cluster_tol * (1.0 + scale);
    let newton_small =
        slope.norm() > 0.0 && (value / slope).norm() <= opts.cluster_tol * (1.0 + lambda0.norm());
    if !(near_zero || newton_small) {
        return Err(ZeonError::Domain(format!(
            "{lambda0} is not a root of the induced polynomial (|f| = {:.3e})",
            value.norm()
        )));
    }
    if !is_simple_root(&f, lambda0, opts.simple_tol) {
        return Err(ZeonError::NotSpectrallySimple {
            root: lambda0,
            detail: format!(
                "|f'| = {:.3e} at a root of the induced polynomial",
                slope.norm()
            ),
        });
    }

    let lambda0 = polish(&f, lambda0);
    let (g, _) = f.deflate(lambda0);
    let g0 = g.eval(lambda0);
    Ok(Setup {
        monic,
        lambda0,
        g0,
        threshold: tol.prune * (1.0 + f.magnitude_at(lambda0)),
    })
}

/// At most three Newton steps, each kept only if it lowers `|f|`.
fn polish(f: &ComplexPolynomial, mut z: Complex64) -> Complex64 {
    for _ in 0..3 {
        let (v, d) = f.eval_with_derivative(z);
        if v == Complex64::default() {
            break;
        }
        let next = z - v / d;
        if f.eval(next).norm() < v.norm() {
            z = next;
        } else {
            break;
        }
    }
    z
}

fn residual(s: &Setup, lambda: &ZeonElement) -> Result<ZeonElement> {
    Ok(s.monic.eval(lambda)?.dual_part().pruned(s.threshold))
}

/// The unique zeon zero `lambda` of `phi` with scalar part `lambda_0`, for
/// `lambda_0` a simple root of the induced complex polynomial.
///
/// Each pass removes the lowest-grade component of `phi(lambda)` by
/// subtracting it divided by `g(lambda_0)`; the minimal grade of the
/// residual grows strictly, so at most `n` passes are needed.
pub fn lift_simple_zero(
    phi: &ZeonPolynomial,
    lambda0: Complex64,
    tol: &Tolerances,
) -> Result<ZeonElement> {
    let s = setup(phi, lambda0, tol)?;
    let n = phi.n();
    let mut lambda = ZeonElement::scalar(n, s.lambda0);
    for _ in 0..4 * (n + 1) {
        let r = residual(&s, &lambda)?;
        let grade = r.min_grade();
        if grade > n {
            return Ok(lambda.pruned(tol.prune));
        }
        let xi = r.grade_part(grade) * (1.0 / s.g0);
        lambda -= &xi;
    }
    Err(ZeonError::Domain(format!(
        "lift at {lambda0} left a residual of {:.3e}",
        residual(&s, &lambda)?.max_abs()
    )))
}

/// Same zero as [`lift_simple_zero`], built grade by grade: for `k = 1..=n`,
/// `lambda_k = -<phi(lambda_0 + ... + lambda_{k-1})>_k / g(lambda_0)`.
pub fn lift_simple_zero_graded(
    phi: &ZeonPolynomial,
    lambda0: Complex64,
    tol: &Tolerances,
) -> Result<ZeonElement> {
    let s = setup(phi, lambda0, tol)?;
    let n = phi.n();
    let mut lambda = ZeonElement::scalar(n, s.lambda0);
    for k in 1..=n {
        let part = s.monic.eval(&lambda)?.grade_part(k);
        lambda -= &(part * (1.0 / s.g0));
    }
    Ok(lambda.pruned(tol.prune))
}

/// All zeon zeros of `phi` when every root of the induced polynomial is
/// simple, ordered like the complex roots.
pub fn split(phi: &ZeonPolynomial, tol: &Tolerances) -> Result<Vec<ZeonElement>> {
    let monic = phi.monic(tol)?;
    let report = complex_roots_with(&monic.induce_complex(), RootFinderOptions::default())?;
    if let Some(bad) = report.roots.iter().find(|r| !r.simple) {
        return Err(ZeonError::DoesNotSplit {
            root: bad.value,
            multiplicity: bad.multiplicity,
        });
    }
    report
        .roots
        .iter()
        .map(|r| lift_simple_zero(&monic, r.value, tol))
        .collect()
}

/// `w + a z_[n]`, again a zero of `phi` when `w` is a zero whose scalar part
/// is a multiple root of the induced polynomial.
pub fn multiple_zero_family(
    phi: &ZeonPolynomial,
    w: &ZeonElement,
    a: Complex64,
    tol: &Tolerances,
) -> Result<ZeonElement> {
    let n = phi.n();
    if w.n() != n {
        return Err(ZeonError::Dimension(format!(
            "zero over {} generators for a polynomial over {n}",
            w.n()
        )));
    }
    if n == 0 {
        return Err(ZeonError::Domain(
            "the family needs at least one generator".into(),
        ));
    }
    let value = phi.eval(w)?;
    let scale = 1.0 + phi.max_abs() * (1.0 + w.max_abs()).powi(phi.degree().unwrap_or(0) as i32);
    if value.max_abs() > tol.compare * scale {
        return Err(ZeonError::Domain(format!(
            "{w} is not a zero of the polynomial (residual {:.3e})",
            value.max_abs()
        )));
    }
    let f = phi.induce_complex();
    if f.degree().unwrap_or(0) == 0
        || is_simple_root(&f, w.scalar_part(), RootFinderOptions::default().simple_tol)
    {
        return Err(ZeonError::Domain(format!(
            "the scalar part of {w} is not a multiple root of the induced polynomial"
        )));
    }
    let mut top = ZeonElement::zero(n);
    top.insert(SubsetIndex::full(n), a);
    Ok(w + &top)
}
