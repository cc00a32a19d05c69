use crate::element::ZeonElement;
use crate::error::{Result, ZeonError};
use crate::linalg::ZeonMatrix;
use crate::poly::ZeonPolynomial;

pub(crate) fn check_square(a: &ZeonMatrix) -> Result<()> {
    if a.is_square() {
        Ok(())
    } else {
        Err(ZeonError::Dimension(format!(
            "expected a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )))
    }
}

/// `chi_A(t) = |tI - A|`, monic of degree `m`, by the Faddeev-LeVerrier
/// recursion `M_k = A M_{k-1} + c_{m-k+1} I`, `c_{m-k} = -tr(A M_k) / k`.
pub fn charpoly(a: &ZeonMatrix) -> Result<ZeonPolynomial> {
    check_square(a)?;
    let (m, n) = (a.rows(), a.n());
    let identity = ZeonMatrix::identity(m, n);
    let mut coeffs = vec![ZeonElement::zero(n); m + 1];
    coeffs[m] = ZeonElement::one(n);
    let mut mk = ZeonMatrix::zeros(m, m, n);
    for k in 1..=m {
        mk = a
            .try_mul(&mk)?
            .try_add(&identity.scale(&coeffs[m - k + 1]))?;
        let t = a.try_mul(&mk)?.trace()?;
        coeffs[m - k] = t * (-1.0 / k as f64);
    }
    ZeonPolynomial::new(n, coeffs)
}

/// Largest coefficient modulus of `chi_A(A)`.
pub fn cayley_hamilton_residual(a: &ZeonMatrix) -> Result<f64> {
    Ok(charpoly(a)?.eval_matrix(a)?.max_abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::determinant_permutation;
    use crate::poly::ComplexPolynomial;
    use crate::tolerance::Tolerances;

    fn z(n: usize, g: &[usize], c: f64) -> ZeonElement {
        ZeonElement::blade(n, g, c)
    }

    fn example() -> ZeonMatrix {
        let n = 3;
        let s = |c: f64| ZeonElement::scalar(n, c);
        ZeonMatrix::from_rows(vec![
            vec![
                &s(5.0) + &z(n, &[2], 1.0),
                z(n, &[3], 2.0),
                z(n, &[1], -1.0),
            ],
            vec![z(n, &[3], 2.0), &s(3.0) + &z(n, &[1, 2], 1.0), s(1.0)],
            vec![z(n, &[1], -1.0), s(1.0), s(-1.0)],
        ])
        .unwrap()
    }

    #[test]
    fn scalar_diagonal() {
        let a = ZeonMatrix::diagonal(vec![
            ZeonElement::scalar(1, 2.0),
            ZeonElement::scalar(1, 3.0),
        ])
        .unwrap();
        let chi = charpoly(&a).unwrap();
        assert_eq!(
            chi.as_complex().unwrap(),
            ComplexPolynomial::from_real(&[6.0, -5.0, 1.0])
        );
        assert_eq!(cayley_hamilton_residual(&a).unwrap(), 0.0);
    }

    #[test]
    fn matches_determinant_at_sample_points() {
        let a = example();
        let chi = charpoly(&a).unwrap();
        let tol = Tolerances::DEFAULT;
        for t in [-2.0, 0.0, 0.5, 1.0, 3.0] {
            let tt = ZeonElement::scalar(3, t);
            let shifted = ZeonMatrix::identity(3, 3).scale(&tt).try_sub(&a).unwrap();
            let det = determinant_permutation(&shifted, &tol).unwrap();
            assert!(chi.eval(&tt).unwrap().distance(&det) < 1e-12);
        }
        let f = chi.induce_complex();
        assert!(f.eval(5.0.into()).norm() < 1e-12);
        assert!(f.eval((1.0 + 5f64.sqrt()).into()).norm() < 1e-12);
        assert!(cayley_hamilton_residual(&a).unwrap() < 1e-12);
    }

    #[test]
    fn rejects_rectangular() {
        assert!(charpoly(&ZeonMatrix::zeros(2, 3, 1)).is_err());
    }
}
