use num_complex::Complex64;

use super::ZeonElement;
use crate::error::{Result, ZeonError};
use crate::tolerance::Tolerances;

/// Principal complex k-th root: argument in `(-pi/k, pi/k]`.
pub(crate) fn principal_root(c: Complex64, k: u32) -> Complex64 {
    if k == 1 {
        return c;
    }
    if c.im == 0.0 && c.re > 0.0 {
        let r = match k {
            2 => c.re.sqrt(),
            3 => c.re.cbrt(),
            _ => c.re.powf(1.0 / f64::from(k)),
        };
        return Complex64::new(r, 0.0);
    }
    if k == 2 {
        c.sqrt()
    } else {
        c.powf(1.0 / f64::from(k))
    }
}

impl ZeonElement {
    /// Least `kappa >= 1` with `u^kappa = 0`.
    ///
    /// The input must be nilpotent: a scalar part above `tol.scalar_zero` is a
    /// domain error. A scalar part below it is treated as zero.
    pub fn nilpotency_index(&self, tol: &Tolerances) -> Result<usize> {
        if self.is_invertible(tol.scalar_zero) {
            return Err(ZeonError::Domain(format!(
                "element with scalar part {} is invertible, not nilpotent",
                self.scalar_part()
            )));
        }
        let d = self.dual_part().pruned(tol.prune);
        let mut kappa = 1;
        let mut power = d.clone();
        while !power.is_zero() {
            power = (&power * &d).pruned(tol.prune);
            kappa += 1;
        }
        Ok(kappa)
    }

    /// Multiplicative inverse via the terminating geometric series
    /// `u^-1 = (1/c) sum_j (-1)^j c^-j D^j`, `c` the scalar part and `D` the
    /// dual part.
    pub fn inverse(&self, tol: &Tolerances) -> Result<ZeonElement> {
        let c = self.scalar_part();
        if c.norm() <= tol.scalar_zero {
            return Err(ZeonError::Singular(format!(
                "scalar part {c} is zero within {:e}; the element is nilpotent",
                tol.scalar_zero
            )));
        }
        let ratio = self.dual_part().scale(-1.0 / c);
        let mut term = ZeonElement::scalar(self.n, 1.0 / c);
        let mut sum = term.clone();
        // D^(n+1) = 0, so at most n + 1 terms are nonzero.
        for _ in 0..self.n {
            term = &term * &ratio;
            if term.is_zero() {
                break;
            }
            sum += &term;
        }
        Ok(sum.pruned(tol.prune))
    }

    /// Principal k-th root: the root whose scalar part is the principal
    /// complex k-th root of the scalar part.
    ///
    /// Peels one generator at a time: with `w = phi + z_g psi` (neither
    /// factor involving `z_g`), `w^(1/k) = phi^(1/k) + z_g psi / (k phi^((k-1)/k))`.
    pub fn kth_root(&self, k: u32, tol: &Tolerances) -> Result<ZeonElement> {
        if k == 0 {
            return Err(ZeonError::Domain("root order must be at least 1".into()));
        }
        if !self.is_invertible(tol.scalar_zero) {
            return Err(ZeonError::Singular(format!(
                "cannot take a root of a nilpotent element (scalar part {})",
                self.scalar_part()
            )));
        }
        Ok(self.root_rec(k, tol)?.pruned(tol.prune))
    }

    fn root_rec(&self, k: u32, tol: &Tolerances) -> Result<ZeonElement> {
        let top = self.terms().filter_map(|(i, _)| i.max_generator()).max();
        let Some(g) = top else {
            return Ok(ZeonElement::scalar(
                self.n,
                principal_root(self.scalar_part(), k),
            ));
        };
        let (phi, psi) = self.split_on(g);
        let r = phi.root_rec(k, tol)?;
        let denom = r.pow(k - 1).inverse(tol)?;
        let tail = (&psi * &denom).scale(1.0 / f64::from(k)) * ZeonElement::generator(self.n, g);
        Ok(r + tail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: Tolerances = Tolerances::DEFAULT;

    fn z(n: usize, g: &[usize], c: f64) -> ZeonElement {
        ZeonElement::blade(n, g, c)
    }

    #[test]
    fn inverse_examples() {
        let one = ZeonElement::one(3);
        assert_eq!(one.inverse(&TOL).unwrap(), one);

        let u = ZeonElement::scalar(1, 2.0) + z(1, &[1], 1.0);
        let expect = ZeonElement::scalar(1, 0.5) + z(1, &[1], -0.25);
        assert!(u.inverse(&TOL).unwrap().approx_eq(&expect, 1e-15));

        let w = ZeonElement::scalar(3, 5.0) + z(3, &[1, 2, 3], -4.0);
        let inv = w.inverse(&TOL).unwrap();
        let expect = ZeonElement::scalar(3, 0.2) + z(3, &[1, 2, 3], 4.0 / 25.0);
        assert!(inv.approx_eq(&expect, 1e-15));
        assert!((&w * &inv).approx_eq(&ZeonElement::one(3), 1e-15));
    }

    #[test]
    fn inverse_of_nilpotent_fails() {
        let d = z(2, &[1], 1.0) + z(2, &[2], 3.0);
        assert!(matches!(d.inverse(&TOL), Err(ZeonError::Singular(_))));
        assert!(ZeonElement::zero(2).inverse(&TOL).is_err());
    }

    #[test]
    fn roots_examples() {
        let four = ZeonElement::scalar(0, 4.0);
        assert_eq!(four.kth_root(2, &TOL).unwrap(), ZeonElement::scalar(0, 2.0));

        let w = ZeonElement::scalar(3, 5.0) + z(3, &[1, 2, 3], -4.0);
        let s = w.kth_root(2, &TOL).unwrap().inverse(&TOL).unwrap();
        let r5 = 5f64.sqrt();
        let expect = ZeonElement::scalar(3, 1.0 / r5) + z(3, &[1, 2, 3], 2.0 / (5.0 * r5));
        assert!(s.approx_eq(&expect, 1e-15));
    }

    #[test]
    fn principal_branch() {
        let m1 = ZeonElement::scalar(2, -1.0) + z(2, &[1], 1.0);
        let r = m1.kth_root(2, &TOL).unwrap();
        assert!((r.scalar_part() - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        assert!(r.pow(2).approx_eq(&m1, 1e-14));

        let r3 = m1.kth_root(3, &TOL).unwrap();
        let expect = Complex64::from_polar(1.0, std::f64::consts::PI / 3.0);
        assert!((r3.scalar_part() - expect).norm() < 1e-14);
        assert!(r3.pow(3).approx_eq(&m1, 1e-14));
    }

    #[test]
    fn root_errors() {
        assert!(matches!(
            z(2, &[1], 1.0).kth_root(2, &TOL),
            Err(ZeonError::Singular(_))
        ));
        assert!(matches!(
            ZeonElement::one(2).kth_root(0, &TOL),
            Err(ZeonError::Domain(_))
        ));
    }

    #[test]
    fn nilpotency_examples() {
        assert_eq!(ZeonElement::zero(3).nilpotency_index(&TOL).unwrap(), 1);
        let d = z(2, &[1], 1.0) + z(2, &[2], 1.0);
        assert_eq!(d.nilpotency_index(&TOL).unwrap(), 3);
        assert_eq!(z(4, &[1, 2, 3, 4], 2.0).nilpotency_index(&TOL).unwrap(), 2);
        assert!(matches!(
            ZeonElement::one(1).nilpotency_index(&TOL),
            Err(ZeonError::Domain(_))
        ));
    }
}
