use num_complex::Complex64;

/// A polynomial with complex coefficients, ascending degree. Trailing zero
/// coefficients are trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexPolynomial {
    coeffs: Vec<Complex64>,
}

impl ComplexPolynomial {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.last().is_some_and(|c| *c == Complex64::default()) {
            coeffs.pop();
        }
        ComplexPolynomial { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// Monic polynomial `prod_j (z - r_j)`.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut coeffs = vec![Complex64::new(1.0, 0.0)];
        for &r in roots {
            let mut next = vec![Complex64::default(); coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * r;
            }
            coeffs = next;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<Complex64> {
        self.coeffs.last().copied()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::default(), |acc, &c| acc * z + c)
    }

    /// Value and first derivative at `z` in one Horner pass.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut p = Complex64::default();
        let mut dp = Complex64::default();
        for &c in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }

    /// `sum_k |a_k| |z|^k`, the scale of rounding error when evaluating at `z`.
    pub fn magnitude_at(&self, z: Complex64) -> f64 {
        let r = z.norm();
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + c.norm())
    }

    pub fn derivative(&self) -> ComplexPolynomial {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    /// Synthetic division by `z - root`: returns `(quotient, remainder)`.
    pub fn deflate(&self, root: Complex64) -> (ComplexPolynomial, Complex64) {
        let Some(d) = self.degree() else {
            return (self.clone(), Complex64::default());
        };
        if d == 0 {
            return (ComplexPolynomial::new(vec![]), self.coeffs[0]);
        }
        let mut q = vec![Complex64::default(); d];
        let mut carry = Complex64::default();
        for k in (1..=d).rev() {
            carry = carry * root + self.coeffs[k];
            q[k - 1] = carry;
        }
        let rem = carry * root + self.coeffs[0];
        (ComplexPolynomial::new(q), rem)
    }

    pub fn mul(&self, other: &ComplexPolynomial) -> ComplexPolynomial {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return ComplexPolynomial::new(vec![]);
        }
        let mut out = vec![Complex64::default(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ComplexPolynomial::new(out)
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}
