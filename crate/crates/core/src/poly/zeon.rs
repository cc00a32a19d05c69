use std::fmt;

use serde::{Deserialize, Serialize};

use super::ComplexPolynomial;
use crate::element::ZeonElement;
use crate::error::{Result, ZeonError};
use crate::linalg::ZeonMatrix;
use crate::tolerance::Tolerances;

/// A polynomial in one commuting indeterminate `u` with zeon coefficients,
/// ascending degree. Trailing zero coefficients are trimmed.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeonPolynomial {
    n: usize,
    coeffs: Vec<ZeonElement>,
}

impl ZeonPolynomial {
    pub fn new(n: usize, coeffs: Vec<ZeonElement>) -> Result<Self> {
        if let Some(bad) = coeffs.iter().find(|c| c.n() != n) {
            return Err(ZeonError::Dimension(format!(
                "coefficient over {} generators in a polynomial over {n}",
                bad.n()
            )));
        }
        Ok(Self::trimmed(n, coeffs))
    }

    fn trimmed(n: usize, mut coeffs: Vec<ZeonElement>) -> Self {
        while coeffs.last().is_some_and(ZeonElement::is_zero) {
            coeffs.pop();
        }
        ZeonPolynomial { n, coeffs }
    }

    pub fn zero(n: usize) -> Self {
        ZeonPolynomial {
            n,
            coeffs: Vec::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        ZeonPolynomial {
            n,
            coeffs: vec![ZeonElement::one(n)],
        }
    }

    /// Polynomial with scalar coefficients only.
    pub fn from_complex(n: usize, f: &ComplexPolynomial) -> Self {
        Self::trimmed(
            n,
            f.coeffs()
                .iter()
                .map(|&c| ZeonElement::scalar(n, c))
                .collect(),
        )
    }

    /// The linear factor `u - w`.
    pub fn linear_factor(w: &ZeonElement) -> Self {
        ZeonPolynomial {
            n: w.n(),
            coeffs: vec![-w, ZeonElement::one(w.n())],
        }
    }

    /// Monic `prod_j (u - w_j)`.
    pub fn from_roots(n: usize, roots: &[ZeonElement]) -> Result<Self> {
        roots
            .iter()
            .try_fold(Self::one(n), |acc, w| acc.try_mul(&Self::linear_factor(w)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[ZeonElement] {
        &self.coeffs
    }

    /// Coefficient of `u^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> ZeonElement {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| ZeonElement::zero(self.n))
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&ZeonElement> {
        self.coeffs.last()
    }

    fn check_same_n(&self, n: usize) -> Result<()> {
        if self.n == n {
            Ok(())
        } else {
            Err(ZeonError::Dimension(format!(
                "generator counts differ ({} vs {n})",
                self.n
            )))
        }
    }

    /// Horner evaluation at `u`.
    pub fn eval(&self, u: &ZeonElement) -> Result<ZeonElement> {
        self.check_same_n(u.n())?;
        let mut acc = ZeonElement::zero(self.n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * u) + c;
        }
        Ok(acc)
    }

    /// Horner evaluation at a square matrix, `sum_k a_k A^k` with `A^0 = I`.
    pub fn eval_matrix(&self, a: &ZeonMatrix) -> Result<ZeonMatrix> {
        self.check_same_n(a.n())?;
        if !a.is_square() {
            return Err(ZeonError::Dimension(
                "matrix polynomial needs a square matrix".into(),
            ));
        }
        let m = a.rows();
        let identity = ZeonMatrix::identity(m, self.n);
        let mut acc = ZeonMatrix::zeros(m, m, self.n);
        for c in self.coeffs.iter().rev() {
            acc = acc.try_mul(a)?.try_add(&identity.scale(c))?;
        }
        Ok(acc)
    }

    pub fn try_add(&self, other: &ZeonPolynomial) -> Result<ZeonPolynomial> {
        self.check_same_n(other.n)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        Ok(Self::trimmed(
            self.n,
            (0..len).map(|k| &self.coeff(k) + &other.coeff(k)).collect(),
        ))
    }

    pub fn try_sub(&self, other: &ZeonPolynomial) -> Result<ZeonPolynomial> {
        self.try_add(&other.scale(&-ZeonElement::one(self.n)))
    }

    pub fn try_mul(&self, other: &ZeonPolynomial) -> Result<ZeonPolynomial> {
        self.check_same_n(other.n)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.n));
        }
        let mut out = vec![ZeonElement::zero(self.n); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Ok(Self::trimmed(self.n, out))
    }

    pub fn scale(&self, alpha: &ZeonElement) -> ZeonPolynomial {
        Self::trimmed(self.n, self.coeffs.iter().map(|c| c * alpha).collect())
    }

    pub fn derivative(&self) -> ZeonPolynomial {
        Self::trimmed(
            self.n,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * (k as f64))
                .collect(),
        )
    }

    /// Coefficient-wise scalar part, the induced complex polynomial.
    pub fn induce_complex(&self) -> ComplexPolynomial {
        ComplexPolynomial::new(self.coeffs.iter().map(ZeonElement::scalar_part).collect())
    }

    /// `a_m^{-1} phi`. Fails when the leading coefficient is not invertible.
    pub fn monic(&self, tol: &Tolerances) -> Result<ZeonPolynomial> {
        let Some(lead) = self.leading() else {
            return Err(ZeonError::Division(
                "the zero polynomial has no leading coefficient".into(),
            ));
        };
        let inv = lead.inverse(tol).map_err(|_| {
            ZeonError::Division(format!("leading coefficient {lead} is not invertible"))
        })?;
        let mut coeffs: Vec<ZeonElement> = self
            .coeffs
            .iter()
            .map(|c| (c * &inv).pruned(tol.prune))
            .collect();
        *coeffs.last_mut().expect("nonzero") = ZeonElement::one(self.n);
        Ok(Self::trimmed(self.n, coeffs))
    }

    /// Long division `self = divisor * q + r` with `deg r < deg divisor`.
    /// The divisor's leading coefficient must be invertible.
    pub fn divide(
        &self,
        divisor: &ZeonPolynomial,
        tol: &Tolerances,
    ) -> Result<(ZeonPolynomial, ZeonPolynomial)> {
        self.check_same_n(divisor.n)?;
        let Some(dd) = divisor.degree() else {
            return Err(ZeonError::Division(
                "division by the zero polynomial".into(),
            ));
        };
        let lead = divisor.leading().expect("nonzero");
        let lead_inv = lead.inverse(tol).map_err(|_| {
            ZeonError::Division(format!(
                "divisor leading coefficient {lead} is not invertible"
            ))
        })?;

        let mut r = self.coeffs.clone();
        let Some(dr) = self.degree().filter(|&d| d >= dd) else {
            return Ok((Self::zero(self.n), self.clone()));
        };
        let mut q = vec![ZeonElement::zero(self.n); dr - dd + 1];
        for k in (0..=dr - dd).rev() {
            let c = &r[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate().take(dd) {
                r[k + j] -= &(&c * d);
            }
            r[k + dd] = ZeonElement::zero(self.n);
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Self::trimmed(self.n, q), Self::trimmed(self.n, r)))
    }

    pub fn pruned(&self, threshold: f64) -> ZeonPolynomial {
        Self::trimmed(
            self.n,
            self.coeffs
                .iter()
                .map(|c| c.clone().pruned(threshold))
                .collect(),
        )
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs
            .iter()
            .map(ZeonElement::max_abs)
            .fold(0.0, f64::max)
    }

    pub fn distance(&self, other: &ZeonPolynomial) -> f64 {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len)
            .map(|k| self.coeff(k).distance(&other.coeff(k)))
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &ZeonPolynomial, tol: f64) -> bool {
        self.n == other.n && self.distance(other) <= tol
    }

    /// Scalar coefficients of the polynomial as a complex polynomial, if all
    /// coefficients are scalars.
    pub fn as_complex(&self) -> Option<ComplexPolynomial> {
        self.coeffs
            .iter()
            .all(ZeonElement::is_scalar)
            .then(|| self.induce_complex())
    }

    pub fn to_pretty(&self, digits: usize) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let power = match k {
                0 => String::new(),
                1 => "u".into(),
                _ => format!("u^{k}"),
            };
            let coeff = c.to_pretty(digits);
            parts.push(match (k, coeff.as_str()) {
                (0, _) => format!("({coeff})"),
                (_, "1") => power,
                _ => format!("({coeff})*{power}"),
            });
        }
        parts.join(" + ")
    }
}

impl fmt::Display for ZeonPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pretty(f.precision().unwrap_or(6)))
    }
}

/// JSON form: `{"n": 4, "coeffs": [elem_0, elem_1, ...]}`, ascending degree.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialRepr {
    pub n: usize,
    pub coeffs: Vec<ZeonElement>,
}

impl Serialize for ZeonPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolynomialRepr {
            n: self.n,
            coeffs: self.coeffs.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ZeonPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PolynomialRepr::deserialize(d)?;
        ZeonPolynomial::new(r.n, r.coeffs).map_err(serde::de::Error::custom)
    }
}
