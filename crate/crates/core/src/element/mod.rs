//! The complex zeon algebra: elements `u = sum_I u_I z_I` over commuting
//! null-square generators `z_1, ..., z_n`.

mod display;
mod index;
mod json;
mod ops;
mod roots;

use std::collections::BTreeMap;

use num_complex::Complex64;

pub use display::format_significant;
pub use index::{SubsetIndex, MAX_GENERATORS};
pub use json::{ElementRepr, TermRepr};

use crate::error::{Result, ZeonError};

/// An element of the complex zeon algebra on `n` generators.
///
/// Stored sparsely as a map from blade index to complex coefficient. Exact
/// zero coefficients are never stored; near-zero ones are removed by
/// [`ZeonElement::pruned`], which every tolerance-aware algorithm applies to
/// its results.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeonElement {
    n: usize,
    terms: BTreeMap<SubsetIndex, Complex64>,
}

fn is_exact_zero(c: Complex64) -> bool {
    c.re == 0.0 && c.im == 0.0
}

impl ZeonElement {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_GENERATORS, "at most {MAX_GENERATORS} generators");
        ZeonElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, Complex64::new(1.0, 0.0))
    }

    pub fn scalar(n: usize, c: impl Into<Complex64>) -> Self {
        let mut u = Self::zero(n);
        u.insert(SubsetIndex::EMPTY, c.into());
        u
    }

    /// The generator `z_i` (1-based).
    pub fn generator(n: usize, i: usize) -> Self {
        Self::blade(n, &[i], 1.0)
    }

    /// `c * z_I` for the listed generators. Panics if a generator exceeds `n`.
    pub fn blade(n: usize, generators: &[usize], c: impl Into<Complex64>) -> Self {
        let index = SubsetIndex::from_generators(generators);
        assert!(
            index.fits(n),
            "blade {index} does not fit in {n} generators"
        );
        let mut u = Self::zero(n);
        u.insert(index, c.into());
        u
    }

    /// Builds an element from `(index, coefficient)` pairs. Repeated indices
    /// are summed.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SubsetIndex, Complex64)>,
    {
        if n > MAX_GENERATORS {
            return Err(ZeonError::Dimension(format!(
                "n = {n} exceeds the maximum of {MAX_GENERATORS} generators"
            )));
        }
        let mut u = Self::zero(n);
        for (index, c) in terms {
            if !index.fits(n) {
                return Err(ZeonError::Dimension(format!(
                    "blade {index} does not fit in {n} generators"
                )));
            }
            if !(c.re.is_finite() && c.im.is_finite()) {
                return Err(ZeonError::Domain(format!(
                    "non-finite coefficient {c} on blade {index}"
                )));
            }
            u.accumulate(index, c);
        }
        Ok(u)
    }

    pub(crate) fn insert(&mut self, index: SubsetIndex, c: Complex64) {
        if is_exact_zero(c) {
            self.terms.remove(&index);
        } else {
            self.terms.insert(index, c);
        }
    }

    pub(crate) fn accumulate(&mut self, index: SubsetIndex, c: Complex64) {
        let entry = self.terms.entry(index).or_default();
        *entry += c;
        if is_exact_zero(*entry) {
            self.terms.remove(&index);
        }
    }

    /// Number of generators of the ambient algebra.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, index: SubsetIndex) -> Complex64 {
        self.terms.get(&index).copied().unwrap_or_default()
    }

    /// Coefficient of the blade on the listed (1-based) generators.
    pub fn coeff_of(&self, generators: &[usize]) -> Complex64 {
        self.coeff(SubsetIndex::from_generators(generators))
    }

    /// Stored terms in grade-then-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (SubsetIndex, Complex64)> + '_ {
        self.terms.iter().map(|(&i, &c)| (i, c))
    }

    /// Number of stored (nonzero) coefficients.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The scalar part (coefficient of the empty blade).
    pub fn scalar_part(&self) -> Complex64 {
        self.coeff(SubsetIndex::EMPTY)
    }

    /// Everything except the scalar part; always nilpotent.
    pub fn dual_part(&self) -> ZeonElement {
        let mut d = self.clone();
        d.terms.remove(&SubsetIndex::EMPTY);
        d
    }

    pub fn grade_part(&self, k: usize) -> ZeonElement {
        ZeonElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(i, _)| i.grade() == k)
                .map(|(&i, &c)| (i, c))
                .collect(),
        }
    }

    pub fn conjugate(&self) -> ZeonElement {
        ZeonElement {
            n: self.n,
            terms: self.terms.iter().map(|(&i, c)| (i, c.conj())).collect(),
        }
    }

    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|i| i.is_empty())
    }

    /// Smallest grade `k >= 1` carrying a nonzero term of the dual part, or
    /// `0` for a nonzero scalar. The zero element returns `n + 1`.
    pub fn min_grade(&self) -> usize {
        if self.is_zero() {
            return self.n + 1;
        }
        self.terms
            .keys()
            .map(|i| i.grade())
            .find(|&g| g > 0)
            .unwrap_or(0)
    }

    /// Highest grade carrying a nonzero term; `0` for scalars and zero.
    pub fn max_grade(&self) -> usize {
        self.terms.keys().map(|i| i.grade()).max().unwrap_or(0)
    }

    /// Largest coefficient modulus (0 for the zero element).
    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest coefficient-wise difference modulus.
    pub fn distance(&self, other: &ZeonElement) -> f64 {
        let mut worst = 0.0f64;
        for (i, c) in &self.terms {
            worst = worst.max((c - other.coeff(*i)).norm());
        }
        for (i, c) in &other.terms {
            if !self.terms.contains_key(i) {
                worst = worst.max(c.norm());
            }
        }
        worst
    }

    pub fn approx_eq(&self, other: &ZeonElement, tol: f64) -> bool {
        self.n == other.n && self.distance(other) <= tol
    }

    /// Removes every coefficient with modulus at or below `threshold`.
    pub fn pruned(mut self, threshold: f64) -> ZeonElement {
        self.prune(threshold);
        self
    }

    pub fn prune(&mut self, threshold: f64) {
        self.terms.retain(|_, c| c.norm() > threshold);
    }

    pub fn is_invertible(&self, scalar_zero: f64) -> bool {
        self.scalar_part().norm() > scalar_zero
    }

    /// Whether `u` equals its conjugate within `tol` (an element of the real
    /// zeon algebra).
    pub fn is_real(&self, tol: f64) -> bool {
        self.terms.values().all(|c| c.im.abs() <= tol)
    }

    /// Re-homes the element in an algebra with `n` generators. Fails if a
    /// stored blade uses a generator above `n`.
    pub fn with_generators(&self, n: usize) -> Result<ZeonElement> {
        ZeonElement::from_terms(n, self.terms())
    }

    pub(crate) fn check_same_n(&self, other: &ZeonElement) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(ZeonError::Dimension(format!(
                "generator counts differ ({} vs {})",
                self.n, other.n
            )))
        }
    }

    /// Splits `u = phi + z_g psi` where neither `phi` nor `psi` involves
    /// generator `g`.
    pub(crate) fn split_on(&self, g: usize) -> (ZeonElement, ZeonElement) {
        let mut phi = ZeonElement::zero(self.n);
        let mut psi = ZeonElement::zero(self.n);
        for (i, c) in self.terms() {
            if i.contains(g) {
                psi.insert(i.without(g), c);
            } else {
                phi.insert(i, c);
            }
        }
        (phi, psi)
    }
}
