//! Complex zeon algebra and the linear algebra built on it.
//!
//! The zeon algebra on `n` generators is the commutative algebra spanned by
//! blades `z_I`, `I` a subset of `{1, ..., n}`, with `z_i^2 = 0`. This crate
//! provides:
//!
//! - [`ZeonElement`]: arithmetic, inverses and principal k-th roots;
//! - [`ZeonVector`] and [`ZeonMatrix`]: inner product, normalization,
//!   determinants, inverses and Gaussian elimination;
//! - [`ZeonPolynomial`]: division, the induced complex polynomial and the
//!   lifting of simple complex roots to zeon zeros;
//! - [`spectral`]: characteristic polynomials, zeon eigenpairs and the
//!   spectral decomposition `A = sum_j lambda_j v_j v_j^dag` of self-adjoint
//!   matrices.
//!
//! ```
//! use zeon::poly::lift_simple_zero;
//! use zeon::{Complex64, Tolerances, ZeonElement, ZeonPolynomial};
//!
//! # fn main() -> zeon::Result<()> {
//! let n = 4;
//! let d = ZeonElement::blade(n, &[1, 2], 1.0)
//!     + ZeonElement::blade(n, &[1, 3], 1.0)
//!     + ZeonElement::blade(n, &[1, 4], 1.0);
//! let phi = ZeonPolynomial::new(n, vec![
//!     ZeonElement::scalar(n, 3.0) - &d,
//!     ZeonElement::scalar(n, -10.0) + &d * 2.0,
//!     ZeonElement::scalar(n, 12.0) - &d,
//!     ZeonElement::scalar(n, -6.0),
//!     ZeonElement::one(n),
//! ])?;
//! let lambda = lift_simple_zero(&phi, Complex64::new(3.0, 0.0), &Tolerances::DEFAULT)?;
//! assert_eq!(lambda.to_string(), "3 + 0.5*z[1,2] + 0.5*z[1,3] + 0.5*z[1,4]");
//! # Ok(())
//! # }
//! ```

pub mod element;
pub mod error;
pub mod linalg;
pub mod poly;
pub mod spectral;
pub mod tolerance;

pub use element::{SubsetIndex, ZeonElement};
pub use error::{Result, ZeonError};
pub use linalg::{ZeonMatrix, ZeonVector};
pub use num_complex::Complex64;
pub use poly::{ComplexPolynomial, RootReport, ZeonPolynomial};
pub use tolerance::Tolerances;
