//! Polynomials over the zeon algebra and the lifting of complex roots.

mod complex;
mod lift;
mod roots;
mod zeon;

pub use complex::ComplexPolynomial;
pub use lift::{lift_simple_zero, lift_simple_zero_graded, multiple_zero_family, split};
pub use roots::{
    complex_roots, complex_roots_with, is_simple_root, Root, RootFinderOptions, RootReport,
};
pub use zeon::{PolynomialRepr, ZeonPolynomial};
