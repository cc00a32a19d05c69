//! Zeon vectors and matrices.

mod complex;
mod determinant;
mod elimination;
mod matrix;
mod vector;

pub use complex::ComplexMatrix;
pub use determinant::{
    determinant, determinant_elimination, determinant_permutation, PERMUTATION_SUM_MAX,
};
pub use elimination::{eliminate, EliminationOptions, EliminationReport, Pivoting, RowOp};
pub use matrix::{MatrixRepr, ZeonMatrix};
pub use vector::{orthonormalize, ZeonVector};
