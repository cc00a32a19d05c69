//! Characteristic polynomials, zeon eigenpairs and the spectral
//! decomposition of self-adjoint matrices.

mod charpoly;
mod decompose;
mod eigen;

pub use charpoly::{cayley_hamilton_residual, charpoly};
pub use decompose::{
    projection, projection_unnormalized, resolution_of_identity, spectral_decompose,
    SpectralChecks, SpectralDecomposition,
};
pub use eigen::{
    eigen_independence_check, eigenpairs, eigenvalues, eigenvector, Eigenpair, Eigenvalues,
};
