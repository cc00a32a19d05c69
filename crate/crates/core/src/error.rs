use num_complex::Complex64;
use thiserror::Error;

pub type Result<T, E = ZeonError> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ZeonError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("singular: {0}")]
    Singular(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("division requires an invertible leading coefficient: {0}")]
    Division(String),

    #[error("complex root {root} is not simple ({detail})")]
    NotSpectrallySimple { root: Complex64, detail: String },

    #[error("polynomial does not split: root {root} has multiplicity {multiplicity}")]
    DoesNotSplit {
        root: Complex64,
        multiplicity: usize,
    },

    #[error("matrix is not self-adjoint (max |A - A^dag| coefficient {residual:e})")]
    NotSelfAdjoint { residual: f64 },

    #[error("root finder did not converge after {iterations} iterations")]
    NoConvergence {
        iterations: usize,
        partial: Box<crate::poly::RootReport>,
    },

    #[error("invalid tolerance: {0}")]
    Tolerance(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

impl ZeonError {
    /// Stable machine-readable code, used by the CLI error object.
    pub fn code(&self) -> &'static str {
        match self {
            ZeonError::Dimension(_) => "dimension_mismatch",
            ZeonError::Singular(_) => "singular",
            ZeonError::Domain(_) => "domain",
            ZeonError::Division(_) => "division",
            ZeonError::NotSpectrallySimple { .. } => "not_spectrally_simple",
            ZeonError::DoesNotSplit { .. } => "does_not_split",
            ZeonError::NotSelfAdjoint { .. } => "not_self_adjoint",
            ZeonError::NoConvergence { .. } => "no_convergence",
            ZeonError::Tolerance(_) => "invalid_tolerance",
            ZeonError::Parse(_) => "malformed_input",
        }
    }

    /// Errors caused by the mathematics of a well-formed input, as opposed to
    /// malformed input or bad options.
    pub fn is_domain(&self) -> bool {
        !matches!(self, ZeonError::Tolerance(_) | ZeonError::Parse(_))
    }
}
