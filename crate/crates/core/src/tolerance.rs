use crate::error::{Result, ZeonError};

/// Numeric thresholds shared by every algorithm in the crate.
///
/// `prune` drops coefficients from results, `compare` decides equality and
/// residual checks, `scalar_zero` decides whether a scalar part counts as
/// zero (and therefore whether an element is invertible).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub prune: f64,
    pub compare: f64,
    pub scalar_zero: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        prune: 1e-12,
        compare: 1e-9,
        scalar_zero: 1e-9,
    };

    pub fn new(prune: f64, compare: f64, scalar_zero: f64) -> Result<Self> {
        let tol = Tolerances {
            prune,
            compare,
            scalar_zero,
        };
        tol.validate()?;
        Ok(tol)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("prune", self.prune),
            ("compare", self.compare),
            ("scalar_zero", self.scalar_zero),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(ZeonError::Tolerance(format!(
                    "{name} must be finite and positive, got {v}"
                )));
            }
        }
        if self.prune > self.compare {
            return Err(ZeonError::Tolerance(format!(
                "prune ({}) must not exceed compare ({})",
                self.prune, self.compare
            )));
        }
        Ok(())
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances::DEFAULT
    }
}
