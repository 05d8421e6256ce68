use thiserror::Error;

/// Failures raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument outside domain: {0}")]
    Domain(String),
    #[error("pole at {0}")]
    Pole(String),
    #[error("result overflows the scalar type")]
    Overflow,
    #[error("{what} did not converge (error estimate {estimate:e})")]
    NonConvergence { what: &'static str, estimate: f64 },
    #[error("branch cut crossed: {0}")]
    BranchCut(String),
    #[error("degenerate triangle: {0}")]
    Degenerate(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("vertex residual {residual:e} exceeds tolerance {tolerance:e}")]
    VertexResidual { residual: f64, tolerance: f64 },
}

impl Error {
    /// True when the failure stems from bad input rather than numerics.
    pub fn is_invalid_input(&self) -> bool {
        matches!(
            self,
            Error::Domain(_) | Error::Degenerate(_) | Error::Config(_) | Error::Pole(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
