use thiserror::Error;

/// Errors raised by the special functions, the quadrature engine and the
/// physics layers built on them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("no bound state n={n}: the well supports {count} bound state(s)")]
    NoSuchState { n: usize, count: usize },

    #[error("quadrature did not converge after {subdivisions} subdivisions (value {value:e}, error {error:e})")]
    NonConvergence {
        value: f64,
        error: f64,
        subdivisions: usize,
    },

    #[error("integrand is not finite at x = {x}")]
    NonFinite { x: f64 },

    #[error("support not found: {0}")]
    SupportNotFound(String),
}

impl Error {
    /// True for failures of the numerical machinery (as opposed to bad input).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NonConvergence { .. } | Error::NonFinite { .. } | Error::SupportNotFound(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
