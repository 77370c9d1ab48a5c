use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A numeric argument violates an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// Input tables do not satisfy what the operation needs (too small, wrong kind).
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("capacity exceeded: {what} (reached {reached}, cap {cap})")]
    Capacity { what: &'static str, reached: u64, cap: u64 },

    #[error("quadrature did not reach tolerance {tol:e}: error estimate {estimate:e} after {panels} panels")]
    Convergence { tol: f64, estimate: f64, panels: usize },

    #[error("no sign change in bracket [{lo}, {hi}]: {detail}")]
    Bracketing { lo: f64, hi: f64, detail: String },

    #[error("monotonicity violated at xi = {at}: {detail}")]
    Monotonicity { at: f64, detail: String },

    #[error("coefficient table is identically zero")]
    ZeroCoefficients,

    #[error("{}:{line}: {msg}", path.display())]
    Format { path: PathBuf, line: usize, msg: String },

    #[error("height {at} outside table coverage [{lo}, {hi}]")]
    Coverage { at: f64, lo: f64, hi: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
