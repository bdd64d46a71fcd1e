//! Crate-wide error type.

use std::fmt;

/// Errors from spectrum evaluation, series summation and cycle assembly.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside an operation's domain (q < 1, non-positive temperature, ...).
    Domain(String),
    /// An adaptive series hit the term cap before its stop rule fired.
    NonConvergence { terms: usize },
    /// Evaluation left the representable range of f64.
    Overflow(String),
    /// The requested quantity is undefined because a cycle denominator
    /// (heat intake or net work) is numerically zero.
    DegenerateCycle(&'static str),
    /// Operation requires physical (SI) potential parameters but the spec
    /// was built in reduced mode.
    ReducedModeUnsupported(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::NonConvergence { terms } => {
                write!(f, "series did not converge within {terms} terms")
            }
            Error::Overflow(what) => write!(f, "overflow: {what}"),
            Error::DegenerateCycle(what) => write!(f, "degenerate cycle: {what}"),
            Error::ReducedModeUnsupported(what) => {
                write!(f, "{what} requires SI potential parameters")
            }
        }
    }
}

impl std::error::Error for Error {}

impl Error {
    /// Short machine-readable code, used by sweep exports for failed cells.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::NonConvergence { .. } => "non_convergence",
            Error::Overflow(_) => "overflow",
            Error::DegenerateCycle(_) => "degenerate_cycle",
            Error::ReducedModeUnsupported(_) => "reduced_mode",
        }
    }
}
