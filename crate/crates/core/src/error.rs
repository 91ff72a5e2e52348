use thiserror::Error;

/// Errors raised by the coefficient tables, the asymptotic formulas and the evaluator.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("index {index} out of range (table holds 0..={max})")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("insufficient series coefficients: need {needed}, have {available}")]
    InsufficientCoefficients { needed: usize, available: usize },

    #[error("leading series coefficient f(x0) must be nonzero")]
    DegenerateLeadingCoefficient,

    #[error("argument {value} outside the domain {domain}")]
    Domain { value: f64, domain: &'static str },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("polynomial degree {degree} exceeds the root-finding cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("logarithm argument {0} is not greater than 1")]
    LogArgument(f64),

    #[error("Newton iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("malformed coefficient record: {0}")]
    Malformed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
