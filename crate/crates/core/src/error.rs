use core::fmt;

/// Errors from parameter validation and the numeric kernels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// A distribution parameter violates its constraint.
    InvalidParam {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },
    /// A function argument lies outside the function's domain.
    Domain {
        func: &'static str,
        arg: &'static str,
        value: f64,
        requirement: &'static str,
    },
    /// An iterative kernel did not reach its tolerance.
    NoConvergence { what: &'static str },
    /// A statistical test was given too few samples.
    InsufficientSamples { got: usize, min: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParam {
                name,
                value,
                requirement,
            } => write!(f, "invalid parameter {name} = {value}: requires {requirement}"),
            Error::Domain {
                func,
                arg,
                value,
                requirement,
            } => write!(f, "{func}: argument {arg} = {value} outside domain ({requirement})"),
            Error::NoConvergence { what } => write!(f, "{what} did not converge"),
            Error::InsufficientSamples { got, min } => {
                write!(f, "insufficient samples: got {got}, need at least {min}")
            }
        }
    }
}

impl core::error::Error for Error {}
