use thiserror::Error;

/// Errors raised by the physics and numerics modules.
///
/// The variants split into two families: input problems (`Validation`,
/// `Domain`, `Parse`) and numerical breakdowns (`Root`, `Quadrature`,
/// `Integration`, `Singular`). The CLI maps the first family to exit
/// status 2 and the second to exit status 3.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("validation error: {0}")]
    Validation(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("singularity: {0}")]
    Singular(String),

    #[error("root finding failed: {0}")]
    Root(String),

    #[error("quadrature failed: {0}")]
    Quadrature(String),

    #[error("integration failed: {0}")]
    Integration(String),
}

impl Error {
    /// True for failures of a numerical method rather than bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::Singular(_) | Error::Root(_) | Error::Quadrature(_) | Error::Integration(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
