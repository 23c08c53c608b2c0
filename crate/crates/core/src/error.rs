use thiserror::Error;

use crate::network::Violation;

/// Errors raised by the numerical routines and the file readers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid network: {}", format_violations(.0))]
    InvalidSpec(Vec<Violation>),

    #[error("singular {context} at omega = {omega} GHz")]
    Singular { omega: f64, context: String },

    #[error("unknown node `{0}`")]
    UnknownNode(String),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("correlation has not decayed at the end of the time grid: |C(t_end)| = {magnitude:e} > {tolerance:e}")]
    Truncation { magnitude: f64, tolerance: f64 },

    #[error("quadrature did not converge: estimated error {achieved:e} exceeds {requested:e}")]
    Quadrature { achieved: f64, requested: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn singular(omega: f64, context: impl Into<String>) -> Self {
        Error::Singular {
            omega,
            context: context.into(),
        }
    }
}

fn format_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
