//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A scene violates one of its structural invariants. `disc` names the
    /// offending disc index when one is responsible.
    #[error("invalid scene{}: {reason}", disc.map(|i| format!(" (disc {i})")).unwrap_or_default())]
    InvalidScene { reason: String, disc: Option<usize> },

    /// A parameter outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    /// The requested computation has no feasible answer (source sealed off,
    /// destination unreachable, arrival value not achievable).
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// A numeric procedure failed to converge or produced a non-finite value.
    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Parse failure for a scene or approximation file; carries the
    /// line/column context reported by the JSON parser.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
