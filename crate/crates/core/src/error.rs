use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Truncation order lies below the requested exponent.
    #[error("invalid truncation: order {trunc} is below exponent {exp}")]
    InvalidTruncation { exp: i64, trunc: i64 },

    /// Leading coefficient of a series is not a unit in its ring.
    #[error("cannot invert series: leading coefficient {lead} at q^{order} is not a unit")]
    NonInvertible { lead: String, order: i64 },

    /// Inversion of a series whose whole known window is zero.
    #[error("cannot invert series: all known coefficients up to q^{trunc} are zero")]
    ZeroWindow { trunc: i64 },

    /// Coefficient requested outside the known window of a series.
    #[error("coefficient of q^{n} outside known window [{min}, {max}]")]
    CoeffOutOfWindow { n: i64, min: i64, max: i64 },

    /// Comparison order exceeds what one of the operands knows.
    #[error("comparison to order {requested} exceeds truncation order {trunc}")]
    OrderBeyondTruncation { requested: i64, trunc: i64 },

    /// Mathematical domain violation (vanishing products, poles, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A structurally invalid combinatorial object.
    #[error("validation error: {0}")]
    Validation(String),

    /// Malformed text input (overpartition strings and the like).
    #[error("parse error: {0}")]
    Parse(String),

    /// Unsupported argument combination.
    #[error("usage error: {0}")]
    Usage(String),

    /// A cross-check between two computation routes failed.
    #[error("verification failure: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
