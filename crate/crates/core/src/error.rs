use thiserror::Error;

/// Errors reported by the simulation and analysis routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{name} = {value} outside [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("expected a {expected}x{expected} matrix, got {got}x{got2}", got2 = .got_cols)]
    DimensionMismatch {
        expected: usize,
        got: usize,
        got_cols: usize,
    },

    #[error("matrix is not unitary (max |U U^dag - I| = {deviation:.3e})")]
    NonUnitary { deviation: f64 },

    #[error("matrix is not a valid density matrix: {reason}")]
    InvalidState { reason: String },

    #[error("summed acceptance probability below {limit:.1e}; degenerate noise distribution")]
    ZeroSuccessProbability { limit: f64 },

    #[error("fidelity increment is non-positive everywhere on (1/4, 1]")]
    EmptyInterval,

    #[error("no analytic class curve matches error type {type_label}")]
    Unclassified { type_label: String },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid fidelity grid: {reason}")]
    InvalidGrid { reason: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
