use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function pole at x = {0}")]
    Pole(f64),

    #[error("{what} overflows at x = {x}")]
    Overflow { what: &'static str, x: f64 },

    #[error("{what}: argument {x} outside the domain")]
    Domain { what: &'static str, x: f64 },

    #[error("{what} did not converge after {iterations} iterations")]
    NonConvergence { what: &'static str, iterations: usize },

    #[error("no sign change of the eigenvalue equation in [{lo}, {hi}] (g = {g:e})")]
    BracketFailure { g: f64, lo: f64, hi: f64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(
        "grid [{y_min}, {y_max}] too small: boundary value {boundary:e} exceeds {threshold:e} of the peak"
    )]
    InsufficientDomain {
        y_min: f64,
        y_max: f64,
        boundary: f64,
        threshold: f64,
    },

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("ambiguous parity (even residual {even}, odd residual {odd})")]
    AmbiguousParity { even: f64, odd: f64 },

    #[error("unknown {kind} strategy `{name}` (available: {available})")]
    UnknownStrategy {
        kind: &'static str,
        name: String,
        available: String,
    },
}
