use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// The baseline cdf is numerically indistinguishable from 1, so the odds
    /// ratio would overflow. The offending abscissa is reported.
    #[error("odds saturated at x = {x}: baseline cdf within 1e-12 of 1")]
    Saturation { x: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("operation not defined for copula-dependent systems")]
    UnsupportedRegime,

    #[error("generator `{0}` does not support sampling")]
    UnsupportedGenerator(String),

    #[error("d-monotonicity check supports d <= 6, got d = {0}")]
    UnsupportedOrder(usize),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("evaluation failed at {x}: {reason}")]
    Evaluation { x: f64, reason: String },

    #[error("hypothesis generation for {theorem} exhausted after {attempts} attempts")]
    GenerationExhausted { theorem: String, attempts: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
