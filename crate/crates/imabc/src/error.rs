use thiserror::Error;

/// Errors surfaced by the calibration library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    #[error("schedule violation for target {id}: alpha {alpha} exceeds final alpha {alpha_final}")]
    ScheduleViolation {
        id: String,
        alpha: f64,
        alpha_final: f64,
    },

    #[error("ill-defined relative distance: target {0} has observed value 0")]
    ZeroObserved(String),

    #[error("degenerate kernel covariance: {0}")]
    DegenerateKernel(String),

    #[error("undefined moment: {0}")]
    UndefinedMoment(String),

    #[error("no accepted points available to propose from")]
    EmptyFrontier,

    #[error("empty posterior: every importance weight is zero")]
    EmptyPosterior,

    #[error("configuration error: {0}")]
    Config(String),

    #[error("model evaluation failed: {0}")]
    Model(String),

    #[error("checkpoint incompatible with run configuration: {0}")]
    CheckpointMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
