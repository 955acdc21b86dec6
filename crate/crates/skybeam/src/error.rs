use thiserror::Error;

/// Errors surfaced by the simulator and trainer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("config: {0}")]
    Config(String),

    #[error("config parse: {0}")]
    ConfigParse(String),

    #[error("placement failed after {attempts} rejection attempts; region too small for d_min")]
    Placement { attempts: usize },

    #[error("geometry: {0}")]
    Geometry(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("quadrature grid too coarse: n_theta = {0} (minimum 8)")]
    GridTooCoarse(usize),

    #[error("oracle instance too large: {combinations} grid combinations (limit {limit})")]
    OracleTooLarge { combinations: u128, limit: u128 },

    #[error("episode finished: slot {slot} of {slots}")]
    EpisodeFinished { slot: usize, slots: usize },

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("checkpoint: {0}")]
    Checkpoint(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
