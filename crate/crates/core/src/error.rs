use thiserror::Error;

/// Errors raised by the motif pipeline and its oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series `{0}` is empty")]
    EmptySeries(String),
    #[error("series `{series}` has a non-finite value at index {index}")]
    NonFinite { series: String, index: usize },
    #[error("series `{0}` has zero variance")]
    ZeroVariance(String),
    #[error("series `{series}` has {len} samples, fewer than the window length {window}")]
    WindowTooLong {
        series: String,
        len: usize,
        window: usize,
    },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("no series supplied")]
    NoSeries,
    #[error("point at squared distance {distance_sq} exceeds radius {radius} of cluster {cluster}")]
    RadiusViolation {
        cluster: usize,
        distance_sq: f64,
        radius: f64,
    },
    #[error("planted series cannot be generated: {0}")]
    SpecInfeasible(String),
    #[error("{len} samples exceeds the oracle cap of {cap}")]
    TooLarge { len: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
