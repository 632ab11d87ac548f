use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("{what} = {value} is outside {range}")]
    OutOfRange {
        what: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("probabilities sum to {sum}, expected 1 within {tolerance:e}")]
    ProbabilitySum { sum: f64, tolerance: f64 },

    #[error("linguistic term s_{term} is outside s_0..s_{max}")]
    TermOutOfRange { term: i64, max: u32 },

    #[error("invalid linguistic scale: tau must be at least 1")]
    InvalidScale,

    #[error("invalid decision matrix: {0}")]
    InvalidMatrix(String),

    #[error("degenerate weights: every criterion has mean entropy 1")]
    DegenerateWeights,

    #[error("zero closeness denominator (D+ = D- = 0){}", alternative.map(|i| format!(" for alternative {i}")).unwrap_or_default())]
    ZeroDenominator { alternative: Option<usize> },

    #[error("unknown measure id `{0}`")]
    UnknownMeasure(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<toml::de::Error> for Error {
    fn from(e: toml::de::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
