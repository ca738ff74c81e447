use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("grade {0} is outside 0..=4")]
    GradeOutOfRange(u8),

    #[error("generator index {0} is outside 0..=3")]
    GeneratorOutOfRange(usize),

    #[error("phase k·x = {phase} is not exactly evaluable")]
    Inexact { phase: String },

    #[error("expected an even multivector field, found odd-grade components")]
    Parity,

    #[error("{what} must have grade {expected}")]
    GradeViolation { what: &'static str, expected: &'static str },

    #[error("element is not idempotent (f·f != f, or f is 0 or 1)")]
    NotIdempotent,

    #[error("value is not stable under right multiplication by the idempotent")]
    NotInIdeal,

    #[error("ideal element was not built over the expected idempotent")]
    IdempotentMismatch,

    #[error("element is not a unit even spin element (u·ũ != 1)")]
    NotSpinElement,

    #[error("potential {potential} violates the Lorenz gauge: δ{potential} = {residual}")]
    Gauge { potential: &'static str, residual: String },

    #[error("wave vector {k} is not null (k·k = {norm})")]
    NonNullWaveVector { k: String, norm: String },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("generated {family} failed its defining residual check")]
    GeneratorResidual { family: &'static str },

    #[error("{path}: {message}")]
    Document { path: String, message: String },

    #[error("JSON parse error at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}
