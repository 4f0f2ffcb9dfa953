use thiserror::Error;

/// Errors raised by construction and verification.
///
/// `Pole` is special: the sampler treats it as "this parameter point lies in
/// the excluded set" and draws a fresh point instead of reporting a failure.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parameter point hits a pole: {0}")]
    Pole(String),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown {kind} '{name}'")]
    Unknown { kind: &'static str, name: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("sampling exhausted: {0}")]
    SamplingExhausted(String),
}

pub type Result<T> = std::result::Result<T, Error>;
