use std::io;
use std::path::PathBuf;

use crate::li::Method;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("working precision must be at least {min} digits, got {digits}")]
    PrecisionTooLow { digits: u32, min: u32 },

    #[error("requested {requested} digits but the stored Euler constant supports at most {max}")]
    PrecisionExceedsLiteral { requested: u32, max: u32 },

    #[error("division by zero in {0}")]
    DivisionByZero(&'static str),

    #[error("non-finite value produced by {0}")]
    NonFinite(&'static str),

    #[error("invalid number literal {literal:?}")]
    InvalidNumber { literal: String },

    #[error("line {line}: cannot parse ordinate {text:?}")]
    Parse { line: usize, text: String },

    #[error("line {line}: ordinate {value} does not exceed previous ordinate {previous}")]
    NotIncreasing {
        line: usize,
        previous: String,
        value: String,
    },

    #[error("line {line}: ordinate {value} is not positive")]
    NonPositive { line: usize, value: String },

    #[error("source digits must be at least 9, got {0}")]
    SourceDigits(u32),

    #[error("zero table is not valid UTF-8: {0}")]
    Encoding(#[from] std::str::Utf8Error),

    #[error("network failure fetching {url}: {message}")]
    Network { url: String, message: String },

    #[error("{url} answered with HTTP status {status}")]
    HttpStatus { url: String, status: u16 },

    #[error("cannot write cache entry {path}: {source}")]
    CacheWrite { path: PathBuf, source: io::Error },

    #[error("cannot read cache entry {path}: {source}")]
    CacheRead { path: PathBuf, source: io::Error },

    #[error("tail bound needs T >= max(n, 20); got T = {t}, n = {n}")]
    TailDomain { t: String, n: u32 },

    #[error("zero multiset element {0} is not allowed (rho must avoid 0 and 1)")]
    InvalidElement(String),

    #[error("catalog is empty")]
    EmptyCatalog,

    #[error("{what} requires n >= {min}, got {n}")]
    IndexOutOfRange {
        what: &'static str,
        n: u32,
        min: u32,
    },

    #[error("method {0} needs a multiset closed under rho -> 1 - rho")]
    SymmetryRequired(Method),

    #[error("series mixes values from different sources, methods or precisions")]
    MixedSeries,

    #[error("series must hold lambda_1..lambda_N consecutively, found n = {found} at position {position}")]
    SeriesGap { position: usize, found: u32 },

    #[error("series has {len} values, need at least {min}")]
    SeriesTooShort { len: usize, min: usize },

    #[error("value for n = {n} has a non-negligible imaginary part")]
    NonReal { n: u32 },
}
