use thiserror::Error;

/// Errors surfaced by sequence construction and verification.
///
/// `IntegralityViolation` and `Internal` signal arithmetic bugs, not bad
/// input: the recurrences are guaranteed to produce integers, and the
/// paired closed forms are guaranteed to agree. They are reported as
/// errors rather than panics so a verification run can name the exact
/// entry that went wrong.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{what}[{index}] is not an integer: got {value}")]
    IntegralityViolation {
        what: String,
        index: usize,
        value: String,
    },

    #[error("{what}[{index}] is not positive: got {value}")]
    PositivityViolation {
        what: String,
        index: usize,
        value: String,
    },

    #[error("composition enumeration is capped at n = {cap}, requested n = {n}")]
    CompositionCap { n: usize, cap: usize },

    #[error("2-adic valuation of zero is undefined")]
    ZeroValuation,

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
