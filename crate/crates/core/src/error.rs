use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-contract input.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An operation that needs at least one cell was given an empty monomial.
    #[error("empty monomial")]
    EmptyMonomial,

    /// The tableau pair is not in the image of the bounded insertion map.
    #[error("tableau pair is not invertible: {0}")]
    NotInvertible(String),

    /// A notched tableau pair violates its structural invariants.
    #[error("invalid tableau pair: {0}")]
    InvalidTableau(String),

    /// A reconstructed definition produced contradictory data. This is the
    /// loud failure mode: it means one of the combinatorial rules encoded
    /// here has been falsified, not that the caller passed bad input.
    #[error("internal consistency violation: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
