use thiserror::Error;

use crate::checkers::Verdict;
use crate::model::{Fill, Side};

/// Errors raised by book construction and the matching algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate {side} id {id}")]
    DuplicateId { side: Side, id: u64 },

    #[error("order {id} is a {found} but was placed on the {expected} side")]
    WrongSide {
        expected: Side,
        found: Side,
        id: u64,
    },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("input is not a matching in the book: {0}")]
    NotAMatching(Box<Verdict>),

    #[error("fill is not matchable, no individually rational price exists: {0}")]
    NotMatchable(Fill),

    #[error("book too large to enumerate: {bids} bids, {asks} asks (limit {limit} per side)")]
    TooLarge {
        bids: usize,
        asks: usize,
        limit: usize,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
