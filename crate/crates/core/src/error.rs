//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A group constructor was given an order that is not representable.
    #[error("invalid group order: {0}")]
    InvalidOrder(String),

    /// A finite field was requested over a characteristic that is not an odd prime.
    #[error("invalid field characteristic: {0}")]
    InvalidCharacteristic(String),

    /// An even extension degree was required but an odd one was supplied.
    #[error("invalid extension degree: {0}")]
    Parity(String),

    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A generator set contained the group identity.
    #[error("generator set contains the identity element")]
    IdentityInSet,

    /// A generator set was not closed under negation.
    #[error("generator set is not symmetric: missing inverse of {element}")]
    Asymmetry { element: String },

    /// A graph exceeded a size limit (vertex cap, serialization cap).
    #[error("size error: {0}")]
    Size(String),

    /// No prime usable by the residue construction exists below the required bound.
    #[error("no valid prime for order {n}: need a prime p >= 5 with 8*p^2 <= n")]
    NoValidPrime { n: u64 },

    /// The group has elements of order 2 or 3, violating a construction precondition.
    #[error("group of order {order} has elements of order 2 or 3")]
    SmallOrder { order: u64 },

    /// An evasion query was made for a robber standing on a cop.
    #[error("robber at vertex {vertex} is already captured")]
    AlreadyCaptured { vertex: u32 },

    /// A pluggable strategy produced an illegal move.
    #[error("strategy fault in {strategy}: {reason}")]
    StrategyFault { strategy: String, reason: String },

    /// A certificate rule was requested without its premise being verified.
    #[error("unproven premise: {0}")]
    UnprovenPremise(String),

    /// Internal invariant violation; signals a bug or a failed premise upstream.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    /// Malformed serialized graph input.
    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
