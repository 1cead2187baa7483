use thiserror::Error;

use crate::partition::DeficiencyCertificate;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("ground set of {n} elements exceeds the supported maximum {max}")]
    GroundTooLarge { n: usize, max: usize },

    #[error("element {element} is a loop: its singleton set is dependent")]
    LoopDetected { element: usize },

    #[error("malformed matroid description: {0}")]
    MalformedSpec(String),

    #[error("element {element} lies outside the restriction domain")]
    OutOfRestriction { element: usize },

    #[error("the given set is not independent")]
    NotIndependent,

    #[error("element {element} is already covered by the partition")]
    NotUncovered { element: usize },

    #[error("{what} of size {size} is too large for exhaustive search (limit {max})")]
    TooLarge { what: &'static str, size: u64, max: u64 },

    #[error("malformed list assignment: {0}")]
    MalformedLists(String),

    /// A coloring or partition provably does not exist; the certificate is a
    /// set `X` whose slot ranks sum below `|X|`.
    #[error("no valid coloring exists; deficiency certificate on {} elements", .0.witness_size)]
    Infeasible(Box<DeficiencyCertificate>),

    #[error("graph arboricity exceeds the requested number of forests")]
    ArboricityTooHigh(Box<DeficiencyCertificate>),

    #[error("game state space too large: {0}")]
    StateSpaceTooLarge(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("invalid JSON: {0}")]
    Json(String),
}
