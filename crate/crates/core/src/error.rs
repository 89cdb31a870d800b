//! Crate-wide error type.

use thiserror::Error;

/// Reason a single mark/unmark step is rejected during replay.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum StepError {
    #[error("vertex is already marked")]
    AlreadyMarked,
    #[error("vertex is not marked")]
    NotMarked,
    #[error("resulting set is not inward closed")]
    NotInwardClosed,
    #[error("vertex does not belong to the graph")]
    UnknownVertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("too many vertices: {got} (limit {max})")]
    TooManyVertices { got: usize, max: usize },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("empty label at position {0}")]
    EmptyLabel(usize),
    #[error("edge endpoint {0:?} does not name a vertex")]
    DanglingEdge(String),
    #[error("self-loop on {0:?}")]
    SelfLoop(String),
    #[error("duplicate edge {0:?} -> {1:?}")]
    DuplicateEdge(String, String),
    #[error("edge relation contains a directed cycle")]
    CycleDetected,
    #[error("cannot parse weight {0:?}: expected an integer, finite decimal, or num/den fraction")]
    BadWeight(String),
    #[error("ordering is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("illegal step {index}: {reason}")]
    IllegalStep { index: usize, reason: StepError },
    #[error("step {index}: marked set has negative weight")]
    NegativeSet { index: usize },
    #[error("sequence does not end with every vertex marked")]
    NotFull,
    #[error("{what} is {got}, above the cap {max}")]
    CapExceeded {
        what: &'static str,
        got: usize,
        max: usize,
    },
    #[error("target set is not inward closed or has negative weight")]
    InvalidTarget,
    #[error("classes are unbalanced: |A| = {0}, |B| = {1}")]
    Unbalanced(usize, usize),
    #[error("bad k: {0}")]
    BadK(String),
    #[error("target class size {target} is below the current size {current}")]
    BadTarget { target: usize, current: usize },
    #[error("selected sets are not independent in the source graph")]
    NotIndependent,
    #[error("selected sets have size {got}, expected {expected}")]
    WrongSize { expected: usize, got: usize },
    #[error("ordering is not a valid non-negative topological ordering of the reduced graph")]
    InvalidOrdering,
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("witness extraction failed: {0}")]
    ExtractionFailed(String),
    #[error("no normal-form sequence exists for a reachable target; the normal-form guarantee is violated")]
    PropositionGap,
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("{0}")]
    BadInput(String),
}
