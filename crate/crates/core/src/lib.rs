#![forbid(unsafe_code)]
//! Non-negative topological orderings of vertex-weighted DAGs.
//!
//! A topological ordering is *non-negative* when every prefix has total
//! weight >= 0. The crate covers the whole pipeline around that notion:
//!
//! - [`graph`] — exact-rational weights, bitmask vertex sets, weighted
//!   DAGs with closure predicates and ordering validators, bipartite
//!   graphs, and 0/1 matrices;
//! - [`sequence`] — mark and mark-unmark sequences with replay semantics,
//!   derived marked/unmarked sets, and induced orderings;
//! - [`normalize`] — constructive conversion of non-negative mark-unmark
//!   sequences into non-negative mark sequences, and of partial sequences
//!   into normal form (all marks before all unmarks);
//! - [`solver`] — exact exponential-time existence and reachability
//!   deciders with brute-force enumeration for cross-checks;
//! - [`oracle`] — desk-scale deciders for the bipartite problems: unique
//!   perfect matchings, extendability, matrix triangularization, induced
//!   subgraphs, and balanced independent sets;
//! - [`reduce`] — instance and witness translators between all of the
//!   above;
//! - [`json`] — file formats; [`generator`] — seeded deterministic
//!   instance generators.
//!
//! Weights are arbitrary-precision rationals, so every verdict is exact.
//! All searches are exponential-time by nature and enforce explicit
//! instance caps (vertex sets are 64-bit masks; most solvers cap far
//! lower).

pub mod error;
pub mod generator;
pub mod graph;
pub mod json;
pub mod normalize;
pub mod oracle;
pub mod reduce;
pub mod sequence;
pub mod solver;

pub use error::Error;
pub use graph::{
    BipartiteGraph, BoolMatrix, TopologicalOrdering, Verdict, VertexId, VertexSet, Weight,
    WeightedDag,
};
pub use sequence::{MarkSequence, MarkUnmarkSequence, Step, StepOp};
