//! Mark and mark-unmark sequences: replay semantics, derived marked sets
//! `M_i` and unmarked sets `U_i`, induced orderings, and the normal-form
//! predicate.
//!
//! A mark-unmark sequence alternates freely between marking an unmarked
//! vertex and unmarking a marked one, subject to every intermediate marked
//! set staying inward closed. A sequence is *full* when it ends with every
//! vertex marked and *non-negative* when every marked set has weight >= 0.

use crate::error::{Error, StepError};
use crate::graph::{TopologicalOrdering, VertexId, VertexSet, WeightedDag, Weight};

use num::{BigRational, Signed, Zero};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum StepOp {
    Mark,
    Unmark,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub op: StepOp,
    pub v: VertexId,
}

impl Step {
    pub fn mark(v: VertexId) -> Self {
        Step { op: StepOp::Mark, v }
    }

    pub fn unmark(v: VertexId) -> Self {
        Step { op: StepOp::Unmark, v }
    }
}

/// A list of mark/unmark steps. Whether the sequence is *full* (final
/// marked set equals the whole vertex set) is a validation refinement
/// checked per operation, not a separate type.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MarkUnmarkSequence {
    pub steps: Vec<Step>,
}

impl MarkUnmarkSequence {
    pub fn new(steps: Vec<Step>) -> Self {
        MarkUnmarkSequence { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Marked set after the last step (requires a successful replay).
    pub fn final_marked(&self, dag: &WeightedDag) -> Result<VertexSet, Error> {
        let sets = replay(dag, &self.steps, false)?;
        Ok(sets.last().copied().unwrap_or(VertexSet::EMPTY))
    }

    pub fn is_full(&self, dag: &WeightedDag) -> Result<bool, Error> {
        Ok(self.final_marked(dag)? == dag.full_set())
    }
}

/// A mark-only sequence; equivalently the ordering in which vertices are
/// marked. Each prefix of a valid mark sequence is inward closed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MarkSequence {
    pub order: Vec<VertexId>,
}

impl MarkSequence {
    pub fn new(order: Vec<VertexId>) -> Self {
        MarkSequence { order }
    }

    pub fn to_steps(&self) -> Vec<Step> {
        self.order.iter().map(|&v| Step::mark(v)).collect()
    }

    pub fn to_sequence(&self) -> MarkUnmarkSequence {
        MarkUnmarkSequence::new(self.to_steps())
    }

    pub fn to_ordering(&self) -> TopologicalOrdering {
        TopologicalOrdering::new(self.order.clone())
    }
}

/// Replays the steps and returns the marked sets `M_1..M_t`. Fails at the
/// earliest step that re-marks a marked vertex, unmarks an unmarked one,
/// leaves a set that is not inward closed, or (when
/// `require_nonnegative`) a set of negative weight.
pub fn replay(
    dag: &WeightedDag,
    steps: &[Step],
    require_nonnegative: bool,
) -> Result<Vec<VertexSet>, Error> {
    let mut marked = VertexSet::EMPTY;
    let mut weight = BigRational::zero();
    let mut sets = Vec::with_capacity(steps.len());
    for (index, step) in steps.iter().enumerate() {
        let illegal = |reason| Error::IllegalStep { index, reason };
        if step.v.index() >= dag.n() {
            return Err(illegal(StepError::UnknownVertex));
        }
        match step.op {
            StepOp::Mark => {
                if marked.contains(step.v) {
                    return Err(illegal(StepError::AlreadyMarked));
                }
                // {v} ∪ M is inward closed iff all of v's in-neighbors are
                // already marked.
                if dag.in_mask(step.v.index()) & !marked.bits() != 0 {
                    return Err(illegal(StepError::NotInwardClosed));
                }
                marked.insert(step.v);
                weight += dag.weight(step.v).ratio();
            }
            StepOp::Unmark => {
                if !marked.contains(step.v) {
                    return Err(illegal(StepError::NotMarked));
                }
                let rest = marked.without(step.v);
                // Removing v breaks inward closure iff v still feeds a
                // marked vertex.
                if dag.out_mask(step.v.index()) & rest.bits() != 0 {
                    return Err(illegal(StepError::NotInwardClosed));
                }
                marked = rest;
                weight -= dag.weight(step.v).ratio();
            }
        }
        if require_nonnegative && weight.is_negative() {
            return Err(Error::NegativeSet { index });
        }
        sets.push(marked);
    }
    Ok(sets)
}

/// Weight of each marked set, in step order.
pub fn marked_weights(dag: &WeightedDag, steps: &[Step]) -> Result<Vec<Weight>, Error> {
    let sets = replay(dag, steps, false)?;
    Ok(sets.into_iter().map(|s| dag.set_weight(s)).collect())
}

/// The unmarked sets `U_i`: vertices marked at some earlier step but not
/// marked after step `i`. Entry `i` (0-based) corresponds to the state
/// after step `i+1`.
pub fn unmarked_sets(dag: &WeightedDag, steps: &[Step]) -> Result<Vec<VertexSet>, Error> {
    let sets = replay(dag, steps, false)?;
    let mut ever = VertexSet::EMPTY;
    let mut out = Vec::with_capacity(sets.len());
    for &marked in &sets {
        let unmarked = ever.minus(marked);
        // Every edge between U_i and M_i points into U_i; this follows
        // from M_i being inward closed and is asserted as a sanity check.
        assert!(
            dag.is_outward_closed_rel(unmarked, unmarked.union(marked))
                .expect("U is a subset of M ∪ U"),
            "unmarked set must be outward closed relative to M ∪ U"
        );
        out.push(unmarked);
        ever = ever.union(marked);
    }
    Ok(out)
}

/// Orders the vertices by the last step in which they were marked. The
/// sequence must be full; the result is always a topological ordering.
pub fn induced_ordering(dag: &WeightedDag, steps: &[Step]) -> Result<TopologicalOrdering, Error> {
    let sets = replay(dag, steps, false)?;
    let final_marked = sets.last().copied().unwrap_or(VertexSet::EMPTY);
    if final_marked != dag.full_set() {
        return Err(Error::NotFull);
    }
    let mut last_mark = vec![0usize; dag.n()];
    for (index, step) in steps.iter().enumerate() {
        if step.op == StepOp::Mark {
            last_mark[step.v.index()] = index;
        }
    }
    let mut order: Vec<VertexId> = dag.vertices().collect();
    order.sort_by_key(|v| last_mark[v.index()]);
    Ok(TopologicalOrdering::new(order))
}

/// True iff no mark step follows any unmark step.
pub fn is_normal_form(steps: &[Step]) -> bool {
    let mut unmark_seen = false;
    for step in steps {
        match step.op {
            StepOp::Unmark => unmark_seen = true,
            StepOp::Mark if unmark_seen => return false,
            StepOp::Mark => {}
        }
    }
    true
}
