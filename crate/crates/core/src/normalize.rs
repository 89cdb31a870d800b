//! Constructive sequence normalization: compress a mark-unmark sequence to
//! first markings, find and apply shortenings, and loop to a guaranteed
//! non-negative mark sequence or a normal-form partial sequence.
//!
//! The key fact driving the loop: if no shortening exists (no step has a
//! non-positive outward-closed subset of its unmarked set), then the
//! first-markings compression of a non-negative sequence is itself
//! non-negative, because each compressed prefix equals some `M_j ∪ U_j`
//! with `w(M_j) >= 0` and `w(U_j) > 0` (or `U_j` empty). Each shortening
//! removes at least two steps, so the loop terminates.

use itertools::Itertools;

use crate::error::Error;
use crate::graph::{VertexId, VertexSet, WeightedDag};
use crate::sequence::{
    is_normal_form, replay, unmarked_sets, MarkSequence, MarkUnmarkSequence, Step, StepOp,
};
use crate::solver;

/// Cap on the size of any unmarked set scanned for shortenings; the scan
/// enumerates subsets.
pub const MAX_UNMARKED_SCAN: usize = 24;

/// A shortening opportunity: at step `step` (counting from 1), `set` is a
/// nonempty subset of the unmarked set `U_step` that is `U_step`-outward
/// closed with non-positive weight, inclusion-minimal among such subsets.
/// Deleting every earlier step that touches `set` yields a strictly
/// shorter valid sequence with the same endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shortening {
    pub step: usize,
    pub set: VertexSet,
}

/// Orders the ever-marked vertices by their first marking step. The result
/// always has inward-closed prefixes; its prefix weights are *not*
/// guaranteed non-negative.
pub fn compress_first_markings(
    dag: &WeightedDag,
    seq: &MarkUnmarkSequence,
) -> Result<MarkSequence, Error> {
    replay(dag, &seq.steps, false)?;
    let mut seen = VertexSet::EMPTY;
    let mut order = Vec::new();
    for step in &seq.steps {
        if step.op == StepOp::Mark && !seen.contains(step.v) {
            seen.insert(step.v);
            order.push(step.v);
        }
    }
    let compressed = MarkSequence::new(order);
    debug_assert!(
        replay(dag, &compressed.to_steps(), false).is_ok(),
        "first-markings order must keep every prefix inward closed"
    );
    Ok(compressed)
}

fn subsets_by_cardinality(members: &[VertexId]) -> impl Iterator<Item = VertexSet> + '_ {
    (1..=members.len())
        .flat_map(move |size| members.iter().copied().combinations(size))
        .map(VertexSet::from_iter)
}

/// Scans steps in ascending order; for each step enumerates nonempty
/// subsets of the unmarked set by ascending cardinality (ties in ordinal
/// order) and returns the first that is outward closed with weight <= 0.
/// The ascending-cardinality scan makes the hit inclusion-minimal.
pub fn find_shortening(
    dag: &WeightedDag,
    seq: &MarkUnmarkSequence,
) -> Result<Option<Shortening>, Error> {
    let us = unmarked_sets(dag, &seq.steps)?;
    for (idx, &unmarked) in us.iter().enumerate() {
        if unmarked.is_empty() {
            continue;
        }
        if unmarked.len() > MAX_UNMARKED_SCAN {
            return Err(Error::CapExceeded {
                what: "unmarked-set size",
                got: unmarked.len(),
                max: MAX_UNMARKED_SCAN,
            });
        }
        let members: Vec<VertexId> = unmarked.iter().collect();
        for candidate in subsets_by_cardinality(&members) {
            if !dag.set_weight(candidate).is_positive()
                && dag.is_outward_closed_rel(candidate, unmarked)?
            {
                return Ok(Some(Shortening { step: idx + 1, set: candidate }));
            }
        }
    }
    Ok(None)
}

/// Deletes every step up to and including step `s.step` whose vertex lies
/// in `s.set`. (A step at `s.step` itself touching the set can only be an
/// unmark; keeping it would orphan that unmark.) The result replays, keeps
/// the endpoint, stays non-negative if the input was, and is at least two
/// steps shorter.
pub fn apply_shortening(
    dag: &WeightedDag,
    seq: &MarkUnmarkSequence,
    s: &Shortening,
) -> Result<MarkUnmarkSequence, Error> {
    let us = unmarked_sets(dag, &seq.steps)?;
    let valid = s.step >= 1
        && s.step <= seq.len()
        && !s.set.is_empty()
        && s.set.is_subset_of(us[s.step - 1])
        && dag.is_outward_closed_rel(s.set, us[s.step - 1])?
        && !dag.set_weight(s.set).is_positive();
    if !valid {
        return Err(Error::PreconditionViolated(
            "shortening does not match the sequence".to_string(),
        ));
    }
    let before = replay(dag, &seq.steps, false)?;
    let final_before = before.last().copied().unwrap_or(VertexSet::EMPTY);

    let steps: Vec<Step> = seq
        .steps
        .iter()
        .enumerate()
        .filter(|(idx, step)| *idx + 1 > s.step || !s.set.contains(step.v))
        .map(|(_, step)| *step)
        .collect();
    let shortened = MarkUnmarkSequence::new(steps);

    let internal = |msg: &str| Error::InternalInvariantViolation(msg.to_string());
    if shortened.len() + 2 > seq.len() {
        return Err(internal("shortening removed fewer than two steps"));
    }
    let after = replay(dag, &shortened.steps, false)
        .map_err(|_| internal("shortened sequence fails to replay"))?;
    let final_after = after.last().copied().unwrap_or(VertexSet::EMPTY);
    if final_after != final_before {
        return Err(internal("shortening changed the final marked set"));
    }
    Ok(shortened)
}

/// Applies shortenings until none remains, returning the stable sequence
/// and the shortenings applied in order.
pub fn shorten_to_fixpoint(
    dag: &WeightedDag,
    seq: &MarkUnmarkSequence,
) -> Result<(MarkUnmarkSequence, Vec<Shortening>), Error> {
    let mut current = seq.clone();
    let mut applied = Vec::new();
    while let Some(s) = find_shortening(dag, &current)? {
        current = apply_shortening(dag, &current, &s)?;
        applied.push(s);
    }
    Ok((current, applied))
}

/// Converts a full non-negative mark-unmark sequence into a non-negative
/// mark sequence: shorten to a fixpoint, then take first markings. The
/// output always passes the ordering validator.
pub fn to_mark_sequence(
    dag: &WeightedDag,
    seq: &MarkUnmarkSequence,
) -> Result<MarkSequence, Error> {
    let sets = replay(dag, &seq.steps, true)?;
    if sets.last().copied().unwrap_or(VertexSet::EMPTY) != dag.full_set() {
        return Err(Error::NotFull);
    }
    let (stable, _) = shorten_to_fixpoint(dag, seq)?;
    let compressed = compress_first_markings(dag, &stable)?;
    let verdict = dag.validate_nn_ordering(&compressed.to_ordering())?;
    if !verdict.is_valid() {
        return Err(Error::InternalInvariantViolation(format!(
            "compressed sequence fails validation ({verdict:?}) after the shortening loop"
        )));
    }
    Ok(compressed)
}

/// Normalizes a non-negative partial sequence into normal form (all marks,
/// then all unmarks) with the same final marked set. The constructed
/// candidate — first markings followed by unmarks of the vertices that do
/// not survive, in first-unmark order — is validated; if it fails, an
/// exhaustive search takes over, and if that also fails the normal-form
/// guarantee itself is violated, which is reported loudly.
pub fn normalize_partial(
    dag: &WeightedDag,
    seq: &MarkUnmarkSequence,
) -> Result<MarkUnmarkSequence, Error> {
    let sets = replay(dag, &seq.steps, true)?;
    let target = sets.last().copied().unwrap_or(VertexSet::EMPTY);
    let (stable, _) = shorten_to_fixpoint(dag, seq)?;

    let marks = compress_first_markings(dag, &stable)?;
    let mut first_unmark: Vec<Option<usize>> = vec![None; dag.n()];
    for (idx, step) in stable.steps.iter().enumerate() {
        if step.op == StepOp::Unmark && first_unmark[step.v.index()].is_none() {
            first_unmark[step.v.index()] = Some(idx);
        }
    }
    let marked_ever: VertexSet = marks.order.iter().copied().collect();
    let mut dropped: Vec<VertexId> = marked_ever.minus(target).iter().collect();
    dropped.sort_by_key(|v| {
        first_unmark[v.index()].expect("a vertex outside the final set was unmarked at least once")
    });

    let mut steps = marks.to_steps();
    steps.extend(dropped.into_iter().map(Step::unmark));
    let candidate = MarkUnmarkSequence::new(steps);

    let candidate_ok = match replay(dag, &candidate.steps, true) {
        Ok(sets) => sets.last().copied().unwrap_or(VertexSet::EMPTY) == target,
        Err(_) => false,
    };
    if candidate_ok {
        debug_assert!(is_normal_form(&candidate.steps));
        return Ok(candidate);
    }

    match solver::find_normal_form_to_target(dag, target)? {
        Some(found) => Ok(found),
        None => Err(Error::PropositionGap),
    }
}

/// Lists every pair `(step, subset)` where the subset of the step's
/// unmarked set is nonempty, outward closed, and of non-positive weight.
/// An empty report certifies that every outward-closed subset of every
/// unmarked set has strictly positive weight.
pub fn check_claim1(
    dag: &WeightedDag,
    seq: &MarkUnmarkSequence,
) -> Result<Vec<(usize, VertexSet)>, Error> {
    let us = unmarked_sets(dag, &seq.steps)?;
    let mut report = Vec::new();
    for (idx, &unmarked) in us.iter().enumerate() {
        if unmarked.is_empty() {
            continue;
        }
        if unmarked.len() > MAX_UNMARKED_SCAN {
            return Err(Error::CapExceeded {
                what: "unmarked-set size",
                got: unmarked.len(),
                max: MAX_UNMARKED_SCAN,
            });
        }
        let members: Vec<VertexId> = unmarked.iter().collect();
        for candidate in subsets_by_cardinality(&members) {
            if !dag.set_weight(candidate).is_positive()
                && dag.is_outward_closed_rel(candidate, unmarked)?
            {
                report.push((idx + 1, candidate));
            }
        }
    }
    Ok(report)
}
