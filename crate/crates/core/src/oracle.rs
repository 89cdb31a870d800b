//! Desk-scale exact deciders for the bipartite side of the reduction
//! chain: perfect-matching counting, unique-perfect-matching
//! certification via triangular orderings, extendability to a unique
//! perfect matching, matrix triangularizability, induced-subgraph
//! extendability, and balanced independent sets.
//!
//! All deciders are exponential-time by design and guarded by explicit
//! caps. Witnesses are deterministic: searches fill positions from the
//! last backwards and try candidates in ascending index order.

use std::collections::HashSet;

use itertools::Itertools;

use crate::error::Error;
use crate::graph::{BipartiteGraph, BoolMatrix};

pub const MAX_COUNT_N: usize = 12;
pub const MAX_UNIQUE_PM_N: usize = 32;
pub const MAX_UPM_EXTENSION_N: usize = 12;
pub const MAX_INDUCED_N: usize = 9;
pub const MAX_BIS_N: usize = 16;

/// Class orderings with an edge-free lower triangle: there is no edge
/// between the A-vertex at position `i` and the B-vertex at position `j`
/// whenever `j < i`. Entries are class indices of the graph the witness
/// certifies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularWitness {
    pub order_a: Vec<usize>,
    pub order_b: Vec<usize>,
}

impl TriangularWitness {
    /// Checks shape (equal lengths, distinct in-range entries) and the
    /// lower-triangle invariant against the graph's edges. The orders need
    /// not cover whole classes; callers enforce coverage where required.
    pub fn check(&self, bg: &BipartiteGraph) -> Result<(), Error> {
        if self.order_a.len() != self.order_b.len() {
            return Err(Error::InvalidWitness(
                "class orders have different lengths".to_string(),
            ));
        }
        let distinct_in_range = |order: &[usize], limit: usize| {
            let mut seen = HashSet::new();
            order.iter().all(|&i| i < limit && seen.insert(i))
        };
        if !distinct_in_range(&self.order_a, bg.n_a())
            || !distinct_in_range(&self.order_b, bg.n_b())
        {
            return Err(Error::InvalidWitness(
                "orders must list distinct class indices".to_string(),
            ));
        }
        for (i, &a) in self.order_a.iter().enumerate() {
            for &b in &self.order_b[..i] {
                if bg.has_edge(a, b) {
                    return Err(Error::InvalidWitness(format!(
                        "edge [{:?}, {:?}] lies in the lower triangle",
                        bg.label_a(a),
                        bg.label_b(b)
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A unique perfect matching together with the triangular ordering that
/// certifies uniqueness; the matching pairs the orders positionally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniquePmCertificate {
    pub witness: TriangularWitness,
    pub matching: Vec<(usize, usize)>,
}

fn require_balanced(bg: &BipartiteGraph) -> Result<usize, Error> {
    if !bg.is_balanced() {
        return Err(Error::Unbalanced(bg.n_a(), bg.n_b()));
    }
    Ok(bg.n_a())
}

fn require_cap(n: usize, max: usize) -> Result<(), Error> {
    if n > max {
        return Err(Error::CapExceeded { what: "class size", got: n, max });
    }
    Ok(())
}

/// Exact number of perfect matchings, by subset dynamic programming over
/// class B (the permanent of the biadjacency matrix).
pub fn count_perfect_matchings(bg: &BipartiteGraph) -> Result<u64, Error> {
    let n = require_balanced(bg)?;
    require_cap(n, MAX_COUNT_N)?;
    if n == 0 {
        return Ok(1);
    }
    let size = 1usize << n;
    let mut dp = vec![0u64; size];
    dp[0] = 1;
    for mask in 1..size {
        let row = mask.count_ones() as usize - 1;
        let mut total = 0u64;
        let mut rest = bg.adj_a(row) & mask as u64;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            total += dp[mask ^ (1 << b)];
        }
        dp[mask] = total;
    }
    Ok(dp[size - 1])
}

/// Certifies a unique perfect matching by degree-one elimination from the
/// last position backwards: repeatedly take a class-A vertex with exactly
/// one remaining neighbor (smallest label on ties), pair it at the highest
/// unfilled position, and remove both. Succeeds fully iff the graph has a
/// unique perfect matching.
pub fn unique_pm_ordering(bg: &BipartiteGraph) -> Result<Option<UniquePmCertificate>, Error> {
    let n = require_balanced(bg)?;
    require_cap(n, MAX_UNIQUE_PM_N)?;
    let mut rem_a: Vec<usize> = (0..n).collect();
    let mut rem_b_mask: u64 = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let mut order_a = vec![0usize; n];
    let mut order_b = vec![0usize; n];
    for pos in (0..n).rev() {
        let mut pick: Option<(usize, usize)> = None;
        for (slot, &a) in rem_a.iter().enumerate() {
            let degree = (bg.adj_a(a) & rem_b_mask).count_ones();
            match degree {
                0 => return Ok(None), // no perfect matching at all
                1 => {
                    let better = match pick {
                        None => true,
                        Some((best_slot, _)) => bg.label_a(a) < bg.label_a(rem_a[best_slot]),
                    };
                    if better {
                        pick = Some((slot, a));
                    }
                }
                _ => {}
            }
        }
        let Some((slot, a)) = pick else {
            return Ok(None); // every remaining vertex has degree >= 2: not unique
        };
        let b = (bg.adj_a(a) & rem_b_mask).trailing_zeros() as usize;
        order_a[pos] = a;
        order_b[pos] = b;
        rem_a.swap_remove(slot);
        rem_b_mask &= !(1 << b);
    }
    let witness = TriangularWitness { order_a, order_b };
    debug_assert!(witness.check(bg).is_ok());
    let matching = witness
        .order_a
        .iter()
        .copied()
        .zip(witness.order_b.iter().copied())
        .collect();
    Ok(Some(UniquePmCertificate { witness, matching }))
}

/// Decides whether edges can be added to make the perfect matching unique,
/// via the equivalent triangular-ordering formulation: orderings exist
/// with an edge-free lower triangle (the missing diagonal edges are then
/// added). Backtracking fills positions from the last; a candidate A-vertex
/// must have every remaining neighbor inside the one B slot chosen with
/// it. Failed (remaining-A, remaining-B) pairs are memoized.
pub fn decide_upm_extension(bg: &BipartiteGraph) -> Result<Option<TriangularWitness>, Error> {
    let n = require_balanced(bg)?;
    require_cap(n, MAX_UPM_EXTENSION_N)?;

    struct Search<'g> {
        bg: &'g BipartiteGraph,
        failed: HashSet<(u64, u64)>,
        order_a: Vec<usize>,
        order_b: Vec<usize>,
    }

    impl Search<'_> {
        fn fill(&mut self, rem_a: u64, rem_b: u64) -> bool {
            if rem_a == 0 {
                return true;
            }
            if self.failed.contains(&(rem_a, rem_b)) {
                return false;
            }
            let mut candidates = rem_a;
            while candidates != 0 {
                let a = candidates.trailing_zeros() as usize;
                candidates &= candidates - 1;
                let neighbors = self.bg.adj_a(a) & rem_b;
                if neighbors == 0 {
                    let mut slots = rem_b;
                    while slots != 0 {
                        let b = slots.trailing_zeros() as usize;
                        slots &= slots - 1;
                        if self.descend(rem_a, rem_b, a, b) {
                            return true;
                        }
                    }
                } else if neighbors.count_ones() == 1 {
                    let b = neighbors.trailing_zeros() as usize;
                    if self.descend(rem_a, rem_b, a, b) {
                        return true;
                    }
                }
            }
            self.failed.insert((rem_a, rem_b));
            false
        }

        fn descend(&mut self, rem_a: u64, rem_b: u64, a: usize, b: usize) -> bool {
            self.order_a.push(a);
            self.order_b.push(b);
            if self.fill(rem_a & !(1 << a), rem_b & !(1 << b)) {
                return true;
            }
            self.order_a.pop();
            self.order_b.pop();
            false
        }
    }

    let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let mut search = Search {
        bg,
        failed: HashSet::new(),
        order_a: Vec::with_capacity(n),
        order_b: Vec::with_capacity(n),
    };
    if !search.fill(full, full) {
        return Ok(None);
    }
    // Positions were filled from the back.
    search.order_a.reverse();
    search.order_b.reverse();
    let witness = TriangularWitness { order_a: search.order_a, order_b: search.order_b };
    debug_assert!(witness.check(bg).is_ok());
    Ok(Some(witness))
}

/// Decides whether rows and columns can be reordered to an upper-triangular
/// matrix, by viewing 1-entries as edges (rows are class A) and delegating
/// to the unique-matching extension decider. Returns `(row_perm, col_perm)`
/// where entry `i` is the original row/column placed at position `i`.
pub fn decide_triangularizable(
    matrix: &BoolMatrix,
) -> Result<Option<(Vec<usize>, Vec<usize>)>, Error> {
    let n = matrix.n();
    require_cap(n, MAX_UPM_EXTENSION_N)?;
    let labels_a: Vec<String> = (0..n).map(|i| format!("row{i}")).collect();
    let labels_b: Vec<String> = (0..n).map(|j| format!("col{j}")).collect();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if matrix.get(i, j) {
                pairs.push((i, j));
            }
        }
    }
    let bg = BipartiteGraph::from_index_edges(labels_a, labels_b, pairs)?;
    Ok(decide_upm_extension(&bg)?.map(|w| (w.order_a, w.order_b)))
}

/// Decides whether some induced subgraph with `k` vertices per class is
/// extendable to a unique perfect matching. Iterates class subsets in
/// lexicographic order and returns the first success, with the witness
/// re-indexed to the input graph.
pub fn decide_induced_extension(
    bg: &BipartiteGraph,
    k: usize,
) -> Result<Option<(Vec<usize>, Vec<usize>, TriangularWitness)>, Error> {
    let n = require_balanced(bg)?;
    require_cap(n, MAX_INDUCED_N)?;
    if k > n {
        return Err(Error::BadK(format!("k = {k} exceeds the class size {n}")));
    }
    for sub_a in (0..n).combinations(k) {
        for sub_b in (0..n).combinations(k) {
            let induced = bg.induced(&sub_a, &sub_b)?;
            if let Some(local) = decide_upm_extension(&induced)? {
                let witness = TriangularWitness {
                    order_a: local.order_a.iter().map(|&i| sub_a[i]).collect(),
                    order_b: local.order_b.iter().map(|&j| sub_b[j]).collect(),
                };
                debug_assert!(witness.check(bg).is_ok());
                return Ok(Some((sub_a, sub_b, witness)));
            }
        }
    }
    Ok(None)
}

/// Finds a balanced independent set contributing `k` vertices to each
/// class (no edges between the chosen sides), lexicographically first, or
/// `None`.
pub fn decide_balanced_independent_set(
    bg: &BipartiteGraph,
    k: usize,
) -> Result<Option<(Vec<usize>, Vec<usize>)>, Error> {
    let n_a = bg.n_a();
    let n_b = bg.n_b();
    require_cap(n_a.max(n_b), MAX_BIS_N)?;
    if k > n_a.min(n_b) {
        return Err(Error::BadK(format!(
            "k = {k} exceeds the smaller class size {}",
            n_a.min(n_b)
        )));
    }
    for sub_a in (0..n_a).combinations(k) {
        let neighbor_mask: u64 = sub_a.iter().fold(0, |acc, &a| acc | bg.adj_a(a));
        for sub_b in (0..n_b).combinations(k) {
            if sub_b.iter().all(|&b| neighbor_mask & (1 << b) == 0) {
                return Ok(Some((sub_a, sub_b)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Complete 2x2 bipartite graph (the 4-cycle).
    fn bip_c4() -> BipartiteGraph {
        BipartiteGraph::new(
            vec!["a1".into(), "a2".into()],
            vec!["b1".into(), "b2".into()],
            vec![
                ("a1".into(), "b1".into()),
                ("a1".into(), "b2".into()),
                ("a2".into(), "b1".into()),
                ("a2".into(), "b2".into()),
            ],
        )
        .unwrap()
    }

    /// Path on four vertices: edges a1b1, a1b2, a2b2.
    fn bip_p4() -> BipartiteGraph {
        BipartiteGraph::new(
            vec!["a1".into(), "a2".into()],
            vec!["b1".into(), "b2".into()],
            vec![
                ("a1".into(), "b1".into()),
                ("a1".into(), "b2".into()),
                ("a2".into(), "b2".into()),
            ],
        )
        .unwrap()
    }

    fn bip_k11() -> BipartiteGraph {
        BipartiteGraph::new(
            vec!["a1".into()],
            vec!["b1".into()],
            vec![("a1".into(), "b1".into())],
        )
        .unwrap()
    }

    fn empty_bg(n: usize) -> BipartiteGraph {
        BipartiteGraph::new(
            (0..n).map(|i| format!("a{i}")).collect(),
            (0..n).map(|i| format!("b{i}")).collect(),
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn counts_perfect_matchings() {
        assert_eq!(count_perfect_matchings(&bip_c4()).unwrap(), 2);
        assert_eq!(count_perfect_matchings(&bip_p4()).unwrap(), 1);
        assert_eq!(count_perfect_matchings(&empty_bg(3)).unwrap(), 0);
        assert_eq!(count_perfect_matchings(&empty_bg(0)).unwrap(), 1);
    }

    #[test]
    fn count_rejects_unbalanced_graphs() {
        let bg = BipartiteGraph::new(vec!["a".into()], vec![], vec![]).unwrap();
        assert_eq!(count_perfect_matchings(&bg).unwrap_err(), Error::Unbalanced(1, 0));
    }

    #[test]
    fn unique_pm_elimination_certifies_the_path() {
        let cert = unique_pm_ordering(&bip_p4()).unwrap().unwrap();
        assert_eq!(cert.witness.order_a, vec![0, 1]);
        assert_eq!(cert.witness.order_b, vec![0, 1]);
        assert_eq!(cert.matching, vec![(0, 0), (1, 1)]);
        cert.witness.check(&bip_p4()).unwrap();
    }

    #[test]
    fn unique_pm_rejects_the_cycle_and_empty_edge_sets() {
        assert_eq!(unique_pm_ordering(&bip_c4()).unwrap(), None);
        assert_eq!(unique_pm_ordering(&empty_bg(2)).unwrap(), None);
    }

    #[test]
    fn unique_pm_of_the_empty_graph_is_the_empty_certificate() {
        let cert = unique_pm_ordering(&empty_bg(0)).unwrap().unwrap();
        assert!(cert.witness.order_a.is_empty());
        assert!(cert.matching.is_empty());
    }

    #[test]
    fn upm_extension_examples() {
        let w = decide_upm_extension(&bip_k11()).unwrap().unwrap();
        assert_eq!(w.order_a, vec![0]);
        assert_eq!(w.order_b, vec![0]);
        assert_eq!(decide_upm_extension(&bip_c4()).unwrap(), None);
        // Removing any single edge from the 2x2 complete graph makes it
        // extendable: put the missing pair in the lower triangle.
        for missing in 0..4 {
            let edges: Vec<(String, String)> = [
                ("a1", "b1"),
                ("a1", "b2"),
                ("a2", "b1"),
                ("a2", "b2"),
            ]
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != missing)
            .map(|(_, (a, b))| (a.to_string(), b.to_string()))
            .collect();
            let bg = BipartiteGraph::new(
                vec!["a1".into(), "a2".into()],
                vec!["b1".into(), "b2".into()],
                edges,
            )
            .unwrap();
            let w = decide_upm_extension(&bg).unwrap();
            assert!(w.is_some(), "missing edge {missing} should be extendable");
            w.unwrap().check(&bg).unwrap();
        }
    }

    #[test]
    fn triangularizable_examples() {
        let identity = BoolMatrix::new(vec![vec![1, 0], vec![0, 1]]).unwrap();
        let (rows, cols) = decide_triangularizable(&identity).unwrap().unwrap();
        for i in 0..2 {
            for j in 0..i {
                assert!(!identity.get(rows[i], cols[j]));
            }
        }
        let ones = BoolMatrix::new(vec![vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(decide_triangularizable(&ones).unwrap(), None);
        let mixed = BoolMatrix::new(vec![vec![0, 1], vec![1, 1]]).unwrap();
        let (rows, cols) = decide_triangularizable(&mixed).unwrap().unwrap();
        for i in 0..2 {
            for j in 0..i {
                assert!(!mixed.get(rows[i], cols[j]), "rows {rows:?} cols {cols:?}");
            }
        }
    }

    #[test]
    fn induced_extension_examples() {
        let c4 = bip_c4();
        let (sa, sb, _) = decide_induced_extension(&c4, 0).unwrap().unwrap();
        assert!(sa.is_empty() && sb.is_empty());
        assert!(decide_induced_extension(&c4, 1).unwrap().is_some());
        assert_eq!(decide_induced_extension(&c4, 2).unwrap(), None);
        assert!(matches!(
            decide_induced_extension(&c4, 3),
            Err(Error::BadK(_))
        ));
    }

    #[test]
    fn balanced_independent_set_examples() {
        assert_eq!(decide_balanced_independent_set(&bip_c4(), 1).unwrap(), None);
        assert_eq!(
            decide_balanced_independent_set(&bip_p4(), 1).unwrap(),
            Some((vec![1], vec![0]))
        );
        assert_eq!(
            decide_balanced_independent_set(&bip_c4(), 0).unwrap(),
            Some((vec![], vec![]))
        );
        assert!(matches!(
            decide_balanced_independent_set(&bip_c4(), 3),
            Err(Error::BadK(_))
        ));
    }

    #[test]
    fn witness_checker_flags_lower_triangle_edges() {
        let bg = bip_p4();
        let bad = TriangularWitness { order_a: vec![1, 0], order_b: vec![1, 0] };
        // position (i=1, j=0): a1-b2 is an edge -> (order_a[1]=0, order_b[0]=1)
        assert!(bad.check(&bg).is_err());
        let good = TriangularWitness { order_a: vec![0, 1], order_b: vec![0, 1] };
        good.check(&bg).unwrap();
    }
}
