//! Instance and witness translators between the decision problems:
//! extendability to a unique perfect matching vs. non-negative orderings
//! of a source/sink DAG, induced-subgraph extendability via isolated
//! padding, balanced independent sets via the copy gadget, and the 0/1
//! matrix view.

use std::collections::HashSet;

use crate::error::Error;
use crate::graph::{
    BipartiteGraph, BoolMatrix, TopologicalOrdering, VertexId, Weight, WeightedDag,
};
use crate::oracle::TriangularWitness;

/// One vertex of the copy gadget: `copy` ranges over `1..=k+1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetVertex {
    pub base: String,
    pub copy: usize,
}

impl GadgetVertex {
    pub fn label(&self) -> String {
        format!("{}#{}", self.base, self.copy)
    }

    /// Splits on the rightmost `#`; the copy index must be a positive
    /// integer.
    pub fn parse(label: &str) -> Option<GadgetVertex> {
        let (base, copy) = label.rsplit_once('#')?;
        let copy: usize = copy.parse().ok()?;
        if base.is_empty() || copy == 0 {
            return None;
        }
        Some(GadgetVertex { base: base.to_string(), copy })
    }
}

fn fresh_label(taken: &HashSet<&str>, candidate: String) -> String {
    let mut label = candidate;
    while taken.contains(label.as_str()) {
        label.insert(0, '_');
    }
    label
}

/// Label given to the isolated helper vertex of the reduced DAG; suffixed
/// with `_` prefixes if it collides with a class label.
pub fn helper_label(bg: &BipartiteGraph) -> String {
    let taken: HashSet<&str> = bg
        .labels_a()
        .iter()
        .chain(bg.labels_b().iter())
        .map(String::as_str)
        .collect();
    fresh_label(&taken, "v⋆".to_string())
}

/// Reduces unique-matching extendability to non-negative orderings: orient
/// every edge from A to B, weight A-vertices -1 and B-vertices +1, and add
/// an isolated helper vertex of weight +1. The result has only sources and
/// sinks. DAG vertex order: class A, class B, helper.
pub fn upm_to_nn_dag(bg: &BipartiteGraph) -> Result<WeightedDag, Error> {
    if !bg.is_balanced() {
        return Err(Error::Unbalanced(bg.n_a(), bg.n_b()));
    }
    let mut vertices: Vec<(String, Weight)> = Vec::with_capacity(2 * bg.n_a() + 1);
    for label in bg.labels_a() {
        vertices.push((label.clone(), Weight::from_int(-1)));
    }
    for label in bg.labels_b() {
        vertices.push((label.clone(), Weight::from_int(1)));
    }
    vertices.push((helper_label(bg), Weight::from_int(1)));
    let edges = bg
        .edges()
        .iter()
        .map(|&(a, b)| (bg.label_a(a).to_string(), bg.label_b(b).to_string()))
        .collect();
    let dag = WeightedDag::new(vertices, edges)?;
    debug_assert!(dag.is_source_sink_only());
    Ok(dag)
}

/// Reads a triangular witness off a non-negative topological ordering of
/// the reduced DAG: class orders are the orders of appearance. Any prefix
/// ending at the i-th A-vertex already contains at least i-1 B-vertices,
/// which forces the lower triangle to be edge-free.
pub fn ordering_to_triangular_witness(
    bg: &BipartiteGraph,
    ordering: &TopologicalOrdering,
) -> Result<TriangularWitness, Error> {
    let dag = upm_to_nn_dag(bg)?;
    match dag.validate_nn_ordering(ordering) {
        Ok(verdict) if verdict.is_valid() => {}
        _ => return Err(Error::InvalidOrdering),
    }
    let n = bg.n_a();
    let mut order_a = Vec::with_capacity(n);
    let mut order_b = Vec::with_capacity(n);
    for v in ordering.iter() {
        let idx = v.index();
        if idx < n {
            order_a.push(idx);
        } else if idx < 2 * n {
            order_b.push(idx - n);
        }
    }
    let witness = TriangularWitness { order_a, order_b };
    witness.check(bg).map_err(|e| {
        Error::InternalInvariantViolation(format!(
            "ordering-derived witness failed the triangle check: {e}"
        ))
    })?;
    Ok(witness)
}

/// Interleaves a triangular witness into the non-negative topological
/// ordering `helper, a_1, b_1, ..., a_n, b_n` of the reduced DAG (prefix
/// sums alternate 1, 0, 1, 0, ...).
pub fn triangular_witness_to_ordering(
    bg: &BipartiteGraph,
    witness: &TriangularWitness,
) -> Result<TopologicalOrdering, Error> {
    let dag = upm_to_nn_dag(bg)?;
    witness.check(bg)?;
    if witness.order_a.len() != bg.n_a() {
        return Err(Error::InvalidWitness(
            "witness must order the whole classes".to_string(),
        ));
    }
    let n = bg.n_a();
    let mut order = Vec::with_capacity(2 * n + 1);
    order.push(VertexId::new(2 * n));
    for i in 0..n {
        order.push(VertexId::new(witness.order_a[i]));
        order.push(VertexId::new(n + witness.order_b[i]));
    }
    let ordering = TopologicalOrdering::new(order);
    match dag.validate_nn_ordering(&ordering) {
        Ok(verdict) if verdict.is_valid() => Ok(ordering),
        other => Err(Error::InternalInvariantViolation(format!(
            "interleaved ordering failed validation: {other:?}"
        ))),
    }
}

/// Pads both classes with fresh isolated vertices up to `n_target` per
/// class. Padding labels are `padA<i>` / `padB<i>` (1-based positions),
/// prefixed with `_` on collision.
pub fn add_isolated(bg: &BipartiteGraph, n_target: usize) -> Result<BipartiteGraph, Error> {
    if !bg.is_balanced() {
        return Err(Error::Unbalanced(bg.n_a(), bg.n_b()));
    }
    let n = bg.n_a();
    if n_target < n {
        return Err(Error::BadTarget { target: n_target, current: n });
    }
    let mut class_a = bg.labels_a().to_vec();
    let mut class_b = bg.labels_b().to_vec();
    for i in (n + 1)..=n_target {
        let taken: HashSet<&str> =
            class_a.iter().chain(class_b.iter()).map(String::as_str).collect();
        let new_a = fresh_label(&taken, format!("padA{i}"));
        class_a.push(new_a);
        let taken: HashSet<&str> =
            class_a.iter().chain(class_b.iter()).map(String::as_str).collect();
        let new_b = fresh_label(&taken, format!("padB{i}"));
        class_b.push(new_b);
    }
    BipartiteGraph::from_index_edges(class_a, class_b, bg.edges().to_vec())
}

pub(crate) fn gadget_index(base: usize, copy: usize, k: usize) -> usize {
    base * (k + 1) + (copy - 1)
}

/// `(base, copy)` coordinates of a gadget class index; copies are 1-based.
pub(crate) fn gadget_coords(index: usize, k: usize) -> (usize, usize) {
    (index / (k + 1), index % (k + 1) + 1)
}

/// Builds the copy gadget: `k+1` copies of every vertex, labelled
/// `base#copy`, with an edge between `(u, i)` in A and `(v, j)` in B iff
/// `i < j` or `uv` is an edge of the source graph.
pub fn bis_gadget(bg: &BipartiteGraph, k: usize) -> Result<BipartiteGraph, Error> {
    if k == 0 {
        return Err(Error::BadK("k must be at least 1".to_string()));
    }
    let copies = k + 1;
    let mut class_a = Vec::with_capacity(bg.n_a() * copies);
    for base in bg.labels_a() {
        for copy in 1..=copies {
            class_a.push(GadgetVertex { base: base.clone(), copy }.label());
        }
    }
    let mut class_b = Vec::with_capacity(bg.n_b() * copies);
    for base in bg.labels_b() {
        for copy in 1..=copies {
            class_b.push(GadgetVertex { base: base.clone(), copy }.label());
        }
    }
    let mut pairs = Vec::new();
    for u in 0..bg.n_a() {
        for i in 1..=copies {
            for v in 0..bg.n_b() {
                for j in 1..=copies {
                    if i < j || bg.has_edge(u, v) {
                        pairs.push((gadget_index(u, i, k), gadget_index(v, j, k)));
                    }
                }
            }
        }
    }
    BipartiteGraph::from_index_edges(class_a, class_b, pairs)
}

/// Lifts a balanced independent set of size `2k` to a gadget subgraph (all
/// copies of the chosen vertices) together with a triangular witness.
/// Ordering both classes by ascending copy index (bases in input order
/// within each copy block) puts every remaining gadget edge strictly above
/// the diagonal.
pub fn bis_to_gadget_witness(
    bg: &BipartiteGraph,
    k: usize,
    set_a: &[usize],
    set_b: &[usize],
) -> Result<(Vec<usize>, Vec<usize>, TriangularWitness), Error> {
    if k == 0 {
        return Err(Error::BadK("k must be at least 1".to_string()));
    }
    if set_a.len() != k || set_b.len() != k {
        return Err(Error::WrongSize { expected: k, got: set_a.len().max(set_b.len()) });
    }
    let distinct_in_range = |set: &[usize], limit: usize| {
        let mut seen = HashSet::new();
        set.iter().all(|&i| i < limit && seen.insert(i))
    };
    if !distinct_in_range(set_a, bg.n_a()) || !distinct_in_range(set_b, bg.n_b()) {
        return Err(Error::BadInput("independent-set indices out of range".to_string()));
    }
    for &a in set_a {
        for &b in set_b {
            if bg.has_edge(a, b) {
                return Err(Error::NotIndependent);
            }
        }
    }
    let mut order_a = Vec::with_capacity(k * (k + 1));
    let mut order_b = Vec::with_capacity(k * (k + 1));
    for copy in 1..=(k + 1) {
        for &u in set_a {
            order_a.push(gadget_index(u, copy, k));
        }
        for &v in set_b {
            order_b.push(gadget_index(v, copy, k));
        }
    }
    let mut sub_a = order_a.clone();
    let mut sub_b = order_b.clone();
    sub_a.sort_unstable();
    sub_b.sort_unstable();
    let witness = TriangularWitness { order_a, order_b };
    let gadget = bis_gadget(bg, k)?;
    witness.check(&gadget).map_err(|e| {
        Error::InternalInvariantViolation(format!(
            "copy-lifted witness failed the triangle check: {e}"
        ))
    })?;
    Ok((sub_a, sub_b, witness))
}

/// Recovers a balanced independent set of size `2k` from a triangular
/// witness on a gadget subgraph with `k^2+k` vertices per class.
///
/// The witness orders are processed in reverse (so that the *upper*
/// triangle of the reversed orders is edge-free): let `a` be the first
/// reversed A-position at which `k` distinct bases have appeared; every
/// reversed B-position after `a` carries a copy index no larger than any
/// A-copy up to `a`, and a counting argument guarantees at least `k` of
/// them share one copy index. Those bases, together with the `k` distinct
/// bases on the A side, form the independent set.
pub fn extract_bis_from_subgraph(
    bg: &BipartiteGraph,
    k: usize,
    sub_a: &[usize],
    sub_b: &[usize],
    witness: &TriangularWitness,
) -> Result<(Vec<usize>, Vec<usize>), Error> {
    if k == 0 {
        return Err(Error::BadK("k must be at least 1".to_string()));
    }
    let expected = k * k + k;
    if sub_a.len() != expected || sub_b.len() != expected {
        return Err(Error::WrongSize { expected, got: sub_a.len().max(sub_b.len()) });
    }
    let gadget = bis_gadget(bg, k)?;
    witness.check(&gadget)?;
    let as_set = |xs: &[usize]| xs.iter().copied().collect::<HashSet<usize>>();
    if as_set(&witness.order_a) != as_set(sub_a) || as_set(&witness.order_b) != as_set(sub_b) {
        return Err(Error::InvalidWitness(
            "witness orders do not cover the chosen subgraph".to_string(),
        ));
    }

    let rev_a: Vec<(usize, usize)> = witness
        .order_a
        .iter()
        .rev()
        .map(|&g| gadget_coords(g, k))
        .collect();
    let rev_b: Vec<(usize, usize)> = witness
        .order_b
        .iter()
        .rev()
        .map(|&g| gadget_coords(g, k))
        .collect();

    // First reversed A-position where k distinct bases have appeared.
    let mut bases_seen: Vec<usize> = Vec::new();
    let mut boundary = None;
    for (pos, &(base, _)) in rev_a.iter().enumerate() {
        if !bases_seen.contains(&base) {
            bases_seen.push(base);
            if bases_seen.len() == k {
                boundary = Some(pos);
                break;
            }
        }
    }
    let Some(boundary) = boundary else {
        return Err(Error::ExtractionFailed(format!(
            "subgraph spans fewer than {k} distinct A-bases"
        )));
    };
    let picked_a = bases_seen;

    // Among reversed B-positions strictly after the boundary, find k
    // vertices sharing a copy index (smallest qualifying copy wins).
    let tail = &rev_b[boundary + 1..];
    let mut by_copy: Vec<Vec<usize>> = vec![Vec::new(); k + 2];
    for &(base, copy) in tail {
        by_copy[copy].push(base);
    }
    let picked_b = by_copy
        .iter()
        .find(|bases| bases.len() >= k)
        .map(|bases| bases[..k].to_vec());
    let Some(picked_b) = picked_b else {
        return Err(Error::ExtractionFailed(
            "no copy index repeats k times after the boundary".to_string(),
        ));
    };

    // Re-verify independence directly; rule (2) makes any surviving source
    // edge a lower-triangle edge, so this cannot fire on a valid witness.
    for &a in &picked_a {
        for &b in &picked_b {
            if bg.has_edge(a, b) {
                return Err(Error::ExtractionFailed(format!(
                    "extracted sets are not independent: edge [{:?}, {:?}]",
                    bg.label_a(a),
                    bg.label_b(b)
                )));
            }
        }
    }
    let mut out_a = picked_a;
    let mut out_b = picked_b;
    out_a.sort_unstable();
    out_b.sort_unstable();
    Ok((out_a, out_b))
}

/// 0/1 matrix of a balanced bipartite graph: rows follow class A order,
/// columns class B order, entry 1 iff the edge exists.
pub fn bipartite_to_matrix(bg: &BipartiteGraph) -> Result<BoolMatrix, Error> {
    if !bg.is_balanced() {
        return Err(Error::Unbalanced(bg.n_a(), bg.n_b()));
    }
    let n = bg.n_a();
    let rows = (0..n)
        .map(|i| (0..n).map(|j| u8::from(bg.has_edge(i, j))).collect())
        .collect();
    BoolMatrix::new(rows)
}

/// Bipartite view of a square 0/1 matrix with labels `r<i>` / `c<j>`.
/// `bipartite_to_matrix` inverts this exactly.
pub fn matrix_to_bipartite(matrix: &BoolMatrix) -> Result<BipartiteGraph, Error> {
    let n = matrix.n();
    let labels_a = (0..n).map(|i| format!("r{i}")).collect();
    let labels_b = (0..n).map(|j| format!("c{j}")).collect();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if matrix.get(i, j) {
                pairs.push((i, j));
            }
        }
    }
    BipartiteGraph::from_index_edges(labels_a, labels_b, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Verdict;
    use crate::oracle;

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
            (0..n).map(|i| format!("u{i}")).collect(),
            (0..n).map(|i| format!("x{i}")).collect(),
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn reduction_shapes() {
        let dag = upm_to_nn_dag(&bip_k11()).unwrap();
        assert_eq!(dag.n(), 3);
        assert_eq!(dag.edges().len(), 1);
        assert!(dag.weight(dag.vertex("a1").unwrap()).is_negative());
        assert!(dag.is_source_sink_only());

        let dag = upm_to_nn_dag(&empty_bg(0)).unwrap();
        assert_eq!(dag.n(), 1);
        assert_eq!(dag.label(VertexId::new(0)), "v⋆");

        let dag = upm_to_nn_dag(&bip_c4()).unwrap();
        assert_eq!(dag.n(), 5);
        assert_eq!(dag.edges().len(), 4);
        assert!(dag.is_source_sink_only());
    }

    #[test]
    fn helper_label_avoids_collisions() {
        let bg = BipartiteGraph::new(
            vec!["v⋆".into()],
            vec!["b".into()],
            vec![("v⋆".into(), "b".into())],
        )
        .unwrap();
        let dag = upm_to_nn_dag(&bg).unwrap();
        assert_eq!(dag.label(VertexId::new(2)), "_v⋆");
    }

    #[test]
    fn ordering_to_witness_and_back() {
        let bg = bip_k11();
        let dag = upm_to_nn_dag(&bg).unwrap();
        let v = |l: &str| dag.vertex(l).unwrap();
        let ordering = TopologicalOrdering::new(vec![v("v⋆"), v("a1"), v("b1")]);
        let w = ordering_to_triangular_witness(&bg, &ordering).unwrap();
        assert_eq!(w.order_a, vec![0]);
        assert_eq!(w.order_b, vec![0]);

        let back = triangular_witness_to_ordering(&bg, &w).unwrap();
        assert_eq!(back, ordering);
        let sums: Vec<String> = dag
            .prefix_weights(&back)
            .unwrap()
            .iter()
            .map(Weight::canonical_string)
            .collect();
        assert_eq!(sums, ["1", "0", "1"]);
    }

    #[test]
    fn negative_orderings_are_rejected() {
        let bg = bip_k11();
        let dag = upm_to_nn_dag(&bg).unwrap();
        let v = |l: &str| dag.vertex(l).unwrap();
        let ordering = TopologicalOrdering::new(vec![v("a1"), v("v⋆"), v("b1")]);
        assert_eq!(
            dag.validate_nn_ordering(&ordering).unwrap(),
            Verdict::NegativePrefix { index: 0 }
        );
        assert_eq!(
            ordering_to_triangular_witness(&bg, &ordering).unwrap_err(),
            Error::InvalidOrdering
        );
    }

    #[test]
    fn empty_graph_round_trip() {
        let bg = empty_bg(0);
        let dag = upm_to_nn_dag(&bg).unwrap();
        let ordering = TopologicalOrdering::new(vec![VertexId::new(0)]);
        let w = ordering_to_triangular_witness(&bg, &ordering).unwrap();
        assert!(w.order_a.is_empty());
        let back = triangular_witness_to_ordering(&bg, &w).unwrap();
        assert_eq!(back.len(), 1);
        assert!(dag.validate_nn_ordering(&back).unwrap().is_valid());
    }

    #[test]
    fn padding_adds_fresh_isolated_vertices() {
        let padded = add_isolated(&bip_c4(), 3).unwrap();
        assert_eq!(padded.n_a(), 3);
        assert_eq!(padded.n_b(), 3);
        assert_eq!(padded.edges().len(), 4);
        assert_eq!(padded.label_a(2), "padA3");
        let unchanged = add_isolated(&bip_c4(), 2).unwrap();
        assert_eq!(unchanged, bip_c4());
        assert!(matches!(
            add_isolated(&bip_c4(), 1),
            Err(Error::BadTarget { .. })
        ));
    }

    #[test]
    fn gadget_edges_follow_the_two_rules() {
        let base = empty_bg(1);
        let g = bis_gadget(&base, 1).unwrap();
        assert_eq!(g.n_a() + g.n_b(), 4);
        assert_eq!(g.edges(), [(0, 1)]); // (u,1)-(x,2) via the copy rule

        let with_edge = BipartiteGraph::new(
            vec!["u".into()],
            vec!["x".into()],
            vec![("u".into(), "x".into())],
        )
        .unwrap();
        let g = bis_gadget(&with_edge, 1).unwrap();
        assert_eq!(g.edges(), [(0, 0), (0, 1), (1, 0), (1, 1)]);
    }

    #[test]
    fn gadget_size_is_copies_times_source() {
        for n in 0..3 {
            for k in 1..3 {
                let g = bis_gadget(&empty_bg(n), k).unwrap();
                assert_eq!(g.n_a() + g.n_b(), (k + 1) * 2 * n);
            }
        }
        assert!(matches!(bis_gadget(&empty_bg(1), 0), Err(Error::BadK(_))));
    }

    #[test]
    fn gadget_labels_parse_back() {
        let g = bis_gadget(&empty_bg(2), 2).unwrap();
        for label in g.labels_a() {
            let gv = GadgetVertex::parse(label).unwrap();
            assert_eq!(gv.label(), *label);
        }
        assert!(GadgetVertex::parse("plain").is_none());
        assert!(GadgetVertex::parse("u#0").is_none());
    }

    #[test]
    fn lifting_an_independent_set_gives_a_valid_witness() {
        let bg = empty_bg(1);
        let (sub_a, sub_b, witness) = bis_to_gadget_witness(&bg, 1, &[0], &[0]).unwrap();
        assert_eq!(sub_a, vec![0, 1]);
        assert_eq!(sub_b, vec![0, 1]);
        // Ascending copy order on both sides.
        assert_eq!(witness.order_a, vec![0, 1]);
        assert_eq!(witness.order_b, vec![0, 1]);
    }

    #[test]
    fn lifting_rejects_non_independent_sets() {
        let bg = BipartiteGraph::new(
            vec!["u".into()],
            vec!["x".into()],
            vec![("u".into(), "x".into())],
        )
        .unwrap();
        assert_eq!(
            bis_to_gadget_witness(&bg, 1, &[0], &[0]).unwrap_err(),
            Error::NotIndependent
        );
        assert!(matches!(
            bis_to_gadget_witness(&empty_bg(2), 2, &[0], &[0, 1]),
            Err(Error::WrongSize { .. })
        ));
    }

    #[test]
    fn lift_sizes_match_the_gadget_contract() {
        for k in 1..=2 {
            let bg = empty_bg(k);
            let sets: Vec<usize> = (0..k).collect();
            let (sub_a, sub_b, witness) = bis_to_gadget_witness(&bg, k, &sets, &sets).unwrap();
            assert_eq!(sub_a.len(), k * k + k);
            assert_eq!(sub_b.len(), k * k + k);
            witness.check(&bis_gadget(&bg, k).unwrap()).unwrap();
        }
    }

    #[test]
    fn extraction_round_trips_the_lift() {
        let bg = empty_bg(1);
        let (sub_a, sub_b, witness) = bis_to_gadget_witness(&bg, 1, &[0], &[0]).unwrap();
        let (sa, sb) = extract_bis_from_subgraph(&bg, 1, &sub_a, &sub_b, &witness).unwrap();
        assert_eq!(sa, vec![0]);
        assert_eq!(sb, vec![0]);
    }

    #[test]
    fn extraction_rejects_bad_witnesses() {
        let bg = empty_bg(1);
        let (sub_a, sub_b, mut witness) = bis_to_gadget_witness(&bg, 1, &[0], &[0]).unwrap();
        // Reversing both orders puts the copy-rule edge (u,1)-(x,2) in the
        // lower triangle.
        witness.order_a.reverse();
        witness.order_b.reverse();
        assert!(matches!(
            extract_bis_from_subgraph(&bg, 1, &sub_a, &sub_b, &witness),
            Err(Error::InvalidWitness(_))
        ));
    }

    #[test]
    fn extraction_avoids_adjacent_bases() {
        // Two bases per class, one source edge u2-x2 (k = 1). A witness on
        // copies of {u2} x {x2} cannot exist, but a mixed subgraph can
        // steer the scan: the reversal must still land on an independent
        // pair.
        let bg = BipartiteGraph::new(
            vec!["u1".into(), "u2".into()],
            vec!["x1".into(), "x2".into()],
            vec![("u2".into(), "x2".into())],
        )
        .unwrap();
        let k = 1;
        // Subgraph: A side {(u2,1),(u1,1)}, B side {(x1,1),(x2,2)}.
        // Gadget indices: (u1,1)=0, (u2,1)=2, (x1,1)=0, (x2,2)=3.
        let sub_a = vec![0, 2];
        let sub_b = vec![0, 3];
        // Gadget edges inside: (u1,1)-(x2,2) and (u2,1)-(x2,2). Putting
        // (x2,2) last keeps the lower triangle free.
        let witness = TriangularWitness { order_a: vec![2, 0], order_b: vec![0, 3] };
        let (sa, sb) = extract_bis_from_subgraph(&bg, k, &sub_a, &sub_b, &witness).unwrap();
        assert_eq!(sa, vec![0]); // u1
        assert_eq!(sb, vec![0]); // x1
    }

    #[test]
    fn matrix_views_round_trip() {
        let m = bipartite_to_matrix(&bip_c4()).unwrap();
        assert_eq!(m.to_rows(), vec![vec![1, 1], vec![1, 1]]);
        let m = bipartite_to_matrix(&bip_k11()).unwrap();
        assert_eq!(m.to_rows(), vec![vec![1]]);

        let original = BoolMatrix::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
        let round = bipartite_to_matrix(&matrix_to_bipartite(&original).unwrap()).unwrap();
        assert_eq!(round, original);
    }
}
