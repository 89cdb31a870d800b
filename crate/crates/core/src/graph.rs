//! Core graph types: exact rational weights, bitmask vertex sets, weighted
//! DAGs with closure predicates and ordering validators, plus the bipartite
//! graphs and 0/1 matrices used by the reduction oracles.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::Error;

/// Hard cap on vertex counts: sets are 64-bit masks.
pub const MAX_VERTICES: usize = 64;

pub(crate) fn full_mask(n: usize) -> u64 {
    debug_assert!(n <= MAX_VERTICES);
    if n == MAX_VERTICES {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Index of a vertex inside its owning graph. Ordinals are dense `0..n`;
/// the human-readable label lives in the graph's vertex table.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub(crate) u32);

impl VertexId {
    pub(crate) fn new(index: usize) -> Self {
        VertexId(index as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// Exact rational vertex weight. All comparisons (in particular against
/// zero) are exact; there is no floating point anywhere.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(BigRational);

impl Weight {
    pub fn zero() -> Self {
        Weight(BigRational::zero())
    }

    pub fn from_int(value: i64) -> Self {
        Weight(BigRational::from_integer(BigInt::from(value)))
    }

    /// Parses an integer (`"-3"`), a finite decimal (`"1.25"`), or a
    /// fraction (`"-7/4"`). Parsing is exact.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let bad = || Error::BadWeight(text.to_string());
        if let Some((numer, denom)) = text.split_once('/') {
            let n: BigInt = numer.parse().map_err(|_| bad())?;
            let d: BigInt = denom.parse().map_err(|_| bad())?;
            if !d.is_positive() {
                return Err(bad());
            }
            return Ok(Weight(BigRational::new(n, d)));
        }
        if let Some((int_part, frac_part)) = text.split_once('.') {
            let (negative, digits) = match int_part.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, int_part),
            };
            let all_digits =
                |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
            if !all_digits(digits) || !all_digits(frac_part) {
                return Err(bad());
            }
            let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
            let whole: BigInt = digits.parse().map_err(|_| bad())?;
            let frac: BigInt = frac_part.parse().map_err(|_| bad())?;
            let mut numer = whole * &scale + frac;
            if negative {
                numer = -numer;
            }
            return Ok(Weight(BigRational::new(numer, scale)));
        }
        let n: BigInt = text.parse().map_err(|_| bad())?;
        Ok(Weight(BigRational::from_integer(n)))
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub(crate) fn ratio(&self) -> &BigRational {
        &self.0
    }

    pub(crate) fn from_ratio(ratio: BigRational) -> Self {
        Weight(ratio)
    }

    /// Canonical text form: an integer when the denominator is 1, a finite
    /// decimal when the denominator divides a power of ten, `num/den`
    /// otherwise. `parse` round-trips all three.
    pub fn canonical_string(&self) -> String {
        let numer = self.0.numer();
        let denom = self.0.denom();
        if denom.is_one() {
            return numer.to_string();
        }
        let two = BigInt::from(2);
        let five = BigInt::from(5);
        let mut rest = denom.clone();
        let mut twos = 0u32;
        let mut fives = 0u32;
        while (&rest % &two).is_zero() {
            rest /= &two;
            twos += 1;
        }
        while (&rest % &five).is_zero() {
            rest /= &five;
            fives += 1;
        }
        if !rest.is_one() {
            return format!("{}/{}", numer, denom);
        }
        let places = twos.max(fives);
        let scale = BigInt::from(10u32).pow(places) / denom;
        let mut digits = (numer * &scale).abs().to_string();
        while digits.len() <= places as usize {
            digits.insert(0, '0');
        }
        let split = digits.len() - places as usize;
        let sign = if numer.is_negative() { "-" } else { "" };
        format!("{sign}{}.{}", &digits[..split], &digits[split..])
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight(self.0 + rhs.0)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight(self.0 - rhs.0)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(-self.0)
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        self.0 -= &rhs.0;
    }
}

/// Compact vertex subset, one bit per ordinal. The 64-vertex cap is a hard
/// limit of the whole crate.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet {
    bits: u64,
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { bits: 0 };

    pub fn from_bits(bits: u64) -> Self {
        VertexSet { bits }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn singleton(v: VertexId) -> Self {
        VertexSet { bits: 1 << v.0 }
    }

    pub fn full(n: usize) -> Self {
        VertexSet { bits: full_mask(n) }
    }

    pub fn contains(self, v: VertexId) -> bool {
        self.bits & (1 << v.0) != 0
    }

    pub fn with(self, v: VertexId) -> Self {
        VertexSet { bits: self.bits | (1 << v.0) }
    }

    pub fn without(self, v: VertexId) -> Self {
        VertexSet { bits: self.bits & !(1 << v.0) }
    }

    pub fn insert(&mut self, v: VertexId) {
        self.bits |= 1 << v.0;
    }

    pub fn remove(&mut self, v: VertexId) {
        self.bits &= !(1 << v.0);
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet { bits: self.bits | other.bits }
    }

    pub fn intersect(self, other: VertexSet) -> Self {
        VertexSet { bits: self.bits & other.bits }
    }

    pub fn minus(self, other: VertexSet) -> Self {
        VertexSet { bits: self.bits & !other.bits }
    }

    pub fn iter(self) -> impl Iterator<Item = VertexId> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let tz = bits.trailing_zeros();
                bits &= bits - 1;
                Some(VertexId(tz))
            }
        })
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|v| v.0)).finish()
    }
}

/// A permutation of the vertices of a graph, judged by two criteria: every
/// prefix inward closed (topological) and every prefix weight non-negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopologicalOrdering(Vec<VertexId>);

impl TopologicalOrdering {
    pub fn new(order: Vec<VertexId>) -> Self {
        TopologicalOrdering(order)
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }
}

/// Outcome of judging an ordering, reporting the earliest violation. When a
/// prefix is both non-topological and negative, the topological violation
/// wins.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    NotTopological { index: usize },
    NegativePrefix { index: usize },
}

impl Verdict {
    pub fn is_valid(self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// Vertex-weighted directed acyclic graph. Immutable after construction;
/// acyclicity, label uniqueness, and the no-self-loop / no-multi-edge rules
/// are all enforced by [`WeightedDag::new`].
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedDag {
    labels: Vec<String>,
    weights: Vec<Weight>,
    edges: Vec<(VertexId, VertexId)>,
    out_mask: Vec<u64>,
    in_mask: Vec<u64>,
    index: HashMap<String, VertexId>,
}

impl WeightedDag {
    pub fn new(
        vertices: Vec<(String, Weight)>,
        edge_specs: Vec<(String, String)>,
    ) -> Result<Self, Error> {
        let n = vertices.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { got: n, max: MAX_VERTICES });
        }
        let mut labels = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        let mut index = HashMap::with_capacity(n);
        for (pos, (label, weight)) in vertices.into_iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel(pos));
            }
            if index.insert(label.clone(), VertexId::new(pos)).is_some() {
                return Err(Error::DuplicateLabel(label));
            }
            labels.push(label);
            weights.push(weight);
        }
        let mut out_mask = vec![0u64; n];
        let mut in_mask = vec![0u64; n];
        let mut edges = Vec::with_capacity(edge_specs.len());
        let mut seen = HashSet::new();
        for (tail_label, head_label) in &edge_specs {
            let tail = *index
                .get(tail_label)
                .ok_or_else(|| Error::DanglingEdge(tail_label.clone()))?;
            let head = *index
                .get(head_label)
                .ok_or_else(|| Error::DanglingEdge(head_label.clone()))?;
            if tail == head {
                return Err(Error::SelfLoop(tail_label.clone()));
            }
            if !seen.insert((tail, head)) {
                return Err(Error::DuplicateEdge(tail_label.clone(), head_label.clone()));
            }
            out_mask[tail.index()] |= 1 << head.0;
            in_mask[head.index()] |= 1 << tail.0;
            edges.push((tail, head));
        }
        edges.sort();
        let dag = WeightedDag { labels, weights, edges, out_mask, in_mask, index };
        dag.check_acyclic()?;
        Ok(dag)
    }

    /// Kahn-style elimination; fails iff a directed cycle exists.
    fn check_acyclic(&self) -> Result<(), Error> {
        let n = self.n();
        let mut indegree: Vec<u32> = (0..n).map(|v| self.in_mask[v].count_ones()).collect();
        let mut queue: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut processed = 0;
        while let Some(v) = queue.pop() {
            processed += 1;
            let mut succ = self.out_mask[v];
            while succ != 0 {
                let u = succ.trailing_zeros() as usize;
                succ &= succ - 1;
                indegree[u] -= 1;
                if indegree[u] == 0 {
                    queue.push(u);
                }
            }
        }
        if processed == n {
            Ok(())
        } else {
            Err(Error::CycleDetected)
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n() as u32).map(VertexId)
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.index()]
    }

    pub fn weight(&self, v: VertexId) -> &Weight {
        &self.weights[v.index()]
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn out_neighbors(&self, v: VertexId) -> VertexSet {
        VertexSet::from_bits(self.out_mask[v.index()])
    }

    pub fn in_neighbors(&self, v: VertexId) -> VertexSet {
        VertexSet::from_bits(self.in_mask[v.index()])
    }

    pub(crate) fn out_mask(&self, v: usize) -> u64 {
        self.out_mask[v]
    }

    pub(crate) fn in_mask(&self, v: usize) -> u64 {
        self.in_mask[v]
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn contains_set(&self, set: VertexSet) -> bool {
        set.bits() & !full_mask(self.n()) == 0
    }

    pub fn set_weight(&self, set: VertexSet) -> Weight {
        let mut total = BigRational::zero();
        for v in set.iter() {
            total += self.weights[v.index()].ratio();
        }
        Weight::from_ratio(total)
    }

    pub fn total_weight(&self) -> Weight {
        self.set_weight(self.full_set())
    }

    /// True iff no edge enters `set` from outside, i.e. every edge `u -> v`
    /// with `v` in the set also has `u` in the set.
    pub fn is_inward_closed(&self, set: VertexSet) -> bool {
        debug_assert!(self.contains_set(set));
        for v in set.iter() {
            if self.in_mask[v.index()] & !set.bits() != 0 {
                return false;
            }
        }
        true
    }

    /// True iff every edge between `inner` and `outer \ inner` points into
    /// `inner`. Requires `inner ⊆ outer`.
    pub fn is_outward_closed_rel(
        &self,
        inner: VertexSet,
        outer: VertexSet,
    ) -> Result<bool, Error> {
        if !inner.is_subset_of(outer) {
            return Err(Error::PreconditionViolated(
                "inner set must be a subset of the outer set".to_string(),
            ));
        }
        let boundary = outer.bits() & !inner.bits();
        for u in inner.iter() {
            if self.out_mask[u.index()] & boundary != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_permutation(&self, ordering: &TopologicalOrdering) -> Result<(), Error> {
        if ordering.len() != self.n() {
            return Err(Error::NotAPermutation);
        }
        let mut seen = 0u64;
        for v in ordering.iter() {
            if v.index() >= self.n() || seen & (1 << v.0) != 0 {
                return Err(Error::NotAPermutation);
            }
            seen |= 1 << v.0;
        }
        Ok(())
    }

    /// Running prefix sums of the ordering's vertex weights; entry `k` is
    /// the weight of the length-`k+1` prefix.
    pub fn prefix_weights(&self, ordering: &TopologicalOrdering) -> Result<Vec<Weight>, Error> {
        self.check_permutation(ordering)?;
        let mut acc = BigRational::zero();
        let mut out = Vec::with_capacity(self.n());
        for v in ordering.iter() {
            acc += self.weights[v.index()].ratio();
            out.push(Weight::from_ratio(acc.clone()));
        }
        Ok(out)
    }

    /// Judges an ordering: every prefix must be inward closed and have
    /// non-negative weight. Reports the earliest violating index.
    pub fn validate_nn_ordering(&self, ordering: &TopologicalOrdering) -> Result<Verdict, Error> {
        self.check_permutation(ordering)?;
        let mut placed = 0u64;
        let mut acc = BigRational::zero();
        for (k, v) in ordering.iter().enumerate() {
            if self.in_mask[v.index()] & !placed != 0 {
                return Ok(Verdict::NotTopological { index: k });
            }
            placed |= 1 << v.0;
            acc += self.weights[v.index()].ratio();
            if acc.is_negative() {
                return Ok(Verdict::NegativePrefix { index: k });
            }
        }
        Ok(Verdict::Valid)
    }

    /// True iff no vertex has both an in-edge and an out-edge.
    pub fn is_source_sink_only(&self) -> bool {
        (0..self.n()).all(|v| self.in_mask[v] == 0 || self.out_mask[v] == 0)
    }
}

/// Bipartite graph with two label classes and cross edges only. Labels are
/// unique across both classes so the reductions can reuse them as DAG
/// vertex labels.
#[derive(Clone, Debug, PartialEq)]
pub struct BipartiteGraph {
    class_a: Vec<String>,
    class_b: Vec<String>,
    adj_a: Vec<u64>,
    adj_b: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(
        class_a: Vec<String>,
        class_b: Vec<String>,
        edge_labels: Vec<(String, String)>,
    ) -> Result<Self, Error> {
        let mut index: HashMap<&str, (bool, usize)> = HashMap::new();
        for (pos, label) in class_a.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel(pos));
            }
            if index.insert(label, (true, pos)).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        for (pos, label) in class_b.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel(class_a.len() + pos));
            }
            if index.insert(label, (false, pos)).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let mut pairs = Vec::with_capacity(edge_labels.len());
        for (a, b) in &edge_labels {
            let &(a_side, ai) = index
                .get(a.as_str())
                .ok_or_else(|| Error::DanglingEdge(a.clone()))?;
            let &(b_side, bi) = index
                .get(b.as_str())
                .ok_or_else(|| Error::DanglingEdge(b.clone()))?;
            if !a_side || b_side {
                return Err(Error::BadInput(format!(
                    "edge [{a:?}, {b:?}] must go from class A to class B"
                )));
            }
            pairs.push((ai, bi));
        }
        drop(index);
        Self::from_index_edges(class_a, class_b, pairs)
    }

    /// Index-based constructor used by generators and reductions. Labels
    /// must still be unique; edges are `(a_index, b_index)` pairs.
    pub fn from_index_edges(
        class_a: Vec<String>,
        class_b: Vec<String>,
        pairs: Vec<(usize, usize)>,
    ) -> Result<Self, Error> {
        if class_a.len() > MAX_VERTICES || class_b.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                got: class_a.len().max(class_b.len()),
                max: MAX_VERTICES,
            });
        }
        let mut seen_labels = HashSet::new();
        for label in class_a.iter().chain(class_b.iter()) {
            if label.is_empty() {
                return Err(Error::EmptyLabel(0));
            }
            if !seen_labels.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let mut adj_a = vec![0u64; class_a.len()];
        let mut adj_b = vec![0u64; class_b.len()];
        let mut edges = Vec::with_capacity(pairs.len());
        let mut seen = HashSet::new();
        for (ai, bi) in pairs {
            if ai >= class_a.len() {
                return Err(Error::DanglingEdge(format!("a[{ai}]")));
            }
            if bi >= class_b.len() {
                return Err(Error::DanglingEdge(format!("b[{bi}]")));
            }
            if !seen.insert((ai, bi)) {
                return Err(Error::DuplicateEdge(class_a[ai].clone(), class_b[bi].clone()));
            }
            adj_a[ai] |= 1 << bi;
            adj_b[bi] |= 1 << ai;
            edges.push((ai, bi));
        }
        edges.sort_unstable();
        Ok(BipartiteGraph { class_a, class_b, adj_a, adj_b, edges })
    }

    pub fn n_a(&self) -> usize {
        self.class_a.len()
    }

    pub fn n_b(&self) -> usize {
        self.class_b.len()
    }

    pub fn is_balanced(&self) -> bool {
        self.n_a() == self.n_b()
    }

    pub fn label_a(&self, i: usize) -> &str {
        &self.class_a[i]
    }

    pub fn label_b(&self, j: usize) -> &str {
        &self.class_b[j]
    }

    pub fn labels_a(&self) -> &[String] {
        &self.class_a
    }

    pub fn labels_b(&self) -> &[String] {
        &self.class_b
    }

    pub fn index_a(&self, label: &str) -> Option<usize> {
        self.class_a.iter().position(|l| l == label)
    }

    pub fn index_b(&self, label: &str) -> Option<usize> {
        self.class_b.iter().position(|l| l == label)
    }

    /// Bitmask over class B of the neighbors of `a_index`.
    pub fn adj_a(&self, a_index: usize) -> u64 {
        self.adj_a[a_index]
    }

    /// Bitmask over class A of the neighbors of `b_index`.
    pub fn adj_b(&self, b_index: usize) -> u64 {
        self.adj_b[b_index]
    }

    pub fn has_edge(&self, a_index: usize, b_index: usize) -> bool {
        self.adj_a[a_index] & (1 << b_index) != 0
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Induced subgraph on the given class subsets (indices must be sorted
    /// and distinct); edges are reindexed positionally.
    pub fn induced(&self, sub_a: &[usize], sub_b: &[usize]) -> Result<BipartiteGraph, Error> {
        let labels_a: Vec<String> = sub_a.iter().map(|&i| self.class_a[i].clone()).collect();
        let labels_b: Vec<String> = sub_b.iter().map(|&j| self.class_b[j].clone()).collect();
        let mut pairs = Vec::new();
        for (new_a, &old_a) in sub_a.iter().enumerate() {
            for (new_b, &old_b) in sub_b.iter().enumerate() {
                if self.has_edge(old_a, old_b) {
                    pairs.push((new_a, new_b));
                }
            }
        }
        BipartiteGraph::from_index_edges(labels_a, labels_b, pairs)
    }
}

/// Square 0/1 matrix, stored as row bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoolMatrix {
    n: usize,
    rows: Vec<u64>,
}

impl BoolMatrix {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self, Error> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { got: n, max: MAX_VERTICES });
        }
        let mut bit_rows = Vec::with_capacity(n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::BadInput(format!(
                    "matrix is not square: row of length {} in an {n}-row matrix",
                    row.len()
                )));
            }
            let mut bits = 0u64;
            for (j, &entry) in row.iter().enumerate() {
                match entry {
                    0 => {}
                    1 => bits |= 1 << j,
                    other => {
                        return Err(Error::BadInput(format!(
                            "matrix entry {other} is not 0 or 1"
                        )))
                    }
                }
            }
            bit_rows.push(bits);
        }
        Ok(BoolMatrix { n, rows: bit_rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] & (1 << j) != 0
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| u8::from(self.get(i, j))).collect())
            .collect()
    }
}
