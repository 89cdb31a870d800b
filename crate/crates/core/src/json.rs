//! JSON codecs for every file kind the tools exchange, plus the instance
//! envelope. All formats are plain JSON objects; readers accept either a
//! bare payload or an envelope `{"kind": ..., "payload": ..., "meta": ...}`
//! whose kind must match.
//!
//! Schemas:
//! - dag: `{"vertices":[{"id":"a","weight":"1"}],"edges":[["b","c"]]}` —
//!   weights are integers or exact decimal/fraction strings.
//! - sequence: `{"steps":[{"op":"mark","v":"a"}]}`
//! - ordering: `{"order":["a","b"]}`
//! - bipartite: `{"a":["a1"],"b":["b1"],"edges":[["a1","b1"]]}`
//! - matrix: `{"rows":[[0,1],[1,1]]}`

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;
use crate::graph::{
    BipartiteGraph, BoolMatrix, TopologicalOrdering, VertexSet, Weight, WeightedDag,
};
use crate::oracle::{TriangularWitness, UniquePmCertificate};
use crate::sequence::{MarkUnmarkSequence, Step, StepOp};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InstanceKind {
    Dag,
    Bipartite,
    Matrix,
    Sequence,
    Ordering,
}

impl InstanceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            InstanceKind::Dag => "dag",
            InstanceKind::Bipartite => "bipartite",
            InstanceKind::Matrix => "matrix",
            InstanceKind::Sequence => "sequence",
            InstanceKind::Ordering => "ordering",
        }
    }
}

/// Generation metadata carried by envelopes produced by the generators.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<Value>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Envelope {
    pub kind: InstanceKind,
    pub payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub meta: Option<Meta>,
}

/// Wraps a payload in an envelope value.
pub fn wrap(kind: InstanceKind, payload: Value, meta: Option<Meta>) -> Value {
    serde_json::to_value(Envelope { kind, payload, meta }).expect("envelope serializes")
}

/// Accepts either an envelope (whose kind must match) or a bare payload.
pub fn unwrap(value: &Value, expected: InstanceKind) -> Result<&Value, Error> {
    match value.get("kind") {
        None => Ok(value),
        Some(kind) => {
            let found: InstanceKind = serde_json::from_value(kind.clone())
                .map_err(|_| Error::BadInput(format!("unknown instance kind {kind}")))?;
            if found != expected {
                return Err(Error::BadInput(format!(
                    "expected a {} file, found {}",
                    expected.as_str(),
                    found.as_str()
                )));
            }
            value
                .get("payload")
                .ok_or_else(|| Error::BadInput("envelope has no payload".to_string()))
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum WeightJson {
    Int(i64),
    Text(String),
}

impl WeightJson {
    fn parse(&self) -> Result<Weight, Error> {
        match self {
            WeightJson::Int(value) => Ok(Weight::from_int(*value)),
            WeightJson::Text(text) => Weight::parse(text),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: String,
    weight: WeightJson,
}

#[derive(Serialize, Deserialize)]
struct DagJson {
    vertices: Vec<VertexJson>,
    #[serde(default)]
    edges: Vec<[String; 2]>,
}

fn decode<T: for<'de> Deserialize<'de>>(value: &Value, what: &str) -> Result<T, Error> {
    serde_json::from_value(value.clone())
        .map_err(|e| Error::BadInput(format!("malformed {what}: {e}")))
}

pub fn dag_to_value(dag: &WeightedDag) -> Value {
    let vertices = dag
        .vertices()
        .map(|v| VertexJson {
            id: dag.label(v).to_string(),
            weight: WeightJson::Text(dag.weight(v).canonical_string()),
        })
        .collect();
    let edges = dag
        .edges()
        .iter()
        .map(|&(t, h)| [dag.label(t).to_string(), dag.label(h).to_string()])
        .collect();
    serde_json::to_value(DagJson { vertices, edges }).expect("dag serializes")
}

pub fn dag_from_value(value: &Value) -> Result<WeightedDag, Error> {
    let raw: DagJson = decode(unwrap(value, InstanceKind::Dag)?, "dag")?;
    let vertices = raw
        .vertices
        .into_iter()
        .map(|v| Ok((v.id, v.weight.parse()?)))
        .collect::<Result<Vec<_>, Error>>()?;
    let edges = raw.edges.into_iter().map(|[t, h]| (t, h)).collect();
    WeightedDag::new(vertices, edges)
}

#[derive(Serialize, Deserialize)]
struct StepJson {
    op: String,
    v: String,
}

#[derive(Serialize, Deserialize)]
struct SequenceJson {
    steps: Vec<StepJson>,
}

pub fn sequence_to_value(dag: &WeightedDag, seq: &MarkUnmarkSequence) -> Value {
    let steps = seq
        .steps
        .iter()
        .map(|s| StepJson {
            op: match s.op {
                StepOp::Mark => "mark".to_string(),
                StepOp::Unmark => "unmark".to_string(),
            },
            v: dag.label(s.v).to_string(),
        })
        .collect();
    serde_json::to_value(SequenceJson { steps }).expect("sequence serializes")
}

pub fn sequence_from_value(value: &Value, dag: &WeightedDag) -> Result<MarkUnmarkSequence, Error> {
    let raw: SequenceJson = decode(unwrap(value, InstanceKind::Sequence)?, "sequence")?;
    let steps = raw
        .steps
        .into_iter()
        .map(|s| {
            let v = dag
                .vertex(&s.v)
                .ok_or_else(|| Error::BadInput(format!("unknown vertex {:?} in step", s.v)))?;
            match s.op.as_str() {
                "mark" => Ok(Step::mark(v)),
                "unmark" => Ok(Step::unmark(v)),
                other => Err(Error::BadInput(format!("unknown step op {other:?}"))),
            }
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(MarkUnmarkSequence::new(steps))
}

#[derive(Serialize, Deserialize)]
struct OrderingJson {
    order: Vec<String>,
}

pub fn ordering_to_value(dag: &WeightedDag, ordering: &TopologicalOrdering) -> Value {
    let order = ordering.iter().map(|v| dag.label(v).to_string()).collect();
    serde_json::to_value(OrderingJson { order }).expect("ordering serializes")
}

pub fn ordering_from_value(
    value: &Value,
    dag: &WeightedDag,
) -> Result<TopologicalOrdering, Error> {
    let raw: OrderingJson = decode(unwrap(value, InstanceKind::Ordering)?, "ordering")?;
    let order = raw
        .order
        .into_iter()
        .map(|label| {
            dag.vertex(&label)
                .ok_or_else(|| Error::BadInput(format!("unknown vertex {label:?} in ordering")))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(TopologicalOrdering::new(order))
}

#[derive(Serialize, Deserialize)]
struct BipartiteJson {
    a: Vec<String>,
    b: Vec<String>,
    #[serde(default)]
    edges: Vec<[String; 2]>,
}

pub fn bipartite_to_value(bg: &BipartiteGraph) -> Value {
    let edges = bg
        .edges()
        .iter()
        .map(|&(a, b)| [bg.label_a(a).to_string(), bg.label_b(b).to_string()])
        .collect();
    serde_json::to_value(BipartiteJson {
        a: bg.labels_a().to_vec(),
        b: bg.labels_b().to_vec(),
        edges,
    })
    .expect("bipartite graph serializes")
}

pub fn bipartite_from_value(value: &Value) -> Result<BipartiteGraph, Error> {
    let raw: BipartiteJson = decode(unwrap(value, InstanceKind::Bipartite)?, "bipartite graph")?;
    BipartiteGraph::new(raw.a, raw.b, raw.edges.into_iter().map(|[a, b]| (a, b)).collect())
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: Vec<Vec<u8>>,
}

pub fn matrix_to_value(matrix: &BoolMatrix) -> Value {
    serde_json::to_value(MatrixJson { rows: matrix.to_rows() }).expect("matrix serializes")
}

pub fn matrix_from_value(value: &Value) -> Result<BoolMatrix, Error> {
    let raw: MatrixJson = decode(unwrap(value, InstanceKind::Matrix)?, "matrix")?;
    BoolMatrix::new(raw.rows)
}

/// Output-only encodings for witnesses and reports.
pub fn witness_to_value(bg: &BipartiteGraph, witness: &TriangularWitness) -> Value {
    serde_json::json!({
        "order_a": witness.order_a.iter().map(|&i| bg.label_a(i)).collect::<Vec<_>>(),
        "order_b": witness.order_b.iter().map(|&j| bg.label_b(j)).collect::<Vec<_>>(),
    })
}

pub fn certificate_to_value(bg: &BipartiteGraph, cert: &UniquePmCertificate) -> Value {
    serde_json::json!({
        "witness": witness_to_value(bg, &cert.witness),
        "matching": cert
            .matching
            .iter()
            .map(|&(a, b)| vec![bg.label_a(a).to_string(), bg.label_b(b).to_string()])
            .collect::<Vec<_>>(),
    })
}

pub fn class_subsets_to_value(bg: &BipartiteGraph, sub_a: &[usize], sub_b: &[usize]) -> Value {
    serde_json::json!({
        "set_a": sub_a.iter().map(|&i| bg.label_a(i)).collect::<Vec<_>>(),
        "set_b": sub_b.iter().map(|&j| bg.label_b(j)).collect::<Vec<_>>(),
    })
}

pub fn vertex_set_to_value(dag: &WeightedDag, set: VertexSet) -> Value {
    Value::Array(
        set.iter()
            .map(|v| Value::String(dag.label(v).to_string()))
            .collect(),
    )
}
