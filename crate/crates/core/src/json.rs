//! Canonical JSON codecs for the shared record types.
//!
//! Encoding is deterministic: object keys are sorted (serde_json's default
//! map is ordered), lists whose order carries no meaning are sorted, and all
//! indices are 0-based. Decoding validates the semantic invariants and names
//! the offending field on failure.

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::classifier::{CaseEvaluation, ClassificationReport};
use crate::designs::IncidenceStructure;
use crate::graphs::Graph;
use crate::permgroup::{GeneratedGroup, Permutation};
use crate::quotient::{Check, LambdaStatus, SymmetricTriple};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{path}: {message}")]
pub struct SchemaError {
    pub path: String,
    pub message: String,
}

impl SchemaError {
    fn new(path: impl Into<String>, message: impl Into<String>) -> Self {
        SchemaError {
            path: path.into(),
            message: message.into(),
        }
    }
}

/// Canonical text form of a JSON value: compact, sorted keys, one trailing
/// newline.
pub fn to_canonical_string(value: &Value) -> String {
    let mut s = serde_json::to_string(value).expect("serialization cannot fail");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------------
// encode
// ---------------------------------------------------------------------------

pub fn encode_graph(g: &Graph) -> Value {
    json!({
        "vertices": g.vertex_count(),
        "edges": g.edges().iter().map(|&(u, v)| vec![u, v]).collect::<Vec<_>>(),
    })
}

pub fn encode_group(g: &GeneratedGroup) -> Value {
    json!({
        "degree": g.degree(),
        "generators": g
            .generators()
            .iter()
            .map(|p| p.images().to_vec())
            .collect::<Vec<_>>(),
    })
}

pub fn encode_triple(t: &SymmetricTriple) -> Value {
    json!({
        "graph": encode_graph(t.graph()),
        "group": encode_group(t.group()),
        "partition": t.partition().to_vec(),
    })
}

pub fn encode_design(d: &IncidenceStructure) -> Value {
    json!({
        "points": d.point_count(),
        "blocks": d.canonical_blocks(),
    })
}

fn encode_checks(checks: &[Check]) -> Value {
    Value::Array(
        checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "passed": c.passed,
                    "detail": c.detail,
                })
            })
            .collect(),
    )
}

fn encode_case_evaluations(evals: &[CaseEvaluation]) -> Value {
    Value::Array(
        evals
            .iter()
            .map(|e| {
                json!({
                    "case": e.tag.to_string(),
                    "matched": e.matched,
                    "checks": encode_checks(&e.checks),
                })
            })
            .collect(),
    )
}

/// The report record: fixed keys `case`, `evidence`, `fingerprints`,
/// `identities`, `lambda`, `parameters` (alphabetical in the output).
pub fn encode_report(r: &ClassificationReport) -> Value {
    let lambda = match &r.lambda {
        None => Value::Null,
        Some(l) => {
            let mut m = Map::new();
            match l.status {
                LambdaStatus::Constant(lam) => {
                    m.insert("status".into(), json!("constant"));
                    m.insert("lambda".into(), json!(lam));
                    m.insert("lambda_bar".into(), json!(l.lambda_bar));
                }
                LambdaStatus::NonConstant(w) => {
                    m.insert("status".into(), json!("non_constant"));
                    m.insert(
                        "witness".into(),
                        json!({
                            "block": w.block,
                            "pair": [w.pair.0, w.pair.1],
                            "value": w.value,
                            "expected": w.expected,
                        }),
                    );
                }
            }
            m.insert("single_pair".into(), json!(l.single_pair));
            Value::Object(m)
        }
    };

    let fingerprints = serde_json::to_value(&r.fingerprints).expect("serializable");
    let mut fp = fingerprints;
    if let Value::Object(ref mut m) = fp {
        m.insert(
            "quotient_two_arc_transitive".into(),
            json!(r.quotient_two_arc_transitive),
        );
    }

    let mut evidence = encode_checks(&r.preconditions);
    if let Value::Array(ref mut entries) = evidence {
        if let Value::Array(cases) = encode_case_evaluations(&r.case_evaluations) {
            entries.extend(cases);
        }
        for f in &r.findings {
            entries.push(json!({ "finding": f }));
        }
    }

    json!({
        "case": r.matched_case.map(|c| c.to_string()),
        "evidence": evidence,
        "fingerprints": fp,
        "identities": encode_checks(&r.identities),
        "lambda": lambda,
        "parameters": {
            "v": r.parameters.v,
            "k": r.parameters.k,
            "r": r.parameters.r,
            "b": r.parameters.b,
            "m": r.parameters.m,
            "p": r.p,
        },
    })
}

// ---------------------------------------------------------------------------
// decode
// ---------------------------------------------------------------------------

fn as_object<'v>(value: &'v Value, path: &str) -> Result<&'v Map<String, Value>, SchemaError> {
    value
        .as_object()
        .ok_or_else(|| SchemaError::new(path, "expected an object"))
}

fn field<'v>(obj: &'v Map<String, Value>, path: &str, key: &str) -> Result<&'v Value, SchemaError> {
    obj.get(key)
        .ok_or_else(|| SchemaError::new(format!("{path}.{key}"), "missing field"))
}

fn as_usize(value: &Value, path: &str) -> Result<usize, SchemaError> {
    value
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| SchemaError::new(path, "expected a non-negative integer"))
}

fn as_usize_list(value: &Value, path: &str) -> Result<Vec<usize>, SchemaError> {
    let arr = value
        .as_array()
        .ok_or_else(|| SchemaError::new(path, "expected an array"))?;
    arr.iter()
        .enumerate()
        .map(|(i, v)| as_usize(v, &format!("{path}[{i}]")))
        .collect()
}

pub fn decode_graph(value: &Value, path: &str) -> Result<Graph, SchemaError> {
    let obj = as_object(value, path)?;
    let vertices = as_usize(field(obj, path, "vertices")?, &format!("{path}.vertices"))?;
    let edges_value = field(obj, path, "edges")?;
    let edges_arr = edges_value
        .as_array()
        .ok_or_else(|| SchemaError::new(format!("{path}.edges"), "expected an array"))?;
    let mut edges = Vec::with_capacity(edges_arr.len());
    for (i, e) in edges_arr.iter().enumerate() {
        let epath = format!("{path}.edges[{i}]");
        let pair = as_usize_list(e, &epath)?;
        if pair.len() != 2 {
            return Err(SchemaError::new(epath, "expected a pair [u, v]"));
        }
        edges.push((pair[0], pair[1]));
    }
    Graph::from_edges(vertices, &edges)
        .map_err(|e| SchemaError::new(format!("{path}.edges"), e.to_string()))
}

pub fn decode_group(value: &Value, path: &str) -> Result<GeneratedGroup, SchemaError> {
    let obj = as_object(value, path)?;
    let degree = as_usize(field(obj, path, "degree")?, &format!("{path}.degree"))?;
    let gens_value = field(obj, path, "generators")?;
    let gens_arr = gens_value
        .as_array()
        .ok_or_else(|| SchemaError::new(format!("{path}.generators"), "expected an array"))?;
    let mut generators = Vec::with_capacity(gens_arr.len());
    for (i, g) in gens_arr.iter().enumerate() {
        let gpath = format!("{path}.generators[{i}]");
        let images = as_usize_list(g, &gpath)?;
        if images.len() != degree {
            return Err(SchemaError::new(
                gpath,
                format!("length {} does not match degree {degree}", images.len()),
            ));
        }
        generators
            .push(Permutation::from_images(images).map_err(|e| SchemaError::new(gpath, e.to_string()))?);
    }
    GeneratedGroup::new(degree, generators)
        .map_err(|e| SchemaError::new(path.to_string(), e.to_string()))
}

pub fn decode_triple(value: &Value, path: &str) -> Result<SymmetricTriple, SchemaError> {
    let obj = as_object(value, path)?;
    let graph = decode_graph(field(obj, path, "graph")?, &format!("{path}.graph"))?;
    let group = decode_group(field(obj, path, "group")?, &format!("{path}.group"))?;
    let partition_value = field(obj, path, "partition")?;
    let blocks_arr = partition_value
        .as_array()
        .ok_or_else(|| SchemaError::new(format!("{path}.partition"), "expected an array"))?;
    let mut partition = Vec::with_capacity(blocks_arr.len());
    for (i, b) in blocks_arr.iter().enumerate() {
        partition.push(as_usize_list(b, &format!("{path}.partition[{i}]"))?);
    }
    SymmetricTriple::new(graph, group, partition)
        .map_err(|e| SchemaError::new(format!("{path}.partition"), e.to_string()))
}

pub fn decode_design(value: &Value, path: &str) -> Result<IncidenceStructure, SchemaError> {
    let obj = as_object(value, path)?;
    let points = as_usize(field(obj, path, "points")?, &format!("{path}.points"))?;
    let blocks_value = field(obj, path, "blocks")?;
    let blocks_arr = blocks_value
        .as_array()
        .ok_or_else(|| SchemaError::new(format!("{path}.blocks"), "expected an array"))?;
    let mut blocks = Vec::with_capacity(blocks_arr.len());
    for (i, b) in blocks_arr.iter().enumerate() {
        blocks.push(as_usize_list(b, &format!("{path}.blocks[{i}]"))?);
    }
    IncidenceStructure::new(points, blocks)
        .map_err(|e| SchemaError::new(format!("{path}.blocks"), e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn graph_round_trip_is_canonical() {
        let g = Graph::cycle(6).unwrap();
        let encoded = encode_graph(&g);
        let text = to_canonical_string(&encoded);
        let reparsed: Value = serde_json::from_str(&text).unwrap();
        let decoded = decode_graph(&reparsed, "graph").unwrap();
        assert_eq!(decoded, g);
        assert_eq!(to_canonical_string(&encode_graph(&decoded)), text);
        // Keys come out alphabetically.
        assert!(text.starts_with("{\"edges\""));
    }

    #[test]
    fn triple_round_trip_on_catalog() {
        for (key, triple) in catalog::suite_triples() {
            let encoded = encode_triple(&triple);
            let decoded = decode_triple(&encoded, "triple").unwrap();
            assert_eq!(decoded.graph(), triple.graph(), "{key}");
            assert_eq!(decoded.partition(), triple.partition(), "{key}");
            assert_eq!(
                to_canonical_string(&encode_triple(&decoded)),
                to_canonical_string(&encoded),
                "{key}"
            );
        }
    }

    #[test]
    fn overlapping_partition_names_vertex() {
        let value = json!({
            "graph": {"vertices": 4, "edges": [[0, 1], [2, 3]]},
            "group": {"degree": 4, "generators": []},
            "partition": [[0, 1], [1, 2, 3]],
        });
        let err = decode_triple(&value, "triple").unwrap_err();
        assert_eq!(err.path, "triple.partition");
        assert!(err.message.contains("vertex 1"), "{}", err.message);
    }

    #[test]
    fn non_bijective_generator_is_a_schema_violation() {
        let value = json!({"degree": 3, "generators": [[0, 0, 1]]});
        let err = decode_group(&value, "group").unwrap_err();
        assert_eq!(err.path, "group.generators[0]");
        assert!(err.message.contains("bijection"), "{}", err.message);
    }

    #[test]
    fn malformed_records_name_the_field() {
        let err = decode_graph(&json!({"vertices": 3}), "graph").unwrap_err();
        assert_eq!(err.path, "graph.edges");
        let err = decode_graph(&json!({"vertices": 2, "edges": [[0]]}), "graph").unwrap_err();
        assert_eq!(err.path, "graph.edges[0]");
        let err = decode_design(&json!({"points": 2, "blocks": [[5]]}), "design").unwrap_err();
        assert!(err.path.starts_with("design.blocks"));
    }

    #[test]
    fn design_encoding_is_sorted() {
        let d = IncidenceStructure::new(3, vec![vec![2, 1], vec![0]]).unwrap();
        let text = to_canonical_string(&encode_design(&d));
        assert_eq!(text, "{\"blocks\":[[0],[1,2]],\"points\":3}\n");
        let decoded = decode_design(&serde_json::from_str(&text).unwrap(), "design").unwrap();
        assert_eq!(decoded, d);
    }
}
