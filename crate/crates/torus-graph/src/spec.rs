use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const SCHEMA: &str = "dimer-spectral/1";

/// The JSON form of a torus graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    #[serde(default)]
    pub name: String,
    pub vertices: Vec<VertexSpec>,
    pub edges: Vec<EdgeSpec>,
    pub faces: Vec<FaceSpec>,
    pub root_white: String,
    pub root_face: String,
    /// Closed walks representing the two homology generators; computed when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycles: Option<CyclesSpec>,
    /// Display names for zig-zag paths, keyed to one side each path traverses.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub zigzag_labels: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VertexSpec {
    pub id: String,
    pub color: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeSpec {
    pub id: String,
    pub black: String,
    pub white: String,
    #[serde(default)]
    pub dz: i64,
    #[serde(default)]
    pub dw: i64,
    /// Optional Kasteleyn sign; either every edge has one or none does.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FaceSpec {
    pub id: String,
    pub boundary: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CyclesSpec {
    pub a: Vec<String>,
    pub b: Vec<String>,
}
