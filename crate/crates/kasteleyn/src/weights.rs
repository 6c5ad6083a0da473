use crate::{loop_product, weight_cocycle, KasteleynError};
use laurent_algebra::{parse_rational, Complex64, Scalar, ScalarJson};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use torus_graph::{TorusGraph, SCHEMA};

/// A weight as written in JSON: an integer, a `"num/den"` string, or a complex pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightValue {
    Int(i64),
    Text(String),
    Complex { re: f64, im: f64 },
}

impl WeightValue {
    pub fn to_scalar<S: Scalar>(&self) -> Result<S, KasteleynError> {
        Ok(match self {
            WeightValue::Int(n) => S::from_i64(*n),
            WeightValue::Text(t) => S::from_rational(&parse_rational(t)?),
            WeightValue::Complex { re, im } => S::from_json(&ScalarJson::Complex { re: *re, im: *im })?,
        })
    }

    pub fn from_scalar<S: Scalar>(s: &S) -> Self {
        match s.to_json() {
            ScalarJson::Exact { value } => WeightValue::Text(value),
            ScalarJson::Complex { re, im } => WeightValue::Complex { re, im },
        }
    }
}

/// The weights JSON document. Either `faces` with `A` and `B` (the root face
/// may be omitted), or `edges` giving an explicit cocycle.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct WeightsSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub faces: BTreeMap<String, WeightValue>,
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    pub a: Option<WeightValue>,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub b: Option<WeightValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<BTreeMap<String, WeightValue>>,
}

/// Face weights for every face (product one) and the two monodromies.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightClass<S> {
    pub faces: Vec<S>,
    pub a: S,
    pub b: S,
}

impl<S: Scalar> WeightClass<S> {
    /// Builds a class from the weights of all faces but the root one.
    pub fn new(g: &TorusGraph, others: Vec<S>, a: S, b: S) -> Self {
        let mut it = others.into_iter();
        let mut faces: Vec<S> = (0..g.faces().len())
            .map(|f| if f == g.root_face() { S::one() } else { it.next().expect("one weight per non-root face") })
            .collect();
        let prod = faces.iter().fold(S::one(), |acc, x| acc * x.clone());
        faces[g.root_face()] = S::one() / prod;
        Self { faces, a, b }
    }

    pub fn from_spec(g: &TorusGraph, spec: &WeightsSpec) -> Result<Self, KasteleynError> {
        for id in spec.faces.keys() {
            if g.face_index(id).is_none() {
                return Err(KasteleynError::UnknownWeight(id.clone()));
            }
        }
        let value = |name: &str, v: Option<&WeightValue>| -> Result<S, KasteleynError> {
            let v: S = v.ok_or_else(|| KasteleynError::MissingWeight(name.to_string()))?.to_scalar()?;
            if v.is_zero() {
                return Err(KasteleynError::ZeroWeight(name.to_string()));
            }
            Ok(v)
        };
        let mut others = Vec::new();
        for (f, face) in g.faces().iter().enumerate() {
            if f != g.root_face() {
                others.push(value(&face.id, spec.faces.get(&face.id))?);
            }
        }
        let wc = Self::new(g, others, value("A", spec.a.as_ref())?, value("B", spec.b.as_ref())?);
        let root = &g.face(g.root_face()).id;
        if let Some(given) = spec.faces.get(root) {
            let given: S = value(root, Some(given))?;
            let computed = &wc.faces[g.root_face()];
            let off = (given.clone() - computed.clone()).magnitude();
            let ok = if S::EXACT { off == 0.0 } else { off <= 1e-9 * computed.magnitude().max(1.0) };
            if !ok {
                let prod = given / computed.clone();
                return Err(KasteleynError::InconsistentClass(format!("{prod:?}")));
            }
        }
        Ok(wc)
    }

    pub fn to_spec(&self, g: &TorusGraph) -> WeightsSpec {
        WeightsSpec {
            schema: Some(SCHEMA.to_string()),
            faces: g
                .faces()
                .iter()
                .enumerate()
                .filter(|&(f, _)| f != g.root_face())
                .map(|(f, face)| (face.id.clone(), WeightValue::from_scalar(&self.faces[f])))
                .collect(),
            a: Some(WeightValue::from_scalar(&self.a)),
            b: Some(WeightValue::from_scalar(&self.b)),
            edges: None,
        }
    }

    /// Generator values in cocycle order: non-root faces, then `A`, `B`.
    pub fn generators(&self, g: &TorusGraph) -> Vec<S> {
        (0..g.faces().len())
            .filter(|&f| f != g.root_face())
            .map(|f| self.faces[f].clone())
            .chain([self.a.clone(), self.b.clone()])
            .collect()
    }

    /// The class of an edge cocycle.
    pub fn of_cocycle(g: &TorusGraph, wt: &[S]) -> Self {
        Self {
            faces: g.faces().iter().map(|f| loop_product(&f.boundary, wt)).collect(),
            a: loop_product(&g.cycles()[0], wt),
            b: loop_product(&g.cycles()[1], wt),
        }
    }

    pub fn to_complex(&self) -> WeightClass<Complex64> {
        WeightClass {
            faces: self.faces.iter().map(|x| x.to_complex()).collect(),
            a: self.a.to_complex(),
            b: self.b.to_complex(),
        }
    }

    /// Largest relative deviation between two classes, over all coordinates.
    pub fn max_relative_error(&self, other: &Self) -> f64 {
        self.faces
            .iter()
            .zip(&other.faces)
            .chain([(&self.a, &other.a), (&self.b, &other.b)])
            .map(|(x, y)| (x.clone() - y.clone()).magnitude() / y.magnitude().max(f64::MIN_POSITIVE))
            .fold(0.0, f64::max)
    }
}

/// Weights as read from JSON.
#[derive(Debug, Clone, PartialEq)]
pub enum Weights<S> {
    Class(WeightClass<S>),
    Edges(Vec<S>),
}

impl<S: Scalar> Weights<S> {
    pub fn from_spec(g: &TorusGraph, spec: &WeightsSpec) -> Result<Self, KasteleynError> {
        let Some(edges) = &spec.edges else {
            return WeightClass::from_spec(g, spec).map(Weights::Class);
        };
        if !spec.faces.is_empty() || spec.a.is_some() || spec.b.is_some() {
            return Err(KasteleynError::MixedWeights);
        }
        for id in edges.keys() {
            if g.edge_index(id).is_none() {
                return Err(KasteleynError::UnknownWeight(id.clone()));
            }
        }
        let values = g
            .edges()
            .iter()
            .map(|e| {
                let v: S = edges.get(&e.id).ok_or_else(|| KasteleynError::MissingWeight(e.id.clone()))?.to_scalar()?;
                if v.is_zero() {
                    return Err(KasteleynError::ZeroWeight(e.id.clone()));
                }
                Ok(v)
            })
            .collect::<Result<Vec<S>, _>>()?;
        Ok(Weights::Edges(values))
    }

    pub fn cocycle(&self, g: &TorusGraph) -> Result<Vec<S>, KasteleynError> {
        match self {
            Weights::Class(wc) => weight_cocycle(g, wc),
            Weights::Edges(v) => Ok(v.clone()),
        }
    }

    pub fn class(&self, g: &TorusGraph) -> WeightClass<S> {
        match self {
            Weights::Class(wc) => wc.clone(),
            Weights::Edges(v) => WeightClass::of_cocycle(g, v),
        }
    }
}
