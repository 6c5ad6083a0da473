#![allow(dead_code)]

use kasteleyn::{Weights, WeightsSpec};
use laurent_algebra::{parse_rational, BigRational, LaurentPoly};
use std::collections::HashMap;
use torus_graph::{GraphSpec, TorusGraph};

pub type Q = BigRational;
pub type P = LaurentPoly<Q>;

pub fn q(s: &str) -> Q {
    parse_rational(s).unwrap()
}

pub fn fixture_path(file: &str) -> String {
    format!("{}/../../fixtures/{file}", env!("CARGO_MANIFEST_DIR"))
}

pub fn graph(name: &str) -> TorusGraph {
    let spec: GraphSpec =
        serde_json::from_str(&std::fs::read_to_string(fixture_path(&format!("{name}.graph.json"))).unwrap()).unwrap();
    TorusGraph::from_spec(&spec).unwrap()
}

pub fn weights_spec(name: &str) -> WeightsSpec {
    serde_json::from_str(&std::fs::read_to_string(fixture_path(&format!("{name}.weights.json"))).unwrap()).unwrap()
}

pub fn fixture_class(g: &TorusGraph, name: &str) -> kasteleyn::WeightClass<Q> {
    match Weights::<Q>::from_spec(g, &weights_spec(name)).unwrap() {
        Weights::Class(c) => c,
        Weights::Edges(_) => unreachable!(),
    }
}

/// Symbol values `X1.., A, B` of a fixture, keyed by name.
pub fn symbols(g: &TorusGraph, name: &str) -> HashMap<String, Q> {
    let wc = fixture_class(g, name);
    let mut m = HashMap::new();
    for (f, face) in g.faces().iter().enumerate() {
        m.insert(format!("X{}", &face.id[1..]), wc.faces[f].clone());
    }
    m.insert("A".into(), wc.a.clone());
    m.insert("B".into(), wc.b.clone());
    m
}

/// `c · Π sym^k`.
pub fn mono(sym: &HashMap<String, Q>, c: i64, factors: &[(&str, i64)]) -> Q {
    use laurent_algebra::Scalar;
    factors.iter().fold(Q::from_integer(c.into()), |acc, (s, k)| acc * sym[*s].powi(*k))
}

pub fn poly(terms: Vec<((i64, i64), Q)>) -> P {
    P::from_terms(terms)
}

/// Edge weights of the reference figures, as monomials in the symbols.
pub fn figure_cocycle(name: &str) -> Vec<(&'static str, i64, Vec<(&'static str, i64)>)> {
    match name {
        "square" => vec![
            ("e1", 1, vec![]),
            ("e2", 1, vec![("A", 1)]),
            ("e3", 1, vec![]),
            ("e4", 1, vec![("X1", 1), ("X3", 1), ("B", -1)]),
            ("e5", 1, vec![("X1", 1)]),
            ("e6", 1, vec![("A", -1), ("X2", -1)]),
            ("e7", 1, vec![]),
            ("e8", 1, vec![("B", 1)]),
        ],
        "hexagon" => vec![
            ("e1", 1, vec![]),
            ("e2", 1, vec![]),
            ("e3", 1, vec![("A", 1)]),
            ("e4", 1, vec![("X2", -1)]),
            ("e5", 1, vec![("X3", 1)]),
            ("e6", 1, vec![]),
            ("e7", 1, vec![]),
            ("e8", 1, vec![("A", -1), ("B", -1), ("X1", -1)]),
            ("e9", 1, vec![]),
            ("e10", 1, vec![("X1", 1), ("X4", 1), ("B", 1)]),
            ("e11", 1, vec![]),
            ("e12", 1, vec![]),
            ("e13", 1, vec![("B", 1)]),
            ("e14", 1, vec![]),
            ("e15", 1, vec![]),
        ],
        "square_octagon" => {
            let u = vec![("X1", 1), ("X5", 1), ("X2", -1), ("X3", -1), ("X4", -1), ("X6", -1), ("X7", -1)];
            vec![
                ("e1", 1, vec![("A", -1)]),
                ("e2", 1, vec![]),
                ("e3", 1, vec![("X5", -1)]),
                ("e4", 1, vec![("X1", 1), ("X2", -1)]),
                ("e5", 1, vec![("X6", 1)]),
                ("e6", 1, vec![]),
                ("e7", 1, vec![]),
                ("e8", 1, vec![]),
                ("e9", 1, vec![]),
                ("e10", 1, vec![]),
                ("e11", 1, vec![("X1", 1), ("B", 1)]),
                ("e12", 1, vec![("B", -1)]),
                ("e13", 1, vec![("X3", -1)]),
                ("e14", 1, vec![("X7", 1)]),
                ("e15", 1, vec![]),
                ("e16", 1, u),
                ("e17", 1, vec![]),
                ("e18", 1, vec![]),
                ("e19", 1, vec![("A", 1)]),
                ("e20", 1, vec![]),
                ("e21", 1, vec![]),
                ("e22", 1, vec![]),
                ("e23", 1, vec![]),
                ("e24", 1, vec![]),
            ]
        }
        _ => unreachable!(),
    }
}

/// The figure cocycle evaluated at the fixture's symbol values, in edge order.
pub fn figure_weights(g: &TorusGraph, name: &str) -> Vec<Q> {
    let sym = symbols(g, name);
    let table = figure_cocycle(name);
    g.edges()
        .iter()
        .map(|e| {
            let (_, c, f) = table.iter().find(|(id, _, _)| *id == e.id).unwrap();
            mono(&sym, *c, f)
        })
        .collect()
}
