//! Test support shared by the downstream crates: fixture loading, the
//! reference figures' edge weights written in face and monodromy symbols,
//! and reproducible random weight draws.

use kasteleyn::{WeightClass, Weights, WeightsSpec};
use laurent_algebra::{parse_rational, BigRational, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use torus_graph::{GraphSpec, TorusGraph};

pub type Q = BigRational;

/// Symbol values: `X1, X2, ..` for faces (by face number), `A`, `B` for the cycles.
pub type Symbols = BTreeMap<String, Q>;

pub const NAMES: [&str; 3] = ["square", "hexagon", "square_octagon"];

pub fn q(s: &str) -> Q {
    parse_rational(s).unwrap()
}

pub fn fixture_path(file: &str) -> String {
    format!("{}/../../fixtures/{file}", env!("CARGO_MANIFEST_DIR"))
}

pub fn read_fixture(file: &str) -> String {
    std::fs::read_to_string(fixture_path(file)).unwrap()
}

pub fn graph(name: &str) -> TorusGraph {
    let spec: GraphSpec = serde_json::from_str(&read_fixture(&format!("{name}.graph.json"))).unwrap();
    TorusGraph::from_spec(&spec).unwrap()
}

pub fn weights_spec(name: &str) -> WeightsSpec {
    serde_json::from_str(&read_fixture(&format!("{name}.weights.json"))).unwrap()
}

pub fn fixture_class(g: &TorusGraph, name: &str) -> WeightClass<Q> {
    match Weights::<Q>::from_spec(g, &weights_spec(name)).unwrap() {
        Weights::Class(c) => c,
        Weights::Edges(_) => unreachable!("fixtures give classes"),
    }
}

/// Symbols of a class: face `fK` becomes `XK`.
pub fn symbols_of(g: &TorusGraph, wc: &WeightClass<Q>) -> Symbols {
    let mut m = Symbols::new();
    for (f, face) in g.faces().iter().enumerate() {
        m.insert(format!("X{}", &face.id[1..]), wc.faces[f].clone());
    }
    m.insert("A".into(), wc.a.clone());
    m.insert("B".into(), wc.b.clone());
    m
}

/// `c · Π sym^k`.
pub fn mono(sym: &Symbols, c: i64, factors: &[(&str, i64)]) -> Q {
    factors.iter().fold(Q::from_integer(c.into()), |acc, (s, k)| acc * sym[*s].powi(*k))
}

type Row = (&'static str, Vec<(&'static str, i64)>);

/// Edge weights of the reference figures as monomials in the symbols.
/// Edges not listed have weight one.
pub fn figure_cocycle(name: &str) -> Vec<Row> {
    match name {
        "square" => vec![
            ("e2", vec![("A", 1)]),
            ("e4", vec![("X1", 1), ("X3", 1), ("B", -1)]),
            ("e5", vec![("X1", 1)]),
            ("e6", vec![("A", -1), ("X2", -1)]),
            ("e8", vec![("B", 1)]),
        ],
        "hexagon" => vec![
            ("e3", vec![("A", 1)]),
            ("e4", vec![("X2", -1)]),
            ("e5", vec![("X3", 1)]),
            ("e8", vec![("A", -1), ("B", -1), ("X1", -1)]),
            ("e10", vec![("X1", 1), ("X4", 1), ("B", 1)]),
            ("e13", vec![("B", 1)]),
        ],
        "square_octagon" => vec![
            ("e1", vec![("A", -1)]),
            ("e3", vec![("X5", -1)]),
            ("e4", vec![("X1", 1), ("X2", -1)]),
            ("e5", vec![("X6", 1)]),
            ("e11", vec![("X1", 1), ("B", 1)]),
            ("e12", vec![("B", -1)]),
            ("e13", vec![("X3", -1)]),
            ("e14", vec![("X7", 1)]),
            ("e16", vec![("X1", 1), ("X5", 1), ("X2", -1), ("X3", -1), ("X4", -1), ("X6", -1), ("X7", -1)]),
            ("e19", vec![("A", 1)]),
        ],
        _ => panic!("no figure for {name}"),
    }
}

/// The figure cocycle at the given symbol values, in edge order.
pub fn figure_weights(g: &TorusGraph, name: &str, sym: &Symbols) -> Vec<Q> {
    let table = figure_cocycle(name);
    g.edges()
        .iter()
        .map(|e| match table.iter().find(|(id, _)| *id == e.id) {
            Some((_, f)) => mono(sym, 1, f),
            None => Q::from_integer(1.into()),
        })
        .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational in `[1/4, 4]` with denominator at most 12.
pub fn random_weight(rng: &mut impl Rng) -> Q {
    let den: i64 = rng.random_range(1..=12);
    let num: i64 = rng.random_range((den + 3) / 4..=4 * den);
    Q::new(num.into(), den.into())
}

/// A random class: every face except the root, then `A` and `B`.
pub fn random_class(g: &TorusGraph, rng: &mut impl Rng) -> WeightClass<Q> {
    let others = (0..g.faces().len() - 1).map(|_| random_weight(rng)).collect();
    let a = random_weight(rng);
    let b = random_weight(rng);
    WeightClass::new(g, others, a, b)
}

/// Random values for every symbol a figure uses (`X1 ..` over all but the
/// last face, `A`, `B`).
pub fn random_symbols(g: &TorusGraph, rng: &mut impl Rng) -> Symbols {
    let mut m = Symbols::new();
    for k in 1..g.faces().len() {
        m.insert(format!("X{k}"), random_weight(rng));
    }
    m.insert("A".into(), random_weight(rng));
    m.insert("B".into(), random_weight(rng));
    m
}

/// Relative error `|a - b| / |b|`.
pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}
