use crate::{read_json, CliError, Mode};
use kasteleyn::{casimirs, Kasteleyn, WeightClass, Weights, WeightsSpec};
use lattice_toric::Point;
use laurent_algebra::{BigRational, Complex64, LaurentJson, Scalar, ScalarJson};
use serde::Serialize;
use spectral_forward::{forward, SpectralJson};
use spectral_inverse::{reconstruct_weights, InverseInput, InverseOptions, NullVector};
use std::collections::BTreeMap;
use std::path::Path;
use torus_graph::{GraphSpec, TorusGraph, SCHEMA};

fn check_schema(schema: Option<&str>) -> Result<(), CliError> {
    match schema {
        Some(s) if s != SCHEMA => Err(CliError::Schema(s.to_string())),
        _ => Ok(()),
    }
}

fn load_graph(path: &Path) -> Result<TorusGraph, CliError> {
    let spec: GraphSpec = read_json(path)?;
    check_schema(spec.schema.as_deref())?;
    Ok(TorusGraph::from_spec(&spec)?)
}

fn load_weights(path: &Path) -> Result<WeightsSpec, CliError> {
    let spec: WeightsSpec = read_json(path)?;
    check_schema(spec.schema.as_deref())?;
    Ok(spec)
}

fn value<T: Serialize>(doc: &T) -> serde_json::Value {
    serde_json::to_value(doc).expect("documents serialize")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZigZagJson {
    pub name: String,
    pub class: Point,
    /// Inward normal of the polygon edge the zig-zag is parallel to.
    pub ray: Point,
    pub sides: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZigZagListJson {
    pub schema: String,
    pub graph: String,
    pub zigzags: Vec<ZigZagJson>,
    pub minimal: bool,
    pub violations: Vec<String>,
}

pub fn cmd_zigzag(graph: &Path) -> Result<serde_json::Value, CliError> {
    let g = load_graph(graph)?;
    let fan = g.zigzag_fan()?;
    let zigzags = g
        .zigzags()
        .iter()
        .enumerate()
        .map(|(k, z)| ZigZagJson {
            name: g.zigzag_name(k),
            class: z.class,
            ray: fan.normal(fan.ray_of[k]),
            sides: z.sides.iter().map(|s| g.side_label(*s)).collect(),
        })
        .collect();
    let violations: Vec<String> = g.check_minimality().iter().map(|v| format!("{v:?}")).collect();
    Ok(value(&ZigZagListJson {
        schema: SCHEMA.into(),
        graph: g.name().into(),
        zigzags,
        minimal: violations.is_empty(),
        violations,
    }))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgeJson {
    pub normal: Point,
    pub direction: Point,
    pub length: i64,
    /// `a` in `<m, normal> >= -a`.
    pub offset: i64,
    pub zigzags: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NewtonJson {
    pub schema: String,
    pub graph: String,
    pub genus: i64,
    pub vertices: Vec<Point>,
    pub edges: Vec<EdgeJson>,
    /// Sorted.
    pub lattice_points: Vec<Point>,
    pub interior_points: Vec<Point>,
    /// The polygon as a divisor, keyed by inward normal.
    pub divisor: BTreeMap<String, String>,
}

pub fn cmd_newton(graph: &Path) -> Result<serde_json::Value, CliError> {
    let g = load_graph(graph)?;
    let fan = g.zigzag_fan()?;
    let poly = &fan.polygon;
    let edges = poly
        .edges()
        .iter()
        .enumerate()
        .map(|(r, e)| EdgeJson {
            normal: e.normal,
            direction: e.direction,
            length: e.length,
            offset: e.offset,
            zigzags: fan.members[r].iter().map(|&k| g.zigzag_name(k)).collect(),
        })
        .collect();
    let mut lattice_points = poly.lattice_points();
    lattice_points.sort_unstable();
    let mut interior_points = poly.interior_points();
    interior_points.sort_unstable();
    let divisor = poly
        .edges()
        .iter()
        .zip(poly.divisor().coeffs())
        .map(|(e, c)| (format!("({},{})", e.normal[0], e.normal[1]), c.to_string()))
        .collect();
    Ok(value(&NewtonJson {
        schema: SCHEMA.into(),
        graph: g.name().into(),
        genus: fan.genus(),
        vertices: poly.vertices().to_vec(),
        edges,
        lattice_points,
        interior_points,
        divisor,
    }))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatrixEntryJson {
    pub white: String,
    pub black: String,
    pub entry: LaurentJson,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KasteleynJson {
    pub schema: String,
    pub graph: String,
    pub mode: Mode,
    pub signs: BTreeMap<String, i8>,
    pub edge_weights: BTreeMap<String, ScalarJson>,
    /// Nonzero entries, rows are white vertices.
    pub matrix: Vec<MatrixEntryJson>,
    pub reference_matching: Vec<String>,
    pub determinant: LaurentJson,
    pub polynomial: LaurentJson,
    pub casimirs: BTreeMap<String, ScalarJson>,
}

fn kasteleyn_doc<S: Scalar>(g: &TorusGraph, spec: &WeightsSpec, mode: Mode) -> Result<KasteleynJson, CliError> {
    let wt = Weights::<S>::from_spec(g, spec)?.cocycle(g)?;
    let k = Kasteleyn::new(g, wt)?;
    let edge_id = |e: usize| g.edge(e).id.clone();
    let mut matrix = Vec::new();
    for w in 0..g.num_white() {
        for b in 0..g.num_black() {
            let entry = k.matrix.get(w, b);
            if !entry.is_zero() {
                matrix.push(MatrixEntryJson {
                    white: g.white_id(w).into(),
                    black: g.black_id(b).into(),
                    entry: entry.into(),
                });
            }
        }
    }
    let cas = casimirs(g, &k.weights, &k.signs);
    Ok(KasteleynJson {
        schema: SCHEMA.into(),
        graph: g.name().into(),
        mode,
        signs: k.signs.iter().enumerate().map(|(e, s)| (edge_id(e), *s)).collect(),
        edge_weights: k.weights.iter().enumerate().map(|(e, x)| (edge_id(e), x.to_json())).collect(),
        matrix,
        reference_matching: k.reference.edges().into_iter().map(edge_id).collect(),
        determinant: (&k.determinant()).into(),
        polynomial: (&k.characteristic_polynomial()?).into(),
        casimirs: cas.iter().enumerate().map(|(a, c)| (g.zigzag_name(a), c.to_json())).collect(),
    })
}

pub fn cmd_kasteleyn(graph: &Path, weights: &Path, mode: Mode) -> Result<serde_json::Value, CliError> {
    let g = load_graph(graph)?;
    let spec = load_weights(weights)?;
    Ok(value(&match mode {
        Mode::Exact => kasteleyn_doc::<BigRational>(&g, &spec, mode)?,
        Mode::Numeric => kasteleyn_doc::<Complex64>(&g, &spec, mode)?,
    }))
}

fn forward_doc<S: Scalar>(g: &TorusGraph, spec: &WeightsSpec, tol: f64) -> Result<SpectralJson, CliError> {
    let wt = Weights::<S>::from_spec(g, spec)?.cocycle(g)?;
    Ok(forward(g, &wt, tol)?.to_json(g))
}

/// Spectral JSON. In exact mode `P` and the Casimirs are exact; the divisor
/// is always numeric.
pub fn cmd_forward(graph: &Path, weights: &Path, mode: Mode, tol: f64) -> Result<serde_json::Value, CliError> {
    let g = load_graph(graph)?;
    let spec = load_weights(weights)?;
    Ok(value(&match mode {
        Mode::Exact => forward_doc::<BigRational>(&g, &spec, tol)?,
        Mode::Numeric => forward_doc::<Complex64>(&g, &spec, tol)?,
    }))
}

fn inverse_doc<S: NullVector>(g: &TorusGraph, json: &SpectralJson, jobs: usize) -> Result<WeightsSpec, CliError> {
    let input = InverseInput::<S>::from_json(g, json)?;
    let rec = reconstruct_weights(g, &input, InverseOptions { jobs })?;
    Ok(rec.class.to_spec(g))
}

/// A weights document for the class recovered from spectral JSON. Exact
/// mode needs every divisor coordinate and Casimir given exactly.
pub fn cmd_inverse(graph: &Path, spectral: &Path, mode: Mode, jobs: usize) -> Result<serde_json::Value, CliError> {
    if jobs == 0 {
        return Err(CliError::Jobs);
    }
    let g = load_graph(graph)?;
    let json: SpectralJson = read_json(spectral)?;
    check_schema(Some(&json.schema))?;
    Ok(value(&match mode {
        Mode::Exact => inverse_doc::<BigRational>(&g, &json, jobs)?,
        Mode::Numeric => inverse_doc::<Complex64>(&g, &json, jobs)?,
    }))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuantityError {
    /// Face id, `A` or `B`.
    pub name: String,
    pub expected: ScalarJson,
    pub recovered: ScalarJson,
    pub abs_error: f64,
    pub rel_error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RoundTripReport {
    pub schema: String,
    pub graph: String,
    pub mode: Mode,
    pub quantities: Vec<QuantityError>,
    pub max_abs_error: f64,
    pub max_rel_error: f64,
}

fn round_trip<S: Scalar>(
    g: &TorusGraph,
    spec: &WeightsSpec,
    mode: Mode,
    tol: f64,
    jobs: usize,
) -> Result<RoundTripReport, CliError> {
    let weights = Weights::<S>::from_spec(g, spec)?;
    let data = forward(g, &weights.cocycle(g)?, tol)?;
    let rec = reconstruct_weights(g, &InverseInput::from_forward(&data), InverseOptions { jobs })?;
    let expected: WeightClass<Complex64> = weights.class(g).to_complex();
    let names = g.faces().iter().map(|f| f.id.clone()).chain(["A".to_string(), "B".to_string()]);
    let pairs = expected
        .faces
        .iter()
        .chain([&expected.a, &expected.b])
        .zip(rec.class.faces.iter().chain([&rec.class.a, &rec.class.b]));
    let quantities: Vec<QuantityError> = names
        .zip(pairs)
        .map(|(name, (x, y))| {
            let abs_error = (y - x).norm();
            QuantityError {
                name,
                expected: x.to_json(),
                recovered: y.to_json(),
                abs_error,
                rel_error: abs_error / x.norm(),
            }
        })
        .collect();
    Ok(RoundTripReport {
        schema: SCHEMA.into(),
        graph: g.name().into(),
        mode,
        max_abs_error: quantities.iter().map(|q| q.abs_error).fold(0.0, f64::max),
        max_rel_error: quantities.iter().map(|q| q.rel_error).fold(0.0, f64::max),
        quantities,
    })
}

/// Forward map (exact or numeric), then the numeric inverse, compared with
/// the input class coordinate by coordinate.
pub fn cmd_roundtrip(
    graph: &Path,
    weights: &Path,
    mode: Mode,
    tol: f64,
    jobs: usize,
) -> Result<serde_json::Value, CliError> {
    if jobs == 0 {
        return Err(CliError::Jobs);
    }
    let g = load_graph(graph)?;
    let spec = load_weights(weights)?;
    Ok(value(&match mode {
        Mode::Exact => round_trip::<BigRational>(&g, &spec, mode, tol, jobs)?,
        Mode::Numeric => round_trip::<Complex64>(&g, &spec, mode, tol, jobs)?,
    }))
}
