use crate::divisor::{relative_residual, spectral_divisor, SpectralPoint};
use crate::infinity::{infinity_points, InfinityPoint};
use crate::ForwardError;
use kasteleyn::{casimirs, Kasteleyn};
use lattice_toric::{NewtonPolygon, Point, RayBasis};
use laurent_algebra::{Complex64, LaurentJson, LaurentPoly, Scalar, ScalarJson};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use torus_graph::{GraphError, TorusGraph, SCHEMA};

/// Spectral curve, divisor and points at infinity of a weighted graph.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralData<S> {
    /// The characteristic polynomial `P`, normalized by the reference matching.
    pub polynomial: LaurentPoly<S>,
    /// Newton polygon of `P`.
    pub polygon: NewtonPolygon,
    pub genus: usize,
    /// Sorted by `(re z, im z, re w, im w)`.
    pub divisor: Vec<SpectralPoint>,
    /// Indexed by zig-zag.
    pub infinity: Vec<InfinityPoint<S>>,
}

/// The forward map on an edge cocycle `wt`. The divisor is computed from
/// the adjugate column of the root white vertex.
pub fn forward<S: Scalar>(g: &TorusGraph, wt: &[S], tol: f64) -> Result<SpectralData<S>, ForwardError> {
    let k = Kasteleyn::new(g, wt.to_vec())?;
    let polynomial = k.characteristic_polynomial()?;
    let fan = g.zigzag_fan()?;
    let cas = casimirs(g, &k.weights, &k.signs);
    let infinity = infinity_points(g, &polynomial, &fan, &cas, tol)?;
    let column: Vec<LaurentPoly<Complex64>> =
        k.adjugate_column(g.root_white()).iter().map(|q| q.to_complex()).collect();
    let genus = fan.genus() as usize;
    let divisor = spectral_divisor(&column, &polynomial.to_complex(), genus)?;
    let polygon = polynomial.newton_polygon().expect("P is nonzero");
    Ok(SpectralData { polynomial, polygon, genus, divisor, infinity })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DivisorPointJson {
    pub p: ScalarJson,
    pub q: ScalarJson,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InfinityJson {
    /// Inward normal of the polygon edge.
    pub ray: Point,
    pub class: Point,
    pub x1: Point,
    pub x2: Point,
    pub casimir: ScalarJson,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralJson {
    pub schema: String,
    pub graph: String,
    pub genus: usize,
    pub polynomial: LaurentJson,
    pub polygon: Vec<Point>,
    pub divisor: Vec<DivisorPointJson>,
    /// Keyed by zig-zag name.
    pub infinity: BTreeMap<String, InfinityJson>,
}

impl<S: Scalar> SpectralData<S> {
    pub fn casimirs(&self) -> Vec<S> {
        self.infinity.iter().map(|pt| pt.casimir.clone()).collect()
    }

    pub fn to_json(&self, g: &TorusGraph) -> SpectralJson {
        SpectralJson {
            schema: SCHEMA.to_string(),
            graph: g.name().to_string(),
            genus: self.genus,
            polynomial: LaurentJson::from(&self.polynomial),
            polygon: self.polygon.vertices().to_vec(),
            divisor: self
                .divisor
                .iter()
                .map(|pt| DivisorPointJson { p: pt.z.to_json(), q: pt.w.to_json(), residual: pt.max_residual() })
                .collect(),
            infinity: self
                .infinity
                .iter()
                .map(|pt| {
                    let entry = InfinityJson {
                        ray: pt.basis.normal,
                        class: g.zigzags()[pt.zigzag].class,
                        x1: pt.basis.x1,
                        x2: pt.basis.x2,
                        casimir: pt.casimir.to_json(),
                        residual: pt.residual,
                    };
                    (g.zigzag_name(pt.zigzag), entry)
                })
                .collect(),
        }
    }

    /// Reads spectral data back for a given graph. Rays and bases are
    /// recomputed from the graph; only the Casimirs, `P` and the divisor are
    /// taken from the file.
    pub fn from_json(g: &TorusGraph, json: &SpectralJson) -> Result<Self, ForwardError> {
        if json.schema != SCHEMA {
            return Err(ForwardError::Schema(json.schema.clone()));
        }
        for name in json.infinity.keys() {
            if g.zigzag_index(name).is_none() {
                return Err(ForwardError::UnknownZigZag(name.clone()));
            }
        }
        let polynomial: LaurentPoly<S> = json.polynomial.to_poly()?;
        let polygon = polynomial.newton_polygon().ok_or(laurent_algebra::AlgebraError::ZeroPolynomial)?;
        let fan = g.zigzag_fan()?;
        let mut infinity = Vec::with_capacity(g.zigzags().len());
        for k in 0..g.zigzags().len() {
            let name = g.zigzag_name(k);
            let entry = json.infinity.get(&name).ok_or_else(|| ForwardError::MissingZigZag(name.clone()))?;
            let rho = fan.ray_of[k];
            let edge = &fan.polygon.edges()[rho];
            let basis = RayBasis::new(edge.direction, edge.normal).map_err(GraphError::from)?;
            infinity.push(InfinityPoint {
                zigzag: k,
                ray: rho,
                basis,
                casimir: S::from_json(&entry.casimir)?,
                residual: entry.residual,
            });
        }
        let p = polynomial.to_complex();
        let mut divisor = Vec::with_capacity(json.divisor.len());
        for pt in &json.divisor {
            let z = Complex64::from_json(&pt.p)?;
            let w = Complex64::from_json(&pt.q)?;
            divisor.push(SpectralPoint {
                z,
                w,
                column_residuals: Vec::new(),
                curve_residual: relative_residual(&p, z, w),
            });
        }
        Ok(Self { polynomial, polygon, genus: fan.genus() as usize, divisor, infinity })
    }
}
