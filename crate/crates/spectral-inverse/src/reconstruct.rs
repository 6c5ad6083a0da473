use crate::{
    abel_data, build_system, loop_weight, small_polygon, solve_v, type2_zigzags, AbelData, InverseError, LinearSystem,
    NullVector, SmallPolygon,
};
use kasteleyn::{kasteleyn_signs, WeightClass};
use lattice_toric::{dot, NewtonPolygon, Point};
use laurent_algebra::{Complex64, LaurentPoly, Scalar};
use spectral_forward::{InfinityPoint, SpectralData, SpectralJson};
use torus_graph::{TorusGraph, ZigZagFan};

/// Relative tolerance on `Π X_f = 1` for numeric reconstructions.
const FACE_PRODUCT: f64 = 1e-6;

/// What the inverse map needs: the curve, the divisor and the points at
/// infinity with their Casimirs.
#[derive(Debug, Clone, PartialEq)]
pub struct InverseInput<S> {
    /// `P`, normalized as the forward map returns it.
    pub polynomial: LaurentPoly<S>,
    pub divisor: Vec<(S, S)>,
    /// Indexed by zig-zag.
    pub infinity: Vec<InfinityPoint<S>>,
}

impl InverseInput<Complex64> {
    /// Numeric input from the output of the forward map.
    pub fn from_forward<T: Scalar>(data: &SpectralData<T>) -> Self {
        Self {
            polynomial: data.polynomial.to_complex(),
            divisor: data.divisor.iter().map(|pt| (pt.z, pt.w)).collect(),
            infinity: data
                .infinity
                .iter()
                .map(|pt| InfinityPoint {
                    zigzag: pt.zigzag,
                    ray: pt.ray,
                    basis: pt.basis,
                    casimir: pt.casimir.to_complex(),
                    residual: pt.residual,
                })
                .collect(),
        }
    }
}

impl<S: Scalar> InverseInput<S> {
    /// Reads spectral JSON. Over exact scalars every divisor coordinate and
    /// Casimir must be given exactly.
    pub fn from_json(g: &TorusGraph, json: &SpectralJson) -> Result<Self, InverseError> {
        let data = SpectralData::<S>::from_json(g, json)?;
        let mut divisor = Vec::with_capacity(json.divisor.len());
        for pt in &json.divisor {
            divisor.push((S::from_json(&pt.p)?, S::from_json(&pt.q)?));
        }
        Ok(Self { polynomial: data.polynomial, divisor, infinity: data.infinity })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InverseOptions {
    /// Worker threads for the per-vertex linear systems.
    pub jobs: usize,
}

impl Default for InverseOptions {
    fn default() -> Self {
        Self { jobs: 1 }
    }
}

/// The recovered class together with the intermediate data, indexed by
/// black vertex where per-vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct Reconstruction<S> {
    pub class: WeightClass<S>,
    pub v: Vec<LaurentPoly<S>>,
    pub small: Vec<SmallPolygon>,
    pub type2: Vec<Vec<usize>>,
    pub systems: Vec<LinearSystem<S>>,
    pub abel: AbelData,
    /// `a_ρ` of `N = Newton(det K)`.
    pub offsets: Vec<i64>,
}

/// `a_ρ` for `N = Newton(P) + [reference matching]`, the Newton polygon of
/// `det K`. Fails unless `Newton(P)` is a translate of the zig-zag polygon.
pub fn placed_offsets<S: Scalar>(
    g: &TorusGraph,
    fan: &ZigZagFan,
    p: &LaurentPoly<S>,
) -> Result<Vec<i64>, InverseError> {
    let shift = g.perfect_matching()?.edge_of_black.iter().fold([0, 0], |acc, &e| {
        let h = g.edge(e).hom;
        [acc[0] + h[0], acc[1] + h[1]]
    });
    let support: Vec<Point> = p.support().into_iter().map(|m| [m[0] + shift[0], m[1] + shift[1]]).collect();
    match NewtonPolygon::hull(&support) {
        Some(n) if n.congruent(&fan.polygon) => {}
        _ => return Err(InverseError::PolygonMismatch),
    }
    Ok((0..fan.num_rays())
        .map(|r| -support.iter().map(|m| dot(*m, fan.normal(r))).min().expect("nonempty support"))
        .collect())
}

struct PerVertex<S> {
    small: SmallPolygon,
    type2: Vec<usize>,
    system: LinearSystem<S>,
    v: LaurentPoly<S>,
}

fn solve_vertex<S: NullVector>(
    g: &TorusGraph,
    fan: &ZigZagFan,
    offsets: &[i64],
    abel: &AbelData,
    input: &InverseInput<S>,
    b: usize,
) -> Result<PerVertex<S>, InverseError> {
    let w = g.root_white();
    let small = small_polygon(g, fan, offsets, abel, b, w)?;
    let type2 = type2_zigzags(g, fan, offsets, abel, &small, b, w)?;
    let system = build_system(g.black_id(b), &small, &input.divisor, &type2, &input.infinity)?;
    let v = solve_v(g.black_id(b), &system)?;
    Ok(PerVertex { small, type2, system, v })
}

/// The inverse map: `V_b` for every black vertex, then face weights from
/// the face boundaries and `A`, `B` from the two cycles of the graph.
pub fn reconstruct_weights<S: NullVector>(
    g: &TorusGraph,
    input: &InverseInput<S>,
    options: InverseOptions,
) -> Result<Reconstruction<S>, InverseError> {
    let fan = g.zigzag_fan()?;
    let genus = fan.genus() as usize;
    if input.divisor.len() != genus {
        return Err(InverseError::DivisorCount { found: input.divisor.len(), expected: genus });
    }
    let offsets = placed_offsets(g, &fan, &input.polynomial)?;
    let abel = abel_data(g, &fan)?;

    let nb = g.num_black();
    let jobs = options.jobs.clamp(1, nb.max(1));
    let mut results: Vec<Option<Result<PerVertex<S>, InverseError>>> = (0..nb).map(|_| None).collect();
    std::thread::scope(|scope| {
        let chunks: Vec<_> = results.chunks_mut(nb.div_ceil(jobs).max(1)).enumerate().collect();
        for (c, chunk) in chunks {
            let (fan, offsets, abel) = (&fan, &offsets, &abel);
            let start = c * nb.div_ceil(jobs).max(1);
            scope.spawn(move || {
                for (i, slot) in chunk.iter_mut().enumerate() {
                    *slot = Some(solve_vertex(g, fan, offsets, abel, input, start + i));
                }
            });
        }
    });
    let mut small = Vec::with_capacity(nb);
    let mut type2 = Vec::with_capacity(nb);
    let mut systems = Vec::with_capacity(nb);
    let mut v = Vec::with_capacity(nb);
    for r in results {
        let r = r.expect("every vertex is solved")?;
        small.push(r.small);
        type2.push(r.type2);
        systems.push(r.system);
        v.push(r.v);
    }

    let signs = kasteleyn_signs(g)?;
    let faces = g
        .faces()
        .iter()
        .map(|f| loop_weight(g, &signs, &f.boundary, &v, &input.infinity))
        .collect::<Result<Vec<S>, _>>()?;
    let [ca, cb] = g.cycles();
    let a = loop_weight(g, &signs, ca, &v, &input.infinity)?;
    let b = loop_weight(g, &signs, cb, &v, &input.infinity)?;
    let product = faces.iter().fold(S::one(), |acc, x| acc * x.clone());
    let off = (product.clone() - S::one()).magnitude();
    if (S::EXACT && off != 0.0) || off > FACE_PRODUCT {
        return Err(InverseError::FaceProduct(format!("{product:?}")));
    }
    Ok(Reconstruction { class: WeightClass { faces, a, b }, v, small, type2, systems, abel, offsets })
}
