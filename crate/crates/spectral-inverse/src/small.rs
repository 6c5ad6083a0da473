use crate::{AbelData, InverseError};
use lattice_toric::{divisor_to_polygon, Point, RationalDivisor, RationalPolygon, Q};
use torus_graph::{TorusGraph, ZigZagFan};

/// The small polygon of a pair `(b, w)`: the polygon of the divisor
/// `Y = D_N - D(w) + D(b) - Σ_{α ∋ b} D_ρ(α)/|E_ρ(α)|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallPolygon {
    pub divisor: RationalDivisor,
    pub polygon: RationalPolygon,
    /// Lattice points, lexicographically sorted.
    pub points: Vec<Point>,
}

/// Number of zig-zags on each ray passing through black vertex `b`.
pub(crate) fn strands_through(g: &TorusGraph, fan: &ZigZagFan, b: usize) -> Vec<i64> {
    let mut count = vec![0; fan.num_rays()];
    for (k, z) in g.zigzags().iter().enumerate() {
        if z.sides.iter().any(|s| g.edge(s.edge).black == b) {
            count[fan.ray_of[k]] += 1;
        }
    }
    count
}

/// `Y` from the discrete Abel map, averaged over the zig-zags of each ray.
/// `offsets` places `N`: its ray-`ρ` edge lies on `<m, u_ρ> = -offsets[ρ]`.
fn formula_divisor(
    g: &TorusGraph,
    fan: &ZigZagFan,
    offsets: &[i64],
    abel: &AbelData,
    b: usize,
    w: usize,
) -> RationalDivisor {
    let (db, dw) = (&abel.discrete.black[b], &abel.discrete.white[w]);
    let through = strands_through(g, fan, b);
    RationalDivisor::new(
        fan.members
            .iter()
            .enumerate()
            .map(|(r, ks)| {
                let diff: i64 = ks.iter().map(|&k| db[k] - dw[k]).sum();
                Q::from_integer(offsets[r]) + Q::new(diff - through[r], fan.length(r))
            })
            .collect(),
    )
}

/// The strip rule. On ray `ρ` with `k` parallel zig-zags the strips between
/// them are numbered by `k·D(·)_ρ`; the side of the small polygon is the side
/// of `N` moved in by `n/k` steps, `n` the number of strips from `b` to `w`,
/// and one further step when `b` lies on one of the zig-zags.
pub fn strip_polygon(
    g: &TorusGraph,
    fan: &ZigZagFan,
    offsets: &[i64],
    abel: &AbelData,
    b: usize,
    w: usize,
) -> Result<RationalPolygon, InverseError> {
    let mismatch = |detail: String| InverseError::StripMismatch {
        black: g.black_id(b).to_string(),
        white: g.white_id(w).to_string(),
        detail,
    };
    let through = strands_through(g, fan, b);
    let mut bounds = Vec::with_capacity(fan.num_rays());
    for r in 0..fan.num_rays() {
        let k = fan.length(r);
        let strips = (abel.black[b].coeff(r) - abel.white[w].coeff(r)) * Q::from_integer(k);
        if !strips.is_integer() {
            return Err(mismatch(format!("fractional strip count {strips} on ray {r}")));
        }
        if through[r] > 1 {
            return Err(mismatch(format!("{} parallel zig-zags through the black vertex", through[r])));
        }
        let shift = strips.to_integer() - through[r];
        bounds.push(Q::from_integer(offsets[r]) + Q::new(shift, k));
    }
    Ok(divisor_to_polygon(&RationalDivisor::new(bounds), &fan.polygon.fan())?)
}

/// Small polygon of `(b, w)` by the divisor formula, checked against the
/// strip rule.
pub fn small_polygon(
    g: &TorusGraph,
    fan: &ZigZagFan,
    offsets: &[i64],
    abel: &AbelData,
    b: usize,
    w: usize,
) -> Result<SmallPolygon, InverseError> {
    let divisor = formula_divisor(g, fan, offsets, abel, b, w);
    let polygon = divisor_to_polygon(&divisor, &fan.polygon.fan())?;
    let points = polygon.lattice_points();
    let strip = strip_polygon(g, fan, offsets, abel, b, w)?;
    if strip.lattice_points() != points {
        return Err(InverseError::StripMismatch {
            black: g.black_id(b).to_string(),
            white: g.white_id(w).to_string(),
            detail: format!("lattice points {:?} vs {:?}", points, strip.lattice_points()),
        });
    }
    Ok(SmallPolygon { divisor, polygon, points })
}
