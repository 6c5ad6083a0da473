use crate::InverseError;
use laurent_algebra::{restrict_to_ray, LaurentPoly, Scalar};
use spectral_forward::InfinityPoint;
use torus_graph::{Side, TorusGraph};

/// A path `b --e--> w --e'--> b'` along which a zig-zag turns at `w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Wedge {
    pub white: usize,
    pub zigzag: usize,
    pub incoming: usize,
    pub outgoing: usize,
}

/// Relative size below which a numeric denominator counts as zero.
const ZERO_DENOMINATOR: f64 = 1e-12;

/// Splits a closed walk alternating `+e` (black to white) and `-e'` into
/// wedges. At each white vertex the turn from `e` to `e'` is walked along
/// consecutive zig-zag turns, one wedge per turn.
pub fn wedges_of_loop(g: &TorusGraph, walk: &[Side]) -> Result<Vec<Wedge>, InverseError> {
    if walk.is_empty() || !g.is_closed_walk(walk) {
        return Err(InverseError::NotAWedgePath("walk is not closed".into()));
    }
    let n = walk.len();
    let mut out = Vec::new();
    for (i, side) in walk.iter().enumerate() {
        let next = walk[(i + 1) % n];
        if side.forward == next.forward {
            return Err(InverseError::NotAWedgePath(format!(
                "{} and {} do not alternate colors",
                g.side_label(*side),
                g.side_label(next)
            )));
        }
        if !side.forward {
            continue;
        }
        let white = g.edge(side.edge).white;
        let mut cur = side.edge;
        let mut steps = 0;
        while cur != next.edge {
            let turn = g.turn_at_white(cur);
            out.push(Wedge { white, zigzag: g.zigzag_of_side(Side::plus(cur)), incoming: cur, outgoing: turn });
            cur = turn;
            steps += 1;
            if steps > g.edges_at_white(white).count() {
                return Err(InverseError::NotAWedgePath(format!(
                    "no turn reaches {} at {}",
                    g.edge(next.edge).id,
                    g.white_id(white)
                )));
            }
        }
    }
    Ok(out)
}

/// `r = -(ε(e') χ^{h(e')} V_{b'}) / (ε(e) χ^{h(e)} V_b)` at the point at
/// infinity of the wedge's zig-zag: both sides are written in the ray basis,
/// the common power of `x₂` is cancelled and the leading parts are evaluated
/// at `x₁ = 1/C`.
pub fn wedge_ratio<S: Scalar>(
    g: &TorusGraph,
    signs: &[i8],
    wedge: &Wedge,
    v: &[LaurentPoly<S>],
    point: &InfinityPoint<S>,
) -> Result<S, InverseError> {
    let part = |e: usize| -> Result<_, InverseError> {
        let edge = g.edge(e);
        let f = v[edge.black].shift(edge.hom[0], edge.hom[1]).scale(&S::from_i64(i64::from(signs[e])));
        Ok(restrict_to_ray(&f, &point.basis)?)
    };
    let (num, den) = (part(wedge.outgoing)?, part(wedge.incoming)?);
    let name = || g.zigzag_name(wedge.zigzag);
    if num.order != den.order {
        return Err(InverseError::OrderMismatch { zigzag: name(), numerator: num.order, denominator: den.order });
    }
    let t = point.coordinate();
    let bottom = den.eval(&t);
    let scale: f64 = den.leading.iter().map(|(&b, c)| (c.clone() * t.powi(b)).magnitude()).sum();
    let zero = if S::EXACT { bottom.is_zero() } else { bottom.magnitude() <= ZERO_DENOMINATOR * scale };
    if zero {
        return Err(InverseError::ZeroDenominator(name()));
    }
    Ok(-(num.eval(&t) / bottom))
}

/// Product of the wedge ratios of a closed alternating walk. Equals the
/// weight of the walk, `Π wt(e)^{±1}`.
pub fn loop_weight<S: Scalar>(
    g: &TorusGraph,
    signs: &[i8],
    walk: &[Side],
    v: &[LaurentPoly<S>],
    infinity: &[InfinityPoint<S>],
) -> Result<S, InverseError> {
    let mut acc = S::one();
    for w in wedges_of_loop(g, walk)? {
        acc = acc * wedge_ratio(g, signs, &w, v, &infinity[w.zigzag])?;
    }
    Ok(acc)
}
