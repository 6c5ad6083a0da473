use crate::small::strands_through;
use crate::{AbelData, InverseError, SmallPolygon};
use lattice_toric::Q;
use torus_graph::{TorusGraph, ZigZagFan};

/// Zig-zags whose point at infinity the function `V_b` must vanish at,
/// beyond what the small polygon forces: the coefficient of `ν(α)` in
/// `d(w) - d(b) + Σ ν + ⌊Y⌋ - D_N` restricted to the curve, which is
/// `d(w)_α - d(b)_α + 1 + ⌊Y_ρ⌋ - a_ρ`. Sorted by zig-zag. The result is
/// checked against the strip cases and, for simple `N`, the shortcut.
pub fn type2_zigzags(
    g: &TorusGraph,
    fan: &ZigZagFan,
    offsets: &[i64],
    abel: &AbelData,
    small: &SmallPolygon,
    b: usize,
    w: usize,
) -> Result<Vec<usize>, InverseError> {
    let mut out = Vec::new();
    for k in 0..g.zigzags().len() {
        let r = fan.ray_of[k];
        let floor = small.divisor.coeff(r).floor().to_integer();
        let e = abel.discrete.white[w][k] - abel.discrete.black[b][k] + 1 + floor - offsets[r];
        match e {
            0 => {}
            1 => out.push(k),
            e if e < 0 => return Err(InverseError::NegativeCoefficient(g.zigzag_name(k))),
            e => return Err(InverseError::UnsupportedMultiplicity { zigzag: g.zigzag_name(k), multiplicity: e }),
        }
    }
    let strip = strip_type2(g, fan, abel, b, w)?;
    let short = type2_shortcut(g, fan, b);
    if strip != out || short.is_some_and(|s| s != out) {
        return Err(InverseError::StripMismatch {
            black: g.black_id(b).to_string(),
            white: g.white_id(w).to_string(),
            detail: format!("type-2 zig-zags {out:?} vs strip cases {strip:?}"),
        });
    }
    Ok(out)
}

/// When every side of `N` is primitive the type-2 zig-zags are those not
/// passing through `b`. `None` otherwise.
pub fn type2_shortcut(g: &TorusGraph, fan: &ZigZagFan, b: usize) -> Option<Vec<usize>> {
    if (0..fan.num_rays()).any(|r| fan.length(r) != 1) {
        return None;
    }
    let out = g
        .zigzags()
        .iter()
        .enumerate()
        .filter(|(_, z)| !z.sides.iter().any(|s| g.edge(s.edge).black == b))
        .map(|(k, _)| k)
        .collect();
    Some(out)
}

/// The strip cases. On a ray with `k` zig-zags, label them `β_1 .. β_k` by
/// their strip position counted back from `b`, and let `r` be the strip
/// count from `b` to `w` modulo `k`. The type-2 zig-zags of the ray are
/// `β_{r+1} .. β_k`, except when `r = 0`: then all of them if `b` is on none,
/// and none if `b` is on one.
pub fn strip_type2(
    g: &TorusGraph,
    fan: &ZigZagFan,
    abel: &AbelData,
    b: usize,
    w: usize,
) -> Result<Vec<usize>, InverseError> {
    let mismatch = |detail: String| InverseError::StripMismatch {
        black: g.black_id(b).to_string(),
        white: g.white_id(w).to_string(),
        detail,
    };
    let through = strands_through(g, fan, b);
    let mut out = Vec::new();
    for (r, members) in fan.members.iter().enumerate() {
        let k = fan.length(r);
        let s = |d: &lattice_toric::RationalDivisor| d.coeff(r) * Q::from_integer(k);
        let sb = s(&abel.black[b]);
        let strips = sb - s(&abel.white[w]);
        if !strips.is_integer() || !sb.is_integer() {
            return Err(mismatch(format!("fractional strip index on ray {r}")));
        }
        let rem = strips.to_integer().rem_euclid(k);
        for &a in members {
            // Strip index of the black vertices along the zig-zag, mod k.
            let mut level = None;
            for side in &g.zigzags()[a].sides {
                let l = s(&abel.black[g.edge(side.edge).black]);
                if !l.is_integer() {
                    return Err(mismatch(format!("fractional strip index on zig-zag {}", g.zigzag_name(a))));
                }
                let l = l.to_integer().rem_euclid(k);
                if level.is_some_and(|m| m != l) {
                    return Err(mismatch(format!("zig-zag {} crosses strips", g.zigzag_name(a))));
                }
                level = Some(l);
            }
            let j = (sb.to_integer() - level.expect("zig-zags are nonempty")).rem_euclid(k) + 1;
            let take = if rem == 0 { through[r] == 0 } else { j > rem };
            if take {
                out.push(a);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}
