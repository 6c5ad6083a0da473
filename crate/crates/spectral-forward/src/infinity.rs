use crate::ForwardError;
use lattice_toric::RayBasis;
use laurent_algebra::{restrict_to_ray, LaurentPoly, Scalar};
use torus_graph::{TorusGraph, ZigZagFan};

/// The point `ν(α)` where zig-zag `α` meets the curve at infinity: on the
/// boundary divisor of its ray it sits at `x₁ = 1/C_α, x₂ = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct InfinityPoint<S> {
    pub zigzag: usize,
    /// Edge of the zig-zag polygon the zig-zag is parallel to.
    pub ray: usize,
    pub basis: RayBasis,
    pub casimir: S,
    /// `|L(1/C)|` relative to the size of the terms of `L`, the leading
    /// polynomial of `P` on the ray.
    pub residual: f64,
}

impl<S: Scalar> InfinityPoint<S> {
    /// The coordinate `x₁ = 1/C_α`.
    pub fn coordinate(&self) -> S {
        self.casimir.inv()
    }
}

/// Points at infinity of `P = 0`, one per zig-zag, each checked to be a root
/// of the leading polynomial on its ray. Within a ray the pairing of
/// zig-zags with roots is by Casimir value, so equal Casimirs are an error.
pub fn infinity_points<S: Scalar>(
    g: &TorusGraph,
    p: &LaurentPoly<S>,
    fan: &ZigZagFan,
    casimirs: &[S],
    tol: f64,
) -> Result<Vec<InfinityPoint<S>>, ForwardError> {
    let mut out = Vec::with_capacity(casimirs.len());
    for (rho, members) in fan.members.iter().enumerate() {
        let edge = &fan.polygon.edges()[rho];
        let basis = RayBasis::new(edge.direction, edge.normal).map_err(torus_graph::GraphError::from)?;
        let lead = restrict_to_ray(p, &basis)?;
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[..i] {
                if same(&casimirs[a], &casimirs[b], tol) {
                    return Err(ForwardError::CasimirCollision { first: g.zigzag_name(b), second: g.zigzag_name(a) });
                }
            }
        }
        let span = match (lead.leading.keys().next(), lead.leading.keys().next_back()) {
            (Some(lo), Some(hi)) => (hi - lo) as usize,
            _ => 0,
        };
        for &a in members {
            let t = casimirs[a].inv();
            let (vanishes, residual) = residual(&lead.leading, &t);
            let ok = if S::EXACT { vanishes } else { residual <= tol };
            if span != members.len() || !ok {
                return Err(ForwardError::RootMismatch { zigzag: g.zigzag_name(a), residual });
            }
            out.push(InfinityPoint { zigzag: a, ray: rho, basis, casimir: casimirs[a].clone(), residual });
        }
    }
    out.sort_by_key(|pt| pt.zigzag);
    Ok(out)
}

fn same<S: Scalar>(a: &S, b: &S, tol: f64) -> bool {
    if S::EXACT {
        a == b
    } else {
        (a.clone() - b.clone()).magnitude() <= tol * a.magnitude().max(b.magnitude())
    }
}

/// Whether `L(t)` is exactly zero, and its size relative to its terms.
fn residual<S: Scalar>(leading: &std::collections::BTreeMap<i64, S>, t: &S) -> (bool, f64) {
    let mut value = S::zero();
    let mut scale = 0.0;
    for (&b, c) in leading {
        let term = c.clone() * t.powi(b);
        scale += term.magnitude();
        value = value + term;
    }
    let rel = if scale == 0.0 { f64::INFINITY } else { value.magnitude() / scale };
    (value.is_zero(), rel)
}
