use crate::InverseError;
use lattice_toric::{dot, RationalDivisor, Q};
use std::collections::{HashMap, VecDeque};
use torus_graph::{Color, Side, TorusGraph, ZigZagFan};

/// Discrete Abel map at the lifts in the base fundamental domain. Each value
/// is a vector of integer coefficients over the zig-zags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteAbel {
    pub black: Vec<Vec<i64>>,
    pub white: Vec<Vec<i64>>,
    pub faces: Vec<Vec<i64>>,
}

/// Both Abel maps of a graph. The rational one is indexed by the rays of
/// the zig-zag fan and vanishes at the root white vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelData {
    pub discrete: DiscreteAbel,
    pub black: Vec<RationalDivisor>,
    pub white: Vec<RationalDivisor>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Node {
    Face(usize),
    Vertex(Color, usize),
}

type Lift = [i64; 2];

/// Corners of a face: walking from the tail of the first side, the vertex
/// at the head of each side and its translate relative to the face.
fn corners(g: &TorusGraph, f: usize) -> Vec<(Color, usize, Lift)> {
    let mut off = [0, 0];
    g.face(f)
        .boundary
        .iter()
        .map(|s| {
            let e = g.edge(s.edge);
            if s.forward {
                off = [off[0] + e.hom[0], off[1] + e.hom[1]];
                (Color::White, e.white, off)
            } else {
                off = [off[0] - e.hom[0], off[1] - e.hom[1]];
                (Color::Black, e.black, off)
            }
        })
        .collect()
}

/// Propagates `d` over the universal cover from the root face at `d = 0`.
/// Across a corner with zig-zag `α`, a black vertex is `d(f) + α` and a white
/// one `d(f) - α`. Lifts are confined to a box around the base domain large
/// enough to reach every vertex from every face.
pub fn discrete_abel(g: &TorusGraph) -> Result<DiscreteAbel, InverseError> {
    let nz = g.zigzags().len();
    let table: Vec<Vec<(Color, usize, Lift)>> = (0..g.faces().len()).map(|f| corners(g, f)).collect();
    let mut incident: HashMap<(Color, usize), Vec<(usize, usize, Lift)>> = HashMap::new();
    for (f, cs) in table.iter().enumerate() {
        for (j, &(c, v, off)) in cs.iter().enumerate() {
            incident.entry((c, v)).or_default().push((f, j, off));
        }
    }
    let reach = table.iter().flatten().map(|(_, _, o)| o[0].abs().max(o[1].abs())).max().unwrap_or(0);
    let bound = 2 * reach + 2;
    let inside = |t: Lift| t[0].abs() <= bound && t[1].abs() <= bound;

    let mut value: HashMap<(Node, Lift), Vec<i64>> = HashMap::new();
    let start = (Node::Face(g.root_face()), [0, 0]);
    value.insert(start, vec![0; nz]);
    let mut queue = VecDeque::from([start]);
    while let Some(key) = queue.pop_front() {
        let d = value[&key].clone();
        let (node, t) = key;
        let mut out = Vec::new();
        match node {
            Node::Face(f) => {
                for (j, &(c, v, off)) in table[f].iter().enumerate() {
                    let lift = [t[0] + off[0], t[1] + off[1]];
                    if inside(lift) {
                        let mut nd = d.clone();
                        nd[g.zigzag_of_corner(f, j)] += sign(c);
                        out.push(((Node::Vertex(c, v), lift), nd));
                    }
                }
            }
            Node::Vertex(c, v) => {
                for &(f, j, off) in incident.get(&(c, v)).map(Vec::as_slice).unwrap_or_default() {
                    let lift = [t[0] - off[0], t[1] - off[1]];
                    if inside(lift) {
                        let mut nd = d.clone();
                        nd[g.zigzag_of_corner(f, j)] -= sign(c);
                        out.push(((Node::Face(f), lift), nd));
                    }
                }
            }
        }
        for (k, nd) in out {
            match value.get(&k) {
                Some(old) if *old != nd => {
                    return Err(InverseError::InconsistentPropagation(format!("{:?} at {:?}", k.0, k.1)));
                }
                Some(_) => {}
                None => {
                    value.insert(k, nd);
                    queue.push_back(k);
                }
            }
        }
    }
    let at = |n: Node| {
        value
            .get(&(n, [0, 0]))
            .cloned()
            .ok_or_else(|| InverseError::InconsistentPropagation(format!("{n:?} not reached")))
    };
    Ok(DiscreteAbel {
        black: (0..g.num_black()).map(|b| at(Node::Vertex(Color::Black, b))).collect::<Result<_, _>>()?,
        white: (0..g.num_white()).map(|w| at(Node::Vertex(Color::White, w))).collect::<Result<_, _>>()?,
        faces: (0..g.faces().len()).map(|f| at(Node::Face(f))).collect::<Result<_, _>>()?,
    })
}

fn sign(c: Color) -> i64 {
    match c {
        Color::Black => 1,
        Color::White => -1,
    }
}

/// `D` by propagation over the edges from the root white vertex: along
/// `b → w` with class `h`,
/// `D(w) - D(b) = -D_σ/|E_σ| - D_ρ/|E_ρ| - div χ^h`, where `σ` and `ρ` are
/// the rays of the zig-zags through the two sides of the edge.
pub fn rational_abel(
    g: &TorusGraph,
    fan: &ZigZagFan,
) -> Result<(Vec<RationalDivisor>, Vec<RationalDivisor>), InverseError> {
    let nr = fan.num_rays();
    let step = |e: usize| -> Vec<Q> {
        let edge = g.edge(e);
        let mut inc: Vec<Q> = (0..nr).map(|r| Q::from_integer(-dot(edge.hom, fan.normal(r)))).collect();
        for s in [Side::plus(e), Side::minus(e)] {
            let r = fan.ray_of[g.zigzag_of_side(s)];
            inc[r] -= Q::new(1, fan.length(r));
        }
        inc
    };
    let nb = g.num_black();
    let mut value: Vec<Option<Vec<Q>>> = vec![None; nb + g.num_white()];
    value[nb + g.root_white()] = Some(vec![Q::from_integer(0); nr]);
    let mut queue = VecDeque::from([nb + g.root_white()]);
    while let Some(v) = queue.pop_front() {
        let here = value[v].clone().expect("queued vertices have values");
        for (e, edge) in g.edges().iter().enumerate() {
            let (there, sgn) = if v < nb && edge.black == v {
                (nb + edge.white, 1)
            } else if v >= nb && edge.white == v - nb {
                (edge.black, -1)
            } else {
                continue;
            };
            let next: Vec<Q> = here.iter().zip(step(e)).map(|(a, d)| *a + d * Q::from_integer(sgn)).collect();
            match &value[there] {
                Some(old) if *old != next => {
                    return Err(InverseError::InconsistentPropagation(format!("rational map around edge {}", edge.id)));
                }
                Some(_) => {}
                None => {
                    value[there] = Some(next);
                    queue.push_back(there);
                }
            }
        }
    }
    let mut out: Vec<RationalDivisor> = Vec::with_capacity(value.len());
    for (v, d) in value.into_iter().enumerate() {
        let d = d.ok_or_else(|| InverseError::InconsistentPropagation(format!("vertex {v} not reached")))?;
        out.push(RationalDivisor::new(d));
    }
    let white = out.split_off(nb);
    Ok((out, white))
}

/// `D` from `d`: the coefficient on ray `ρ` is the mean of the `d`
/// coefficients of its zig-zags, shifted so the root white vertex is zero.
fn averaged(d: &[i64], root: &[i64], fan: &ZigZagFan) -> RationalDivisor {
    RationalDivisor::new(
        fan.members
            .iter()
            .enumerate()
            .map(|(r, ks)| Q::new(ks.iter().map(|&k| d[k] - root[k]).sum(), fan.length(r)))
            .collect(),
    )
}

/// Both Abel maps, with the rational one computed by edge propagation and
/// checked against the average of the discrete one.
pub fn abel_data(g: &TorusGraph, fan: &ZigZagFan) -> Result<AbelData, InverseError> {
    let discrete = discrete_abel(g)?;
    let (black, white) = rational_abel(g, fan)?;
    let root = &discrete.white[g.root_white()];
    for (kind, routes, ds) in [("black", &black, &discrete.black), ("white", &white, &discrete.white)] {
        for (v, (r, d)) in routes.iter().zip(ds).enumerate() {
            if *r != averaged(d, root, fan) {
                return Err(InverseError::InconsistentPropagation(format!(
                    "{kind} vertex {v}: edge propagation and zig-zag averages differ"
                )));
            }
        }
    }
    Ok(AbelData { discrete, black, white })
}
