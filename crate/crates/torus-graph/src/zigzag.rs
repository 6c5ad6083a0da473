use crate::{GraphError, Side, TorusGraph};
use lattice_toric::{cross, dot, is_primitive, primitive, NewtonPolygon, Point};

/// A zig-zag path as its cyclic sequence of sides. Sides alternate
/// `+e` (arriving at a white vertex) and `-e` (arriving at a black one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZigZag {
    pub sides: Vec<Side>,
    pub class: Point,
    pub label: Option<String>,
}

impl ZigZag {
    /// Number of white (equally, black) vertices visited.
    pub fn white_count(&self) -> usize {
        self.sides.iter().filter(|s| s.forward).count()
    }
}

/// Result of tracing every zig-zag path through the face structure.
#[derive(Debug, Clone)]
pub(crate) struct Traced {
    pub zigzags: Vec<ZigZag>,
    /// Zig-zag through each side, indexed by `2·edge + forward`.
    pub of_side: Vec<usize>,
    /// Zig-zag through each face corner; corner `j` of a face is the vertex
    /// at the head of boundary entry `j`.
    pub of_corner: Vec<Vec<usize>>,
    /// For each edge `e`, the edge `e'` following `+e` at the white end.
    pub turn_at_white: Vec<usize>,
}

/// From `+e`, the next side is the successor of `+e` in its face. From
/// `-e`, it is `+` of the predecessor of `+e` in the face containing `+e`.
pub(crate) fn trace(g: &TorusGraph) -> Traced {
    let ne = g.edges().len();
    let mut of_side = vec![usize::MAX; 2 * ne];
    let mut of_corner: Vec<Vec<usize>> = g.faces().iter().map(|f| vec![usize::MAX; f.boundary.len()]).collect();
    let mut turn_at_white = vec![usize::MAX; ne];
    let mut zigzags = Vec::new();
    let slot = |s: Side| 2 * s.edge + usize::from(s.forward);
    for start in 0..ne {
        if of_side[slot(Side::plus(start))] != usize::MAX {
            continue;
        }
        let k = zigzags.len();
        let mut sides = Vec::new();
        let mut cur = Side::plus(start);
        while of_side[slot(cur)] == usize::MAX {
            of_side[slot(cur)] = k;
            sides.push(cur);
            let (f, i) = g.side_position(Side::plus(cur.edge));
            let boundary = &g.face(f).boundary;
            let n = boundary.len();
            let next = if cur.forward {
                of_corner[f][i] = k;
                let nx = boundary[(i + 1) % n];
                turn_at_white[cur.edge] = nx.edge;
                nx
            } else {
                of_corner[f][(i + n - 1) % n] = k;
                Side::plus(boundary[(i + n - 1) % n].edge)
            };
            cur = next;
        }
        let class = g.walk_class(&sides);
        let label = g.zigzag_labels().iter().find(|(_, s)| sides.contains(s)).map(|(l, _)| l.clone());
        zigzags.push(ZigZag { sides, class, label });
    }
    Traced { zigzags, of_side, of_corner, turn_at_white }
}

/// The Newton polygon of the zig-zag classes together with the assignment of
/// each zig-zag to the boundary edge (ray) it is parallel to.
#[derive(Debug, Clone)]
pub struct ZigZagFan {
    pub polygon: NewtonPolygon,
    /// Ray (polygon edge index) of each zig-zag.
    pub ray_of: Vec<usize>,
    /// Zig-zags on each ray, in zig-zag order.
    pub members: Vec<Vec<usize>>,
}

impl ZigZagFan {
    pub(crate) fn build(zigzags: &[ZigZag]) -> Result<Self, GraphError> {
        for (k, z) in zigzags.iter().enumerate() {
            if z.class == [0, 0] {
                return Err(GraphError::NullZigZag(k));
            }
            if !is_primitive(z.class) {
                return Err(GraphError::NonPrimitiveZigZag(k));
            }
        }
        let classes: Vec<Point> = zigzags.iter().map(|z| z.class).collect();
        let polygon = NewtonPolygon::from_edge_vectors(&classes)?;
        let ray_of: Vec<usize> = classes
            .iter()
            .map(|c| {
                let d = primitive(*c);
                polygon.edges().iter().position(|e| e.direction == d).expect("every class is an edge direction")
            })
            .collect();
        let mut members = vec![Vec::new(); polygon.edges().len()];
        for (k, &r) in ray_of.iter().enumerate() {
            members[r].push(k);
        }
        Ok(Self { polygon, ray_of, members })
    }

    /// Number of interior lattice points.
    pub fn genus(&self) -> i64 {
        self.polygon.interior_count()
    }

    pub fn num_rays(&self) -> usize {
        self.members.len()
    }

    /// Primitive inward normal of a ray.
    pub fn normal(&self, rho: usize) -> Point {
        self.polygon.edges()[rho].normal
    }

    /// `a_ρ` with the edge on the line `<m, u_ρ> = -a_ρ`.
    pub fn offset(&self, rho: usize) -> i64 {
        self.polygon.edges()[rho].offset
    }

    /// Lattice length `|E_ρ|`.
    pub fn length(&self, rho: usize) -> i64 {
        self.polygon.edges()[rho].length
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimalityViolation {
    NullClass {
        zigzag: usize,
    },
    /// The zig-zag runs along `edge` in both directions.
    SelfCrossing {
        zigzag: usize,
        edge: usize,
    },
    /// Two zig-zags cross more often than their classes force: non-parallel
    /// pairs must share `|det|` edges, same-direction pairs none.
    ExcessCrossings {
        first: usize,
        second: usize,
        shared: usize,
        expected: usize,
    },
}

impl TorusGraph {
    /// Checks that zig-zag lifts meet minimally: no null classes, no
    /// self-crossings, non-parallel pairs share exactly `|det([α],[β])|`
    /// edges and same-direction pairs share none. Opposite-direction pairs
    /// may cross in bigons.
    pub fn check_minimality(&self) -> Vec<MinimalityViolation> {
        let zz = self.zigzags();
        let mut out = Vec::new();
        for (k, z) in zz.iter().enumerate() {
            if z.class == [0, 0] {
                out.push(MinimalityViolation::NullClass { zigzag: k });
            }
        }
        let n = zz.len();
        let mut shared = vec![vec![0usize; n]; n];
        for e in 0..self.edges().len() {
            let p = self.zigzag_of_side(Side::plus(e));
            let m = self.zigzag_of_side(Side::minus(e));
            if p == m {
                out.push(MinimalityViolation::SelfCrossing { zigzag: p, edge: e });
            } else {
                shared[p.min(m)][p.max(m)] += 1;
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (zz[i].class, zz[j].class);
                if cross(a, b) == 0 && dot(a, b) < 0 {
                    continue;
                }
                let expected = cross(a, b).unsigned_abs() as usize;
                if shared[i][j] != expected {
                    out.push(MinimalityViolation::ExcessCrossings {
                        first: i,
                        second: j,
                        shared: shared[i][j],
                        expected,
                    });
                }
            }
        }
        out
    }
}
