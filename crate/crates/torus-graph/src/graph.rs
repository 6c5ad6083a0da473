use crate::spec::{CyclesSpec, EdgeSpec, FaceSpec, GraphSpec, VertexSpec, SCHEMA};
use crate::{GraphError, ZigZag, ZigZagFan};
use lattice_toric::{cross, Point};
use std::collections::{HashMap, HashSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Black,
    White,
}

/// One traversal direction of an edge: `forward` runs black to white.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Side {
    pub edge: usize,
    pub forward: bool,
}

impl Side {
    pub fn plus(edge: usize) -> Self {
        Self { edge, forward: true }
    }

    pub fn minus(edge: usize) -> Self {
        Self { edge, forward: false }
    }

    pub fn rev(self) -> Self {
        Self { edge: self.edge, forward: !self.forward }
    }

    /// `+1` for black to white, `-1` otherwise.
    pub fn sign(self) -> i64 {
        if self.forward {
            1
        } else {
            -1
        }
    }

    fn slot(self) -> usize {
        2 * self.edge + usize::from(self.forward)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    /// Index among black vertices.
    pub black: usize,
    /// Index among white vertices.
    pub white: usize,
    pub hom: Point,
    pub sign: Option<i8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: String,
    pub boundary: Vec<Side>,
}

/// A validated torus graph. Immutable after construction.
#[derive(Debug, Clone)]
pub struct TorusGraph {
    name: String,
    blacks: Vec<String>,
    whites: Vec<String>,
    edges: Vec<Edge>,
    faces: Vec<Face>,
    root_white: usize,
    root_face: usize,
    cycles: [Vec<Side>; 2],
    cycles_given: bool,
    zigzag_labels: Vec<(String, Side)>,
    side_pos: Vec<(usize, usize)>,
    traced: Option<crate::zigzag::Traced>,
}

impl TorusGraph {
    pub fn from_spec(spec: &GraphSpec) -> Result<Self, GraphError> {
        let mut color_of: HashMap<&str, (Color, usize)> = HashMap::new();
        let (mut blacks, mut whites) = (Vec::new(), Vec::new());
        for v in &spec.vertices {
            let entry = match v.color.as_str() {
                "black" => (Color::Black, push(&mut blacks, &v.id)),
                "white" => (Color::White, push(&mut whites, &v.id)),
                other => return Err(GraphError::NonBipartite(format!("vertex {} has color {other:?}", v.id))),
            };
            if color_of.insert(&v.id, entry).is_some() {
                return Err(GraphError::DuplicateId(v.id.clone()));
            }
        }
        if blacks.len() != whites.len() {
            return Err(GraphError::NonBipartite(format!("{} black vs {} white vertices", blacks.len(), whites.len())));
        }

        let mut edge_index: HashMap<&str, usize> = HashMap::new();
        let mut edges = Vec::with_capacity(spec.edges.len());
        for e in &spec.edges {
            let lookup = |id: &str| color_of.get(id).copied().ok_or_else(|| GraphError::UnknownId(id.to_string()));
            let (cb, b) = lookup(&e.black)?;
            let (cw, w) = lookup(&e.white)?;
            if cb != Color::Black || cw != Color::White {
                return Err(GraphError::NonBipartite(format!("edge {} joins {} and {}", e.id, e.black, e.white)));
            }
            let sign = match e.sign {
                None => None,
                Some(s @ (1 | -1)) => Some(s as i8),
                Some(_) => return Err(GraphError::InvalidSign(e.id.clone())),
            };
            if edge_index.insert(&e.id, edges.len()).is_some() {
                return Err(GraphError::DuplicateId(e.id.clone()));
            }
            edges.push(Edge { id: e.id.clone(), black: b, white: w, hom: [e.dz, e.dw], sign });
        }
        let signed = edges.iter().filter(|e| e.sign.is_some()).count();
        if signed != 0 && signed != edges.len() {
            let missing = edges.iter().find(|e| e.sign.is_none()).expect("some unsigned edge");
            return Err(GraphError::InvalidSign(missing.id.clone()));
        }

        let euler = (blacks.len() + whites.len()) as i64 - edges.len() as i64 + spec.faces.len() as i64;
        if euler != 0 {
            return Err(GraphError::EulerMismatch(euler));
        }

        let parse = |s: &str| parse_side(s, &edge_index);
        let mut face_ids = HashSet::new();
        let mut faces = Vec::with_capacity(spec.faces.len());
        let mut side_pos = vec![(usize::MAX, 0); 2 * edges.len()];
        for (fi, f) in spec.faces.iter().enumerate() {
            if !face_ids.insert(f.id.as_str()) {
                return Err(GraphError::DuplicateId(f.id.clone()));
            }
            if f.boundary.len() % 2 == 1 {
                return Err(GraphError::OddFace(f.id.clone()));
            }
            let boundary = f.boundary.iter().map(|s| parse(s)).collect::<Result<Vec<_>, _>>()?;
            for (i, s) in boundary.iter().enumerate() {
                if side_pos[s.slot()].0 != usize::MAX {
                    return Err(GraphError::FaceInconsistency(format!("side {} appears twice", f.boundary[i])));
                }
                side_pos[s.slot()] = (fi, i);
            }
            faces.push(Face { id: f.id.clone(), boundary });
        }
        if let Some(slot) = side_pos.iter().position(|p| p.0 == usize::MAX) {
            let s = if slot % 2 == 1 { '+' } else { '-' };
            return Err(GraphError::FaceInconsistency(format!("side {s}{} lies on no face", edges[slot / 2].id)));
        }

        let mut g = TorusGraph {
            name: spec.name.clone(),
            blacks,
            whites,
            edges,
            faces,
            root_white: 0,
            root_face: 0,
            cycles: [Vec::new(), Vec::new()],
            cycles_given: false,
            zigzag_labels: Vec::new(),
            side_pos,
            traced: None,
        };
        for f in &g.faces {
            if !g.is_closed_walk(&f.boundary) {
                return Err(GraphError::FaceInconsistency(format!("boundary of {} is not a closed walk", f.id)));
            }
            if g.walk_class(&f.boundary) != [0, 0] {
                return Err(GraphError::FaceInconsistency(format!("boundary of {} winds around the torus", f.id)));
            }
        }

        g.root_white = match color_of.get(spec.root_white.as_str()) {
            Some(&(Color::White, w)) => w,
            Some(_) => return Err(GraphError::NonBipartite(format!("root {} is not white", spec.root_white))),
            None => return Err(GraphError::UnknownId(spec.root_white.clone())),
        };
        g.root_face = g.face_index(&spec.root_face).ok_or_else(|| GraphError::UnknownId(spec.root_face.clone()))?;

        match &spec.cycles {
            Some(c) => {
                for (k, (name, walk)) in [("a", &c.a), ("b", &c.b)].into_iter().enumerate() {
                    let sides = walk.iter().map(|s| parse(s)).collect::<Result<Vec<_>, _>>()?;
                    if sides.is_empty() || !g.is_closed_walk(&sides) {
                        return Err(GraphError::BadCycle(name.to_string()));
                    }
                    g.cycles[k] = sides;
                }
                g.cycles_given = true;
            }
            None => g.cycles = crate::cycles::homology_basis(&g)?,
        }
        if cross(g.walk_class(&g.cycles[0]), g.walk_class(&g.cycles[1])).abs() != 1 {
            return Err(GraphError::NoHomologyBasis);
        }

        for (label, s) in &spec.zigzag_labels {
            g.zigzag_labels.push((label.clone(), parse(s)?));
        }
        g.traced = Some(crate::zigzag::trace(&g));
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn num_black(&self) -> usize {
        self.blacks.len()
    }

    pub fn num_white(&self) -> usize {
        self.whites.len()
    }

    pub fn black_id(&self, b: usize) -> &str {
        &self.blacks[b]
    }

    pub fn white_id(&self, w: usize) -> &str {
        &self.whites[w]
    }

    pub fn black_index(&self, id: &str) -> Option<usize> {
        self.blacks.iter().position(|x| x == id)
    }

    pub fn white_index(&self, id: &str) -> Option<usize> {
        self.whites.iter().position(|x| x == id)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: usize) -> &Face {
        &self.faces[f]
    }

    pub fn face_index(&self, id: &str) -> Option<usize> {
        self.faces.iter().position(|f| f.id == id)
    }

    pub fn root_white(&self) -> usize {
        self.root_white
    }

    pub fn root_face(&self) -> usize {
        self.root_face
    }

    /// Closed walks for the homology generators `a` and `b`.
    pub fn cycles(&self) -> &[Vec<Side>; 2] {
        &self.cycles
    }

    pub fn zigzag_labels(&self) -> &[(String, Side)] {
        &self.zigzag_labels
    }

    pub fn zigzags(&self) -> &[ZigZag] {
        &self.traced().zigzags
    }

    pub fn zigzag_of_side(&self, s: Side) -> usize {
        self.traced().of_side[s.slot()]
    }

    /// Zig-zag through corner `j` of face `f` (the head of boundary entry `j`).
    pub fn zigzag_of_corner(&self, f: usize, j: usize) -> usize {
        self.traced().of_corner[f][j]
    }

    /// The edge a zig-zag takes after arriving at the white end of `e` along `+e`.
    pub fn turn_at_white(&self, e: usize) -> usize {
        self.traced().turn_at_white[e]
    }

    /// Display name of a zig-zag: its label, or `z` and its index.
    pub fn zigzag_name(&self, k: usize) -> String {
        self.zigzags()[k].label.clone().unwrap_or_else(|| format!("z{}", k + 1))
    }

    pub fn zigzag_index(&self, name: &str) -> Option<usize> {
        (0..self.zigzags().len()).find(|&k| self.zigzag_name(k) == name)
    }

    pub fn zigzag_fan(&self) -> Result<ZigZagFan, GraphError> {
        ZigZagFan::build(self.zigzags())
    }

    fn traced(&self) -> &crate::zigzag::Traced {
        self.traced.as_ref().expect("traced during construction")
    }

    /// Given signs, if the input carried them.
    pub fn signs(&self) -> Option<Vec<i8>> {
        self.edges.iter().map(|e| e.sign).collect()
    }

    /// `(face, index)` of a side in its face boundary.
    pub fn side_position(&self, s: Side) -> (usize, usize) {
        self.side_pos[s.slot()]
    }

    /// Vertex a side starts from.
    pub fn side_start(&self, s: Side) -> (Color, usize) {
        let e = &self.edges[s.edge];
        if s.forward {
            (Color::Black, e.black)
        } else {
            (Color::White, e.white)
        }
    }

    pub fn side_end(&self, s: Side) -> (Color, usize) {
        self.side_start(s.rev())
    }

    pub fn side_class(&self, s: Side) -> Point {
        let h = self.edges[s.edge].hom;
        [s.sign() * h[0], s.sign() * h[1]]
    }

    pub fn walk_class(&self, walk: &[Side]) -> Point {
        walk.iter().fold([0, 0], |acc, &s| {
            let c = self.side_class(s);
            [acc[0] + c[0], acc[1] + c[1]]
        })
    }

    pub fn is_closed_walk(&self, walk: &[Side]) -> bool {
        (0..walk.len()).all(|i| self.side_end(walk[i]) == self.side_start(walk[(i + 1) % walk.len()]))
    }

    pub fn side_label(&self, s: Side) -> String {
        format!("{}{}", if s.forward { '+' } else { '-' }, self.edges[s.edge].id)
    }

    pub fn parse_side(&self, s: &str) -> Result<Side, GraphError> {
        let (forward, id) = split_side(s)?;
        let edge = self.edge_index(id).ok_or_else(|| GraphError::UnknownId(id.to_string()))?;
        Ok(Side { edge, forward })
    }

    /// Edges incident to black vertex `b`, in input order.
    pub fn edges_at_black(&self, b: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().enumerate().filter(move |(_, e)| e.black == b).map(|(i, _)| i)
    }

    pub fn edges_at_white(&self, w: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().enumerate().filter(move |(_, e)| e.white == w).map(|(i, _)| i)
    }

    /// Edges of a breadth-first spanning tree grown from the root white
    /// vertex, trying edges in input order.
    pub fn spanning_tree(&self) -> Vec<bool> {
        let nb = self.num_black();
        let mut seen = vec![false; nb + self.num_white()];
        let mut tree = vec![false; self.edges.len()];
        seen[nb + self.root_white] = true;
        let mut queue = std::collections::VecDeque::from([nb + self.root_white]);
        while let Some(v) = queue.pop_front() {
            for (e, edge) in self.edges.iter().enumerate() {
                let (here, there) = if v < nb { (edge.black, nb + edge.white) } else { (nb + edge.white, edge.black) };
                if here == v && !seen[there] {
                    seen[there] = true;
                    tree[e] = true;
                    queue.push_back(there);
                }
            }
        }
        tree
    }

    /// Serializes back to the JSON form.
    pub fn to_spec(&self) -> GraphSpec {
        let labels = |w: &[Side]| w.iter().map(|&s| self.side_label(s)).collect::<Vec<_>>();
        let vertices = self
            .blacks
            .iter()
            .map(|id| VertexSpec { id: id.clone(), color: "black".into() })
            .chain(self.whites.iter().map(|id| VertexSpec { id: id.clone(), color: "white".into() }))
            .collect();
        GraphSpec {
            schema: Some(SCHEMA.to_string()),
            name: self.name.clone(),
            vertices,
            edges: self
                .edges
                .iter()
                .map(|e| EdgeSpec {
                    id: e.id.clone(),
                    black: self.blacks[e.black].clone(),
                    white: self.whites[e.white].clone(),
                    dz: e.hom[0],
                    dw: e.hom[1],
                    sign: e.sign.map(i64::from),
                })
                .collect(),
            faces: self.faces.iter().map(|f| FaceSpec { id: f.id.clone(), boundary: labels(&f.boundary) }).collect(),
            root_white: self.whites[self.root_white].clone(),
            root_face: self.faces[self.root_face].id.clone(),
            cycles: self.cycles_given.then(|| CyclesSpec { a: labels(&self.cycles[0]), b: labels(&self.cycles[1]) }),
            zigzag_labels: self.zigzag_labels.iter().map(|(l, s)| (l.clone(), self.side_label(*s))).collect(),
        }
    }
}

fn push(list: &mut Vec<String>, id: &str) -> usize {
    list.push(id.to_string());
    list.len() - 1
}

fn split_side(s: &str) -> Result<(bool, &str), GraphError> {
    match s.as_bytes().first() {
        Some(b'+') => Ok((true, &s[1..])),
        Some(b'-') => Ok((false, &s[1..])),
        _ => Err(GraphError::BadSide(s.to_string())),
    }
}

fn parse_side(s: &str, index: &HashMap<&str, usize>) -> Result<Side, GraphError> {
    let (forward, id) = split_side(s)?;
    let edge = *index.get(id).ok_or_else(|| GraphError::UnknownId(id.to_string()))?;
    Ok(Side { edge, forward })
}
