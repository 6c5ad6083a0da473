use crate::{angle_cmp, content, cross, dot, primitive, rot90, LatticeError, Point, RationalDivisor, Q};

/// One edge `E_ρ` of a lattice polygon, traversed counterclockwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonEdge {
    pub start: Point,
    /// Primitive direction of travel.
    pub direction: Point,
    /// Lattice length `|E_ρ|`.
    pub length: i64,
    /// Primitive inward normal `u_ρ`.
    pub normal: Point,
    /// `a_ρ`, so that the edge lies on `<m, u_ρ> = -a_ρ`.
    pub offset: i64,
}

/// Normal fan of a polygon: primitive inward normals in counterclockwise order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    pub rays: Vec<Point>,
}

impl Fan {
    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn position(&self, normal: Point) -> Option<usize> {
        self.rays.iter().position(|r| *r == normal)
    }
}

/// A convex lattice polygon (possibly a point or a segment when built as a hull).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    vertices: Vec<Point>,
    edges: Vec<PolygonEdge>,
}

impl NewtonPolygon {
    /// The polygon whose counterclockwise edge vectors are the given
    /// primitive vectors, translated so its lexicographically smallest
    /// vertex is the origin. Parallel vectors merge into one edge.
    pub fn from_edge_vectors(vectors: &[Point]) -> Result<Self, LatticeError> {
        if vectors.contains(&[0, 0]) {
            return Err(LatticeError::ZeroVector);
        }
        let sum = vectors.iter().fold([0, 0], |s, v| [s[0] + v[0], s[1] + v[1]]);
        if sum != [0, 0] {
            return Err(LatticeError::OpenPolygon(sum));
        }
        let mut sorted: Vec<Point> = vectors.to_vec();
        sorted.sort_by(|a, b| angle_cmp(*a, *b));
        let mut merged: Vec<Point> = Vec::new();
        for v in sorted {
            match merged.last_mut() {
                Some(last) if cross(*last, v) == 0 && dot(*last, v) > 0 => {
                    last[0] += v[0];
                    last[1] += v[1];
                }
                _ => merged.push(v),
            }
        }
        let mut vertices = Vec::with_capacity(merged.len());
        let mut at = [0, 0];
        for v in &merged {
            vertices.push(at);
            at = [at[0] + v[0], at[1] + v[1]];
        }
        let poly = Self::from_ccw_vertices(vertices);
        if poly.area2() == 0 {
            return Err(LatticeError::DegenerateNewton);
        }
        Ok(poly.anchored())
    }

    /// Convex hull of a point set; `None` for an empty set.
    pub fn hull(points: &[Point]) -> Option<Self> {
        let mut pts: Vec<Point> = points.to_vec();
        pts.sort();
        pts.dedup();
        if pts.is_empty() {
            return None;
        }
        if pts.len() <= 2 {
            return Some(Self::from_ccw_vertices(pts));
        }
        // Andrew's monotone chain, dropping collinear points.
        let mut lower: Vec<Point> = Vec::new();
        for &p in &pts {
            while lower.len() >= 2 && turn(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<Point> = Vec::new();
        for &p in pts.iter().rev() {
            while upper.len() >= 2 && turn(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        Some(Self::from_ccw_vertices(lower))
    }

    fn from_ccw_vertices(vertices: Vec<Point>) -> Self {
        let n = vertices.len();
        let mut edges = Vec::new();
        if n >= 2 {
            for i in 0..n {
                let a = vertices[i];
                let b = vertices[(i + 1) % n];
                let v = [b[0] - a[0], b[1] - a[1]];
                let direction = primitive(v);
                let normal = rot90(direction);
                edges.push(PolygonEdge { start: a, direction, length: content(v), normal, offset: -dot(a, normal) });
            }
        }
        Self { vertices, edges }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn edges(&self) -> &[PolygonEdge] {
        &self.edges
    }

    pub fn fan(&self) -> Fan {
        Fan { rays: self.edges.iter().map(|e| e.normal).collect() }
    }

    /// `D_N = Σ a_ρ D_ρ` on this polygon's own fan.
    pub fn divisor(&self) -> RationalDivisor {
        RationalDivisor::new(self.edges.iter().map(|e| Q::from_integer(e.offset)).collect())
    }

    /// Twice the area.
    pub fn area2(&self) -> i64 {
        let n = self.vertices.len();
        (0..n).map(|i| cross(self.vertices[i], self.vertices[(i + 1) % n])).sum()
    }

    pub fn boundary_count(&self) -> i64 {
        if self.vertices.len() == 1 {
            return 1;
        }
        let total: i64 = self.edges.iter().map(|e| e.length).sum();
        if self.area2() == 0 {
            // A segment is listed twice, once per direction.
            total / 2 + 1
        } else {
            total
        }
    }

    /// Interior lattice points by Pick's theorem.
    pub fn interior_count(&self) -> i64 {
        if self.area2() == 0 {
            return 0;
        }
        (self.area2() - self.boundary_count() + 2) / 2
    }

    pub fn translated(&self, t: Point) -> Self {
        let v = self.vertices.iter().map(|p| [p[0] + t[0], p[1] + t[1]]).collect();
        Self::from_ccw_vertices(v)
    }

    /// Translate so the lexicographically smallest vertex is the origin, and
    /// start the vertex list there.
    pub fn anchored(&self) -> Self {
        let (k, min) =
            self.vertices.iter().enumerate().min_by_key(|(_, p)| **p).map(|(k, p)| (k, *p)).expect("nonempty polygon");
        let n = self.vertices.len();
        let v = (0..n)
            .map(|i| {
                let p = self.vertices[(k + i) % n];
                [p[0] - min[0], p[1] - min[1]]
            })
            .collect();
        Self::from_ccw_vertices(v)
    }

    pub fn contains(&self, m: Point) -> bool {
        let (lo, hi) = self.bbox();
        if m[0] < lo[0] || m[1] < lo[1] || m[0] > hi[0] || m[1] > hi[1] {
            return false;
        }
        self.edges.iter().all(|e| dot(m, e.normal) >= -e.offset)
    }

    pub fn contains_strictly(&self, m: Point) -> bool {
        self.area2() != 0 && self.edges.iter().all(|e| dot(m, e.normal) > -e.offset)
    }

    /// All lattice points, lexicographically sorted.
    pub fn lattice_points(&self) -> Vec<Point> {
        let (lo, hi) = self.bbox();
        let mut out = Vec::new();
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                if self.contains([x, y]) {
                    out.push([x, y]);
                }
            }
        }
        out
    }

    pub fn interior_points(&self) -> Vec<Point> {
        self.lattice_points().into_iter().filter(|m| self.contains_strictly(*m)).collect()
    }

    fn bbox(&self) -> (Point, Point) {
        let xs = self.vertices.iter().map(|p| p[0]);
        let ys = self.vertices.iter().map(|p| p[1]);
        ([xs.clone().min().unwrap(), ys.clone().min().unwrap()], [xs.max().unwrap(), ys.max().unwrap()])
    }

    /// Same polygon up to translation.
    pub fn congruent(&self, other: &Self) -> bool {
        self.anchored() == other.anchored()
    }
}

fn turn(o: Point, a: Point, b: Point) -> i64 {
    cross([a[0] - o[0], a[1] - o[1]], [b[0] - o[0], b[1] - o[1]])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square_classes() -> Vec<Point> {
        vec![[-1, 1], [-1, -1], [1, -1], [1, 1]]
    }

    #[test]
    fn square_lattice_polygon_is_the_diamond() {
        let n = NewtonPolygon::from_edge_vectors(&square_classes()).unwrap();
        let diamond = NewtonPolygon::hull(&[[1, 0], [0, 1], [-1, 0], [0, -1]]).unwrap();
        assert!(n.congruent(&diamond));
        assert_eq!(n.vertices()[0], [0, 0]);
        assert_eq!(n.interior_count(), 1);
        assert_eq!(n.area2(), 4);
    }

    #[test]
    fn hexagon_classes_give_genus_two() {
        let n = NewtonPolygon::from_edge_vectors(&[[-1, 2], [-1, -3], [2, 1]]).unwrap();
        assert_eq!(n.interior_count(), 2);
        assert_eq!(n.interior_points().len(), 2);
    }

    #[test]
    fn square_octagon_has_doubled_sides() {
        let v = vec![[0, 1], [0, 1], [-1, 0], [-1, 0], [0, -1], [0, -1], [1, 0], [1, 0]];
        let n = NewtonPolygon::from_edge_vectors(&v).unwrap();
        assert_eq!(n.edges().len(), 4);
        assert!(n.edges().iter().all(|e| e.length == 2));
        assert_eq!(n.interior_count(), 1);
    }

    #[test]
    fn open_and_degenerate_inputs() {
        assert_eq!(NewtonPolygon::from_edge_vectors(&[[1, 0], [0, 1]]), Err(LatticeError::OpenPolygon([1, 1])));
        assert_eq!(NewtonPolygon::from_edge_vectors(&[[1, 0], [-1, 0]]), Err(LatticeError::DegenerateNewton));
        assert_eq!(NewtonPolygon::from_edge_vectors(&[[0, 0]]), Err(LatticeError::ZeroVector));
    }

    #[test]
    fn hull_of_degenerate_sets() {
        let p = NewtonPolygon::hull(&[[2, 3]]).unwrap();
        assert_eq!(p.lattice_points(), vec![[2, 3]]);
        let s = NewtonPolygon::hull(&[[0, 0], [2, 2], [1, 1]]).unwrap();
        assert_eq!(s.lattice_points(), vec![[0, 0], [1, 1], [2, 2]]);
        assert_eq!(s.boundary_count(), 3);
        assert!(NewtonPolygon::hull(&[]).is_none());
    }

    #[test]
    fn offsets_describe_the_polygon() {
        let n = NewtonPolygon::hull(&[[1, 0], [0, 1], [-1, 0], [0, -1]]).unwrap();
        assert!(n.edges().iter().all(|e| e.offset == 1));
        assert_eq!(n.lattice_points().len(), 5);
    }
}
