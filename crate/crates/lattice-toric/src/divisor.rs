use crate::{dot, Fan, LatticeError, Point, Q};
use num_traits::{Signed, Zero};
use std::ops::{Add, Neg, Sub};

/// `Σ c_ρ D_ρ`, indexed by the rays of a fixed fan.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalDivisor {
    coeffs: Vec<Q>,
}

impl RationalDivisor {
    pub fn new(coeffs: Vec<Q>) -> Self {
        Self { coeffs }
    }

    pub fn zero(rays: usize) -> Self {
        Self { coeffs: vec![Q::zero(); rays] }
    }

    /// `D_ρ` itself.
    pub fn ray(rays: usize, rho: usize) -> Self {
        let mut d = Self::zero(rays);
        d.coeffs[rho] = Q::from_integer(1);
        d
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, rho: usize) -> Q {
        self.coeffs[rho]
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, c: Q) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Coefficientwise floor.
    pub fn floor(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x.floor()).collect() }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|x| x.is_integer())
    }

    /// Sum of coefficients.
    pub fn degree(&self) -> Q {
        self.coeffs.iter().sum()
    }

    pub fn max_abs(&self) -> Q {
        self.coeffs.iter().map(|x| x.abs()).max().unwrap_or_else(Q::zero)
    }
}

impl Add for &RationalDivisor {
    type Output = RationalDivisor;
    fn add(self, o: &RationalDivisor) -> RationalDivisor {
        assert_eq!(self.len(), o.len(), "divisors on different fans");
        RationalDivisor { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &RationalDivisor {
    type Output = RationalDivisor;
    fn sub(self, o: &RationalDivisor) -> RationalDivisor {
        assert_eq!(self.len(), o.len(), "divisors on different fans");
        RationalDivisor { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &RationalDivisor {
    type Output = RationalDivisor;
    fn neg(self) -> RationalDivisor {
        RationalDivisor { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

/// Polygon `∩_ρ {<m, u_ρ> >= -b_ρ}` with rational right-hand sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolygon {
    normals: Vec<Point>,
    bounds: Vec<Q>,
}

/// The polygon of a divisor: `∩_ρ {<m, u_ρ> >= -c_ρ}`.
pub fn divisor_to_polygon(d: &RationalDivisor, fan: &Fan) -> Result<RationalPolygon, LatticeError> {
    if d.len() != fan.len() {
        return Err(LatticeError::FanMismatch { expected: fan.len(), got: d.len() });
    }
    Ok(RationalPolygon { normals: fan.rays.clone(), bounds: d.coeffs.clone() })
}

impl RationalPolygon {
    pub fn normals(&self) -> &[Point] {
        &self.normals
    }

    pub fn bounds(&self) -> &[Q] {
        &self.bounds
    }

    /// Back to the divisor (on the same fan).
    pub fn divisor(&self) -> RationalDivisor {
        RationalDivisor::new(self.bounds.clone())
    }

    pub fn contains(&self, m: Point) -> bool {
        self.normals.iter().zip(&self.bounds).all(|(u, b)| Q::from_integer(dot(m, *u)) >= -*b)
    }

    /// Vertices, computed from pairwise intersections of the boundary lines.
    /// Empty when the polygon is empty. Sorted and deduplicated.
    pub fn vertices(&self) -> Vec<[Q; 2]> {
        let mut out = Vec::new();
        let n = self.normals.len();
        for i in 0..n {
            for j in i + 1..n {
                let (u, v) = (self.normals[i], self.normals[j]);
                let det = u[0] * v[1] - u[1] * v[0];
                if det == 0 {
                    continue;
                }
                // <m,u> = -b_i, <m,v> = -b_j
                let (bi, bj) = (-self.bounds[i], -self.bounds[j]);
                let det = Q::from_integer(det);
                let x = (bi * v[1] - bj * u[1]) / det;
                let y = (bj * u[0] - bi * v[0]) / det;
                let ok = self.normals.iter().zip(&self.bounds).all(|(w, b)| x * w[0] + y * w[1] >= -*b);
                if ok {
                    out.push([x, y]);
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    pub fn is_empty(&self) -> bool {
        self.vertices().is_empty()
    }

    /// All lattice points, lexicographically sorted.
    pub fn lattice_points(&self) -> Vec<Point> {
        let vs = self.vertices();
        if vs.is_empty() {
            return Vec::new();
        }
        let lo_x = vs.iter().map(|v| v[0]).min().unwrap().ceil().to_integer();
        let hi_x = vs.iter().map(|v| v[0]).max().unwrap().floor().to_integer();
        let lo_y = vs.iter().map(|v| v[1]).min().unwrap().ceil().to_integer();
        let hi_y = vs.iter().map(|v| v[1]).max().unwrap().floor().to_integer();
        let mut out = Vec::new();
        for x in lo_x..=hi_x {
            for y in lo_y..=hi_y {
                if self.contains([x, y]) {
                    out.push([x, y]);
                }
            }
        }
        out
    }

    /// Lattice points minimizing `<·, u_ρ>`.
    pub fn edge_minimizers(&self, rho: usize) -> Result<Vec<Point>, LatticeError> {
        let pts = self.lattice_points();
        let u = self.normals[rho];
        let min = pts.iter().map(|m| dot(*m, u)).min().ok_or(LatticeError::NoLatticePoints)?;
        Ok(pts.into_iter().filter(|m| dot(*m, u) == min).collect())
    }
}
