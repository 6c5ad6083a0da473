use crate::{cross, dot, is_primitive, LatticeError, Point};
use num_integer::Integer;

/// Unimodular basis `(x₁, x₂)` adapted to a ray: `x₁` spans the edge
/// direction and `<x₂, u_ρ> = 1`. A monomial `χ^m` becomes `x₁^b x₂^c`
/// with `c = <m, u_ρ>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RayBasis {
    pub x1: Point,
    pub x2: Point,
    pub normal: Point,
}

impl RayBasis {
    /// Picks `x₂` of smallest max-norm; ties prefer a smaller `|x|`, then
    /// a smaller `|y|`, then the lexicographically smaller vector.
    pub fn new(x1: Point, normal: Point) -> Result<Self, LatticeError> {
        if !is_primitive(x1) {
            return Err(LatticeError::NotPrimitive(x1));
        }
        if !is_primitive(normal) {
            return Err(LatticeError::NotPrimitive(normal));
        }
        if dot(x1, normal) != 0 {
            return Err(LatticeError::NotOrthogonal(x1, normal));
        }
        let e = normal[0].extended_gcd(&normal[1]);
        let sign = e.gcd.signum();
        let base = [e.x * sign, e.y * sign];
        debug_assert_eq!(dot(base, normal), 1);
        let bound = base[0].abs().max(base[1].abs()) * 2 + 2;
        let key = |v: Point| (v[0].abs().max(v[1].abs()), v[0].abs(), v[1].abs(), v[0], v[1]);
        let x2 = (-bound..=bound)
            .map(|k| [base[0] + k * x1[0], base[1] + k * x1[1]])
            .min_by_key(|v| key(*v))
            .expect("nonempty search window");
        Ok(Self { x1, x2, normal })
    }

    /// `±1`.
    pub fn det(&self) -> i64 {
        cross(self.x1, self.x2)
    }

    /// Exponents `(b, c)` with `m = b·x₁ + c·x₂`.
    pub fn to_ray(&self, m: Point) -> (i64, i64) {
        let d = self.det();
        let b = d * (self.x2[1] * m[0] - self.x2[0] * m[1]);
        let c = d * (self.x1[0] * m[1] - self.x1[1] * m[0]);
        (b, c)
    }

    pub fn from_ray(&self, b: i64, c: i64) -> Point {
        [b * self.x1[0] + c * self.x2[0], b * self.x1[1] + c * self.x2[1]]
    }
}
