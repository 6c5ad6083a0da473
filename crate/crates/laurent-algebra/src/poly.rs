use crate::{AlgebraError, Scalar};
use lattice_toric::{NewtonPolygon, Point, RayBasis};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// `Σ c_{ij} z^i w^j` with finitely many nonzero terms.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentPoly<S> {
    terms: BTreeMap<(i64, i64), S>,
}

impl<S: Scalar> Default for LaurentPoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> LaurentPoly<S> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(i: i64, j: i64, c: S) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((i64, i64), S)>) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// Adds `c z^i w^j`, dropping the term if it cancels exactly.
    pub fn add_term(&mut self, i: i64, j: i64, c: S) {
        if c.is_zero() {
            return;
        }
        let key = (i, j);
        match self.terms.get_mut(&key) {
            Some(old) => {
                let sum = old.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &S)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, i: i64, j: i64) -> S {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(S::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn support(&self) -> Vec<Point> {
        self.terms.keys().map(|&(i, j)| [i, j]).collect()
    }

    /// Convex hull of the support; `None` for the zero polynomial.
    pub fn newton_polygon(&self) -> Option<NewtonPolygon> {
        NewtonPolygon::hull(&self.support())
    }

    /// Componentwise minimum exponents.
    pub fn min_exponents(&self) -> Option<(i64, i64)> {
        let i = self.terms.keys().map(|k| k.0).min()?;
        let j = self.terms.keys().map(|k| k.1).min()?;
        Some((i, j))
    }

    pub fn max_exponents(&self) -> Option<(i64, i64)> {
        let i = self.terms.keys().map(|k| k.0).max()?;
        let j = self.terms.keys().map(|k| k.1).max()?;
        Some((i, j))
    }

    /// Largest coefficient magnitude, `0` for the zero polynomial.
    pub fn max_magnitude(&self) -> f64 {
        self.terms.values().map(|c| c.magnitude()).fold(0.0, f64::max)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, v)| (*k, v.clone() * c.clone())).collect() }
    }

    /// Multiplication by `z^di w^dj`.
    pub fn shift(&self, di: i64, dj: i64) -> Self {
        Self { terms: self.terms.iter().map(|(&(i, j), v)| ((i + di, j + dj), v.clone())).collect() }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> LaurentPoly<T> {
        LaurentPoly::from_terms(self.terms.iter().map(|(k, v)| (*k, f(v))))
    }

    pub fn to_complex(&self) -> LaurentPoly<crate::Complex64> {
        self.map(|c| c.to_complex())
    }

    /// Drops terms of magnitude at most `tol`.
    pub fn prune(&self, tol: f64) -> Self {
        Self { terms: self.terms.iter().filter(|(_, v)| v.magnitude() > tol).map(|(k, v)| (*k, v.clone())).collect() }
    }

    /// Value at `(z, w)`; both must be nonzero when negative exponents occur.
    pub fn eval(&self, z: &S, w: &S) -> S {
        let mut acc = S::zero();
        for (&(i, j), c) in &self.terms {
            acc = acc + c.clone() * z.powi(i) * w.powi(j);
        }
        acc
    }

    /// The `(∂/∂z, ∂/∂w)` partial derivatives.
    pub fn gradient(&self) -> (Self, Self) {
        let mut dz = Self::zero();
        let mut dw = Self::zero();
        for (&(i, j), c) in &self.terms {
            dz.add_term(i - 1, j, c.clone() * S::from_i64(i));
            dw.add_term(i, j - 1, c.clone() * S::from_i64(j));
        }
        (dz, dw)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    /// Meaningful for exact scalars; numeric callers should not rely on it.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (dmin, dmax) = (d.min_exponents()?, d.max_exponents()?);
        let (rmin, rmax) = (self.min_exponents()?, self.max_exponents()?);
        let (i_lo, i_hi) = (rmin.0 - dmin.0, rmax.0 - dmax.0);
        let (j_lo, j_hi) = (rmin.1 - dmax.1, rmax.1 - dmin.1);
        let (&dk, dc) = d.terms.iter().next_back()?;
        let mut r = self.clone();
        let mut q = Self::zero();
        // Lex order is a group order on Z², so dividing by leading terms
        // walks the remainder strictly downward inside a finite box.
        while let Some((&rk, rc)) = r.terms.iter().next_back() {
            let t = (rk.0 - dk.0, rk.1 - dk.1);
            if t.0 < i_lo || t.0 > i_hi || t.1 < j_lo || t.1 > j_hi {
                return None;
            }
            let c = rc.clone() / dc.clone();
            for (&(i, j), dc) in &d.terms {
                r.add_term(i + t.0, j + t.1, -(c.clone() * dc.clone()));
            }
            q.add_term(t.0, t.1, c);
        }
        Some(q)
    }
}

impl<S: Scalar> Add for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn add(self, rhs: Self) -> LaurentPoly<S> {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl<S: Scalar> Sub for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn sub(self, rhs: Self) -> LaurentPoly<S> {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl<S: Scalar> Mul for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn mul(self, rhs: Self) -> LaurentPoly<S> {
        let mut out = LaurentPoly::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term(i + k, j + l, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<S: Scalar> Neg for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn neg(self) -> LaurentPoly<S> {
        LaurentPoly { terms: self.terms.iter().map(|(k, v)| (*k, -v.clone())).collect() }
    }
}

/// A polynomial rewritten as `Σ x₁^b x₂^c` in a ray basis, keeping only the
/// lowest `c` layer.
#[derive(Debug, Clone, PartialEq)]
pub struct RayRestriction<S> {
    /// The minimal `c = <m, u_ρ>` over the support.
    pub order: i64,
    /// Coefficients of `x₁^b` on that layer.
    pub leading: BTreeMap<i64, S>,
}

impl<S: Scalar> RayRestriction<S> {
    /// The leading layer evaluated at `x₁ = t`.
    pub fn eval(&self, t: &S) -> S {
        self.leading.iter().fold(S::zero(), |acc, (&b, c)| acc + c.clone() * t.powi(b))
    }
}

pub fn restrict_to_ray<S: Scalar>(p: &LaurentPoly<S>, basis: &RayBasis) -> Result<RayRestriction<S>, AlgebraError> {
    let order = p.terms().map(|((i, j), _)| basis.to_ray([i, j]).1).min().ok_or(AlgebraError::ZeroPolynomial)?;
    let mut leading = BTreeMap::new();
    for ((i, j), c) in p.terms() {
        let (b, cc) = basis.to_ray([i, j]);
        if cc == order {
            leading.insert(b, c.clone());
        }
    }
    Ok(RayRestriction { order, leading })
}
