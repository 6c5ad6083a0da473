use crate::{InverseError, SmallPolygon};
use lattice_toric::{dot, Point};
use laurent_algebra::{BigRational, Complex64, LaurentPoly, Scalar};
use nalgebra::DMatrix;
use num_traits::{One, Zero};
use spectral_forward::InfinityPoint;

/// Numeric nullspace test: dimension one when the two smallest singular
/// values differ by more than this factor.
pub const NULLSPACE_GAP: f64 = 1e-6;

/// Numeric solutions drop coefficients below this size relative to the
/// largest one.
const NUMERIC_ZERO: f64 = 1e-9;

/// The linear conditions on the coefficients of `V_b`, one column per
/// lattice point of the small polygon.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearSystem<S> {
    pub columns: Vec<Point>,
    /// The first `divisor_rows` rows are evaluations at divisor points.
    pub divisor_rows: usize,
    /// Zig-zag of each remaining row.
    pub type2: Vec<usize>,
    pub rows: Vec<Vec<S>>,
}

/// One row `χ^m(p, q)` per divisor point, then one row per type-2 zig-zag
/// `α`: `C_α^{-b_m}` on the columns minimizing `<m, u_ρ>`, with `b_m` the
/// `x₁`-exponent of `χ^m` in the ray basis, and zero elsewhere. A row of the
/// second kind says the leading part of `V_b` on the ray vanishes at
/// `x₁ = 1/C_α`.
pub fn build_system<S: Scalar>(
    name: &str,
    small: &SmallPolygon,
    divisor: &[(S, S)],
    type2: &[usize],
    infinity: &[InfinityPoint<S>],
) -> Result<LinearSystem<S>, InverseError> {
    let columns = small.points.clone();
    if columns.is_empty() {
        return Err(InverseError::EmptyPolygon(name.to_string()));
    }
    let mut rows: Vec<Vec<S>> =
        divisor.iter().map(|(p, q)| columns.iter().map(|m| p.powi(m[0]) * q.powi(m[1])).collect()).collect();
    for &a in type2 {
        let pt = &infinity[a];
        let u = pt.basis.normal;
        let low = columns.iter().map(|m| dot(*m, u)).min().expect("nonempty");
        rows.push(
            columns
                .iter()
                .map(|m| if dot(*m, u) == low { pt.casimir.powi(-pt.basis.to_ray(*m).0) } else { S::zero() })
                .collect(),
        );
    }
    Ok(LinearSystem { columns, divisor_rows: divisor.len(), type2: type2.to_vec(), rows })
}

/// Nullspace extraction for a field.
pub trait NullVector: Scalar {
    /// A spanning vector of a one-dimensional nullspace, normalized, or the
    /// nullspace dimension otherwise.
    fn null_vector(rows: &[Vec<Self>], n: usize) -> Result<Vec<Self>, usize>;
}

/// Exact row reduction; the first nonzero coefficient is set to one.
impl NullVector for BigRational {
    fn null_vector(rows: &[Vec<Self>], n: usize) -> Result<Vec<Self>, usize> {
        let mut m: Vec<Vec<Self>> = rows.to_vec();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..n {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
            m.swap(r, p);
            let inv = m[r][c].inv();
            for x in m[r].iter_mut() {
                *x = x.clone() * inv.clone();
            }
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in 0..n {
                        let d = f.clone() * m[r][j].clone();
                        m[i][j] = m[i][j].clone() - d;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        if free.len() != 1 {
            return Err(free.len());
        }
        let mut x = vec![Self::zero(); n];
        x[free[0]] = Self::one();
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = -m[i][free[0]].clone();
        }
        let lead = x.iter().find(|v| !v.is_zero()).expect("free entry is one").clone();
        Ok(x.into_iter().map(|v| v / lead.clone()).collect())
    }
}

/// Singular value decomposition of the row-normalized system (padded with
/// zero rows to be at least square); the largest coefficient is set to one.
impl NullVector for Complex64 {
    fn null_vector(rows: &[Vec<Self>], n: usize) -> Result<Vec<Self>, usize> {
        let live: Vec<&Vec<Self>> = rows.iter().filter(|r| r.iter().any(|x| x.norm() > 0.0)).collect();
        if live.is_empty() {
            return if n == 1 { Ok(vec![Self::one()]) } else { Err(n) };
        }
        let height = live.len().max(n);
        let mut a = DMatrix::<Self>::zeros(height, n);
        for (i, row) in live.iter().enumerate() {
            let norm = row.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
            for (j, x) in row.iter().enumerate() {
                a[(i, j)] = x / norm;
            }
        }
        let svd = a.svd(false, true);
        let vt = svd.v_t.expect("requested");
        let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
        order.sort_by(|&i, &j| svd.singular_values[j].total_cmp(&svd.singular_values[i]));
        let sv = |k: usize| svd.singular_values[order[k]];
        let last = order.len() - 1;
        let top = sv(0);
        // Two values at rounding level are a larger nullspace, whatever
        // their ratio.
        if last > 0 && sv(last - 1) < NULLSPACE_GAP * top {
            return Err(2);
        }
        let dim_one = if last == 0 {
            sv(0) <= NULLSPACE_GAP * (live.len() as f64).sqrt()
        } else {
            sv(last) < NULLSPACE_GAP * sv(last - 1)
        };
        if !dim_one {
            return Err(0);
        }
        let x: Vec<Self> = vt.row(order[last]).iter().map(|v| v.conj()).collect();
        let lead = *x.iter().max_by(|a, b| a.norm().total_cmp(&b.norm())).expect("n > 0");
        Ok(x.into_iter().map(|v| v / lead).collect())
    }
}

/// `V_b` from its system. Numeric solutions lose coefficients that are zero
/// up to rounding.
pub fn solve_v<S: NullVector>(name: &str, sys: &LinearSystem<S>) -> Result<LaurentPoly<S>, InverseError> {
    let x = S::null_vector(&sys.rows, sys.columns.len()).map_err(|dim| match dim {
        0 => InverseError::NullspaceDim0(name.to_string()),
        _ => InverseError::NullspaceDimHigh(name.to_string()),
    })?;
    let v = LaurentPoly::from_terms(sys.columns.iter().zip(x).map(|(m, c)| ((m[0], m[1]), c)));
    Ok(if S::EXACT { v } else { v.prune(NUMERIC_ZERO * v.max_magnitude()) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn exact_kernel_of_one_row() {
        let x = BigRational::null_vector(&[vec![q(2, 1), q(-1, 1)]], 2).unwrap();
        assert_eq!(x, vec![q(1, 1), q(2, 1)]);
    }

    #[test]
    fn exact_dimensions() {
        assert_eq!(BigRational::null_vector(&[vec![q(1, 1), q(0, 1)], vec![q(0, 1), q(1, 1)]], 2), Err(0));
        assert_eq!(BigRational::null_vector(&[vec![q(1, 1), q(1, 1), q(1, 1)]], 3), Err(2));
    }

    #[test]
    fn numeric_kernel_of_one_row() {
        let x = Complex64::null_vector(&[vec![c(2.0), c(-1.0)]], 2).unwrap();
        assert!((x[0] - c(0.5)).norm() < 1e-14 && (x[1] - c(1.0)).norm() < 1e-14);
    }

    #[test]
    fn numeric_dimensions() {
        assert_eq!(Complex64::null_vector(&[vec![c(1.0), c(0.0)], vec![c(0.0), c(1.0)]], 2), Err(0));
        assert_eq!(Complex64::null_vector(&[vec![c(1.0), c(1.0), c(1.0)]], 3), Err(2));
        assert_eq!(Complex64::null_vector(&[], 1), Ok(vec![c(1.0)]));
        // Rank one in three unknowns, with both small singular values at
        // rounding level.
        let row = vec![c(0.3), c(-1.7), c(2.9)];
        assert_eq!(Complex64::null_vector(&[row.clone(), row], 3), Err(2));
    }
}
