use crate::ForwardError;
use laurent_algebra::univariate::roots;
use laurent_algebra::{resultant_in_w, Complex64, LaurentPoly};

/// Relative residual below which a candidate counts as a common zero.
pub const DIVISOR_RESIDUAL: f64 = 1e-8;

type C = LaurentPoly<Complex64>;

/// One point `(p, q)` of the divisor, with the residuals of every
/// adjugate-column entry and of `P` there.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralPoint {
    pub z: Complex64,
    pub w: Complex64,
    /// Relative residual of each column entry, indexed by black vertex.
    pub column_residuals: Vec<f64>,
    pub curve_residual: f64,
}

impl SpectralPoint {
    pub fn max_residual(&self) -> f64 {
        self.column_residuals.iter().copied().fold(self.curve_residual, f64::max)
    }
}

/// `|f(z, w)|` divided by the sum of the absolute values of its terms.
pub fn relative_residual(f: &C, z: Complex64, w: Complex64) -> f64 {
    let (mut value, mut scale) = (Complex64::new(0.0, 0.0), 0.0);
    for ((i, j), c) in f.terms() {
        let t = c * z.powi(i as i32) * w.powi(j as i32);
        value += t;
        scale += t.norm();
    }
    if scale == 0.0 {
        0.0
    } else {
        value.norm() / scale
    }
}

/// The `genus` common zeros in `(ℂ×)²` of the column entries and `P`.
///
/// Pairs of polynomials are tried in order of support size (column entries
/// first, ties by black vertex, `P` last); for each pair `w` is eliminated
/// by a resultant and the `z` roots are back-substituted. Candidates are
/// polished by Gauss-Newton on every entry and `P` together and kept only if
/// all of them vanish there.
pub fn spectral_divisor(column: &[C], p: &C, genus: usize) -> Result<Vec<SpectralPoint>, ForwardError> {
    let mut order: Vec<usize> = (0..column.len()).filter(|&b| !column[b].is_zero()).collect();
    if order.is_empty() {
        return Err(ForwardError::EmptyColumn);
    }
    if genus == 0 {
        return Ok(Vec::new());
    }
    order.sort_by_key(|&b| (column[b].len(), b));
    let mut polys: Vec<&C> = order.iter().map(|&b| &column[b]).collect();
    polys.push(p);

    let mut best = 0;
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            let found = common_zeros(polys[i], polys[j], column, p);
            if found.len() == genus {
                return Ok(found);
            }
            best = best.max(found.len());
        }
    }
    Err(ForwardError::WrongCount { found: best, expected: genus })
}

fn common_zeros(f: &C, h: &C, column: &[C], p: &C) -> Vec<SpectralPoint> {
    let r = resultant_in_w(f, h);
    let Some((lo, hi)) = r.min_exponents().zip(r.max_exponents()) else {
        return Vec::new();
    };
    let coeffs: Vec<Complex64> = (lo.0..=hi.0).map(|i| r.coeff(i, 0)).collect();
    // Back-substitute into whichever of the pair involves `w`.
    let sub = if w_degree(f) > 0 { f } else { h };
    if w_degree(sub) == 0 {
        return Vec::new();
    }
    let mut system: Vec<&C> = column.iter().filter(|q| !q.is_zero()).collect();
    system.push(p);
    let mut out: Vec<SpectralPoint> = Vec::new();
    for z in roots(&coeffs) {
        if !z.is_finite() || z.norm() < 1e-12 {
            continue;
        }
        for w in w_roots(sub, z) {
            let (z, w) = polish(&[f, h], z, w);
            // A loose filter first, so that only genuine candidates are
            // pulled onto the curve.
            if system.iter().any(|q| relative_residual(q, z, w) > 1e-4) {
                continue;
            }
            let (z, w) = polish(&system, z, w);
            let pt = SpectralPoint {
                z,
                w,
                column_residuals: column.iter().map(|q| relative_residual(q, z, w)).collect(),
                curve_residual: relative_residual(p, z, w),
            };
            if pt.max_residual() <= DIVISOR_RESIDUAL && !out.iter().any(|o| close(o, &pt)) {
                out.push(pt);
            }
        }
    }
    out.sort_by(|a, b| {
        let key = |s: &SpectralPoint| [s.z.re, s.z.im, s.w.re, s.w.im];
        key(a).partial_cmp(&key(b)).expect("finite coordinates")
    });
    out
}

/// Nonzero roots in `w` of `f(z, ·)`.
fn w_roots(f: &C, z: Complex64) -> Vec<Complex64> {
    let (Some((_, lo)), Some((_, hi))) = (f.min_exponents(), f.max_exponents()) else {
        return Vec::new();
    };
    let mut coeffs = vec![Complex64::new(0.0, 0.0); (hi - lo + 1) as usize];
    for ((i, j), c) in f.terms() {
        coeffs[(j - lo) as usize] += c * z.powi(i as i32);
    }
    roots(&coeffs).into_iter().filter(|w| w.is_finite() && w.norm() > 1e-12).collect()
}

fn w_degree(f: &C) -> i64 {
    match (f.min_exponents(), f.max_exponents()) {
        (Some((_, lo)), Some((_, hi))) => hi - lo,
        _ => 0,
    }
}

/// Gauss-Newton steps on the (possibly overdetermined) system `fs = 0`,
/// each equation scaled by the size of its terms, keeping the best iterate.
/// With two equations this is Newton's method.
fn polish(fs: &[&C], mut z: Complex64, mut w: Complex64) -> (Complex64, Complex64) {
    let grads: Vec<(C, C)> = fs.iter().map(|f| f.gradient()).collect();
    let score = |z, w| fs.iter().map(|f| relative_residual(f, z, w)).fold(0.0, f64::max);
    let mut best = (score(z, w), z, w);
    for _ in 0..12 {
        // Normal equations J^H J d = J^H r, a 2x2 Hermitian system.
        let zero = Complex64::new(0.0, 0.0);
        let (mut a, mut b, mut d, mut u, mut v) = (zero, zero, zero, zero, zero);
        for (f, (fz, fw)) in fs.iter().zip(&grads) {
            let scale = f.terms().map(|((i, j), c)| (c * z.powi(i as i32) * w.powi(j as i32)).norm()).sum::<f64>();
            if scale == 0.0 {
                continue;
            }
            let (jz, jw, r) = (fz.eval(&z, &w) / scale, fw.eval(&z, &w) / scale, f.eval(&z, &w) / scale);
            a += jz.conj() * jz;
            b += jz.conj() * jw;
            d += jw.conj() * jw;
            u += jz.conj() * r;
            v += jw.conj() * r;
        }
        let c = b.conj();
        let det = a * d - b * c;
        if det.norm() == 0.0 || !det.is_finite() {
            break;
        }
        let dz = (d * u - b * v) / det;
        let dw = (a * v - c * u) / det;
        z -= dz;
        w -= dw;
        if !z.is_finite() || !w.is_finite() {
            break;
        }
        let s = score(z, w);
        if s < best.0 {
            best = (s, z, w);
        }
        if dz.norm() <= 1e-16 * z.norm() && dw.norm() <= 1e-16 * w.norm() {
            break;
        }
    }
    (best.1, best.2)
}

fn close(a: &SpectralPoint, b: &SpectralPoint) -> bool {
    (a.z - b.z).norm() <= 1e-6 * a.z.norm().max(1.0) && (a.w - b.w).norm() <= 1e-6 * a.w.norm().max(1.0)
}
