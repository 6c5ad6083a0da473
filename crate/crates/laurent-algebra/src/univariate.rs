//! Root finding for one-variable polynomials with complex coefficients.

use num_complex::Complex64;

/// All complex roots of `Σ coeffs[k] x^k`, with multiplicity, via the
/// Aberth–Ehrlich iteration. Trailing zero coefficients are dropped.
pub fn roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let top = match coeffs.iter().rposition(|c| *c != Complex64::new(0.0, 0.0)) {
        Some(t) => t,
        None => return Vec::new(),
    };
    let low = coeffs.iter().position(|c| *c != Complex64::new(0.0, 0.0)).unwrap_or(0);
    let mut out = vec![Complex64::new(0.0, 0.0); low];
    let p: Vec<Complex64> = coeffs[low..=top].to_vec();
    let n = p.len() - 1;
    if n == 0 {
        return out;
    }
    let lead = p[n];
    let p: Vec<Complex64> = p.iter().map(|c| c / lead).collect();
    let dp: Vec<Complex64> = (1..=n).map(|k| p[k] * k as f64).collect();

    // Start on a circle sized by the geometric mean of root moduli.
    let radius = p[0].norm().powf(1.0 / n as f64).max(1e-3);
    let mut z: Vec<Complex64> =
        (0..n).map(|k| Complex64::from_polar(radius, std::f64::consts::TAU * k as f64 / n as f64 + 0.4)).collect();
    for _ in 0..1000 {
        let mut worst: f64 = 0.0;
        for k in 0..n {
            let f = horner(&p, z[k]);
            if f == Complex64::new(0.0, 0.0) {
                continue;
            }
            let ratio = f / horner(&dp, z[k]);
            let repulsion: Complex64 = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                worst = worst.max(step.norm() / z[k].norm().max(1e-300));
            }
        }
        if worst < 1e-15 {
            break;
        }
    }
    out.extend(z);
    out
}

pub fn horner(coeffs: &[Complex64], x: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * x + c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn expand(rs: &[Complex64]) -> Vec<Complex64> {
        let mut p = vec![c(1.0, 0.0)];
        for r in rs {
            let mut next = vec![c(0.0, 0.0); p.len() + 1];
            for (k, a) in p.iter().enumerate() {
                next[k + 1] += a;
                next[k] -= a * r;
            }
            p = next;
        }
        p
    }

    #[test]
    fn recovers_known_roots() {
        let want = [c(1.0, 0.0), c(-2.0, 0.5), c(0.3, -4.0), c(7.0, 0.0), c(-0.01, 0.02)];
        let got = roots(&expand(&want));
        assert_eq!(got.len(), want.len());
        for r in want {
            assert!(got.iter().any(|g| (g - r).norm() < 1e-9 * r.norm().max(1.0)), "missing {r}");
        }
    }

    #[test]
    fn zero_roots_and_degenerate_input() {
        let got = roots(&[c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0)]);
        assert_eq!(got.iter().filter(|z| z.norm() == 0.0).count(), 2);
        assert!(got.iter().any(|z| (z - c(1.0, 0.0)).norm() < 1e-12));
        assert!(roots(&[c(3.0, 0.0)]).is_empty());
        assert!(roots(&[]).is_empty());
    }
}
