use crate::{kasteleyn_signs, KasteleynError};
use lattice_toric::Point;
use laurent_algebra::{adjugate_column, det, LaurentPoly, PolyMatrix, Scalar};
use torus_graph::{Matching, TorusGraph};

/// The Kasteleyn matrix of a weighted graph together with the reference
/// matching used to normalize its determinant.
#[derive(Debug, Clone)]
pub struct Kasteleyn<S> {
    pub signs: Vec<i8>,
    pub weights: Vec<S>,
    /// Rows are white vertices, columns black vertices.
    pub matrix: PolyMatrix<S>,
    pub reference: Matching,
    /// Coefficient of the reference matching's term in `det K`, including the
    /// permutation sign.
    pub reference_coefficient: S,
    /// Exponent of the reference matching's monomial.
    pub reference_class: Point,
}

impl<S: Scalar> Kasteleyn<S> {
    pub fn new(g: &TorusGraph, weights: Vec<S>) -> Result<Self, KasteleynError> {
        let signs = kasteleyn_signs(g)?;
        Self::with_signs(g, weights, signs)
    }

    pub fn with_signs(g: &TorusGraph, weights: Vec<S>, signs: Vec<i8>) -> Result<Self, KasteleynError> {
        let n = g.num_black();
        let mut matrix = PolyMatrix::zeros(n);
        for (e, edge) in g.edges().iter().enumerate() {
            let c = weights[e].clone() * S::from_i64(i64::from(signs[e]));
            let entry = matrix.get_mut(edge.white, edge.black);
            entry.add_term(edge.hom[0], edge.hom[1], c);
        }
        let reference = g.perfect_matching()?;
        let perm = reference.white_of_black(g);
        let mut coef = S::from_i64(permutation_sign(&perm));
        let mut class = [0, 0];
        for &e in &reference.edge_of_black {
            coef = coef * weights[e].clone() * S::from_i64(i64::from(signs[e]));
            let h = g.edge(e).hom;
            class = [class[0] + h[0], class[1] + h[1]];
        }
        Ok(Self { signs, weights, matrix, reference, reference_coefficient: coef, reference_class: class })
    }

    pub fn determinant(&self) -> LaurentPoly<S> {
        det(&self.matrix)
    }

    /// `P = det K / (coefficient · monomial)` of the reference matching.
    pub fn characteristic_polynomial(&self) -> Result<LaurentPoly<S>, KasteleynError> {
        let d = self.determinant();
        if d.is_zero() {
            return Err(KasteleynError::ZeroDeterminant);
        }
        Ok(self.normalize(&d))
    }

    pub fn normalize(&self, p: &LaurentPoly<S>) -> LaurentPoly<S> {
        p.shift(-self.reference_class[0], -self.reference_class[1]).scale(&self.reference_coefficient.inv())
    }

    /// Entries `Q_{b,w}` of the adjugate for a fixed white vertex `w`, indexed by black vertex.
    pub fn adjugate_column(&self, w: usize) -> Vec<LaurentPoly<S>> {
        adjugate_column(&self.matrix, w)
    }
}

/// `C_α = (-1)^d Π (wt·ε)^{±1}` along each zig-zag, with `d` its number of
/// white vertices.
pub fn casimirs<S: Scalar>(g: &TorusGraph, wt: &[S], signs: &[i8]) -> Vec<S> {
    g.zigzags()
        .iter()
        .map(|z| {
            let mut acc = if z.white_count() % 2 == 0 { S::one() } else { -S::one() };
            for s in &z.sides {
                let v = wt[s.edge].clone() * S::from_i64(i64::from(signs[s.edge]));
                acc = if s.forward { acc * v } else { acc / v };
            }
            acc
        })
        .collect()
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::permutation_sign;

    #[test]
    fn permutation_signs() {
        assert_eq!(permutation_sign(&[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(permutation_sign(&[1, 2, 0]), 1);
        assert_eq!(permutation_sign(&[3, 2, 1, 0]), 1);
    }
}
