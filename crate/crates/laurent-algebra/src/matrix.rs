use crate::{LaurentPoly, Scalar};
use std::collections::HashMap;

/// A square matrix of Laurent polynomials, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix<S> {
    n: usize,
    entries: Vec<LaurentPoly<S>>,
}

impl<S: Scalar> PolyMatrix<S> {
    pub fn zeros(n: usize) -> Self {
        Self { n, entries: vec![LaurentPoly::zero(); n * n] }
    }

    /// Panics if the rows are not all of length `rows.len()`.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly<S>>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self { n, entries: rows.into_iter().flatten().collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly<S> {
        &self.entries[i * self.n + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut LaurentPoly<S> {
        &mut self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentPoly<S>) {
        self.entries[i * self.n + j] = p;
    }

    /// Deletes one row and one column.
    pub fn minor(&self, row: usize, col: usize) -> Self {
        let n = self.n - 1;
        let mut entries = Vec::with_capacity(n * n);
        for i in (0..self.n).filter(|&i| i != row) {
            for j in (0..self.n).filter(|&j| j != col) {
                entries.push(self.get(i, j).clone());
            }
        }
        Self { n, entries }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&LaurentPoly<S>) -> LaurentPoly<T>) -> PolyMatrix<T> {
        PolyMatrix { n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    /// The scalar matrix at `(z, w)`, row-major.
    pub fn eval(&self, z: &S, w: &S) -> Vec<Vec<S>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j).eval(z, w)).collect()).collect()
    }
}

/// Determinant. Small matrices use cofactor expansion; larger exact ones use
/// fraction-free elimination, larger numeric ones a division-free expansion
/// over column subsets (no cancellation-sensitive polynomial division).
pub fn det<S: Scalar>(m: &PolyMatrix<S>) -> LaurentPoly<S> {
    match m.n {
        0 => LaurentPoly::one(),
        n if n <= 4 => cofactor(m),
        _ if S::EXACT => bareiss(m),
        _ => subset_expansion(m),
    }
}

fn cofactor<S: Scalar>(m: &PolyMatrix<S>) -> LaurentPoly<S> {
    if m.n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = LaurentPoly::zero();
    for j in 0..m.n {
        let a = m.get(0, j);
        if a.is_zero() {
            continue;
        }
        let term = a * &cofactor(&m.minor(0, j));
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn bareiss<S: Scalar>(m: &PolyMatrix<S>) -> LaurentPoly<S> {
    let n = m.n;
    let mut a = m.clone();
    // Clear negative exponents row by row so every entry is a polynomial.
    let (mut si, mut sj) = (0, 0);
    for i in 0..n {
        let mins = (0..n).filter_map(|j| a.get(i, j).min_exponents());
        let (mi, mj) = mins.fold((i64::MAX, i64::MAX), |acc, e| (acc.0.min(e.0), acc.1.min(e.1)));
        if mi == i64::MAX {
            return LaurentPoly::zero();
        }
        for j in 0..n {
            let shifted = a.get(i, j).shift(-mi, -mj);
            a.set(i, j, shifted);
        }
        si += mi;
        sj += mj;
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                return LaurentPoly::zero();
            };
            for j in 0..n {
                a.entries.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(a.get(i, j) * a.get(k, k)) - &(a.get(i, k) * a.get(k, j));
                let q = num.div_exact(&prev).expect("fraction-free elimination divides exactly");
                a.set(i, j, q);
            }
            a.set(i, k, LaurentPoly::zero());
        }
        prev = a.get(k, k).clone();
    }
    let d = a.get(n - 1, n - 1).shift(si, sj);
    if negate {
        -&d
    } else {
        d
    }
}

fn subset_expansion<S: Scalar>(m: &PolyMatrix<S>) -> LaurentPoly<S> {
    let n = m.n;
    // partial[mask] = signed sum over placements of the first popcount(mask)
    // rows into the columns of mask.
    let mut partial: HashMap<u64, LaurentPoly<S>> = HashMap::new();
    partial.insert(0, LaurentPoly::one());
    for row in 0..n {
        let mut next: HashMap<u64, LaurentPoly<S>> = HashMap::new();
        for (mask, val) in &partial {
            for col in 0..n {
                let bit = 1u64 << col;
                if mask & bit != 0 || m.get(row, col).is_zero() {
                    continue;
                }
                let above = (mask >> (col + 1)).count_ones();
                let term = val * m.get(row, col);
                let entry = next.entry(mask | bit).or_insert_with(LaurentPoly::zero);
                *entry = if above % 2 == 0 { &*entry + &term } else { &*entry - &term };
            }
        }
        partial = next;
    }
    partial.remove(&((1u64 << n) - 1)).unwrap_or_else(LaurentPoly::zero)
}

/// Column `col` of the adjugate: entry `i` is `(-1)^{i+col} det(M without row col, column i)`.
pub fn adjugate_column<S: Scalar>(m: &PolyMatrix<S>, col: usize) -> Vec<LaurentPoly<S>> {
    (0..m.n)
        .map(|i| {
            let d = det(&m.minor(col, i));
            if (i + col).is_multiple_of(2) {
                d
            } else {
                -&d
            }
        })
        .collect()
}

/// Sylvester resultant eliminating `w`; the result only involves `z`.
/// Both inputs are first multiplied by powers of `w` to clear negative
/// exponents, which does not change their common zeros on the torus.
pub fn resultant_in_w<S: Scalar>(f: &LaurentPoly<S>, g: &LaurentPoly<S>) -> LaurentPoly<S> {
    let fc = w_coefficients(f);
    let gc = w_coefficients(g);
    if fc.is_empty() || gc.is_empty() {
        return LaurentPoly::zero();
    }
    let (df, dg) = (fc.len() - 1, gc.len() - 1);
    let size = df + dg;
    let mut s = PolyMatrix::zeros(size);
    // Rows hold descending coefficient sequences, shifted one column per row.
    for r in 0..dg {
        for (k, c) in fc.iter().rev().enumerate() {
            s.set(r, r + k, c.clone());
        }
    }
    for r in 0..df {
        for (k, c) in gc.iter().rev().enumerate() {
            s.set(dg + r, r + k, c.clone());
        }
    }
    det(&s)
}

/// Ascending coefficients in `w` (each a Laurent polynomial in `z` alone).
fn w_coefficients<S: Scalar>(p: &LaurentPoly<S>) -> Vec<LaurentPoly<S>> {
    let Some((_, jmin)) = p.min_exponents() else {
        return Vec::new();
    };
    let (_, jmax) = p.max_exponents().expect("nonzero");
    let mut out = vec![LaurentPoly::zero(); (jmax - jmin + 1) as usize];
    for ((i, j), c) in p.terms() {
        out[(j - jmin) as usize].add_term(i, 0, c.clone());
    }
    out
}
