use crate::{KasteleynError, WeightClass};
use laurent_algebra::{BigRational, Scalar};
use num_traits::{ToPrimitive, Zero};
use torus_graph::{Side, TorusGraph};

/// Constraint walks in generator order: faces except the root face, then the
/// cycles `a` and `b`.
fn constraint_walks(g: &TorusGraph) -> Vec<&[Side]> {
    let mut walks: Vec<&[Side]> =
        (0..g.faces().len()).filter(|&f| f != g.root_face()).map(|f| g.face(f).boundary.as_slice()).collect();
    walks.extend(g.cycles().iter().map(|c| c.as_slice()));
    walks
}

/// Exponents of each edge weight in the generators (faces except the root
/// face, then `A`, `B`). Tree edges get weight one.
pub fn weight_exponents(g: &TorusGraph) -> Result<Vec<Vec<i64>>, KasteleynError> {
    let tree = g.spanning_tree();
    let free: Vec<usize> = (0..g.edges().len()).filter(|&e| !tree[e]).collect();
    let walks = constraint_walks(g);
    let n = free.len();
    if walks.len() != n {
        return Err(KasteleynError::NotUnimodular);
    }
    let col_of = |e: usize| free.iter().position(|&x| x == e);
    let mut m = vec![vec![0i64; n]; n];
    for (r, walk) in walks.iter().enumerate() {
        for s in walk.iter() {
            if let Some(c) = col_of(s.edge) {
                m[r][c] += s.sign();
            }
        }
    }
    let inv = integer_inverse(&m).ok_or(KasteleynError::NotUnimodular)?;
    let mut out = vec![vec![0i64; n]; g.edges().len()];
    for (c, &e) in free.iter().enumerate() {
        out[e] = inv[c].clone();
    }
    Ok(out)
}

/// A representative edge cocycle of the class.
pub fn weight_cocycle<S: Scalar>(g: &TorusGraph, wc: &WeightClass<S>) -> Result<Vec<S>, KasteleynError> {
    let exps = weight_exponents(g)?;
    let gens = wc.generators(g);
    Ok(exps.iter().map(|row| row.iter().zip(&gens).fold(S::one(), |acc, (&k, x)| acc * x.powi(k))).collect())
}

/// The signs carried by the graph, or else a solution of the face
/// conditions with trivial monodromy along `a` and `b`.
pub fn kasteleyn_signs(g: &TorusGraph) -> Result<Vec<i8>, KasteleynError> {
    if let Some(given) = g.signs() {
        return match check_signs(g, &given).first() {
            None => Ok(given),
            Some(&f) => Err(KasteleynError::BadSigns(g.face(f).id.clone())),
        };
    }
    let exps = weight_exponents(g)?;
    // Face targets in GF(2): 1 where the alternating sign product must be -1.
    let targets: Vec<i64> = (0..g.faces().len())
        .filter(|&f| f != g.root_face())
        .map(|f| i64::from(g.face(f).boundary.len().is_multiple_of(4)))
        .chain([0, 0])
        .collect();
    let signs: Vec<i8> = exps
        .iter()
        .map(|row| {
            let bit = row.iter().zip(&targets).map(|(k, t)| k * t).sum::<i64>().rem_euclid(2);
            if bit == 1 {
                -1
            } else {
                1
            }
        })
        .collect();
    if check_signs(g, &signs).is_empty() {
        Ok(signs)
    } else {
        Err(KasteleynError::Unsatisfiable)
    }
}

/// Faces violating the Kasteleyn condition: a face with `2k` sides needs
/// sign product `-1` when `k` is even and `+1` when `k` is odd.
pub fn check_signs(g: &TorusGraph, signs: &[i8]) -> Vec<usize> {
    g.faces()
        .iter()
        .enumerate()
        .filter(|(_, f)| {
            let prod: i64 = f.boundary.iter().map(|s| i64::from(signs[s.edge])).product();
            let want = if f.boundary.len() % 4 == 0 { -1 } else { 1 };
            prod != want
        })
        .map(|(i, _)| i)
        .collect()
}

/// `Π wt(e)^{±1}` along a walk, `+` for black-to-white sides.
pub fn loop_product<S: Scalar>(walk: &[Side], values: &[S]) -> S {
    walk.iter().fold(S::one(), |acc, s| {
        let v = values[s.edge].clone();
        if s.forward {
            acc * v
        } else {
            acc / v
        }
    })
}

/// Multiplies `wt(e)` by `white[w(e)] / black[b(e)]`; leaves every loop product unchanged.
pub fn coboundary<S: Scalar>(g: &TorusGraph, wt: &[S], black: &[S], white: &[S]) -> Vec<S> {
    g.edges().iter().zip(wt).map(|(e, v)| v.clone() * white[e.white].clone() / black[e.black].clone()).collect()
}

fn integer_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let n = m.len();
    let q = |x: i64| BigRational::from_integer(x.into());
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| row.iter().map(|&x| q(x)).chain((0..n).map(|j| q(i64::from(i == j)))).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(p, c);
        let piv = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x /= piv.clone();
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in 0..2 * n {
                    let t = a[c][k].clone() * f.clone();
                    a[r][k] -= t;
                }
            }
        }
    }
    a.iter()
        .map(|row| row[n..].iter().map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None }).collect())
        .collect()
}
