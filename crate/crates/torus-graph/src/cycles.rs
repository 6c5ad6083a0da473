use crate::{Color, GraphError, Side, TorusGraph};
use std::collections::VecDeque;

type Walk = Vec<Side>;

/// Closed walks with classes `(1,0)` and `(0,1)`, built from fundamental
/// cycles of a breadth-first spanning tree rooted at the root white vertex.
pub(crate) fn homology_basis(g: &TorusGraph) -> Result<[Walk; 2], GraphError> {
    let nb = g.num_black();
    let id = |c: Color, i: usize| if c == Color::Black { i } else { nb + i };
    let nv = nb + g.num_white();
    let mut adj: Vec<Vec<Side>> = vec![Vec::new(); nv];
    for (e, edge) in g.edges().iter().enumerate() {
        adj[edge.black].push(Side::plus(e));
        adj[nb + edge.white].push(Side::minus(e));
    }
    let root = id(Color::White, g.root_white());
    let mut parent: Vec<Option<Side>> = vec![None; nv];
    let mut seen = vec![false; nv];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &s in &adj[v] {
            let (c, i) = g.side_end(s);
            let u = id(c, i);
            if !seen[u] {
                seen[u] = true;
                parent[u] = Some(s);
                queue.push_back(u);
            }
        }
    }
    let path_to = |mut v: usize| {
        let mut p = Vec::new();
        while let Some(s) = parent[v] {
            p.push(s);
            let (c, i) = g.side_start(s);
            v = id(c, i);
        }
        p.reverse();
        p
    };

    let mut gens: Vec<([i64; 2], Walk)> = Vec::new();
    for (e, edge) in g.edges().iter().enumerate() {
        if parent[edge.black] == Some(Side::plus(e)) || parent[nb + edge.white] == Some(Side::minus(e)) {
            continue;
        }
        let mut walk = path_to(edge.black);
        walk.push(Side::plus(e));
        walk.extend(inverse(&path_to(nb + edge.white)));
        let class = g.walk_class(&walk);
        if class != [0, 0] {
            gens.push((class, walk));
        }
    }

    let x = reduce(g, &mut gens, 0)?;
    let y = reduce(g, &mut gens, 1)?;
    // x now has class (1, k); clear k with y.
    let k = x.0[1];
    let x_walk = concat(&x.1, &power(&y.1, -k));
    Ok([cyclically_reduced(&x_walk), cyclically_reduced(&y.1)])
}

/// Euclid on coordinate `axis`: returns the unique generator with that
/// coordinate equal to `1`, leaving the others with coordinate `0`.
fn reduce(g: &TorusGraph, gens: &mut Vec<([i64; 2], Walk)>, axis: usize) -> Result<([i64; 2], Walk), GraphError> {
    loop {
        let nonzero: Vec<usize> = (0..gens.len()).filter(|&i| gens[i].0[axis] != 0).collect();
        match nonzero.len() {
            0 => return Err(GraphError::NoHomologyBasis),
            1 => {
                let (class, walk) = gens.remove(nonzero[0]);
                return match class[axis] {
                    1 => Ok((class, walk)),
                    -1 => {
                        let w = inverse(&walk);
                        Ok((g.walk_class(&w), w))
                    }
                    _ => Err(GraphError::NoHomologyBasis),
                };
            }
            _ => {
                let p = *nonzero.iter().min_by_key(|&&i| gens[i].0[axis].abs()).expect("nonempty");
                let (pc, pw) = gens[p].clone();
                for &i in nonzero.iter().filter(|&&i| i != p) {
                    let q = gens[i].0[axis] / pc[axis];
                    let walk = free_reduced(&concat(&gens[i].1, &power(&pw, -q)));
                    gens[i] = (g.walk_class(&walk), walk);
                }
            }
        }
    }
}

fn inverse(w: &[Side]) -> Walk {
    w.iter().rev().map(|s| s.rev()).collect()
}

fn concat(a: &[Side], b: &[Side]) -> Walk {
    a.iter().chain(b).copied().collect()
}

fn power(w: &[Side], k: i64) -> Walk {
    let base = if k < 0 { inverse(w) } else { w.to_vec() };
    (0..k.unsigned_abs()).flat_map(|_| base.iter().copied()).collect()
}

/// Cancels backtracking; keeps the base point.
fn free_reduced(w: &[Side]) -> Walk {
    let mut out: Walk = Vec::with_capacity(w.len());
    for &s in w {
        if out.last() == Some(&s.rev()) {
            out.pop();
        } else {
            out.push(s);
        }
    }
    out
}

fn cyclically_reduced(w: &[Side]) -> Walk {
    let mut out = free_reduced(w);
    while out.len() >= 2 && out[0] == out[out.len() - 1].rev() {
        out.pop();
        out.remove(0);
    }
    out
}
