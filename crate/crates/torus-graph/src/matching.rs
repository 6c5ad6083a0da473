use crate::{GraphError, TorusGraph};

/// A perfect matching, stored as the chosen edge at each black vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub edge_of_black: Vec<usize>,
}

impl Matching {
    /// Chosen edges in increasing order.
    pub fn edges(&self) -> Vec<usize> {
        let mut e = self.edge_of_black.clone();
        e.sort_unstable();
        e
    }

    /// White vertex matched to each black vertex.
    pub fn white_of_black(&self, g: &TorusGraph) -> Vec<usize> {
        self.edge_of_black.iter().map(|&e| g.edge(e).white).collect()
    }
}

impl TorusGraph {
    /// Augmenting-path search over black vertices in order, trying edges in
    /// input order. Deterministic for a given input.
    pub fn perfect_matching(&self) -> Result<Matching, GraphError> {
        let mut owner: Vec<Option<usize>> = vec![None; self.num_white()];
        let mut edge_of_black = vec![usize::MAX; self.num_black()];
        for b in 0..self.num_black() {
            let mut visited = vec![false; self.num_white()];
            if !self.augment(b, &mut visited, &mut owner, &mut edge_of_black) {
                return Err(GraphError::NoPerfectMatching);
            }
        }
        Ok(Matching { edge_of_black })
    }

    fn augment(
        &self,
        b: usize,
        visited: &mut [bool],
        owner: &mut [Option<usize>],
        edge_of_black: &mut [usize],
    ) -> bool {
        for e in self.edges_at_black(b) {
            let w = self.edge(e).white;
            if visited[w] {
                continue;
            }
            visited[w] = true;
            let free = match owner[w] {
                None => true,
                Some(other) => self.augment(other, visited, owner, edge_of_black),
            };
            if free {
                owner[w] = Some(b);
                edge_of_black[b] = e;
                return true;
            }
        }
        false
    }
}
