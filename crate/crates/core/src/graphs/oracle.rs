//! Backtracking subgraph-isomorphism search, independent of the polytope
//! route.
//!
//! "Subgraph" is the non-induced notion: a vertex bijection `σ` with every
//! edge `{u, v}` of `H` mapped onto an edge `{σ(u), σ(v)}` of `G`.

use serde::Serialize;

use super::{permute_graph, Graph};
use crate::error::{check_dim, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoWitness {
    pub sigma: Permutation,
    /// Edges of `σ(H)` that are edges of `G`.
    pub mapped_edges: usize,
}

impl IsoWitness {
    pub fn evaluate(sigma: &Permutation, g: &Graph, h: &Graph) -> Result<Self> {
        check_dim(g.n(), h.n())?;
        let mapped_edges = permute_graph(sigma, h)?.edges().filter(|&(u, v)| g.has_edge(u, v)).count();
        Ok(IsoWitness { sigma: sigma.clone(), mapped_edges })
    }

    pub fn is_embedding(&self, h: &Graph) -> bool {
        self.mapped_edges == h.edge_count()
    }
}

/// Finds some `σ` with `σ(H) ⊆ G`, or `None`.
///
/// `H` vertices are placed highest degree first; a vertex may only land on a
/// `G` vertex of at least its degree, and every edge to an already placed
/// neighbour must be present in `G`.
pub fn subgraph_iso_oracle(g: &Graph, h: &Graph) -> Result<Option<IsoWitness>> {
    check_dim(g.n(), h.n())?;
    let n = g.n();
    if h.edge_count() > g.edge_count() {
        return Ok(None);
    }
    let g_adj = g.adjacency_bits();
    let h_adj = h.adjacency_bits();
    let g_deg = g.degrees();
    let h_deg = h.degrees();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h_deg[v]), v));

    let mut state = Search {
        n,
        g_adj: &g_adj,
        h_adj: &h_adj,
        g_deg: &g_deg,
        h_deg: &h_deg,
        order: &order,
        image: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if !state.extend(0) {
        return Ok(None);
    }
    let sigma = Permutation::from_image_unchecked(state.image);
    Ok(Some(IsoWitness { sigma, mapped_edges: h.edge_count() }))
}

struct Search<'a> {
    n: usize,
    g_adj: &'a [bool],
    h_adj: &'a [bool],
    g_deg: &'a [usize],
    h_deg: &'a [usize],
    order: &'a [usize],
    image: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.n {
            return true;
        }
        let v = self.order[depth];
        for target in 0..self.n {
            if self.used[target] || self.g_deg[target] < self.h_deg[v] || !self.consistent(depth, v, target) {
                continue;
            }
            self.image[v] = target;
            self.used[target] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[target] = false;
            self.image[v] = usize::MAX;
        }
        false
    }

    fn consistent(&self, depth: usize, v: usize, target: usize) -> bool {
        self.order[..depth].iter().all(|&u| {
            !self.h_adj[u * self.n + v] || self.g_adj[self.image[u] * self.n + target]
        })
    }
}

/// Exhaustive reference: the lexicographically smallest `σ` over all `n!`
/// permutations with `σ(H) ⊆ G`.
pub fn brute_force_subgraph(g: &Graph, h: &Graph) -> Result<Option<Permutation>> {
    check_dim(g.n(), h.n())?;
    Ok(Permutation::all(g.n()).find(|sigma| h.edges().all(|(u, v)| g.has_edge(sigma.apply(u), sigma.apply(v)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{builtin_graph, GraphKind};

    #[test]
    fn oracle_examples() {
        let k3 = builtin_graph(GraphKind::Complete, 3).unwrap();
        let p3 = builtin_graph(GraphKind::Path, 3).unwrap();
        let w = subgraph_iso_oracle(&k3, &p3).unwrap().unwrap();
        assert!(w.is_embedding(&p3));
        assert_eq!(IsoWitness::evaluate(&w.sigma, &k3, &p3).unwrap(), w);
        assert_eq!(subgraph_iso_oracle(&p3, &k3).unwrap(), None);
        let w = subgraph_iso_oracle(&p3, &Graph::empty(3)).unwrap().unwrap();
        assert!(w.sigma.is_identity());
        assert!(subgraph_iso_oracle(&p3, &Graph::empty(2)).is_err());
    }

    #[test]
    fn all_permutations_embed_p3_in_k3() {
        let k3 = builtin_graph(GraphKind::Complete, 3).unwrap();
        let p3 = builtin_graph(GraphKind::Path, 3).unwrap();
        for sigma in Permutation::all(3) {
            assert!(IsoWitness::evaluate(&sigma, &k3, &p3).unwrap().is_embedding(&p3));
        }
        assert_eq!(brute_force_subgraph(&p3, &k3).unwrap(), None);
    }

    #[test]
    fn cycle_in_complete_but_not_in_path() {
        let c4 = builtin_graph(GraphKind::Cycle, 4).unwrap();
        let k4 = builtin_graph(GraphKind::Complete, 4).unwrap();
        let p4 = builtin_graph(GraphKind::Path, 4).unwrap();
        assert!(subgraph_iso_oracle(&k4, &c4).unwrap().is_some());
        assert!(subgraph_iso_oracle(&c4, &p4).unwrap().is_some());
        assert!(subgraph_iso_oracle(&p4, &c4).unwrap().is_none());
    }
}
