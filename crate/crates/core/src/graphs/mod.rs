//! Simple undirected graphs, their file formats, and an independent
//! subgraph-isomorphism oracle.

mod edge_list;
mod graph6;
mod oracle;

pub use edge_list::{emit_edge_list, parse_edge_list};
pub use graph6::{emit_graph6, parse_graph6};
pub use oracle::{brute_force_subgraph, subgraph_iso_oracle, IsoWitness};

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{check_dim, Error, Result};
use crate::perm::Permutation;
use crate::rational;
use crate::tensor::Matrix;

/// Simple undirected graph on vertices `0..n`. Edges are stored once as
/// `(min, max)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: BTreeSet::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges (the `m` of the subgraph bound `2m`).
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Row-major 0/1 adjacency lookup table.
    pub(crate) fn adjacency_bits(&self) -> Vec<bool> {
        let mut adj = vec![false; self.n * self.n];
        for &(u, v) in &self.edges {
            adj[u * self.n + v] = true;
            adj[v * self.n + u] = true;
        }
        adj
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (u, v)) in self.edges.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}-{}", u + 1, v + 1)?;
        }
        f.write_str("])")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Complete,
    Path,
    Cycle,
    Empty,
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complete" => Ok(GraphKind::Complete),
            "path" => Ok(GraphKind::Path),
            "cycle" => Ok(GraphKind::Cycle),
            "empty" => Ok(GraphKind::Empty),
            other => Err(Error::parse(format!("unknown graph kind {other:?}"))),
        }
    }
}

pub fn builtin_graph(kind: GraphKind, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("builtin graphs need n >= 1"));
    }
    let edges: Vec<(usize, usize)> = match kind {
        GraphKind::Complete => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
        GraphKind::Path => (1..n).map(|v| (v - 1, v)).collect(),
        GraphKind::Cycle => {
            if n < 3 {
                return Err(Error::invalid(format!("cycle needs n >= 3, got {n}")));
            }
            (1..n).map(|v| (v - 1, v)).chain([(0, n - 1)]).collect()
        }
        GraphKind::Empty => Vec::new(),
    };
    Graph::new(n, edges)
}

pub fn adjacency_matrix(g: &Graph) -> Matrix {
    let adj = g.adjacency_bits();
    Matrix::from_fn(g.n, |i, j| if adj[i * g.n + j] { rational::one() } else { rational::zero() })
}

/// Relabels `H` by `σ`: every edge `{u, v}` becomes `{σ(u), σ(v)}`.
///
/// With `P = perm_matrix(σ)` the adjacency matrix of the result is
/// `Pᵀ · A_H · P`, entry `(σ(u), σ(v))` being `A_H[u][v]`.
pub fn permute_graph(sigma: &Permutation, h: &Graph) -> Result<Graph> {
    check_dim(h.n, sigma.n())?;
    Graph::new(h.n, h.edges().map(|(u, v)| (sigma.apply(u), sigma.apply(v))))
}

/// Appends isolated vertices up to `n`.
pub fn pad_graph(g: &Graph, n: usize) -> Result<Graph> {
    if n < g.n {
        return Err(Error::invalid(format!("cannot pad a graph on {} vertices down to {n}", g.n)));
    }
    Ok(Graph { n, edges: g.edges.clone() })
}
