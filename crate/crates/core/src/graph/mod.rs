//! Graphs and signed graphs, family generators, and combinatorial structure detection.
//!
//! Vertices are `0..n` internally. The text file format and CLI output use
//! 1-based labels.

mod enumerate;
mod generate;
pub mod io;
mod signed;
mod structure;

use std::collections::VecDeque;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

pub use enumerate::{canonical_form, connected_graphs};
pub use generate::{generate, Family};
pub use signed::{
    detect_signed_two_eigenvalue, Balance, Sign, SignedGraph, SignedTwoEigKind, SignedTwoEigParams,
    UnbalancedTriangle,
};
pub use structure::{
    complete_bipartite_parts, detect_srg, detect_two_eigenvalue, dominating_join_structure,
    is_star, JoinStructure, SrgParameters, TwoEigParams,
};

/// Finite simple graph on vertices `0..n` with dense adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
            neighbors: vec![Vec::new(); n],
        }
    }

    /// Builds a simple graph; loops, out-of-range endpoints and repeated edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) has an endpoint outside 0..{n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidGraph(format!("repeated edge ({u}, {v})")));
            }
            g.set_edge(u, v);
        }
        g.finish();
        Ok(g)
    }

    /// Graph whose edges are the pairs satisfying `adjacent`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g.finish();
        g
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    fn finish(&mut self) {
        let n = self.n;
        self.neighbors = (0..n)
            .map(|u| (0..n).filter(|&v| self.adj[u * n + v]).collect())
            .collect();
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.n + v]
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.neighbors[u].iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect()
    }

    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.neighbors[u].iter().filter(|&&w| self.has_edge(w, v)).count()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &self.neighbors[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count == self.n
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_regular(&self) -> bool {
        self.neighbors.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn complement(&self) -> Self {
        Self::from_fn(self.n, |u, v| !self.has_edge(u, v))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let shift = self.n;
        Self::from_fn(self.n + other.n, |u, v| match (u < shift, v < shift) {
            (true, true) => self.has_edge(u, v),
            (false, false) => other.has_edge(u - shift, v - shift),
            _ => false,
        })
    }

    /// Join (sum): disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Self {
        let shift = self.n;
        Self::from_fn(self.n + other.n, |u, v| match (u < shift, v < shift) {
            (true, true) => self.has_edge(u, v),
            (false, false) => other.has_edge(u - shift, v - shift),
            _ => true,
        })
    }

    /// Subgraph induced on `vertices`, relabeled in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Self {
        Self::from_fn(vertices.len(), |a, b| self.has_edge(vertices[a], vertices[b]))
    }

    /// Vertices relabeled by `perm`: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut inv = vec![0; self.n];
        for (v, &p) in perm.iter().enumerate() {
            inv[p] = v;
        }
        Self::from_fn(self.n, |a, b| self.has_edge(inv[a], inv[b]))
    }

    /// `L = D - A`.
    pub fn laplacian(&self) -> IntMatrix {
        let mut l = IntMatrix::zeros(self.n.max(1), self.n.max(1));
        for u in 0..self.n {
            l[(u, u)] = BigInt::from(self.degree(u));
            for &v in &self.neighbors[u] {
                l[(u, v)] = BigInt::from(-1);
            }
        }
        l
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Borrowed view of either kind of graph.
#[derive(Debug, Clone, Copy)]
pub enum GraphRef<'a> {
    Plain(&'a Graph),
    Signed(&'a SignedGraph),
}

impl<'a> GraphRef<'a> {
    pub fn underlying(&self) -> &'a Graph {
        match self {
            GraphRef::Plain(g) => g,
            GraphRef::Signed(s) => s.graph(),
        }
    }

    pub fn laplacian(&self) -> IntMatrix {
        match self {
            GraphRef::Plain(g) => g.laplacian(),
            GraphRef::Signed(s) => s.laplacian(),
        }
    }

    pub fn is_signed(&self) -> bool {
        matches!(self, GraphRef::Signed(_))
    }
}

impl<'a> From<&'a Graph> for GraphRef<'a> {
    fn from(g: &'a Graph) -> Self {
        GraphRef::Plain(g)
    }
}

impl<'a> From<&'a SignedGraph> for GraphRef<'a> {
    fn from(g: &'a SignedGraph) -> Self {
        GraphRef::Signed(g)
    }
}

impl<'a> From<&'a AnyGraph> for GraphRef<'a> {
    fn from(g: &'a AnyGraph) -> Self {
        match g {
            AnyGraph::Plain(g) => GraphRef::Plain(g),
            AnyGraph::Signed(s) => GraphRef::Signed(s),
        }
    }
}

/// Owned graph of either kind, as produced by generators and the file parser.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGraph {
    Plain(Graph),
    Signed(SignedGraph),
}

impl AnyGraph {
    pub fn as_ref(&self) -> GraphRef<'_> {
        self.into()
    }

    pub fn underlying(&self) -> &Graph {
        match self {
            AnyGraph::Plain(g) => g,
            AnyGraph::Signed(s) => s.graph(),
        }
    }

    pub fn into_plain(self) -> Option<Graph> {
        match self {
            AnyGraph::Plain(g) => Some(g),
            AnyGraph::Signed(_) => None,
        }
    }

    pub fn into_signed(self) -> Option<SignedGraph> {
        match self {
            AnyGraph::Signed(s) => Some(s),
            AnyGraph::Plain(_) => None,
        }
    }
}

impl From<Graph> for AnyGraph {
    fn from(g: Graph) -> Self {
        AnyGraph::Plain(g)
    }
}

impl From<SignedGraph> for AnyGraph {
    fn from(s: SignedGraph) -> Self {
        AnyGraph::Signed(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true)
    }

    #[test]
    fn rejects_non_simple_input() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn join_examples() {
        let k1 = Graph::empty(1);
        let two_k1 = Graph::empty(2);
        let p3 = k1.join(&two_k1);
        assert_eq!(p3.edges(), vec![(0, 1), (0, 2)]);
        assert_eq!(k(2).join(&k(2)), k(4));
        let star = k1.join(&Graph::empty(5));
        assert_eq!(star.degrees(), vec![5, 1, 1, 1, 1, 1]);
        assert!(is_star(&star).is_some());
    }

    #[test]
    fn laplacian_of_k2() {
        assert_eq!(k(2).laplacian(), IntMatrix::from_rows(&[[1, -1], [-1, 1]]));
    }

    #[test]
    fn connectivity() {
        assert!(k(1).is_connected());
        assert!(!Graph::empty(2).is_connected());
        assert_eq!(Graph::empty(2).require_connected(), Err(Error::Disconnected));
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(c4.is_connected());
        assert!(!c4.complement().is_connected());
    }

    #[test]
    fn relabel_preserves_structure() {
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let q = p.relabel(&[1, 0, 2]);
        assert_eq!(q.edges(), vec![(0, 1), (0, 2)]);
    }
}
