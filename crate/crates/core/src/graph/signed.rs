use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::Graph;
use crate::error::{Error, Result};
use crate::linalg::{char_poly, IntMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    fn from_value(v: i8) -> Option<Self> {
        match v {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }
}

/// A simple graph with a `±` sign on every edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    graph: Graph,
    // Dense `n × n` sign table: `±1` on edges, `0` elsewhere.
    signs: Vec<i8>,
}

/// Result of the balance test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Balance {
    /// Switching at `switching` makes every edge positive.
    Balanced { switching: Vec<usize> },
    /// The edge `(u, v)` closes a cycle with an odd number of negative edges.
    Unbalanced { witness_edge: (usize, usize) },
}

/// A triangle `u v w` whose only negative edge, after switching at `switching`, is `uv`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnbalancedTriangle {
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub switching: Vec<usize>,
}

impl SignedGraph {
    pub fn from_edges(n: usize, edges: &[(usize, usize, Sign)]) -> Result<Self> {
        let plain: Vec<(usize, usize)> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
        let graph = Graph::from_edges(n, &plain)?;
        let mut signs = vec![0i8; n * n];
        for &(u, v, s) in edges {
            signs[u * n + v] = s.value() as i8;
            signs[v * n + u] = s.value() as i8;
        }
        Ok(SignedGraph { graph, signs })
    }

    /// Signs every edge of `graph` with `sign(u, v)` (called with `u < v`).
    pub fn with_signs(graph: Graph, mut sign: impl FnMut(usize, usize) -> Sign) -> Self {
        let n = graph.n();
        let mut signs = vec![0i8; n * n];
        for (u, v) in graph.edges() {
            let s = sign(u, v).value() as i8;
            signs[u * n + v] = s;
            signs[v * n + u] = s;
        }
        SignedGraph { graph, signs }
    }

    pub fn all_positive(graph: Graph) -> Self {
        Self::with_signs(graph, |_, _| Sign::Positive)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        Sign::from_value(self.signs[u * self.n() + v])
    }

    /// `σ(uv)` as an integer, `0` for non-edges.
    pub fn sigma(&self, u: usize, v: usize) -> i64 {
        self.signs[u * self.n() + v] as i64
    }

    pub fn signed_edges(&self) -> Vec<(usize, usize, Sign)> {
        self.graph
            .edges()
            .into_iter()
            .map(|(u, v)| (u, v, self.sign(u, v).expect("edge has a sign")))
            .collect()
    }

    pub fn negative_edges(&self) -> Vec<(usize, usize)> {
        self.graph
            .edges()
            .into_iter()
            .filter(|&(u, v)| self.sigma(u, v) < 0)
            .collect()
    }

    /// `L_σ = D - A_σ`.
    pub fn laplacian(&self) -> IntMatrix {
        let n = self.n();
        let mut l = IntMatrix::zeros(n.max(1), n.max(1));
        for u in 0..n {
            l[(u, u)] = BigInt::from(self.graph.degree(u));
            for &v in self.graph.neighbors(u) {
                l[(u, v)] = BigInt::from(-self.sigma(u, v));
            }
        }
        l
    }

    /// Flips the sign of every edge with exactly one endpoint in `set`.
    pub fn switch(&self, set: &[usize]) -> Self {
        let n = self.n();
        let mut inside = vec![false; n];
        for &s in set {
            inside[s] = true;
        }
        let mut out = self.clone();
        for (u, v) in self.graph.edges() {
            if inside[u] != inside[v] {
                out.signs[u * n + v] *= -1;
                out.signs[v * n + u] *= -1;
            }
        }
        out
    }

    /// Balance test by propagating potentials along a BFS forest.
    pub fn balance(&self) -> Balance {
        let n = self.n();
        let mut potential = vec![0i64; n];
        for root in 0..n {
            if potential[root] != 0 {
                continue;
            }
            potential[root] = 1;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for &y in self.graph.neighbors(x) {
                    if potential[y] == 0 {
                        potential[y] = potential[x] * self.sigma(x, y);
                        queue.push_back(y);
                    }
                }
            }
        }
        for (u, v) in self.graph.edges() {
            if self.sigma(u, v) != potential[u] * potential[v] {
                return Balance::Unbalanced { witness_edge: (u, v) };
            }
        }
        Balance::Balanced {
            switching: (0..n).filter(|&v| potential[v] < 0).collect(),
        }
    }

    pub fn is_balanced(&self) -> bool {
        matches!(self.balance(), Balance::Balanced { .. })
    }

    /// Positive minus negative length-2 paths between `u` and `v`.
    pub fn net_common_neighbors(&self, u: usize, v: usize) -> Result<i64> {
        if u == v {
            return Err(Error::InvalidParameters("net common neighbors need two distinct vertices".into()));
        }
        Ok(self
            .graph
            .neighbors(u)
            .iter()
            .filter(|&&w| self.graph.has_edge(w, v))
            .map(|&w| self.sigma(u, w) * self.sigma(w, v))
            .sum())
    }

    fn cycle_sign(&self, cycle: &[usize]) -> i64 {
        (0..cycle.len())
            .map(|i| self.sigma(cycle[i], cycle[(i + 1) % cycle.len()]))
            .product()
    }

    /// An unbalanced cycle: a non-tree edge violating the BFS potentials, closed through the tree.
    fn unbalanced_cycle(&self) -> Option<Vec<usize>> {
        let n = self.n();
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut potential = vec![0i64; n];
        potential[0] = 1;
        parent[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &y in self.graph.neighbors(x) {
                if potential[y] == 0 {
                    potential[y] = potential[x] * self.sigma(x, y);
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        let (a, b) = self
            .graph
            .edges()
            .into_iter()
            .find(|&(u, v)| self.sigma(u, v) != potential[u] * potential[v])?;
        let (mut x, mut y) = (a, b);
        let mut left = vec![x];
        let mut right = vec![y];
        while x != y {
            if depth[x] >= depth[y] {
                x = parent[x];
                left.push(x);
            } else {
                y = parent[y];
                right.push(y);
            }
        }
        right.pop();
        left.extend(right.into_iter().rev());
        Some(left)
    }

    /// Finds a triangle with an odd number of negative edges in an unbalanced
    /// signed complete graph by repeatedly splitting an unbalanced cycle along a chord.
    pub fn find_unbalanced_triangle(&self) -> Result<UnbalancedTriangle> {
        if self.n() < 3 || !self.graph.is_complete() {
            return Err(Error::StructureMismatch(
                "unbalanced triangle search needs a complete graph on at least 3 vertices".into(),
            ));
        }
        let mut cycle = self.unbalanced_cycle().ok_or(Error::Balanced)?;
        while cycle.len() > 3 {
            let l = cycle.len();
            let tri = [cycle[0], cycle[1], cycle[l - 1]];
            if self.cycle_sign(&tri) < 0 {
                cycle = tri.to_vec();
            } else {
                cycle.remove(0);
            }
            debug_assert!(self.cycle_sign(&cycle) < 0);
        }
        let (a, b, c) = (cycle[0], cycle[1], cycle[2]);
        let negatives: Vec<(usize, usize, usize)> = [(a, b, c), (b, c, a), (c, a, b)]
            .into_iter()
            .filter(|&(x, y, _)| self.sigma(x, y) < 0)
            .collect();
        let (u, v, w, switching) = match negatives.as_slice() {
            [(x, y, z)] => (*x, *y, *z, Vec::new()),
            _ => (a, b, c, vec![c]),
        };
        let (u, v) = (u.min(v), u.max(v));
        Ok(UnbalancedTriangle { u, v, w, switching })
    }
}

impl std::fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<String> = self
            .signed_edges()
            .into_iter()
            .map(|(u, v, s)| format!("{u}{}{v}", if s == Sign::Positive { '+' } else { '-' }))
            .collect();
        write!(f, "SignedGraph(n={}, [{}])", self.n(), edges.join(" "))
    }
}

/// Parameters of an unbalanced signed graph with exactly two distinct Laplacian eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedTwoEigParams {
    pub theta_sum: i64,
    pub theta_prod: i64,
    pub kind: SignedTwoEigKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignedTwoEigKind {
    /// `k`-regular with `λ = 2k - θ₁ - θ₂` and `θ₁θ₂ = k(k - λ - 1)`.
    Regular { k: i64, lambda: i64 },
    /// Degrees `k1 < k2` with `θ₁ + θ₂ = k1 + k2 + 1` and `θ₁θ₂ = k1 k2`.
    TwoDegree { k1: i64, k2: i64 },
}

impl SignedTwoEigParams {
    /// Order claimed for the explicit decomposition: `k(k-λ-1)` or `k1 k2`.
    pub fn claimed_order(&self) -> i64 {
        match self.kind {
            SignedTwoEigKind::Regular { k, lambda } => k * (k - lambda - 1),
            SignedTwoEigKind::TwoDegree { k1, k2 } => k1 * k2,
        }
    }
}

/// Detects an unbalanced signed graph with exactly two distinct Laplacian
/// eigenvalues via the square-free part of its characteristic polynomial, and
/// checks the resulting degree and net-common-neighbor pattern.
pub fn detect_signed_two_eigenvalue(g: &SignedGraph) -> Result<Option<SignedTwoEigParams>> {
    g.graph().require_connected()?;
    if g.is_balanced() {
        return Err(Error::Balanced);
    }
    let q = char_poly(&g.laplacian())?.square_free_part();
    if q.degree() != Some(2) {
        return Ok(None);
    }
    let coeffs = q
        .integer_coeffs()
        .ok_or_else(|| Error::Internal("monic square-free part with non-integer coefficients".into()))?;
    let theta_sum = (-&coeffs[1]).to_i64().ok_or_else(|| Error::Internal("eigenvalue sum overflow".into()))?;
    let theta_prod = coeffs[0].to_i64().ok_or_else(|| Error::Internal("eigenvalue product overflow".into()))?;

    let graph = g.graph();
    let mut degs = graph.degrees();
    degs.sort_unstable();
    degs.dedup();
    let kind = match degs.as_slice() {
        [k] => {
            let k = *k as i64;
            SignedTwoEigKind::Regular { k, lambda: 2 * k - theta_sum }
        }
        [k1, k2] => SignedTwoEigKind::TwoDegree { k1: *k1 as i64, k2: *k2 as i64 },
        _ => return Err(Error::Internal("two-eigenvalue signed graph with three or more degrees".into())),
    };
    let params = SignedTwoEigParams { theta_sum, theta_prod, kind };
    if let SignedTwoEigKind::TwoDegree { k1, k2 } = kind {
        if theta_sum != k1 + k2 + 1 {
            return Err(Error::Internal("eigenvalue sum differs from k1 + k2 + 1".into()));
        }
    }
    if params.claimed_order() != theta_prod {
        return Err(Error::Internal("eigenvalue product differs from the degree formula".into()));
    }
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            let cn = g.net_common_neighbors(u, v)?;
            let expected = if graph.has_edge(u, v) {
                let d = (graph.degree(u) + graph.degree(v)) as i64;
                g.sigma(u, v) * (d - theta_sum)
            } else {
                0
            };
            if cn != expected {
                return Err(Error::Internal(format!(
                    "net common neighbors of ({u}, {v}) is {cn}, expected {expected}"
                )));
            }
        }
    }
    Ok(Some(params))
}
