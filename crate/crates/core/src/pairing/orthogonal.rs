//! Search for large sets of edges whose elements `E_uv` pairwise pair to zero.

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;

use super::{closed_form_parameters, edge_pairing_local, pair_potential, potential, PairingValue};
use crate::error::Result;
use crate::graph::Graph;
use crate::group::{CriticalGroup, GroupElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Maximum orthogonal set (branch and bound).
    Exact,
    /// Maximal orthogonal set grown in lexicographic edge order.
    Greedy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairingMethod {
    /// Coefficient differences of the SRG edge decomposition.
    ClosedForm,
    /// Potentials `L f = m E` with `m` the group exponent.
    General,
}

/// All pairings `⟨E_e, E_f⟩` between edges of a connected graph, edges in lexicographic order.
#[derive(Debug, Clone)]
pub struct PairingTable {
    pub edges: Vec<(usize, usize)>,
    pub method: PairingMethod,
    values: Vec<PairingValue>,
}

impl PairingTable {
    /// Uses the closed form for non-complete, non-complete-bipartite SRGs and
    /// the general definition otherwise.
    pub fn new(g: &Graph) -> Result<Self> {
        let edges = g.edges();
        let m = edges.len();
        let mut values = Vec::with_capacity(m * m);
        let method = if let Some(p) = closed_form_parameters(g) {
            for &e in &edges {
                for &f in &edges {
                    values.push(edge_pairing_local(g, &p, e, f));
                }
            }
            PairingMethod::ClosedForm
        } else {
            Self::general_values(g, &edges, &mut values)?;
            PairingMethod::General
        };
        Ok(PairingTable { edges, method, values })
    }

    /// Always uses the general definition.
    pub fn general(g: &Graph) -> Result<Self> {
        let edges = g.edges();
        let mut values = Vec::with_capacity(edges.len() * edges.len());
        Self::general_values(g, &edges, &mut values)?;
        Ok(PairingTable { edges, method: PairingMethod::General, values })
    }

    fn general_values(g: &Graph, edges: &[(usize, usize)], out: &mut Vec<PairingValue>) -> Result<()> {
        let cg = CriticalGroup::of(g)?;
        let m: BigInt = cg.exponent();
        let n = g.n();
        for &(u, v) in edges {
            let f = potential(&cg, &GroupElement::edge(n, u, v), &m)?;
            for &(x, y) in edges {
                out.push(pair_potential(&f, &m, &GroupElement::edge(n, x, y)));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Pairing between edges with indices `i` and `j`.
    pub fn get(&self, i: usize, j: usize) -> &PairingValue {
        &self.values[i * self.edges.len() + j]
    }

    pub fn index_of(&self, e: (usize, usize)) -> Option<usize> {
        let e = (e.0.min(e.1), e.0.max(e.1));
        self.edges.binary_search(&e).ok()
    }

    /// Whether the edges at `indices` pairwise pair to zero.
    pub fn is_orthogonal(&self, indices: &[usize]) -> bool {
        indices
            .iter()
            .enumerate()
            .all(|(a, &i)| indices[a + 1..].iter().all(|&j| self.get(i, j).is_zero()))
    }

    fn zero_graph(&self) -> Vec<FixedBitSet> {
        let m = self.len();
        (0..m)
            .map(|i| {
                let mut row = FixedBitSet::with_capacity(m);
                for j in 0..m {
                    if i != j && self.get(i, j).is_zero() {
                        row.insert(j);
                    }
                }
                row
            })
            .collect()
    }
}

/// Edges whose `E_uv` pairwise pair to zero, with the pairwise values as certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalSet {
    pub edges: Vec<(usize, usize)>,
    /// `(i, j, ⟨E_i, E_j⟩)` for every pair `i < j` of positions in `edges`.
    pub certificate: Vec<(usize, usize, PairingValue)>,
    /// Whether the search proved the size maximum.
    pub proven_maximum: bool,
    /// Size of the best structural seed, if hints were used.
    pub seed_size: Option<usize>,
    pub method: PairingMethod,
}

impl OrthogonalSet {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Candidate edge sets from the constructions known to be orthogonal in SRGs:
/// matchings inside greedily-grown cliques, greedy induced matchings, and
/// matchings along induced chains of triangles. Each is returned as edges.
pub fn structural_hints(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut hints = Vec::new();
    let sorted = |a: usize, b: usize| (a.min(b), a.max(b));

    // Matchings within a clique grown greedily from each vertex.
    for s in 0..n {
        let mut clique = vec![s];
        for v in 0..n {
            if v != s && clique.iter().all(|&c| g.has_edge(c, v)) {
                clique.push(v);
            }
        }
        if clique.len() >= 2 {
            hints.push(clique.chunks_exact(2).map(|p| sorted(p[0], p[1])).collect());
        }
    }

    // Induced matchings grown greedily, starting from each edge.
    let edges = g.edges();
    for start in 0..edges.len() {
        let mut chosen: Vec<(usize, usize)> = Vec::new();
        let mut used = vec![false; n];
        for &(u, v) in edges[start..].iter().chain(&edges[..start]) {
            let clash = [u, v].iter().any(|&a| used[a] || g.neighbors(a).iter().any(|&b| used[b] && b != u && b != v));
            if !clash {
                chosen.push((u, v));
                used[u] = true;
                used[v] = true;
            }
        }
        hints.push(chosen);
    }

    // Induced chains of triangles u_i v_i w_i with w_i = u_{i+1}, laid out as
    // the sequence u_1 v_1 u_2 v_2 ... u_{p+1}; triangle i is positions 2i, 2i+1, 2i+2.
    for &(a, b) in &edges {
        let mut seq = vec![a, b];
        loop {
            let j = seq.len();
            // Required neighbors of the vertex at position j within the prefix.
            let required: Vec<usize> = if j % 2 == 0 { vec![seq[j - 2], seq[j - 1]] } else { vec![seq[j - 1]] };
            let next = (0..n).find(|&x| {
                !seq.contains(&x) && seq.iter().all(|&y| g.has_edge(x, y) == required.contains(&y))
            });
            match next {
                Some(x) => seq.push(x),
                None => break,
            }
        }
        if seq.len() % 2 == 0 {
            seq.pop();
        }
        let triangles = (seq.len() - 1) / 2;
        if triangles >= 2 {
            hints.push((0..triangles).map(|i| sorted(seq[2 * i], seq[2 * i + 1])).collect());
        }
    }
    hints
}

fn certificate(table: &PairingTable, indices: &[usize]) -> Vec<(usize, usize, PairingValue)> {
    let mut out = Vec::new();
    for a in 0..indices.len() {
        for b in a + 1..indices.len() {
            out.push((a, b, table.get(indices[a], indices[b]).clone()));
        }
    }
    out
}

/// Largest subset of `candidate` (edge indices) that is orthogonal, grown greedily in order.
fn greedy_orthogonal(table: &PairingTable, candidate: &[usize]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    for &i in candidate {
        if !chosen.contains(&i) && chosen.iter().all(|&j| table.get(i, j).is_zero()) {
            chosen.push(i);
        }
    }
    chosen
}

/// Greedy colouring of `p` in index order; the number of colours bounds the clique number.
fn colour_bound(adj: &[FixedBitSet], p: &FixedBitSet) -> usize {
    let mut classes: Vec<FixedBitSet> = Vec::new();
    for v in p.ones() {
        match classes.iter_mut().find(|c| c.is_disjoint(&adj[v])) {
            Some(c) => c.insert(v),
            None => {
                let mut c = FixedBitSet::with_capacity(p.len());
                c.insert(v);
                classes.push(c);
            }
        }
    }
    classes.len()
}

struct CliqueSearch<'a> {
    adj: &'a [FixedBitSet],
    best: Vec<usize>,
    best_size: usize,
}

impl CliqueSearch<'_> {
    /// Cliques are enumerated as increasing index sequences in lexicographic
    /// order, and only strictly larger cliques replace the incumbent, so the
    /// result is the lexicographically least maximum clique.
    fn expand(&mut self, r: &mut Vec<usize>, p: FixedBitSet) {
        if p.count_ones(..) == 0 {
            if r.len() > self.best_size {
                self.best_size = r.len();
                self.best = r.clone();
            }
            return;
        }
        if r.len() + colour_bound(self.adj, &p) <= self.best_size {
            return;
        }
        let mut remaining = p.count_ones(..);
        for v in p.ones() {
            if r.len() + remaining <= self.best_size {
                return;
            }
            remaining -= 1;
            let mut next = p.clone();
            next.set_range(..v + 1, false);
            next.intersect_with(&self.adj[v]);
            r.push(v);
            self.expand(r, next);
            r.pop();
        }
    }
}

/// Orthogonal edge set of a connected graph.
///
/// Exact mode returns the lexicographically least maximum orthogonal set
/// (edge indices in lexicographic edge order). Greedy mode returns the best
/// of the greedy completions of the structural seeds (when enabled) and of
/// the plain lexicographic greedy set. Hints only affect the starting bound
/// in exact mode, never the result.
pub fn orthogonal_subset(g: &Graph, mode: SearchMode, structural_hints_on: bool) -> Result<OrthogonalSet> {
    let table = PairingTable::new(g)?;
    orthogonal_subset_in(&table, g, mode, structural_hints_on)
}

pub(crate) fn orthogonal_subset_in(
    table: &PairingTable,
    g: &Graph,
    mode: SearchMode,
    hints_on: bool,
) -> Result<OrthogonalSet> {
    let all: Vec<usize> = (0..table.len()).collect();
    let mut seed = greedy_orthogonal(table, &all);
    let mut seed_size = None;
    if hints_on {
        for hint in structural_hints(g) {
            let mut idx: Vec<usize> = hint.iter().filter_map(|&e| table.index_of(e)).collect();
            idx.sort_unstable();
            let part = greedy_orthogonal(table, &idx);
            let rest: Vec<usize> = part.iter().copied().chain(all.iter().copied()).collect();
            let mut grown = greedy_orthogonal(table, &rest);
            grown.sort_unstable();
            if grown.len() > seed.len() {
                seed = grown;
            }
        }
        seed_size = Some(seed.len());
    }

    let (indices, proven) = match mode {
        SearchMode::Greedy => (seed, false),
        SearchMode::Exact => {
            let adj = table.zero_graph();
            let mut search = CliqueSearch { adj: &adj, best: Vec::new(), best_size: seed.len().saturating_sub(1) };
            let mut p = FixedBitSet::with_capacity(table.len());
            p.insert_range(..);
            search.expand(&mut Vec::new(), p);
            (search.best, true)
        }
    };
    Ok(OrthogonalSet {
        edges: indices.iter().map(|&i| table.edges[i]).collect(),
        certificate: certificate(table, &indices),
        proven_maximum: proven,
        seed_size,
        method: table.method,
    })
}
