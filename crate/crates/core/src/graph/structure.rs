use super::Graph;
use crate::error::{Error, Result};

/// Parameters `(n, k, λ, μ)` of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SrgParameters {
    pub n: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParameters {
    pub fn new(n: u64, k: u64, lambda: u64, mu: u64) -> Result<Self> {
        let p = SrgParameters { n, k, lambda, mu };
        if k >= n || (k > 0 && lambda >= k) || mu > k {
            return Err(Error::InvalidParameters(format!("{p} is out of range")));
        }
        if !p.satisfies_identity() {
            return Err(Error::InvalidParameters(format!("{p} violates (n-k-1)mu = k(k-lambda-1)")));
        }
        Ok(p)
    }

    /// `(n - k - 1) μ = k (k - λ - 1)`, evaluated in signed arithmetic.
    pub fn satisfies_identity(&self) -> bool {
        let (n, k, l, m) = (self.n as i128, self.k as i128, self.lambda as i128, self.mu as i128);
        (n - k - 1) * m == k * (k - l - 1)
    }

    pub fn is_complete(&self) -> bool {
        self.k + 1 == self.n
    }

    /// Complement parameters `(n, n-k-1, n-2k+μ-2, n-2k+λ)`; `None` if they leave the range.
    pub fn complement(&self) -> Option<Self> {
        let (n, k, l, m) = (self.n as i64, self.k as i64, self.lambda as i64, self.mu as i64);
        let kc = n - k - 1;
        let lc = n - 2 * k + m - 2;
        let mc = n - 2 * k + l;
        if kc < 0 || lc < 0 || mc < 0 {
            return None;
        }
        Some(SrgParameters { n: self.n, k: kc as u64, lambda: lc as u64, mu: mc as u64 })
    }

    /// `nμ`, the product of the two non-zero Laplacian eigenvalues.
    pub fn n_mu(&self) -> u64 {
        self.n * self.mu
    }

    /// Coefficient `k + μ - λ - 1` of `L_u` in the edge decomposition.
    pub fn edge_coefficient(&self) -> i64 {
        self.k as i64 + self.mu as i64 - self.lambda as i64 - 1
    }
}

impl std::fmt::Display for SrgParameters {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}

/// Structural parameters of a connected graph with exactly two distinct
/// non-zero Laplacian eigenvalues `θ₁, θ₂`, which are kept only through their
/// sum and product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoEigParams {
    pub n: u64,
    /// Common neighbors of every non-adjacent pair.
    pub mu: u64,
    /// Common non-neighbors of every adjacent pair.
    pub mu_bar: u64,
    pub k1: u64,
    pub k2: u64,
    pub theta_sum: i64,
    pub theta_prod: i64,
    /// Present exactly when the graph is regular.
    pub srg: Option<SrgParameters>,
}

impl TwoEigParams {
    pub fn is_regular(&self) -> bool {
        self.srg.is_some()
    }

    /// Checks the parameter relations that hold for every such graph.
    pub fn relations_hold(&self) -> bool {
        let (n, mu, mb) = (self.n as i64, self.mu as i64, self.mu_bar as i64);
        let (k1, k2) = (self.k1 as i64, self.k2 as i64);
        let common = self.theta_sum == n + mu - mb && self.theta_prod == n * mu;
        if self.is_regular() {
            common && k1 == k2
        } else {
            common && k1 < k2 && self.theta_sum == k1 + k2 + 1 && self.theta_prod == k1 * k2 + mu
        }
    }
}

/// Recognizes `(n, k, λ, μ)`-strong regularity by counting common neighbors of every pair.
///
/// Complete graphs are included as `(n, n-1, n-2, 0)`.
pub fn detect_srg(g: &Graph) -> Option<SrgParameters> {
    let n = g.n();
    if n < 2 || !g.is_regular() {
        return None;
    }
    let k = g.degree(0) as u64;
    let mut lambda = None;
    let mut mu = None;
    for u in 0..n {
        for v in u + 1..n {
            let c = g.common_neighbor_count(u, v) as u64;
            let slot = if g.has_edge(u, v) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(prev) if prev != c => return None,
                _ => {}
            }
        }
    }
    let p = SrgParameters {
        n: n as u64,
        k,
        lambda: lambda.unwrap_or(0),
        mu: mu.unwrap_or(0),
    };
    p.satisfies_identity().then_some(p)
}

/// Recognizes connected non-complete graphs with exactly two distinct non-zero
/// Laplacian eigenvalues from their combinatorics alone.
///
/// Regular graphs qualify exactly when they are strongly regular. Non-regular
/// graphs qualify when non-adjacent pairs share a constant number `μ` of
/// neighbors and adjacent pairs share a constant number `μ̄` of non-neighbors;
/// the degree set and the adjacent-pair common-neighbor counts are checked
/// against the implied two-degree pattern.
pub fn detect_two_eigenvalue(g: &Graph) -> Result<Option<TwoEigParams>> {
    g.require_connected()?;
    let n = g.n();
    if g.is_complete() {
        return Ok(None);
    }
    if g.is_regular() {
        return Ok(detect_srg(g).map(|p| {
            let mu_bar = p.n + p.lambda - 2 * p.k;
            TwoEigParams {
                n: p.n,
                mu: p.mu,
                mu_bar,
                k1: p.k,
                k2: p.k,
                theta_sum: 2 * p.k as i64 - p.lambda as i64 + p.mu as i64,
                theta_prod: (p.n * p.mu) as i64,
                srg: Some(p),
            }
        }));
    }

    let mut degs: Vec<usize> = g.degrees();
    degs.sort_unstable();
    degs.dedup();
    if degs.len() != 2 {
        return Ok(None);
    }
    let (k1, k2) = (degs[0] as i64, degs[1] as i64);

    let mut mu: Option<i64> = None;
    let mut mu_bar: Option<i64> = None;
    for u in 0..n {
        for v in u + 1..n {
            let cn = g.common_neighbor_count(u, v) as i64;
            if g.has_edge(u, v) {
                let (du, dv) = (g.degree(u) as i64, g.degree(v) as i64);
                let non = n as i64 - du - dv + cn;
                match mu_bar {
                    None => mu_bar = Some(non),
                    Some(x) if x != non => return Ok(None),
                    _ => {}
                }
            } else {
                match mu {
                    None => mu = Some(cn),
                    Some(x) if x != cn => return Ok(None),
                    _ => {}
                }
            }
        }
    }
    let (Some(mu), Some(mu_bar)) = (mu, mu_bar) else {
        return Ok(None);
    };

    // Common neighbors of adjacent pairs follow the degree pattern.
    for (u, v) in g.edges() {
        let cn = g.common_neighbor_count(u, v) as i64;
        let (du, dv) = (g.degree(u) as i64, g.degree(v) as i64);
        let expected = match (du == k1, dv == k1) {
            (true, true) => mu - 1 + k1 - k2,
            (false, false) => mu - 1 + k2 - k1,
            _ => mu - 1,
        };
        if cn != expected {
            return Ok(None);
        }
    }

    let params = TwoEigParams {
        n: n as u64,
        mu: mu as u64,
        mu_bar: mu_bar as u64,
        k1: k1 as u64,
        k2: k2 as u64,
        theta_sum: n as i64 + mu - mu_bar,
        theta_prod: n as i64 * mu,
        srg: None,
    };
    Ok(params.relations_hold().then_some(params))
}

/// Bipartition `(U₁, U₂)` if `g` is `K_{m,m}` with `m ≥ 2`.
pub fn complete_bipartite_parts(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.n();
    if n < 4 || n % 2 != 0 {
        return None;
    }
    let m = n / 2;
    let left: Vec<usize> = (0..n).filter(|&v| !g.has_edge(0, v)).collect();
    let right: Vec<usize> = g.neighbors(0).to_vec();
    if left.len() != m || right.len() != m {
        return None;
    }
    let ok = left.iter().all(|&a| left.iter().all(|&b| !g.has_edge(a, b)))
        && right.iter().all(|&a| right.iter().all(|&b| !g.has_edge(a, b)))
        && left.iter().all(|&a| right.iter().all(|&b| g.has_edge(a, b)));
    ok.then_some((left, right))
}

/// Center of `g` if it is a star `K_{1,p}` with `p ≥ 2`.
pub fn is_star(g: &Graph) -> Option<usize> {
    let n = g.n();
    if n < 3 || g.edge_count() != n - 1 {
        return None;
    }
    let center = (0..n).find(|&v| g.degree(v) == n - 1)?;
    Some(center)
}

/// Structure of a join of a clique with a regular graph of the two trivial kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JoinStructure {
    /// `K_{m'} + K_{m,...,m}` with `parts` parts of size `part_size > 1`.
    CliquePlusMultipartite { clique: usize, part_size: usize, parts: usize },
    /// `K_{m'} + pK_m` with `copies ≥ 2`.
    CliquePlusDisjointCliques { clique: usize, copies: usize, clique_size: usize },
}

/// Sizes of the connected components if `g` is a disjoint union of cliques.
fn clique_components(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for v in 0..n {
        if seen[v] {
            continue;
        }
        let mut comp = vec![v];
        comp.extend_from_slice(g.neighbors(v));
        comp.sort_unstable();
        for &a in &comp {
            if seen[a] {
                return None;
            }
            seen[a] = true;
        }
        let ok = comp
            .iter()
            .all(|&a| g.degree(a) == comp.len() - 1 && comp.iter().all(|&b| a == b || g.has_edge(a, b)));
        if !ok {
            return None;
        }
        comps.push(comp);
    }
    Some(comps)
}

/// Recognizes `g` as `K_{m'} + K_{m,...,m}` or `K_{m'} + pK_m`.
///
/// The clique part is the set of dominating vertices (degree `n - 1`).
pub fn dominating_join_structure(g: &Graph) -> Option<JoinStructure> {
    let n = g.n();
    let clique: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 1).collect();
    let rest: Vec<usize> = (0..n).filter(|&v| g.degree(v) != n - 1).collect();
    if clique.is_empty() || rest.is_empty() {
        return None;
    }
    let h = g.induced_subgraph(&rest);
    let equal = |comps: &[Vec<usize>]| comps.windows(2).all(|w| w[0].len() == w[1].len());

    if let Some(comps) = clique_components(&h) {
        if comps.len() >= 2 && equal(&comps) {
            return Some(JoinStructure::CliquePlusDisjointCliques {
                clique: clique.len(),
                copies: comps.len(),
                clique_size: comps[0].len(),
            });
        }
    }
    if let Some(parts) = clique_components(&h.complement()) {
        if parts.len() >= 2 && equal(&parts) && parts[0].len() > 1 {
            return Some(JoinStructure::CliquePlusMultipartite {
                clique: clique.len(),
                part_size: parts[0].len(),
                parts: parts.len(),
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| v - u == 1 || v - u == n - 1)
    }

    fn kneser_5_2() -> Graph {
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        Graph::from_fn(10, |x, y| {
            let (a, b) = pairs[x];
            let (c, d) = pairs[y];
            a != c && a != d && b != c && b != d
        })
    }

    /// Brute-force oracle: common-neighbor counts over all pairs.
    fn brute_lambda_mu(g: &Graph) -> (Vec<usize>, Vec<usize>) {
        let mut adj = Vec::new();
        let mut non = Vec::new();
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let c = (0..g.n()).filter(|&w| g.has_edge(u, w) && g.has_edge(v, w)).count();
                if g.has_edge(u, v) { adj.push(c) } else { non.push(c) }
            }
        }
        adj.sort_unstable();
        adj.dedup();
        non.sort_unstable();
        non.dedup();
        (adj, non)
    }

    #[test]
    fn petersen_parameters() {
        let g = kneser_5_2();
        assert_eq!(brute_lambda_mu(&g), (vec![0], vec![1]));
        assert_eq!(detect_srg(&g), Some(SrgParameters { n: 10, k: 3, lambda: 0, mu: 1 }));
    }

    #[test]
    fn complete_graph_convention() {
        let k5 = Graph::from_fn(5, |_, _| true);
        assert_eq!(detect_srg(&k5), Some(SrgParameters { n: 5, k: 4, lambda: 3, mu: 0 }));
        assert_eq!(detect_two_eigenvalue(&k5).unwrap(), None);
    }

    #[test]
    fn path_is_not_srg() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(detect_srg(&p3), None);
    }

    #[test]
    fn star_two_eigenvalue_params() {
        for p in 2..7u64 {
            let star = Graph::empty(1).join(&Graph::empty(p as usize));
            let t = detect_two_eigenvalue(&star).unwrap().unwrap();
            assert_eq!((t.mu, t.mu_bar, t.k1, t.k2), (1, 0, 1, p));
            assert_eq!(t.theta_prod, p as i64 + 1);
            assert_eq!(t.theta_prod, (t.k1 * t.k2 + t.mu) as i64);
            assert!(t.relations_hold());
        }
    }

    #[test]
    fn petersen_regular_case() {
        let t = detect_two_eigenvalue(&kneser_5_2()).unwrap().unwrap();
        assert!(t.is_regular());
        assert_eq!(t.theta_prod, 10);
        assert_eq!(t.theta_sum, 7);
    }

    #[test]
    fn hexagon_has_three_eigenvalues() {
        assert_eq!(detect_two_eigenvalue(&cycle(6)).unwrap(), None);
        assert!(detect_two_eigenvalue(&Graph::empty(3)).is_err());
    }

    #[test]
    fn complement_closure() {
        let p = SrgParameters::new(10, 3, 0, 1).unwrap();
        assert_eq!(p.complement(), Some(SrgParameters { n: 10, k: 6, lambda: 3, mu: 4 }));
        assert!(p.complement().unwrap().satisfies_identity());
        assert!(SrgParameters::new(6, 3, 0, 2).is_err());
    }

    #[test]
    fn join_structures() {
        let k2 = Graph::from_fn(2, |_, _| true);
        let two_k3 = Graph::from_fn(3, |_, _| true).disjoint_union(&Graph::from_fn(3, |_, _| true));
        assert_eq!(
            dominating_join_structure(&k2.join(&two_k3)),
            Some(JoinStructure::CliquePlusDisjointCliques { clique: 2, copies: 2, clique_size: 3 })
        );
        let k33 = Graph::empty(3).join(&Graph::empty(3));
        assert_eq!(
            dominating_join_structure(&Graph::empty(1).join(&k33)),
            Some(JoinStructure::CliquePlusMultipartite { clique: 1, part_size: 3, parts: 2 })
        );
        assert_eq!(dominating_join_structure(&kneser_5_2()), None);
        assert!(complete_bipartite_parts(&k33).is_some());
        assert!(complete_bipartite_parts(&cycle(6)).is_none());
        assert_eq!(complete_bipartite_parts(&cycle(4)).map(|(a, _)| a.len()), Some(2));
    }
}
