//! Explicit integer combinations of Laplacian rows equal to `order · target`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::GroupElement;
use crate::error::{Error, Result};
use crate::graph::{detect_signed_two_eigenvalue, detect_two_eigenvalue, Graph, SignedGraph, SignedTwoEigKind};
use crate::linalg::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecompositionCase {
    /// Strongly regular graph, coefficient `k + μ - λ - 1` on `u`.
    Srg,
    /// Non-regular two-eigenvalue graph, `deg u = k1 < k2 = deg v`.
    TwoEig,
    /// Regular non-complete unbalanced signed graph, `σ(uv) = +`.
    SignedRegular,
    /// Unbalanced signed complete graph; `uv` the unique negative edge of a triangle.
    SignedComplete,
    /// Two-degree unbalanced signed graph, `σ(uv) = +`.
    SignedTwoDegree,
}

impl DecompositionCase {
    pub fn name(self) -> &'static str {
        match self {
            DecompositionCase::Srg => "srg",
            DecompositionCase::TwoEig => "two-eig",
            DecompositionCase::SignedRegular => "signed-regular",
            DecompositionCase::SignedComplete => "signed-complete",
            DecompositionCase::SignedTwoDegree => "signed-two-degree",
        }
    }

    pub fn is_signed(self) -> bool {
        !matches!(self, DecompositionCase::Srg | DecompositionCase::TwoEig)
    }
}

/// `Σ_x coefficients[x] · L_x = claimed_order · target`, checked exactly on construction.
///
/// For signed cases the rows are those of the Laplacian after switching at
/// `switching`, the set applied to reach the required sign normalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub case: DecompositionCase,
    /// Oriented edge `(u, v)` the decomposition is built on.
    pub edge: (usize, usize),
    /// Third triangle vertex for the signed-complete vertex decomposition.
    pub apex: Option<usize>,
    pub coefficients: Vec<BigInt>,
    /// Unscaled target: `e_u - e_v`, `e_u + e_v`, or `e_u`.
    pub target: GroupElement,
    pub claimed_order: BigInt,
    pub switching: Vec<usize>,
}

impl Decomposition {
    fn verified(self, laplacian: &IntMatrix) -> Result<Self> {
        let lhs = laplacian.combine_rows(&self.coefficients)?;
        let rhs = self.target.scale(&self.claimed_order);
        if lhs != rhs.0 {
            return Err(Error::Internal(format!(
                "{} decomposition for edge {:?} does not reproduce {} times its target",
                self.case.name(),
                self.edge,
                self.claimed_order
            )));
        }
        Ok(self)
    }

    /// Order of the target implied by the decomposition alone:
    /// `claimed / gcd(claimed, reduced gcd)`.
    pub fn implied_order(&self) -> BigInt {
        let g = reduced_gcd(self);
        if g.is_zero() {
            return BigInt::one();
        }
        &self.claimed_order / self.claimed_order.gcd(&g)
    }
}

/// Coefficients `a L_u - b L_v + Σ_{N(u)∖v} σ(uw) L_w ∓ Σ_{N(v)∖u} σ(vw) L_w`.
fn row_coefficients(g: &SignedGraph, u: usize, v: usize, a: i64, b: i64, plus_v_side: bool) -> Vec<BigInt> {
    let graph = g.graph();
    let mut c = vec![0i64; g.n()];
    c[u] += a;
    c[v] -= b;
    for &w in graph.neighbors(u) {
        if w != v {
            c[w] += g.sigma(u, w);
        }
    }
    for &w in graph.neighbors(v) {
        if w != u {
            let s = g.sigma(v, w);
            c[w] += if plus_v_side { s } else { -s };
        }
    }
    c.into_iter().map(BigInt::from).collect()
}

/// Decomposition for an edge of a connected two-eigenvalue graph.
///
/// In the non-regular case the edge must join the two degree classes; it is
/// oriented so that `u` has the smaller degree.
pub fn decomposition(g: &Graph, edge: (usize, usize)) -> Result<Decomposition> {
    let (mut u, mut v) = edge;
    if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
        return Err(Error::InvalidParameters(format!("({u}, {v}) is not an edge")));
    }
    let params = detect_two_eigenvalue(g)?
        .ok_or_else(|| Error::StructureMismatch("not a non-complete two-eigenvalue graph".into()))?;
    let signed = SignedGraph::all_positive(g.clone());
    let (case, a, b) = match params.srg {
        Some(p) => (DecompositionCase::Srg, p.edge_coefficient(), p.edge_coefficient()),
        None => {
            if g.degree(u) > g.degree(v) {
                std::mem::swap(&mut u, &mut v);
            }
            if g.degree(u) as u64 != params.k1 || g.degree(v) as u64 != params.k2 {
                return Err(Error::StructureMismatch(format!(
                    "edge ({u}, {v}) does not join the degree classes {} and {}",
                    params.k1, params.k2
                )));
            }
            (DecompositionCase::TwoEig, params.k2 as i64, params.k1 as i64)
        }
    };
    Decomposition {
        case,
        edge: (u, v),
        apex: None,
        coefficients: row_coefficients(&signed, u, v, a, b, false),
        target: GroupElement::edge(g.n(), u, v),
        claimed_order: BigInt::from(params.theta_prod),
        switching: Vec::new(),
    }
    .verified(&g.laplacian())
}

/// Smallest switching set within `{u, v, w}` giving `σ(uv) = -`, `σ(uw) = σ(vw) = +`.
fn triangle_switching(g: &SignedGraph, u: usize, v: usize, w: usize) -> Option<Vec<usize>> {
    let verts = [u, v, w];
    let mut subsets: Vec<Vec<usize>> = (0u8..8)
        .map(|m| (0..3).filter(|i| m & (1 << i) != 0).map(|i| verts[i]).collect())
        .collect();
    subsets.sort_by_key(|s: &Vec<usize>| (s.len(), s.clone()));
    subsets.into_iter().find_map(|mut s| {
        s.sort_unstable();
        let h = g.switch(&s);
        (h.sigma(u, v) == -1 && h.sigma(u, w) == 1 && h.sigma(v, w) == 1).then_some(s)
    })
}

/// Decomposition for an edge of a connected unbalanced signed two-eigenvalue graph.
///
/// Switching is applied automatically: at `u` to make `σ(uv) = +` in the
/// non-complete cases; within an unbalanced triangle `uvw` (the first `w`
/// found) to make `uv` its unique negative edge in the complete case.
pub fn signed_decomposition(g: &SignedGraph, edge: (usize, usize)) -> Result<Decomposition> {
    let graph = g.graph();
    let (mut u, mut v) = edge;
    if u >= g.n() || v >= g.n() || !graph.has_edge(u, v) {
        return Err(Error::InvalidParameters(format!("({u}, {v}) is not an edge")));
    }
    let params = detect_signed_two_eigenvalue(g)?
        .ok_or_else(|| Error::StructureMismatch("not a signed graph with two Laplacian eigenvalues".into()))?;
    let claimed = BigInt::from(params.claimed_order());
    let n = g.n();
    match params.kind {
        SignedTwoEigKind::Regular { k, lambda } if graph.is_complete() => {
            let (w, switching) = (0..n)
                .filter(|&w| w != u && w != v)
                .find_map(|w| {
                    let odd = g.sigma(u, v) * g.sigma(u, w) * g.sigma(v, w) == -1;
                    odd.then(|| triangle_switching(g, u, v, w).map(|s| (w, s))).flatten()
                })
                .ok_or_else(|| {
                    Error::StructureMismatch(format!("edge ({u}, {v}) lies on no unbalanced triangle"))
                })?;
            let h = g.switch(&switching);
            let a = k - lambda - 1;
            Decomposition {
                case: DecompositionCase::SignedComplete,
                edge: (u, v),
                apex: Some(w),
                coefficients: row_coefficients(&h, u, v, a, -a, true),
                target: GroupElement::edge_sum(n, u, v),
                claimed_order: claimed,
                switching,
            }
            .verified(&h.laplacian())
        }
        SignedTwoEigKind::Regular { k, lambda } => {
            let switching = if g.sigma(u, v) < 0 { vec![u] } else { vec![] };
            let h = g.switch(&switching);
            let a = k - lambda - 1;
            Decomposition {
                case: DecompositionCase::SignedRegular,
                edge: (u, v),
                apex: None,
                coefficients: row_coefficients(&h, u, v, a, a, false),
                target: GroupElement::edge(n, u, v),
                claimed_order: claimed,
                switching,
            }
            .verified(&h.laplacian())
        }
        SignedTwoEigKind::TwoDegree { k1, k2 } => {
            if graph.degree(u) > graph.degree(v) {
                std::mem::swap(&mut u, &mut v);
            }
            if graph.degree(u) as i64 != k1 || graph.degree(v) as i64 != k2 {
                return Err(Error::StructureMismatch(format!(
                    "edge ({u}, {v}) does not join the degree classes {k1} and {k2}"
                )));
            }
            let switching = if g.sigma(u, v) < 0 { vec![u] } else { vec![] };
            let h = g.switch(&switching);
            Decomposition {
                case: DecompositionCase::SignedTwoDegree,
                edge: (u, v),
                apex: None,
                coefficients: row_coefficients(&h, u, v, k2, k1, false),
                target: GroupElement::edge(n, u, v),
                claimed_order: claimed,
                switching,
            }
            .verified(&h.laplacian())
        }
    }
}

/// `k(k-λ-1) e_u` for an unbalanced signed complete graph, as half the sum of
/// the decompositions of `e_u + e_v`, `e_w - e_v` and `e_u - e_w` over an
/// unbalanced triangle `uvw` normalized so that `uv` is its only negative edge.
///
/// The halving is checked: an odd coefficient is reported as a structure mismatch.
pub fn signed_complete_vertex_decomposition(g: &SignedGraph) -> Result<Decomposition> {
    let tri = g.find_unbalanced_triangle()?;
    let params = detect_signed_two_eigenvalue(g)?
        .ok_or_else(|| Error::StructureMismatch("not a signed graph with two Laplacian eigenvalues".into()))?;
    let SignedTwoEigKind::Regular { k, lambda } = params.kind else {
        return Err(Error::StructureMismatch("signed complete graph must be regular".into()));
    };
    let (u, v, w) = (tri.u, tri.v, tri.w);
    let h = g.switch(&tri.switching);
    let a = k - lambda - 1;
    let sum_uv = row_coefficients(&h, u, v, a, -a, true);
    let diff_wv = row_coefficients(&h, w, v, a, a, false);
    let diff_uw = row_coefficients(&h, u, w, a, a, false);
    let claimed = BigInt::from(params.claimed_order());
    let two = BigInt::from(2);
    let mut coefficients = Vec::with_capacity(g.n());
    for x in 0..g.n() {
        let total = &sum_uv[x] + &diff_wv[x] + &diff_uw[x];
        if !total.is_multiple_of(&two) {
            return Err(Error::StructureMismatch(format!(
                "coefficient of L_{x} in the three-term sum is odd; cannot halve"
            )));
        }
        coefficients.push(total / &two);
    }
    if !claimed.is_multiple_of(&two) {
        return Err(Error::StructureMismatch(format!("k(k-λ-1) = {claimed} is odd; cannot halve")));
    }
    Decomposition {
        case: DecompositionCase::SignedComplete,
        edge: (u, v),
        apex: Some(w),
        coefficients,
        target: GroupElement::vertex(g.n(), u),
        claimed_order: claimed,
        switching: tri.switching,
    }
    .verified(&h.laplacian())
}

/// Gcd of the coefficients after removing the ambiguity in the row combination.
///
/// Unsigned: the rows satisfy `Σ L_x = 0`, so coefficients are determined up to
/// a common shift and the invariant is the gcd of pairwise differences (the gcd
/// in any basis `B_y = {L_x : x ≠ y}`). Signed: the rows are independent and the
/// gcd is taken directly.
pub fn reduced_gcd(dec: &Decomposition) -> BigInt {
    if dec.case.is_signed() {
        return dec.coefficients.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    }
    let base = &dec.coefficients[0];
    dec.coefficients.iter().fold(BigInt::zero(), |g, c| g.gcd(&(c - base)))
}

/// Witness vertices for a decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witnesses {
    /// Vertex whose row has zero coefficient (unsigned cases only).
    pub w_prime: Option<usize>,
    /// Vertex whose row is dropped to form the basis in which `w_double_prime` is read.
    pub basis_vertex: Option<usize>,
    /// Vertex whose coefficient is `±1` in that basis.
    pub w_double_prime: Option<usize>,
}

/// Finds `w′` (zero coefficient) and `w″` (coefficient `±1` in the basis
/// `B_{w′}`, or in the first basis `B_y` that has one when no `w′` exists).
/// Signed decompositions use all rows as the basis and report no `w′`.
pub fn witnesses(dec: &Decomposition) -> Witnesses {
    let c = &dec.coefficients;
    let unit = |x: &BigInt| x.abs().is_one();
    if dec.case.is_signed() {
        return Witnesses { w_prime: None, basis_vertex: None, w_double_prime: c.iter().position(unit) };
    }
    let w_prime = c.iter().position(Zero::is_zero);
    if let Some(y) = w_prime {
        return Witnesses { w_prime, basis_vertex: Some(y), w_double_prime: c.iter().position(unit) };
    }
    for y in 0..c.len() {
        if let Some(x) = (0..c.len()).find(|&x| x != y && unit(&(&c[x] - &c[y]))) {
            return Witnesses { w_prime: None, basis_vertex: Some(y), w_double_prime: Some(x) };
        }
    }
    Witnesses { w_prime: None, basis_vertex: None, w_double_prime: None }
}
