//! Independent oracles and the shared graph corpus for the integration tests.
//!
//! Nothing here calls the Smith form or the characteristic-polynomial code of
//! the library: the oracles use small fixed-width exact arithmetic so they can
//! check the library rather than restate it.

#![allow(dead_code)]

use critgroup::graph::{generate, Family, Graph, Sign, SignedGraph};
use num_integer::Integer;
use num_rational::Ratio;
use rand::Rng;

pub type Q = Ratio<i128>;

pub fn family(f: Family) -> Graph {
    generate(&f).unwrap().into_plain().unwrap()
}

pub fn signed_family(f: Family) -> SignedGraph {
    generate(&f).unwrap().into_signed().unwrap()
}

/// Dense integer Laplacian `D - A_σ` from the adjacency relation, built without the library.
pub fn laplacian_of(n: usize, sigma: impl Fn(usize, usize) -> i64) -> Vec<Vec<i64>> {
    let mut l = vec![vec![0i64; n]; n];
    for u in 0..n {
        for v in 0..n {
            if u != v {
                let s = sigma(u, v);
                if s != 0 {
                    l[u][u] += 1;
                    l[u][v] = -s;
                }
            }
        }
    }
    l
}

pub fn plain_laplacian(g: &Graph) -> Vec<Vec<i64>> {
    laplacian_of(g.n(), |u, v| g.has_edge(u, v) as i64)
}

pub fn signed_laplacian(g: &SignedGraph) -> Vec<Vec<i64>> {
    laplacian_of(g.n(), |u, v| g.sign(u, v).map_or(0, |s| s.value()))
}

/// Fraction-free (Bareiss) determinant over `i128`.
pub fn det_i128(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Smith diagonal via determinant divisors: `d_k` = gcd of all `k × k` minors,
/// `s_k = d_k / d_{k-1}`. Trailing zeros up to `min(rows, cols)` are included.
pub fn determinant_divisor_diagonal(m: &[Vec<i64>]) -> Vec<i128> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let r = rows.min(cols);
    let mut out = Vec::with_capacity(r);
    let mut prev = 1i128;
    let mut dead = false;
    for k in 1..=r {
        if dead {
            out.push(0);
            continue;
        }
        let mut g = 0i128;
        'outer: for rs in combinations(rows, k) {
            for cs in combinations(cols, k) {
                let minor: Vec<Vec<i128>> =
                    rs.iter().map(|&i| cs.iter().map(|&j| m[i][j] as i128).collect()).collect();
                g = g.gcd(&det_i128(&minor));
                if g == 1 {
                    break 'outer;
                }
            }
        }
        if g == 0 {
            dead = true;
            out.push(0);
        } else {
            out.push(g / prev);
            prev = g;
        }
    }
    out
}

/// Spanning trees by deletion–contraction on a multigraph (edge multiplicity matrix).
pub fn spanning_trees(g: &Graph) -> u128 {
    let n = g.n();
    let mut mult = vec![vec![0u32; n]; n];
    for (u, v) in g.edges() {
        mult[u][v] += 1;
        mult[v][u] += 1;
    }
    deletion_contraction(mult)
}

fn deletion_contraction(mult: Vec<Vec<u32>>) -> u128 {
    let n = mult.len();
    if n == 1 {
        return 1;
    }
    // Pick any edge.
    let Some((u, v)) = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).find(|&(u, v)| mult[u][v] > 0) else {
        return 0;
    };
    let k = mult[u][v] as u128;
    // All parallel copies at once: τ(G) = τ(G - all uv) + k·τ(G / uv).
    let mut deleted = mult.clone();
    deleted[u][v] = 0;
    deleted[v][u] = 0;
    // Contract v into u, dropping the resulting loops.
    let keep: Vec<usize> = (0..n).filter(|&x| x != v).collect();
    let mut contracted = vec![vec![0u32; n - 1]; n - 1];
    for (a, &x) in keep.iter().enumerate() {
        for (b, &y) in keep.iter().enumerate() {
            if a == b {
                continue;
            }
            let mut m = mult[x][y];
            if x == u {
                m += mult[v][y];
            }
            if y == u {
                m += mult[x][v];
            }
            contracted[a][b] = m;
        }
    }
    deletion_contraction(deleted) + k * deletion_contraction(contracted)
}

/// Inverse of a non-singular integer matrix over `Ratio<i128>`, by Gauss–Jordan.
pub fn rational_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Q> = row.iter().map(|&x| Q::from_integer(x as i128)).collect();
            r.extend((0..n).map(|j| Q::from_integer((i == j) as i128)));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| a[r][c] != Q::from_integer(0))?;
        a.swap(p, c);
        let piv = a[c][c];
        for x in a[c].iter_mut() {
            *x /= piv;
        }
        for r in 0..n {
            if r != c && a[r][c] != Q::from_integer(0) {
                let f = a[r][c];
                let src = a[c].clone();
                for (x, s) in a[r].iter_mut().zip(src) {
                    *x -= f * s;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Exponent of `coker M` for a non-singular `M`: the lcm of the denominators of `M⁻¹`.
pub fn cokernel_exponent(m: &[Vec<i64>]) -> Option<i128> {
    let inv = rational_inverse(m)?;
    Some(inv.iter().flatten().fold(1i128, |l, q| l.lcm(q.denom())))
}

/// Reduced Laplacian: delete the last row and column.
pub fn reduced(l: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = l.len();
    l[..n - 1].iter().map(|r| r[..n - 1].to_vec()).collect()
}

/// Exponent of the critical group of a connected graph from the reduced Laplacian.
pub fn critical_exponent(g: &Graph) -> i128 {
    if g.n() == 1 {
        return 1;
    }
    cokernel_exponent(&reduced(&plain_laplacian(g))).expect("connected graph has invertible reduced Laplacian")
}

/// `⟨D, D′⟩ = D′ᵀ L̃⁻¹ D mod 1` with the last coordinate dropped (sum-zero `D`).
pub fn pairing_oracle(g: &Graph, d: &[i64], d2: &[i64]) -> Q {
    let inv = rational_inverse(&reduced(&plain_laplacian(g))).unwrap();
    let n1 = g.n() - 1;
    let mut acc = Q::from_integer(0);
    for i in 0..n1 {
        for j in 0..n1 {
            acc += Q::from_integer(d2[i] as i128) * inv[i][j] * Q::from_integer(d[j] as i128);
        }
    }
    acc - Q::from_integer(acc.floor().to_integer())
}

/// If `L² = sL - pI` for integers `s, p` (the matrix has at most two eigenvalues
/// and is not scalar), returns `(s, p)`.
pub fn quadratic_relation(l: &[Vec<i64>]) -> Option<(i64, i64)> {
    let n = l.len();
    let sq = |i: usize, j: usize| (0..n).map(|t| l[i][t] * l[t][j]).sum::<i64>();
    let (i, j) = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| i != j && l[i][j] != 0)?;
    if sq(i, j) % l[i][j] != 0 {
        return None;
    }
    let s = sq(i, j) / l[i][j];
    let p = s * l[0][0] - sq(0, 0);
    for a in 0..n {
        for b in 0..n {
            if sq(a, b) != s * l[a][b] - if a == b { p } else { 0 } {
                return None;
            }
        }
    }
    Some((s, p))
}

/// `θ₁θ₂` for a connected graph whose non-zero Laplacian eigenvalues are `θ₁, θ₂`:
/// `L² - sL + pI` vanishes on the sum-zero space, so `n(L² - sL) + p(nI - J) = 0`.
pub fn unsigned_two_eigen_product(g: &Graph) -> Option<i64> {
    let l = plain_laplacian(g);
    let n = g.n();
    // On the sum-zero space, L² = sL - pI  ⟺  L² - sL + p(I - J/n) = 0, i.e.
    // n(L² - sL) + p(nI - J) = 0 entrywise.
    let sq = |i: usize, j: usize| (0..n).map(|t| l[i][t] * l[t][j]).sum::<i64>();
    for s in 1..=(2 * n as i64) {
        // Off-diagonal entry (0, 1): n(L² - sL)₀₁ - p = 0.
        let p = n as i64 * (sq(0, 1) - s * l[0][1]);
        let ok = (0..n).all(|a| {
            (0..n).all(|b| {
                let lhs = n as i64 * (sq(a, b) - s * l[a][b]);
                let proj = if a == b { n as i64 - 1 } else { -1 };
                lhs + p * proj == 0
            })
        });
        if ok && p > 0 {
            return Some(p);
        }
    }
    None
}

/// The two-eigenvalue corpus used across the suites: `(label, graph)`.
pub fn two_eigenvalue_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    let mut push = |name: String, f: Family| out.push((name, family(f)));
    for q in [5, 9, 13] {
        push(format!("paley({q})"), Family::Paley(q));
    }
    push("petersen".into(), Family::Petersen);
    push("clebsch_complement".into(), Family::ClebschComplement);
    push("triangular(5)".into(), Family::Triangular(5));
    for m in [2, 3] {
        push(format!("K_{{{m},{m},{m}}}"), Family::CompleteMultipartite(vec![m, m, m]));
    }
    for p in [2, 3, 5] {
        push(format!("star({p})"), Family::Star(p));
    }
    for m in [2, 3, 4] {
        push(format!("K_{{{m},{m}}}"), Family::CompleteMultipartite(vec![m, m]));
    }
    push("cycle(5)".into(), Family::Cycle(5));
    let mut joins = vec![
        ("K_1 + K_{2,2}".to_string(), family(Family::Complete(1)).join(&family(Family::CompleteMultipartite(vec![2, 2])))),
        ("K_2 + K_{3,3,3}".to_string(), family(Family::Complete(2)).join(&family(Family::CompleteMultipartite(vec![3, 3, 3])))),
        // `K_{m'} + pK_m` has two non-zero Laplacian eigenvalues only for `m = 1`.
        (
            "K_2 + 3K_1".to_string(),
            family(Family::Complete(2)).join(&family(Family::DisjointCliques { copies: 3, size: 1 })),
        ),
        (
            "K_3 + 4K_1".to_string(),
            family(Family::Complete(3)).join(&family(Family::DisjointCliques { copies: 4, size: 1 })),
        ),
        ("K_3 + K_{2,2,2}".to_string(), family(Family::Complete(3)).join(&family(Family::CompleteMultipartite(vec![2, 2, 2])))),
    ];
    out.append(&mut joins);
    out
}

/// Random signing of `g`.
pub fn random_signing(g: &Graph, rng: &mut impl Rng) -> SignedGraph {
    SignedGraph::with_signs(g.clone(), |_, _| if rng.gen_bool(0.5) { Sign::Negative } else { Sign::Positive })
}

/// Random connected graph on `n` vertices: a random spanning tree plus random extra edges.
pub fn random_connected_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random element of the sum-zero lattice with small entries.
pub fn random_sum_zero(n: usize, rng: &mut impl Rng) -> Vec<i64> {
    let mut d: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(-4..=4)).collect();
    d.push(-d.iter().sum::<i64>());
    d
}
