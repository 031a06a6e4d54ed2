use std::path::PathBuf;

use super::{io, AnyGraph, Graph, Sign, SignedGraph};
use crate::error::{Error, Result};

/// Named graph families with deterministic vertex labelings.
///
/// | family | labeling |
/// |---|---|
/// | `complete n` | `0..n` |
/// | `complete_multipartite a,b,...` | parts occupy consecutive blocks in the given order |
/// | `star p` | center `0`, leaves `1..=p` |
/// | `cycle n` | `i ~ i ± 1 (mod n)` |
/// | `paley q` | field elements `a₀ + a₁p + ...` in base `p`; `x ~ y` iff `x - y` is a non-zero square |
/// | `petersen` | 2-subsets of `{0..5}` in lexicographic order, adjacent iff disjoint |
/// | `clebsch_complement` | 4-bit strings read as binary numbers, adjacent iff they differ in 2 or 3 digits |
/// | `triangular m` | 2-subsets of `{0..m}` in lexicographic order, adjacent iff they meet |
/// | `hypercube d` | `d`-bit strings, adjacent iff they differ in one digit |
/// | `disjoint_cliques p,m` | `p` copies of `K_m` in consecutive blocks (disconnected for `p > 1`) |
/// | `signed_complete_unbalanced n` | `K_n` with every edge negative |
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    Star(usize),
    Cycle(usize),
    Paley(u64),
    Petersen,
    ClebschComplement,
    Triangular(usize),
    Hypercube(usize),
    DisjointCliques { copies: usize, size: usize },
    SignedCompleteUnbalanced(usize),
    SignedFromFile(PathBuf),
}

impl Family {
    pub const NAMES: &'static [&'static str] = &[
        "complete",
        "complete_multipartite",
        "star",
        "cycle",
        "paley",
        "petersen",
        "clebsch_complement",
        "triangular",
        "hypercube",
        "disjoint_cliques",
        "signed_complete_unbalanced",
        "signed_from_file",
    ];

    /// Parses a family name with its integer parameters. `signed_from_file`
    /// takes its path through [`Family::SignedFromFile`] directly.
    pub fn parse(name: &str, params: &[u64]) -> Result<Self> {
        let one = |what: &str| -> Result<usize> {
            match params {
                [x] => Ok(*x as usize),
                _ => Err(Error::InvalidParameters(format!("{name} takes one parameter ({what})"))),
            }
        };
        let none = || -> Result<()> {
            if params.is_empty() {
                Ok(())
            } else {
                Err(Error::InvalidParameters(format!("{name} takes no parameters")))
            }
        };
        Ok(match name {
            "complete" => Family::Complete(one("n")?),
            "complete_multipartite" => {
                Family::CompleteMultipartite(params.iter().map(|&x| x as usize).collect())
            }
            "star" => Family::Star(one("p")?),
            "cycle" => Family::Cycle(one("n")?),
            "paley" => Family::Paley(one("q")? as u64),
            "petersen" => none().map(|_| Family::Petersen)?,
            "clebsch_complement" => none().map(|_| Family::ClebschComplement)?,
            "triangular" => Family::Triangular(one("m")?),
            "hypercube" => Family::Hypercube(one("d")?),
            "disjoint_cliques" => match params {
                [p, m] => Family::DisjointCliques { copies: *p as usize, size: *m as usize },
                _ => return Err(Error::InvalidParameters("disjoint_cliques takes p,m".into())),
            },
            "signed_complete_unbalanced" => Family::SignedCompleteUnbalanced(one("n")?),
            "signed_from_file" => {
                return Err(Error::InvalidParameters("signed_from_file needs a file path".into()))
            }
            other => {
                return Err(Error::InvalidParameters(format!(
                    "unknown family {other:?}; expected one of {}",
                    Self::NAMES.join(", ")
                )))
            }
        })
    }
}

fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true)
}

fn two_subsets(m: usize) -> Vec<(usize, usize)> {
    (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect()
}

/// Builds a member of a named family.
pub fn generate(family: &Family) -> Result<AnyGraph> {
    let bad = |msg: String| Err(Error::InvalidParameters(msg));
    let g = match family {
        Family::Complete(n) => {
            if *n == 0 {
                return bad("complete graph needs n >= 1".into());
            }
            complete(*n)
        }
        Family::CompleteMultipartite(parts) => {
            if parts.is_empty() || parts.contains(&0) {
                return bad("complete multipartite graph needs non-empty parts".into());
            }
            let block: Vec<usize> = parts
                .iter()
                .enumerate()
                .flat_map(|(i, &s)| std::iter::repeat(i).take(s))
                .collect();
            Graph::from_fn(block.len(), |u, v| block[u] != block[v])
        }
        Family::Star(p) => {
            if *p == 0 {
                return bad("star needs p >= 1".into());
            }
            Graph::from_fn(p + 1, |u, _| u == 0)
        }
        Family::Cycle(n) => {
            if *n < 3 {
                return bad("cycle needs n >= 3".into());
            }
            Graph::from_fn(*n, |u, v| v - u == 1 || v - u == n - 1)
        }
        Family::Paley(q) => paley(*q)?,
        Family::Petersen => {
            let s = two_subsets(5);
            Graph::from_fn(10, |x, y| {
                let ((a, b), (c, d)) = (s[x], s[y]);
                a != c && a != d && b != c && b != d
            })
        }
        Family::ClebschComplement => Graph::from_fn(16, |x, y| {
            let d = (x ^ y).count_ones();
            d == 2 || d == 3
        }),
        Family::Triangular(m) => {
            if *m < 2 {
                return bad("triangular graph needs m >= 2".into());
            }
            let s = two_subsets(*m);
            Graph::from_fn(s.len(), |x, y| {
                let ((a, b), (c, d)) = (s[x], s[y]);
                a == c || a == d || b == c || b == d
            })
        }
        Family::Hypercube(d) => {
            if *d == 0 || *d > 12 {
                return bad("hypercube dimension must be in 1..=12".into());
            }
            Graph::from_fn(1 << d, |x, y| (x ^ y).count_ones() == 1)
        }
        Family::DisjointCliques { copies, size } => {
            if *copies == 0 || *size == 0 {
                return bad("disjoint cliques need p, m >= 1".into());
            }
            Graph::from_fn(copies * size, |u, v| u / size == v / size)
        }
        Family::SignedCompleteUnbalanced(n) => {
            if *n < 3 {
                return bad("an unbalanced signed complete graph needs n >= 3".into());
            }
            return Ok(SignedGraph::with_signs(complete(*n), |_, _| Sign::Negative).into());
        }
        Family::SignedFromFile(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let g = io::parse_graph(&text)?;
            return Ok(match g {
                AnyGraph::Plain(p) => SignedGraph::all_positive(p).into(),
                signed => signed,
            });
        }
    };
    Ok(g.into())
}

/// `q = p^e` with `p` prime, if `q` is a prime power.
fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut e = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

/// Polynomial arithmetic over `F_p`, coefficient vectors lowest degree first.
fn poly_mod(mut a: Vec<u64>, m: &[u64], p: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    while a.len() > dm {
        let c = a.pop().unwrap();
        if c != 0 {
            let shift = a.len() - dm;
            // m is monic: subtract c * x^shift * (m - x^dm)
            for (i, &mi) in m[..dm].iter().enumerate() {
                a[shift + i] = (a[shift + i] + (p - c) * mi % p) % p;
            }
        }
    }
    a.resize(dm, 0);
    a
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn digits(mut x: u64, p: u64, len: usize) -> Vec<u64> {
    (0..len)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u64], p: u64) -> u64 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Lexicographically first monic irreducible polynomial of degree `e` over `F_p`.
fn irreducible(p: u64, e: u32) -> Vec<u64> {
    let e = e as usize;
    let monic = |deg: usize, idx: u64| {
        let mut c = digits(idx, p, deg);
        c.push(1);
        c
    };
    (0..p.pow(e as u32))
        .map(|idx| monic(e, idx))
        .find(|f| {
            (1..=e / 2).all(|d| {
                (0..p.pow(d as u32)).all(|idx| {
                    let g = monic(d, idx);
                    poly_mod(f.clone(), &g, p).iter().any(|&x| x != 0)
                })
            })
        })
        .expect("irreducible polynomials exist in every degree")
}

fn paley(q: u64) -> Result<Graph> {
    let Some((p, e)) = prime_power(q) else {
        return Err(Error::InvalidParameters(format!("paley needs a prime power, got {q}")));
    };
    if q % 4 != 1 {
        return Err(Error::InvalidParameters(format!("paley needs q ≡ 1 (mod 4), got {q}")));
    }
    if q > 2000 {
        return Err(Error::InvalidParameters("paley graphs are limited to q <= 2000".into()));
    }
    let modulus = irreducible(p, e);
    let len = e as usize;
    let mut square = vec![false; q as usize];
    for x in 1..q {
        let d = digits(x, p, len);
        let sq = poly_mod(poly_mul(&d, &d, p), &modulus, p);
        square[undigits(&sq, p) as usize] = true;
    }
    let sub = |x: u64, y: u64| {
        let (a, b) = (digits(x, p, len), digits(y, p, len));
        let d: Vec<u64> = a.iter().zip(&b).map(|(s, t)| (s + p - t) % p).collect();
        undigits(&d, p)
    };
    Ok(Graph::from_fn(q as usize, |u, v| square[sub(v as u64, u as u64) as usize]))
}
