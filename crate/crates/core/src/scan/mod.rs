//! Arithmetic feasibility of strongly regular graph parameters and the
//! search for tuples whose self-pairing denominator `η` equals `nμ`.

use num_integer::Roots;
use num_rational::Ratio;

use crate::graph::SrgParameters;
use crate::pairing::eta;

/// Adjacency eigenvalues other than `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Eigenvalues {
    /// Integers `r > s`.
    Integral { r: i64, s: i64 },
    /// `(λ - μ ± √disc) / 2` with `disc` not a square (conference case).
    Conference { disc: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibleTuple {
    pub params: SrgParameters,
    pub eigenvalues: Eigenvalues,
    /// Multiplicities `(f, g)` of `r` and `s`.
    pub multiplicities: (u64, u64),
    pub eta: u64,
    pub eta_equals_n_mu: bool,
    pub krein: bool,
    pub absolute_bound: bool,
}

impl FeasibleTuple {
    /// Passes every implemented feasibility condition, including the Krein
    /// conditions and the absolute bound.
    pub fn database_consistent(&self) -> bool {
        self.krein && self.absolute_bound
    }

    /// The arithmetic filter cannot settle existence, so every `η = nμ` hit is
    /// marked for manual review against external existence data.
    pub fn flagged_for_review(&self) -> bool {
        self.eta_equals_n_mu
    }
}

/// `a + b√d` over the rationals.
#[derive(Debug, Clone, Copy)]
struct Surd {
    a: Ratio<i128>,
    b: Ratio<i128>,
    d: i128,
}

impl Surd {
    fn int(x: i128, d: i128) -> Self {
        Surd { a: Ratio::from_integer(x), b: Ratio::from_integer(0), d }
    }

    fn add(self, o: Self) -> Self {
        Surd { a: self.a + o.a, b: self.b + o.b, d: self.d }
    }

    fn sub(self, o: Self) -> Self {
        Surd { a: self.a - o.a, b: self.b - o.b, d: self.d }
    }

    fn mul(self, o: Self) -> Self {
        let d = Ratio::from_integer(self.d);
        Surd { a: self.a * o.a + self.b * o.b * d, b: self.a * o.b + self.b * o.a, d: self.d }
    }

    fn scale(self, c: i128) -> Self {
        let c = Ratio::from_integer(c);
        Surd { a: self.a * c, b: self.b * c, d: self.d }
    }

    /// Sign of `a + b√d`, exactly.
    fn is_nonnegative(self) -> bool {
        let zero = Ratio::from_integer(0);
        match (self.a >= zero, self.b >= zero) {
            (true, true) => true,
            (false, false) => false,
            // a ≥ 0 > b: need a² ≥ b² d.
            (true, false) => self.a * self.a >= self.b * self.b * Ratio::from_integer(self.d),
            // b ≥ 0 > a: need b² d ≥ a².
            (false, true) => self.b * self.b * Ratio::from_integer(self.d) >= self.a * self.a,
        }
    }
}

/// Krein conditions `(r+1)(k+r+2rs) ≤ (k+r)(s+1)²` and `(s+1)(k+s+2rs) ≤ (k+s)(r+1)²`.
fn krein(k: i64, r: Surd, s: Surd) -> bool {
    let d = r.d;
    let one = Surd::int(1, d);
    let kk = Surd::int(k as i128, d);
    let rs2 = r.mul(s).scale(2);
    let c1 = kk.add(r).mul(s.add(one).mul(s.add(one))).sub(r.add(one).mul(kk.add(r).add(rs2)));
    let c2 = kk.add(s).mul(r.add(one).mul(r.add(one))).sub(s.add(one).mul(kk.add(s).add(rs2)));
    c1.is_nonnegative() && c2.is_nonnegative()
}

fn absolute_bound(n: u64, f: u64, g: u64) -> bool {
    // Stated for primitive graphs; f, g ≥ 1 here.
    2 * n <= f * (f + 3) && 2 * n <= g * (g + 3)
}

/// Feasibility of a single candidate; `None` if it fails an arithmetic condition.
fn classify(n: u64, k: u64, lambda: u64, mu: u64) -> Option<FeasibleTuple> {
    let params = SrgParameters::new(n, k, lambda, mu).ok()?;
    if (n * k) % 2 != 0 {
        return None;
    }
    let (ni, ki, li, mi) = (n as i64, k as i64, lambda as i64, mu as i64);
    let p = li - mi;
    let disc = p * p + 4 * (ki - mi);
    let root = disc.sqrt();
    let num = 2 * ki + (ni - 1) * p;
    let (eigenvalues, f, g, r, s) = if root * root == disc {
        if root == 0 || num % root != 0 {
            return None;
        }
        let q = num / root;
        if (ni - 1 - q) % 2 != 0 || (ni - 1 - q) < 0 || (ni - 1 + q) < 0 {
            return None;
        }
        let f = (ni - 1 - q) / 2;
        let g = (ni - 1 + q) / 2;
        let r = (p + root) / 2;
        let s = (p - root) / 2;
        let sr = Surd::int(r as i128, 1);
        let ss = Surd::int(s as i128, 1);
        (Eigenvalues::Integral { r, s }, f as u64, g as u64, sr, ss)
    } else {
        if num != 0 || (ni - 1) % 2 != 0 {
            return None;
        }
        let half = Ratio::new(1i128, 2);
        let a = Ratio::from_integer(p as i128) * half;
        let r = Surd { a, b: half, d: disc as i128 };
        let s = Surd { a, b: -half, d: disc as i128 };
        let m = (n - 1) / 2;
        (Eigenvalues::Conference { disc }, m, m, r, s)
    };
    let eta = eta(&params).ok()?;
    Some(FeasibleTuple {
        params,
        eigenvalues,
        multiplicities: (f, g),
        eta,
        eta_equals_n_mu: eta == params.n_mu(),
        krein: krein(ki, r, s),
        absolute_bound: absolute_bound(n, f, g),
    })
}

/// All `(n, k, λ, μ)` with `n ≤ n_max`, `2 ≤ k ≤ n - 2`, `0 ≤ λ < k`,
/// `1 ≤ μ ≤ k`, satisfying the parameter identity, `nk` even, and integral
/// eigenvalue multiplicities (equal multiplicities when the discriminant is
/// not a square). Sorted by `n`, then `k`, then `λ`.
pub fn enumerate_feasible(n_max: u64) -> Vec<FeasibleTuple> {
    let mut out = Vec::new();
    for n in 4..=n_max {
        for k in 2..=n.saturating_sub(2) {
            for lambda in 0..k {
                // μ is forced by the identity.
                let rhs = k * (k - lambda - 1);
                let lhs = n - k - 1;
                if rhs % lhs != 0 {
                    continue;
                }
                let mu = rhs / lhs;
                if mu == 0 || mu > k {
                    continue;
                }
                if let Some(t) = classify(n, k, lambda, mu) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// Feasible tuples with `η = nμ`.
pub fn scan_eta_max(n_max: u64) -> Vec<FeasibleTuple> {
    enumerate_feasible(n_max).into_iter().filter(|t| t.eta_equals_n_mu).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tuples(v: &[FeasibleTuple]) -> Vec<(u64, u64, u64, u64)> {
        v.iter().map(|t| (t.params.n, t.params.k, t.params.lambda, t.params.mu)).collect()
    }

    #[test]
    fn small_range() {
        let t = tuples(&enumerate_feasible(10));
        for want in [(5, 2, 0, 1), (9, 4, 1, 2), (10, 3, 0, 1), (10, 6, 3, 4)] {
            assert!(t.contains(&want), "{want:?} missing from {t:?}");
        }
        assert!(!t.contains(&(6, 3, 0, 2)));
        for x in &enumerate_feasible(40) {
            assert!(x.params.complement().map_or(true, |c| c.satisfies_identity()));
        }
    }

    #[test]
    fn conference_case() {
        let all = enumerate_feasible(5);
        assert_eq!(tuples(&all), vec![(4, 2, 0, 2), (5, 2, 0, 1)]);
        let c5 = &all[1..];
        assert_eq!(c5[0].eigenvalues, Eigenvalues::Conference { disc: 5 });
        assert_eq!(c5[0].multiplicities, (2, 2));
        assert!(c5[0].krein && c5[0].absolute_bound);
    }

    #[test]
    fn petersen_multiplicities() {
        let t = enumerate_feasible(10).into_iter().find(|t| t.params.n == 10 && t.params.k == 3).unwrap();
        assert_eq!(t.eigenvalues, Eigenvalues::Integral { r: 1, s: -2 });
        assert_eq!(t.multiplicities, (5, 4));
    }

    #[test]
    fn eta_scan_small() {
        assert_eq!(tuples(&scan_eta_max(5)), vec![(5, 2, 0, 1)]);
        for t in enumerate_feasible(60) {
            assert!(t.params.n_mu() % t.eta == 0 && t.eta >= 2);
        }
    }

    #[test]
    fn krein_rejects_known_infeasible() {
        // (28, 9, 0, 4) passes the arithmetic filter but violates a Krein condition.
        let t = enumerate_feasible(28)
            .into_iter()
            .find(|t| (t.params.n, t.params.k, t.params.lambda) == (28, 9, 0))
            .unwrap();
        assert!(!t.krein);
    }
}
