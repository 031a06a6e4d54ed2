//! The monodromy pairing on critical groups, orthogonal edge sets, and the
//! subgroup bound they imply.

mod orthogonal;
mod tail;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{complete_bipartite_parts, detect_srg, Graph, SrgParameters};
use crate::group::{decomposition, AbelianGroup, CriticalGroup, GroupElement, GroupKind};
use crate::linalg::solve_integral_with_snf;

pub use orthogonal::{orthogonal_subset, structural_hints, OrthogonalSet, PairingMethod, PairingTable, SearchMode};
pub use tail::{verify_tail_heavy, verify_tail_heavy_edges, TailHeavyReport};

/// Element of `ℚ/ℤ`, stored as the reduced fraction in `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairingValue(BigRational);

impl PairingValue {
    pub fn new(r: BigRational) -> Self {
        let floor = r.floor();
        PairingValue(r - floor)
    }

    pub fn from_frac(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Self::new(BigRational::new(num.into(), den.into()))
    }

    pub fn zero() -> Self {
        PairingValue(BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.0 + &other.0)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.0)
    }

    pub fn mul_int(&self, c: &BigInt) -> Self {
        Self::new(&self.0 * BigRational::from_integer(c.clone()))
    }
}

impl fmt::Display for PairingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for PairingValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameters(format!("bad fraction {s:?}"));
        let (p, q) = s.split_once('/').unwrap_or((s, "1"));
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        Ok(Self::from_frac(p, q))
    }
}

/// `⟨[D], [D′]⟩ = fᵀD′ / m` with `L f = m D`, `m` the group exponent.
pub fn monodromy_pairing(cg: &CriticalGroup, d: &GroupElement, d2: &GroupElement) -> Result<PairingValue> {
    monodromy_pairing_with_multiplier(cg, d, d2, &cg.exponent())
}

/// The pairing with an explicit multiplier `m`; `m D` must lie in the image of `L`.
pub fn monodromy_pairing_with_multiplier(
    cg: &CriticalGroup,
    d: &GroupElement,
    d2: &GroupElement,
    m: &BigInt,
) -> Result<PairingValue> {
    let f = potential(cg, d, m)?;
    cg.coordinates(d2)?;
    Ok(pair_potential(&f, m, d2))
}

/// Integer `f` with `L f = m D`.
pub(crate) fn potential(cg: &CriticalGroup, d: &GroupElement, m: &BigInt) -> Result<Vec<BigInt>> {
    if cg.kind() != GroupKind::Unsigned {
        return Err(Error::StructureMismatch("the pairing is defined for unsigned graphs only".into()));
    }
    if !m.is_positive() {
        return Err(Error::InvalidParameters(format!("multiplier {m} must be positive")));
    }
    cg.coordinates(d)?;
    let md = d.scale(m);
    solve_integral_with_snf(cg.snf(), &md.0)?.ok_or_else(|| {
        Error::StructureMismatch(format!("{m} times the element is not in the image of the Laplacian"))
    })
}

pub(crate) fn pair_potential(f: &[BigInt], m: &BigInt, d2: &GroupElement) -> PairingValue {
    let dot: BigInt = f.iter().zip(&d2.0).map(|(a, b)| a * b).sum();
    PairingValue::new(BigRational::new(dot, m.clone()))
}

/// SRG parameters if `g` is a non-complete, non-complete-bipartite SRG.
pub fn closed_form_parameters(g: &Graph) -> Option<SrgParameters> {
    if !g.is_connected() {
        return None;
    }
    let p = detect_srg(g)?;
    (!p.is_complete() && complete_bipartite_parts(g).is_none()).then_some(p)
}

fn require_closed_form(g: &Graph) -> Result<SrgParameters> {
    closed_form_parameters(g)
        .ok_or_else(|| Error::StructureMismatch("closed form needs a non-complete, non-complete-bipartite SRG".into()))
}

/// `⟨E_uv, E_xy⟩ = (c_x - c_y) / nμ` with `c` the coefficients of the edge decomposition of `uv`.
pub fn edge_pairing_closed_form(g: &Graph, e1: (usize, usize), e2: (usize, usize)) -> Result<PairingValue> {
    let p = require_closed_form(g)?;
    let (x, y) = e2;
    if !g.has_edge(x, y) {
        return Err(Error::InvalidParameters(format!("({x}, {y}) is not an edge")));
    }
    let c = decomposition(g, e1)?.coefficients;
    Ok(PairingValue::from_frac(&c[x] - &c[y], p.n_mu()))
}

/// Coefficient of `L_x` in the decomposition of `uv`, from adjacency to `u` and `v` alone.
fn local_coefficient(g: &Graph, a: i64, (u, v): (usize, usize), x: usize) -> i64 {
    if x == u {
        a
    } else if x == v {
        -a
    } else {
        g.has_edge(x, u) as i64 - g.has_edge(x, v) as i64
    }
}

/// The closed form evaluated from the adjacency pattern among `u, v, x, y` only.
pub fn edge_pairing_local(g: &Graph, p: &SrgParameters, e1: (usize, usize), e2: (usize, usize)) -> PairingValue {
    let a = p.edge_coefficient();
    let diff = local_coefficient(g, a, e1, e2.0) - local_coefficient(g, a, e1, e2.1);
    PairingValue::from_frac(diff, p.n_mu())
}

/// `η = kn / gcd(2(n-1), kn)`, the denominator of the self-pairing `2(n-1)/(kn)`.
///
/// Checks `η | nμ` and `η > 1`.
pub fn eta(p: &SrgParameters) -> Result<u64> {
    if p.k == 0 || p.is_complete() {
        return Err(Error::InvalidParameters(format!("{p} is complete or edgeless")));
    }
    let kn = p.k * p.n;
    let eta = kn / (2 * (p.n - 1)).gcd(&kn);
    if p.n_mu() % eta != 0 {
        return Err(Error::Internal(format!("eta = {eta} does not divide n mu = {}", p.n_mu())));
    }
    if eta <= 1 {
        return Err(Error::Internal(format!("eta = {eta} for {p}")));
    }
    Ok(eta)
}

/// Self-pairing `2(n-1)/(kn)` of every `E_uv`.
pub fn self_pairing(p: &SrgParameters) -> PairingValue {
    PairingValue::from_frac(2 * (p.n - 1), p.k * p.n)
}

/// `ℤ/nμ ⊕ (ℤ/η)^{r-1}` as the invariant-factor list `[η, ..., η, nμ]`.
pub fn subgroup_bound(p: &SrgParameters, r: usize) -> Result<AbelianGroup> {
    if r == 0 {
        return Err(Error::InvalidParameters("r must be positive".into()));
    }
    let e = BigInt::from(eta(p)?);
    let mut factors = vec![e; r - 1];
    factors.push(BigInt::from(p.n_mu()));
    AbelianGroup::new(factors)
}

/// Necessary condition for `H ≤ G`: `H` has at most as many invariant factors
/// as `G`, and aligned to the tail of `G`'s list each factor of `H` divides
/// the corresponding factor of `G`.
pub fn check_subgroup_divisibility(h: &AbelianGroup, g: &AbelianGroup) -> bool {
    let (hf, gf) = (h.factors(), g.factors());
    if hf.len() > gf.len() {
        return false;
    }
    let offset = gf.len() - hf.len();
    hf.iter().zip(&gf[offset..]).all(|(a, b)| b.is_multiple_of(a))
}

/// Order of a pairing value in `ℚ/ℤ`.
pub fn pairing_order(v: &PairingValue) -> BigInt {
    if v.is_zero() {
        BigInt::one()
    } else {
        v.denom().clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn family(f: Family) -> Graph {
        generate(&f).unwrap().into_plain().unwrap()
    }

    #[test]
    fn values_reduce() {
        assert_eq!(PairingValue::from_frac(7, 5).to_string(), "2/5");
        assert_eq!(PairingValue::from_frac(-1, 3).to_string(), "2/3");
        assert_eq!(PairingValue::from_frac(4, 2), PairingValue::zero());
        assert_eq!(PairingValue::zero().to_string(), "0/1");
        assert_eq!("18/30".parse::<PairingValue>().unwrap(), PairingValue::from_frac(3, 5));
        assert!("1/0".parse::<PairingValue>().is_err());
    }

    #[test]
    fn petersen_self_pairing() {
        let g = family(Family::Petersen);
        let cg = CriticalGroup::of(&g).unwrap();
        let (u, v) = g.edges()[0];
        let e = GroupElement::edge(10, u, v);
        assert_eq!(monodromy_pairing(&cg, &e, &e).unwrap(), PairingValue::from_frac(3, 5));
        let p = detect_srg(&g).unwrap();
        assert_eq!(self_pairing(&p), PairingValue::from_frac(3, 5));
        assert_eq!(edge_pairing_closed_form(&g, (u, v), (u, v)).unwrap(), PairingValue::from_frac(3, 5));
        assert_eq!(monodromy_pairing(&cg, &GroupElement::zero(10), &e).unwrap(), PairingValue::zero());
    }

    #[test]
    fn clebsch_orthogonal_pair() {
        let g = family(Family::ClebschComplement);
        let cg = CriticalGroup::of(&g).unwrap();
        let a = GroupElement::edge(16, 0b0000, 0b0011);
        let b = GroupElement::edge(16, 0b1110, 0b1101);
        assert!(monodromy_pairing(&cg, &a, &b).unwrap().is_zero());
        assert!(edge_pairing_closed_form(&g, (0, 3), (14, 13)).unwrap().is_zero());
    }

    #[test]
    fn eta_values() {
        let p = |n, k, l, m| SrgParameters::new(n, k, l, m).unwrap();
        assert_eq!(eta(&p(16, 10, 6, 6)).unwrap(), 16);
        assert_eq!(eta(&p(5, 2, 0, 1)).unwrap(), 5);
        assert_eq!(eta(&p(10, 3, 0, 1)).unwrap(), 5);
        assert!(eta(&p(4, 3, 2, 0)).is_err());
    }

    #[test]
    fn bounds_and_divisibility() {
        let p = SrgParameters::new(16, 10, 6, 6).unwrap();
        assert_eq!(subgroup_bound(&p, 2).unwrap(), AbelianGroup::from_u64s(&[16, 96]).unwrap());
        assert_eq!(subgroup_bound(&p, 1).unwrap(), AbelianGroup::from_u64s(&[96]).unwrap());
        let c5 = SrgParameters::new(5, 2, 0, 1).unwrap();
        assert_eq!(subgroup_bound(&c5, 2).unwrap(), AbelianGroup::from_u64s(&[5, 5]).unwrap());
        let g = |f: &[u64]| AbelianGroup::from_u64s(f).unwrap();
        assert!(check_subgroup_divisibility(&g(&[2, 4]), &g(&[4, 8])));
        assert!(!check_subgroup_divisibility(&g(&[8]), &g(&[2, 4])));
        assert!(check_subgroup_divisibility(&g(&[16, 96]), &g(&[3, 12, 12, 12, 12, 24, 96, 96, 96, 96])));
        assert!(!check_subgroup_divisibility(&g(&[2, 2]), &g(&[4])));
    }

    #[test]
    fn multiplier_independence() {
        let g = family(Family::Cycle(6));
        let cg = CriticalGroup::of(&g).unwrap();
        let a = GroupElement::from_ints(&[1, 0, -1, 0, 0, 0]);
        let b = GroupElement::from_ints(&[0, 2, 0, -1, 0, -1]);
        let base = monodromy_pairing(&cg, &a, &b).unwrap();
        for m in [6, 12, 18] {
            assert_eq!(monodromy_pairing_with_multiplier(&cg, &a, &b, &BigInt::from(m)).unwrap(), base);
        }
        assert!(monodromy_pairing_with_multiplier(&cg, &a, &b, &BigInt::from(5)).is_err());
    }
}
