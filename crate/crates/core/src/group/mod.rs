//! Finite abelian groups, critical groups, explicit order-achieving
//! decompositions, and the exponent verifiers.

mod decompose;
mod verify;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphRef, SignedGraph};
use crate::linalg::{smith_normal_form, IntMatrix, SnfResult};

pub use decompose::{
    decomposition, reduced_gcd, signed_complete_vertex_decomposition, signed_decomposition,
    witnesses, Decomposition, DecompositionCase, Witnesses,
};
pub use verify::{
    verify_exponent_theorem, verify_lorenzini, ExponentClassification, ExponentReport,
    LorenziniReport,
};

/// Finite abelian group `ℤ/n₁ ⊕ ... ⊕ ℤ/n_d` in invariant-factor form,
/// `1 < n₁ | n₂ | ... | n_d`. The empty list is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    factors: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup::default()
    }

    /// Validates an invariant-factor list.
    pub fn new(factors: Vec<BigInt>) -> Result<Self> {
        if let Some(f) = factors.iter().find(|f| **f <= BigInt::one()) {
            return Err(Error::InvalidParameters(format!("invariant factor {f} must exceed 1")));
        }
        if let Some(w) = factors.windows(2).find(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(Error::InvalidParameters(format!("{} does not divide {}", w[0], w[1])));
        }
        Ok(AbelianGroup { factors })
    }

    pub fn from_u64s(factors: &[u64]) -> Result<Self> {
        Self::new(factors.iter().map(|&f| BigInt::from(f)).collect())
    }

    /// `ℤ/a₁ ⊕ ... ⊕ ℤ/a_d` for arbitrary positive orders, brought to invariant-factor form.
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Result<Self> {
        if orders.iter().any(|a| !a.is_positive()) {
            return Err(Error::InvalidParameters("cyclic orders must be positive".into()));
        }
        if orders.is_empty() {
            return Ok(Self::trivial());
        }
        let snf = smith_normal_form(&IntMatrix::diagonal(orders));
        Self::new(snf.torsion_factors())
    }

    pub fn factors(&self) -> &[BigInt] {
        &self.factors
    }

    /// Number of invariant factors (minimal number of generators).
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Largest element order; `1` for the trivial group.
    pub fn exponent(&self) -> BigInt {
        self.factors.last().cloned().unwrap_or_else(BigInt::one)
    }

    pub fn order(&self) -> BigInt {
        self.factors.iter().product()
    }

    /// Order of the element with coordinates `x` in `⊕ ℤ/nᵢ`.
    pub fn element_order(&self, x: &[BigInt]) -> Result<BigInt> {
        if x.len() != self.factors.len() {
            return Err(Error::Dimension(format!(
                "element with {} coordinates in a group with {} factors",
                x.len(),
                self.factors.len()
            )));
        }
        Ok(self
            .factors
            .iter()
            .zip(x)
            .fold(BigInt::one(), |acc, (n, c)| acc.lcm(&(n / n.gcd(c)))))
    }

    /// Structure of the subgroup generated by `generators` (coordinate vectors in `⊕ ℤ/nᵢ`).
    ///
    /// With `Λ` the lattice spanned by the generators and `nᵢ eᵢ`, the subgroup is
    /// `Λ / ⊕ nᵢℤ`. A basis of `Λ` is read off the Smith form `U M V = S` as
    /// `B = S V⁻¹`, so the relations are `diag(n) B⁻¹ = diag(n) V S⁻¹`.
    pub fn subgroup_generated_by(&self, generators: &[Vec<BigInt>]) -> Result<AbelianGroup> {
        let d = self.factors.len();
        if d == 0 {
            return Ok(Self::trivial());
        }
        if let Some(g) = generators.iter().find(|g| g.len() != d) {
            return Err(Error::Dimension(format!("generator of length {} in a group of rank {d}", g.len())));
        }
        let rows = generators.len() + d;
        let mut m = IntMatrix::zeros(rows, d);
        for (i, g) in generators.iter().enumerate() {
            for (j, x) in g.iter().enumerate() {
                m[(i, j)] = x.mod_floor(&self.factors[j]);
            }
        }
        for (j, n) in self.factors.iter().enumerate() {
            m[(generators.len() + j, j)] = n.clone();
        }
        let snf = smith_normal_form(&m);
        let s = snf.diagonal();
        let mut rel = IntMatrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                let num = &self.factors[i] * &snf.v[(i, j)];
                let (q, r) = num.div_rem(&s[j]);
                if !r.is_zero() {
                    return Err(Error::Internal("subgroup relation matrix is not integral".into()));
                }
                rel[(i, j)] = q;
            }
        }
        Self::new(smith_normal_form(&rel).torsion_factors())
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.factors.len() {
            let j = (i..self.factors.len()).take_while(|&j| self.factors[j] == self.factors[i]).count();
            parts.push(if j == 1 {
                format!("Z/{}", self.factors[i])
            } else {
                format!("(Z/{})^{j}", self.factors[i])
            });
            i += j;
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Integer vector representing a class in a critical group. Which group it
/// lives in is fixed by the [`CriticalGroup`] it is evaluated against.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement(pub Vec<BigInt>);

impl GroupElement {
    pub fn zero(n: usize) -> Self {
        GroupElement(vec![BigInt::zero(); n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        GroupElement(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// `e_u`.
    pub fn vertex(n: usize, u: usize) -> Self {
        let mut e = Self::zero(n);
        e.0[u] = BigInt::one();
        e
    }

    /// `E_uv = e_u - e_v`.
    pub fn edge(n: usize, u: usize, v: usize) -> Self {
        let mut e = Self::zero(n);
        e.0[u] += 1;
        e.0[v] -= 1;
        e
    }

    /// `e_u + e_v`.
    pub fn edge_sum(n: usize, u: usize, v: usize) -> Self {
        let mut e = Self::zero(n);
        e.0[u] += 1;
        e.0[v] += 1;
        e
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn add(&self, other: &Self) -> Self {
        GroupElement(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        GroupElement(self.0.iter().map(|a| a * c).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    /// Torsion of `ℤⁿ / row L`, presented on the sum-zero lattice.
    Unsigned,
    /// `ℤⁿ / row L_σ` for an unbalanced signing.
    Signed,
}

/// Critical group together with the Smith form of the Laplacian that presents it.
#[derive(Debug, Clone)]
pub struct CriticalGroup {
    laplacian: IntMatrix,
    snf: SnfResult,
    kind: GroupKind,
    group: AbelianGroup,
}

impl CriticalGroup {
    /// Critical group of a connected graph.
    pub fn of(g: &Graph) -> Result<Self> {
        g.require_connected()?;
        Self::from_laplacian(g.laplacian(), GroupKind::Unsigned)
    }

    /// Critical group of a connected unbalanced signed graph.
    pub fn of_signed(g: &SignedGraph) -> Result<Self> {
        g.graph().require_connected()?;
        if g.is_balanced() {
            return Err(Error::Balanced);
        }
        Self::from_laplacian(g.laplacian(), GroupKind::Signed)
    }

    pub fn of_any(g: GraphRef<'_>) -> Result<Self> {
        match g {
            GraphRef::Plain(p) => Self::of(p),
            GraphRef::Signed(s) => Self::of_signed(s),
        }
    }

    fn from_laplacian(laplacian: IntMatrix, kind: GroupKind) -> Result<Self> {
        let snf = smith_normal_form(&laplacian);
        let zeros = snf.diagonal().iter().filter(|d| d.is_zero()).count();
        let expected = match kind {
            GroupKind::Unsigned => 1,
            GroupKind::Signed => 0,
        };
        if zeros != expected {
            return Err(Error::Internal(format!("Laplacian has corank {zeros}, expected {expected}")));
        }
        let group = AbelianGroup::new(snf.torsion_factors())?;
        Ok(CriticalGroup { laplacian, snf, kind, group })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn laplacian(&self) -> &IntMatrix {
        &self.laplacian
    }

    pub fn snf(&self) -> &SnfResult {
        &self.snf
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.laplacian.rows()
    }

    pub fn exponent(&self) -> BigInt {
        self.group.exponent()
    }

    /// Smith coordinates `c = U D`; class of `D` ↔ `(cᵢ mod dᵢ)`.
    ///
    /// Rejects vectors outside the sum-zero lattice in the unsigned case, and
    /// checks that the free coordinate vanishes.
    pub fn coordinates(&self, d: &GroupElement) -> Result<Vec<BigInt>> {
        if d.len() != self.n() {
            return Err(Error::Dimension(format!("element of length {} for {} vertices", d.len(), self.n())));
        }
        if self.kind == GroupKind::Unsigned && !d.0.iter().sum::<BigInt>().is_zero() {
            return Err(Error::NotInLattice);
        }
        let c = self.snf.u.mul_vec(&d.0)?;
        let diag = self.snf.diagonal();
        if c.iter().zip(&diag).any(|(ci, di)| di.is_zero() && !ci.is_zero()) {
            return Err(Error::NotInLattice);
        }
        Ok(c)
    }

    /// Coordinates of `D` in the invariant-factor decomposition `⊕ ℤ/nᵢ`.
    pub fn torsion_coordinates(&self, d: &GroupElement) -> Result<Vec<BigInt>> {
        let c = self.coordinates(d)?;
        Ok(self
            .snf
            .diagonal()
            .iter()
            .zip(c)
            .filter(|(di, _)| !di.is_zero() && !di.is_one())
            .map(|(di, ci)| ci.mod_floor(di))
            .collect())
    }

    /// Order of `[D]`: `lcm dᵢ / gcd(dᵢ, cᵢ)` over the torsion positions.
    pub fn order_of(&self, d: &GroupElement) -> Result<BigInt> {
        let c = self.coordinates(d)?;
        Ok(self
            .snf
            .diagonal()
            .iter()
            .zip(&c)
            .filter(|(di, _)| !di.is_zero())
            .fold(BigInt::one(), |acc, (di, ci)| acc.lcm(&(di / di.gcd(ci)))))
    }

    /// Whether `D` lies in the row lattice of the Laplacian.
    pub fn is_zero(&self, d: &GroupElement) -> Result<bool> {
        Ok(self.order_of(d)?.is_one())
    }
}

/// Invariant factors of the critical group.
pub fn critical_group<'a>(g: impl Into<GraphRef<'a>>) -> Result<AbelianGroup> {
    Ok(CriticalGroup::of_any(g.into())?.group)
}

/// Order of `[D]` in the critical group of `g`.
pub fn element_order<'a>(g: impl Into<GraphRef<'a>>, d: &GroupElement) -> Result<BigInt> {
    CriticalGroup::of_any(g.into())?.order_of(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family, Sign};

    fn big(v: &[u64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn family(f: Family) -> Graph {
        generate(&f).unwrap().into_plain().unwrap()
    }

    #[test]
    fn abelian_group_validation() {
        assert!(AbelianGroup::from_u64s(&[2, 4, 8]).is_ok());
        assert!(AbelianGroup::from_u64s(&[2, 3]).is_err());
        assert!(AbelianGroup::from_u64s(&[1, 3]).is_err());
        let g = AbelianGroup::from_cyclic_orders(&big(&[4, 6, 1])).unwrap();
        assert_eq!(g.factors(), big(&[2, 12]).as_slice());
        assert_eq!(g.order(), BigInt::from(24));
        assert_eq!(g.exponent(), BigInt::from(12));
        assert_eq!(AbelianGroup::trivial().exponent(), BigInt::one());
        assert_eq!(g.to_string(), "Z/2 + Z/12");
        assert_eq!(AbelianGroup::from_u64s(&[3, 3, 9]).unwrap().to_string(), "(Z/3)^2 + Z/9");
    }

    #[test]
    fn subgroups() {
        let g = AbelianGroup::from_u64s(&[4, 8]).unwrap();
        let h = g.subgroup_generated_by(&[big(&[2, 4])]).unwrap();
        assert_eq!(h.factors(), big(&[2]).as_slice());
        let h = g.subgroup_generated_by(&[big(&[1, 0]), big(&[0, 2])]).unwrap();
        assert_eq!(h.factors(), big(&[4, 4]).as_slice());
        let h = g.subgroup_generated_by(&[]).unwrap();
        assert!(h.is_trivial());
        let h = g.subgroup_generated_by(&[big(&[1, 1])]).unwrap();
        assert_eq!(h.factors(), big(&[8]).as_slice());
    }

    #[test]
    fn golden_groups() {
        let k33 = family(Family::CompleteMultipartite(vec![3, 3]));
        assert_eq!(critical_group(&k33).unwrap(), AbelianGroup::from_u64s(&[3, 3, 9]).unwrap());
        let cl = family(Family::ClebschComplement);
        assert_eq!(
            critical_group(&cl).unwrap(),
            AbelianGroup::from_u64s(&[3, 12, 12, 12, 12, 24, 96, 96, 96, 96]).unwrap()
        );
        let tri = SignedGraph::from_edges(3, &[(0, 1, Sign::Negative), (1, 2, Sign::Positive), (0, 2, Sign::Positive)])
            .unwrap();
        assert_eq!(critical_group(&tri).unwrap(), AbelianGroup::from_u64s(&[4]).unwrap());
        let c6 = family(Family::Cycle(6));
        assert_eq!(critical_group(&c6).unwrap(), AbelianGroup::from_u64s(&[6]).unwrap());
    }

    #[test]
    fn rejects_bad_inputs() {
        let two = Graph::empty(2);
        assert_eq!(critical_group(&two), Err(Error::Disconnected));
        let bal = SignedGraph::from_edges(3, &[(0, 1, Sign::Negative), (1, 2, Sign::Negative), (0, 2, Sign::Positive)])
            .unwrap();
        assert_eq!(critical_group(&bal), Err(Error::Balanced));
    }

    #[test]
    fn element_orders() {
        let k3 = family(Family::Complete(3));
        assert_eq!(element_order(&k3, &GroupElement::edge(3, 0, 1)).unwrap(), BigInt::from(3));
        assert_eq!(element_order(&k3, &GroupElement::vertex(3, 0)), Err(Error::NotInLattice));
        let k22 = family(Family::CompleteMultipartite(vec![2, 2]));
        assert_eq!(element_order(&k22, &GroupElement::edge(4, 0, 2)).unwrap(), BigInt::from(4));
        let cl = CriticalGroup::of(&family(Family::ClebschComplement)).unwrap();
        for (u, v) in family(Family::ClebschComplement).edges() {
            assert_eq!(cl.order_of(&GroupElement::edge(16, u, v)).unwrap(), BigInt::from(96));
        }
        let tc = cl.torsion_coordinates(&GroupElement::edge(16, 0, 3)).unwrap();
        assert_eq!(cl.group().element_order(&tc).unwrap(), BigInt::from(96));
    }
}
