//! Orthogonal edge sets force a subgroup `ℤ/nμ ⊕ (ℤ/η)^{r-1}`.

use num_bigint::BigInt;
use num_integer::Integer;

use super::orthogonal::orthogonal_subset_in;
use super::{check_subgroup_divisibility, closed_form_parameters, eta, subgroup_bound, OrthogonalSet, PairingTable, SearchMode};
use crate::error::{Error, Result};
use crate::graph::{Graph, SrgParameters};
use crate::group::{AbelianGroup, CriticalGroup, GroupElement};

#[derive(Debug, Clone)]
pub struct TailHeavyReport {
    pub params: SrgParameters,
    pub eta: u64,
    pub orthogonal: OrthogonalSet,
    /// All pairwise pairings in `orthogonal` are zero.
    pub is_orthogonal: bool,
    /// `[η, ..., η, nμ]` with `r = |orthogonal|`.
    pub predicted: AbelianGroup,
    pub group: AbelianGroup,
    /// Tail divisibility of `predicted` against `group`.
    pub divisible: bool,
    /// Subgroup actually generated by the `E_uv` of the orthogonal set.
    pub generated: AbelianGroup,
    /// `generated` has `r` invariant factors, each divisible by `η`, with
    /// exponent `nμ`, and `predicted` passes tail divisibility against it.
    pub generated_consistent: bool,
    /// Number of invariant factors of the group equal to `nμ`.
    pub n_mu_multiplicity: usize,
    /// The group contains `(ℤ/nμ)^r` for `r = |orthogonal| > 1`.
    pub strong_pattern: bool,
}

impl TailHeavyReport {
    pub fn passed(&self) -> bool {
        self.is_orthogonal && self.divisible && self.generated_consistent
    }
}

fn require_params(g: &Graph) -> Result<SrgParameters> {
    closed_form_parameters(g)
        .ok_or_else(|| Error::StructureMismatch("needs a non-complete, non-complete-bipartite SRG".into()))
}

/// Searches for an orthogonal edge set and checks the subgroup it predicts
/// against the computed critical group and against the concrete subgroup its
/// elements generate.
pub fn verify_tail_heavy(g: &Graph, mode: SearchMode, structural_hints: bool) -> Result<TailHeavyReport> {
    require_params(g)?;
    let table = PairingTable::new(g)?;
    let set = orthogonal_subset_in(&table, g, mode, structural_hints)?;
    report(g, &table, set)
}

/// As [`verify_tail_heavy`] for a given edge set.
pub fn verify_tail_heavy_edges(g: &Graph, edges: &[(usize, usize)]) -> Result<TailHeavyReport> {
    require_params(g)?;
    let table = PairingTable::new(g)?;
    let mut indices = Vec::with_capacity(edges.len());
    for &e in edges {
        indices.push(
            table
                .index_of(e)
                .ok_or_else(|| Error::InvalidParameters(format!("({}, {}) is not an edge", e.0, e.1)))?,
        );
    }
    let mut certificate = Vec::new();
    for a in 0..indices.len() {
        for b in a + 1..indices.len() {
            certificate.push((a, b, table.get(indices[a], indices[b]).clone()));
        }
    }
    let set = OrthogonalSet {
        edges: indices.iter().map(|&i| table.edges[i]).collect(),
        certificate,
        proven_maximum: false,
        seed_size: None,
        method: table.method,
    };
    report(g, &table, set)
}

fn report(g: &Graph, _table: &PairingTable, set: OrthogonalSet) -> Result<TailHeavyReport> {
    let params = require_params(g)?;
    if set.is_empty() {
        return Err(Error::InvalidParameters("empty edge set".into()));
    }
    let eta = eta(&params)?;
    let r = set.len();
    let predicted = subgroup_bound(&params, r)?;
    let cg = CriticalGroup::of(g)?;
    let group = cg.group().clone();
    let divisible = check_subgroup_divisibility(&predicted, &group);

    let gens = set
        .edges
        .iter()
        .map(|&(u, v)| cg.torsion_coordinates(&GroupElement::edge(g.n(), u, v)))
        .collect::<Result<Vec<_>>>()?;
    let generated = group.subgroup_generated_by(&gens)?;
    let n_mu = BigInt::from(params.n_mu());
    let eta_big = BigInt::from(eta);
    let generated_consistent = generated.rank() == r
        && generated.factors().iter().all(|f| f.is_multiple_of(&eta_big))
        && generated.exponent() == n_mu
        && check_subgroup_divisibility(&predicted, &generated);
    let n_mu_multiplicity = group.factors().iter().filter(|f| **f == n_mu).count();

    Ok(TailHeavyReport {
        params,
        eta,
        is_orthogonal: set.certificate.iter().all(|(_, _, v)| v.is_zero()),
        strong_pattern: r > 1 && n_mu_multiplicity >= r,
        orthogonal: set,
        predicted,
        group,
        divisible,
        generated,
        generated_consistent,
        n_mu_multiplicity,
    })
}
