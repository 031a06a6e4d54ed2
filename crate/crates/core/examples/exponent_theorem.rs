//! The exponent of a two-eigenvalue graph equals the product of its two
//! non-zero Laplacian eigenvalues, with the complete bipartite and star
//! exceptions. Each report names the element that attains the exponent.
//!
//! ```bash
//! cargo run --example exponent_theorem
//! ```

use critgroup::graph::{generate, Family, GraphRef};
use critgroup::group::verify_exponent_theorem;

fn main() -> critgroup::Result<()> {
    let families = [
        Family::Petersen,
        Family::Paley(9),
        Family::Triangular(5),
        Family::CompleteMultipartite(vec![2, 2, 2]),
        Family::CompleteMultipartite(vec![4, 4]),
        Family::Star(4),
    ];
    for f in &families {
        let g = generate(f)?.into_plain().expect("unsigned family");
        let r = verify_exponent_theorem(GraphRef::Plain(&g))?;
        let (u, v) = r.decomposition.edge;
        println!(
            "{:<34} θ₁θ₂ = {:>3}  exponent = {:>3}  {:<30} e_{} - e_{} has order {}",
            format!("{f:?}"),
            r.spectral_bound,
            r.exponent,
            r.classification.name(),
            u + 1,
            v + 1,
            r.target_order
        );
    }
    Ok(())
}
