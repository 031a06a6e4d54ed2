//! Critical groups of a few named graphs.
//!
//! ```bash
//! cargo run --example critical_groups
//! ```

use critgroup::graph::{generate, Family};
use critgroup::group::CriticalGroup;

fn main() -> critgroup::Result<()> {
    let families = [
        Family::Petersen,
        Family::ClebschComplement,
        Family::Paley(13),
        Family::CompleteMultipartite(vec![3, 3]),
        Family::Cycle(7),
        Family::Hypercube(3),
    ];
    for f in &families {
        let g = generate(f)?;
        let cg = CriticalGroup::of_any(g.as_ref())?;
        println!(
            "{:<40} order {:>16}  exponent {:>4}  {}",
            format!("{f:?}"),
            cg.group().order(),
            cg.exponent(),
            cg.group()
        );
    }
    Ok(())
}
