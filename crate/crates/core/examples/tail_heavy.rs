//! Orthogonal edge sets force a large subgroup `ℤ/nμ ⊕ (ℤ/η)^{r-1}`.
//!
//! ```bash
//! cargo run --example tail_heavy
//! ```

use critgroup::graph::{generate, Family};
use critgroup::pairing::{verify_tail_heavy, verify_tail_heavy_edges, SearchMode};

fn main() -> critgroup::Result<()> {
    let g = generate(&Family::ClebschComplement)?.into_plain().expect("unsigned family");

    // Vertices are 4-bit strings: the pair 0000–0011, 1110–1101.
    let r = verify_tail_heavy_edges(&g, &[(0b0000, 0b0011), (0b1110, 0b1101)])?;
    println!("Clebsch complement {}: group {}", r.params, r.group);
    println!("  given pair: orthogonal {}, predicted {}, divisible {}", r.is_orthogonal, r.predicted, r.divisible);

    let r = verify_tail_heavy(&g, SearchMode::Exact, true)?;
    let edges: Vec<String> = r.orthogonal.edges.iter().map(|(u, v)| format!("{u:04b}–{v:04b}")).collect();
    println!(
        "  maximum orthogonal set ({} edges, proven {}): {}",
        r.orthogonal.len(),
        r.orthogonal.proven_maximum,
        edges.join(", ")
    );
    println!("  predicted {}, generated {}, passed {}", r.predicted, r.generated, r.passed());

    for f in [Family::Petersen, Family::Paley(9), Family::Triangular(6)] {
        let h = generate(&f)?.into_plain().expect("unsigned family");
        let r = verify_tail_heavy(&h, SearchMode::Exact, false)?;
        println!("{f:?}: r = {}, predicted {}, group {}, passed {}", r.orthogonal.len(), r.predicted, r.group, r.passed());
    }
    Ok(())
}
