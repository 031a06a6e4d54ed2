//! Balance, switching and the critical group of signed graphs.
//!
//! ```bash
//! cargo run --example signed_graphs
//! ```

use critgroup::graph::{detect_signed_two_eigenvalue, generate, Balance, Family, GraphRef, Sign, SignedGraph};
use critgroup::group::{critical_group, verify_exponent_theorem};

fn main() -> critgroup::Result<()> {
    // A 4-cycle with one negative edge is unbalanced.
    let c4 = SignedGraph::from_edges(
        4,
        &[(0, 1, Sign::Negative), (1, 2, Sign::Positive), (2, 3, Sign::Positive), (0, 3, Sign::Positive)],
    )?;
    println!("{c4:?}: {:?}", c4.balance());
    println!("  group {}", critical_group(&c4)?);

    // Switching at {1} moves the negative edge but keeps the group.
    let switched = c4.switch(&[1]);
    println!("switched at vertex 2: {switched:?}, group {}", critical_group(&switched)?);

    // Two negative edges on the cycle cancel out.
    let even = SignedGraph::from_edges(
        4,
        &[(0, 1, Sign::Negative), (1, 2, Sign::Negative), (2, 3, Sign::Positive), (0, 3, Sign::Positive)],
    )?;
    if let Balance::Balanced { switching } = even.balance() {
        println!("{even:?} is balanced; switch at {:?}", switching.iter().map(|v| v + 1).collect::<Vec<_>>());
    }

    // Signed complete graphs with every edge negative have two Laplacian eigenvalues.
    for n in 3..=6 {
        let s = generate(&Family::SignedCompleteUnbalanced(n))?.into_signed().expect("signed family");
        let p = detect_signed_two_eigenvalue(&s)?.expect("two eigenvalues");
        let r = verify_exponent_theorem(GraphRef::Signed(&s))?;
        println!("-K_{n}: θ₁θ₂ = {:>2}, group {}, {}", p.theta_prod, r.group, r.classification.name());
    }
    Ok(())
}
