//! The monodromy pairing on edge elements: general definition, the strongly
//! regular closed form, and the self-pairing `2(n-1)/(kn)`.
//!
//! ```bash
//! cargo run --example monodromy_pairing
//! ```

use critgroup::graph::{detect_srg, generate, Family};
use critgroup::group::{CriticalGroup, GroupElement};
use critgroup::pairing::{edge_pairing_closed_form, eta, monodromy_pairing, self_pairing};

fn main() -> critgroup::Result<()> {
    let g = generate(&Family::Petersen)?.into_plain().expect("unsigned family");
    let p = detect_srg(&g).expect("Petersen is strongly regular");
    let cg = CriticalGroup::of(&g)?;
    let edges = g.edges();
    println!("Petersen {p}: self-pairing {}, η = {}", self_pairing(&p), eta(&p)?);

    let e0 = edges[0];
    for &e in edges.iter().take(6) {
        let general = monodromy_pairing(
            &cg,
            &GroupElement::edge(g.n(), e0.0, e0.1),
            &GroupElement::edge(g.n(), e.0, e.1),
        )?;
        let closed = edge_pairing_closed_form(&g, e0, e)?;
        println!(
            "  ⟨E({},{}), E({},{})⟩ = {general:<5} (closed form {closed})",
            e0.0 + 1,
            e0.1 + 1,
            e.0 + 1,
            e.1 + 1
        );
    }

    // Arbitrary divisors work too.
    let c = generate(&Family::Cycle(6))?.into_plain().expect("unsigned family");
    let cg = CriticalGroup::of(&c)?;
    let d = GroupElement::from_ints(&[1, 0, 0, -1, 0, 0]);
    println!("C6: ⟨e₁ - e₄, e₁ - e₄⟩ = {}", monodromy_pairing(&cg, &d, &d)?);
    Ok(())
}
