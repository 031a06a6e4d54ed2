//! Explicit row combinations `Σ c_x L_x = N (e_u - e_v)` behind the exponent
//! theorem, with the witness vertices that certify the order.
//!
//! ```bash
//! cargo run --example decompositions
//! ```

use critgroup::graph::{generate, Family};
use critgroup::group::{decomposition, reduced_gcd, signed_complete_vertex_decomposition, witnesses};

fn main() -> critgroup::Result<()> {
    for f in [Family::Cycle(5), Family::Petersen, Family::Star(3), Family::CompleteMultipartite(vec![3, 3])] {
        let g = generate(&f)?.into_plain().expect("unsigned family");
        let edge = g.edges()[0];
        let d = decomposition(&g, edge)?;
        let w = witnesses(&d);
        let coeffs: Vec<String> = d.coefficients.iter().map(|c| c.to_string()).collect();
        println!("{f:?}, edge ({}, {}), case {}", d.edge.0 + 1, d.edge.1 + 1, d.case.name());
        println!("  coefficients [{}] = {} · target", coeffs.join(", "), d.claimed_order);
        println!(
            "  reduced gcd {}, implied order {}, w′ = {:?}, w″ = {:?}",
            reduced_gcd(&d),
            d.implied_order(),
            w.w_prime.map(|v| v + 1),
            w.w_double_prime.map(|v| v + 1)
        );
    }

    let s = generate(&Family::SignedCompleteUnbalanced(5))?.into_signed().expect("signed family");
    let d = signed_complete_vertex_decomposition(&s)?;
    let coeffs: Vec<String> = d.coefficients.iter().map(|c| c.to_string()).collect();
    println!(
        "-K_5 vertex decomposition on triangle ({}, {}, {}) after switching {:?}: [{}] = {} · e_{}",
        d.edge.0 + 1,
        d.edge.1 + 1,
        d.apex.unwrap() + 1,
        d.switching.iter().map(|v| v + 1).collect::<Vec<_>>(),
        coeffs.join(", "),
        d.claimed_order,
        d.edge.0 + 1
    );
    Ok(())
}
