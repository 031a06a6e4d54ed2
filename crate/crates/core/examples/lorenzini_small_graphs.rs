//! The exponent of every small connected graph divides the product of its
//! distinct non-zero Laplacian eigenvalues.
//!
//! ```bash
//! cargo run --release --example lorenzini_small_graphs -- 7
//! ```

use critgroup::graph::{connected_graphs, GraphRef};
use critgroup::group::verify_lorenzini;

fn main() -> critgroup::Result<()> {
    let n_max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    for n in 2..=n_max {
        let graphs = connected_graphs(n);
        let mut tight = 0;
        for g in &graphs {
            let r = verify_lorenzini(GraphRef::Plain(g))?;
            assert!(r.holds, "{g:?}");
            if r.exponent == r.eigenvalue_product {
                tight += 1;
            }
        }
        println!("n = {n}: {:>4} graphs, bound holds for all, attained by {tight}", graphs.len());
    }
    Ok(())
}
