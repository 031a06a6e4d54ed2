//! Feasible strongly regular parameters with `η = nμ`.
//!
//! ```bash
//! cargo run --example parameter_scan -- 100
//! ```

use critgroup::scan::scan_eta_max;

fn main() {
    let n_max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(100);
    println!("{:<18} {:>5} {:>6} {:>6} {:>8}", "(n,k,λ,μ)", "η", "Krein", "bound", "mults");
    for t in scan_eta_max(n_max) {
        println!(
            "{:<18} {:>5} {:>6} {:>6} {:>8}",
            t.params.to_string(),
            t.eta,
            t.krein,
            t.absolute_bound,
            format!("{}/{}", t.multiplicities.0, t.multiplicities.1)
        );
    }
}
