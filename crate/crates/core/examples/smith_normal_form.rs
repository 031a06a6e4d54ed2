//! Smith normal form with its unimodular transforms.
//!
//! ```bash
//! cargo run --example smith_normal_form
//! ```

use critgroup::graph::{generate, Family};
use critgroup::linalg::{smith_normal_form, IntMatrix};

fn main() -> critgroup::Result<()> {
    let m = IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
    let snf = smith_normal_form(&m);
    println!("M =\n{m}\nU =\n{}\nV =\n{}\nS = U M V =\n{}", snf.u, snf.v, snf.s);
    assert_eq!(&(&snf.u * &m) * &snf.v, snf.s);

    let l = generate(&Family::Petersen)?.as_ref().laplacian();
    let d = smith_normal_form(&l);
    let diag: Vec<String> = d.diagonal().iter().map(|x| x.to_string()).collect();
    println!("Petersen Laplacian diagonal: [{}], rank {}", diag.join(", "), d.rank());
    Ok(())
}
