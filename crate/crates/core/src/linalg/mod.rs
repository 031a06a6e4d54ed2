//! Exact integer and rational linear algebra. No floating point is used anywhere.

mod matrix;
mod poly;
mod snf;
mod solve;

pub use matrix::IntMatrix;
pub use poly::{char_poly, distinct_nonzero_eigenvalue_product, Polynomial};
pub use snf::{smith_normal_form, SnfResult};
pub use solve::{solve_integral_with_snf, solve_rational, solve_with_snf};
