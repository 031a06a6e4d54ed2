//! Smith normal form over the integers with unimodular transforms.
//!
//! The pivot is always the entry of smallest non-zero absolute value in the
//! remaining submatrix, ties broken row-major, so the output is a deterministic
//! function of the input.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// `U * M * V = S` with `U`, `V` unimodular and `S` diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub s: IntMatrix,
}

impl SnfResult {
    /// Full diagonal of `S`, including trailing zeros.
    pub fn diagonal(&self) -> Vec<BigInt> {
        self.s.diagonal_entries()
    }

    /// Number of non-zero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|d| !d.is_zero()).count()
    }

    /// Non-zero diagonal entries that are not units: the invariant factors of
    /// the torsion part of the cokernel.
    pub fn torsion_factors(&self) -> Vec<BigInt> {
        self.diagonal()
            .into_iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .collect()
    }
}

/// Index of the smallest non-zero |entry| in the submatrix starting at (t, t).
fn find_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().map_or(true, |(_, b)| ax < *b) {
                if ax.is_one() {
                    return Some((i, j));
                }
                best = Some(((i, j), ax));
            }
        }
    }
    best.map(|(pos, _)| pos)
}

pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = find_pivot(&a, t) else {
                return SnfResult { u, v, s: a };
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = a[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&a[(i, t)] / &p);
                a.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&a[(t, j)] / &p);
                a.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            // The pivot must divide the rest of the submatrix.
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfResult { u, v, s: a }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check(m: &IntMatrix) -> SnfResult {
        let r = smith_normal_form(m);
        assert_eq!(&(&r.u * m) * &r.v, r.s);
        assert!(r.u.determinant().unwrap().abs().is_one());
        assert!(r.v.determinant().unwrap().abs().is_one());
        r
    }

    #[test]
    fn identity_is_fixed() {
        let r = check(&IntMatrix::identity(4));
        assert_eq!(r.s, IntMatrix::identity(4));
    }

    #[test]
    fn diag_two_three() {
        let r = check(&IntMatrix::from_rows(&[[2, 0], [0, 3]]));
        assert_eq!(r.diagonal(), ints(&[1, 6]));
    }

    #[test]
    fn triangle_laplacian() {
        let l = IntMatrix::from_rows(&[[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]);
        let r = check(&l);
        assert_eq!(r.diagonal(), ints(&[1, 3, 0]));
        assert_eq!(r.torsion_factors(), ints(&[3]));
        assert_eq!(r.rank(), 2);
    }

    #[test]
    fn rectangular_and_zero() {
        let r = check(&IntMatrix::from_rows(&[[4, 6, 8]]));
        assert_eq!(r.diagonal(), ints(&[2]));
        let z = check(&IntMatrix::zeros(2, 3));
        assert_eq!(z.rank(), 0);
        let tall = check(&IntMatrix::from_rows(&[[6], [-4], [10]]));
        assert_eq!(tall.diagonal(), ints(&[2]));
    }

    #[test]
    fn divisibility_fixup() {
        // diag(2, 3) is already diagonal but needs the chain repaired; diag(4, 6) -> (2, 12)
        let r = check(&IntMatrix::from_rows(&[[4, 0], [0, 6]]));
        assert_eq!(r.diagonal(), ints(&[2, 12]));
    }

    #[test]
    fn deterministic() {
        let m = IntMatrix::from_rows(&[[3, -7, 2], [5, 1, -4], [0, 6, 9]]);
        assert_eq!(smith_normal_form(&m), smith_normal_form(&m));
    }
}
