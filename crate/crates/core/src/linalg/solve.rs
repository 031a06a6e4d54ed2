use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::{smith_normal_form, IntMatrix, SnfResult};
use crate::error::{Error, Result};

/// One rational solution of `M f = b`, or `None` when the system is inconsistent.
///
/// Works through the Smith form: with `U M V = S`, solve `S y = U b` and map back `f = V y`.
/// Free coordinates are set to zero.
pub fn solve_rational(m: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigRational>>> {
    let snf = smith_normal_form(m);
    solve_with_snf(&snf, b)
}

pub fn solve_with_snf(snf: &SnfResult, b: &[BigInt]) -> Result<Option<Vec<BigRational>>> {
    if b.len() != snf.u.cols() {
        return Err(Error::Dimension(format!(
            "right-hand side of length {} for {} equations",
            b.len(),
            snf.u.cols()
        )));
    }
    let c = snf.u.mul_vec(b)?;
    let diag = snf.diagonal();
    let cols = snf.v.rows();
    let mut y = vec![BigRational::zero(); cols];
    for (i, ci) in c.iter().enumerate() {
        match diag.get(i) {
            Some(d) if !d.is_zero() => y[i] = BigRational::new(ci.clone(), d.clone()),
            _ if !ci.is_zero() => return Ok(None),
            _ => {}
        }
    }
    let f = (0..cols)
        .map(|r| {
            (0..cols)
                .filter(|&k| !y[k].is_zero())
                .map(|k| BigRational::from_integer(snf.v[(r, k)].clone()) * &y[k])
                .sum()
        })
        .collect();
    Ok(Some(f))
}

/// An integer solution of `M f = b`, or `None` when no integer solution exists.
pub fn solve_integral_with_snf(snf: &SnfResult, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if b.len() != snf.u.cols() {
        return Err(Error::Dimension(format!(
            "right-hand side of length {} for {} equations",
            b.len(),
            snf.u.cols()
        )));
    }
    let c = snf.u.mul_vec(b)?;
    let diag = snf.diagonal();
    let cols = snf.v.rows();
    let mut y = vec![BigInt::zero(); cols];
    for (i, ci) in c.iter().enumerate() {
        match diag.get(i) {
            Some(d) if !d.is_zero() => {
                let (q, r) = ci.div_rem(d);
                if !r.is_zero() {
                    return Ok(None);
                }
                y[i] = q;
            }
            _ if !ci.is_zero() => return Ok(None),
            _ => {}
        }
    }
    Ok(Some(snf.v.mul_vec(&y)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn apply(m: &IntMatrix, f: &[BigRational]) -> Vec<BigRational> {
        (0..m.rows())
            .map(|i| {
                m.row(i)
                    .iter()
                    .zip(f)
                    .map(|(a, x)| BigRational::from_integer(a.clone()) * x)
                    .sum()
            })
            .collect()
    }

    #[test]
    fn identity_returns_rhs() {
        let b = ints(&[3, -1, 7]);
        let f = solve_rational(&IntMatrix::identity(3), &b).unwrap().unwrap();
        assert_eq!(f, b.into_iter().map(BigRational::from_integer).collect::<Vec<_>>());
    }

    #[test]
    fn triangle_edge_vector() {
        let l = IntMatrix::from_rows(&[[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]);
        let b = ints(&[3, -3, 0]);
        let f = solve_rational(&l, &b).unwrap().unwrap();
        let back = apply(&l, &f);
        assert_eq!(back, b.iter().cloned().map(BigRational::from_integer).collect::<Vec<_>>());
        // f differs from (1, -1, 0) by a kernel vector
        let d0 = &f[0] - BigRational::from_integer(1.into());
        let d1 = &f[1] + BigRational::from_integer(1.into());
        assert_eq!(d0, d1);
        assert_eq!(d0, f[2]);
    }

    #[test]
    fn triangle_inconsistent() {
        let l = IntMatrix::from_rows(&[[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]);
        assert_eq!(solve_rational(&l, &ints(&[1, 0, 0])).unwrap(), None);
    }

    #[test]
    fn integral_requires_divisibility() {
        let l = IntMatrix::from_rows(&[[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]);
        let snf = smith_normal_form(&l);
        assert_eq!(solve_integral_with_snf(&snf, &ints(&[1, -1, 0])).unwrap(), None);
        let f = solve_integral_with_snf(&snf, &ints(&[3, -3, 0])).unwrap().unwrap();
        assert_eq!(l.mul_vec(&f).unwrap(), ints(&[3, -3, 0]));
    }
}
