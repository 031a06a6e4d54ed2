use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Univariate polynomial with exact rational coefficients, lowest degree first.
///
/// The coefficient vector never has trailing zeros; the zero polynomial has
/// an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn x() -> Self {
        Self::new(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn new(coeffs: Vec<BigRational>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn from_big_ints(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    /// `x - root`
    pub fn linear(root: BigRational) -> Self {
        Self::new(vec![-root, BigRational::one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    /// Integer coefficients, if every coefficient is integral.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.leading();
        Self::new(self.coeffs.iter().map(|c| c / &lead).collect())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::InvalidParameters("polynomial division by zero".into()));
        };
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] / &lead;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[top - dd + i] -= &c * d;
                }
            }
            quot[top - dd] = c;
            rem.pop();
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor is non-zero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Multiplicity of the root 0 and the cofactor with non-zero constant term.
    pub fn strip_x_powers(&self) -> (usize, Self) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (k, Self::new(self.coeffs[k.min(self.coeffs.len())..].to_vec()))
    }

    /// Monic square-free part `p / gcd(p, p')`: same roots, each simple.
    pub fn square_free_part(&self) -> Self {
        if self.degree().map_or(true, |d| d == 0) {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).expect("gcd is non-zero").0.monic()
    }

    /// Yun's square-free factorization: `self = lead * prod f_i^i` with each
    /// `f_i` monic, square-free and pairwise coprime. Returns `(f_i, i)` for
    /// non-constant factors.
    pub fn square_free_factorization(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().map_or(true, |d| d == 0) {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.div_rem(&a).unwrap().0;
        let mut c = df.div_rem(&a).unwrap().0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        loop {
            a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).unwrap().0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_rem(&a).unwrap().0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Integer roots of the polynomial, each listed once, ascending.
    ///
    /// Candidates are the divisors of the constant term of the primitive
    /// integer multiple (after removing the root 0).
    pub fn integer_roots(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let (zeros, rest) = self.strip_x_powers();
        let mut roots = Vec::new();
        if zeros > 0 {
            roots.push(BigInt::zero());
        }
        let rest = rest.square_free_part();
        let c0 = rest.primitive_integer_coeffs()[0].abs();
        for d in small_divisors(&c0) {
            for cand in [d.clone(), -d] {
                if rest.eval(&BigRational::from_integer(cand.clone())).is_zero() {
                    roots.push(cand);
                }
            }
        }
        roots.sort();
        roots.dedup();
        roots
    }

    /// Integer coefficients of the primitive integer multiple with positive leading coefficient.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        use num_integer::Integer;
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if g.is_zero() {
            return ints;
        }
        let sign = if self.leading().is_negative() { -BigInt::one() } else { BigInt::one() };
        ints.into_iter().map(|x| x * &sign / &g).collect()
    }
}

/// Positive divisors of `n` (n > 0) by trial division.
fn small_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let other = n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(xI - M)` by the Faddeev–LeVerrier recurrence.
///
/// All divisions in the recurrence are exact over the integers.
pub fn char_poly(m: &IntMatrix) -> Result<Polynomial> {
    if !m.is_square() {
        return Err(Error::Dimension("characteristic polynomial of a non-square matrix".into()));
    }
    let n = m.rows();
    // coeffs[n - k] holds c_{n-k}; monic leading term.
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut aux = IntMatrix::zeros(n, n);
    for k in 1..=n {
        // aux <- M * aux_prev + c_{n-k+1} I
        let mut next = m * &aux;
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        aux = next;
        let prod = m * &aux;
        let trace: BigInt = (0..n).map(|i| prod[(i, i)].clone()).sum();
        let kk = BigInt::from(k);
        if !(&trace % &kk).is_zero() {
            return Err(Error::Internal("non-integral Faddeev–LeVerrier step".into()));
        }
        coeffs[n - k] = -(trace / kk);
    }
    Ok(Polynomial::from_big_ints(coeffs))
}

/// Product of the distinct non-zero eigenvalues of `M`, as an exact rational.
///
/// Computed from the square-free part of the characteristic polynomial with all
/// factors of `x` removed; the result is `(-1)^deg q * q(0) / lead(q)`.
pub fn distinct_nonzero_eigenvalue_product(m: &IntMatrix) -> Result<BigRational> {
    if m.is_zero() {
        return Err(Error::InvalidParameters("the zero matrix has no non-zero eigenvalues".into()));
    }
    let p = char_poly(m)?;
    let (_, rest) = p.strip_x_powers();
    let q = rest.square_free_part();
    let deg = q.degree().unwrap_or(0);
    let sign = if deg % 2 == 0 { BigRational::one() } else { -BigRational::one() };
    Ok(sign * q.coeff(0) / q.leading())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn euclid_and_gcd() {
        // (x-1)^2 (x+2) and (x-1)(x-3)
        let a = Polynomial::linear(rat(1)).pow(2).mul(&Polynomial::linear(rat(-2)));
        let b = Polynomial::linear(rat(1)).mul(&Polynomial::linear(rat(3)));
        assert_eq!(a.gcd(&b), Polynomial::linear(rat(1)));
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn square_free_structure() {
        let p = Polynomial::x()
            .mul(&Polynomial::linear(rat(2)).pow(5))
            .mul(&Polynomial::linear(rat(5)).pow(4));
        let (k, rest) = p.strip_x_powers();
        assert_eq!(k, 1);
        assert_eq!(
            rest.square_free_part(),
            Polynomial::linear(rat(2)).mul(&Polynomial::linear(rat(5)))
        );
        let fac = p.square_free_factorization();
        assert_eq!(
            fac,
            vec![
                (Polynomial::x(), 1),
                (Polynomial::linear(rat(5)), 4),
                (Polynomial::linear(rat(2)), 5)
            ]
        );
        assert_eq!(p.integer_roots(), vec![0.into(), 2.into(), 5.into()]);
    }

    #[test]
    fn char_poly_of_triangle() {
        let l = IntMatrix::from_rows(&[[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]);
        let expected = Polynomial::x().mul(&Polynomial::linear(rat(3)).pow(2));
        assert_eq!(char_poly(&l).unwrap(), expected);
        assert_eq!(distinct_nonzero_eigenvalue_product(&l).unwrap(), rat(3));
    }

    #[test]
    fn irrational_eigenvalues_have_rational_product() {
        // [[1,1],[1,0]]: roots (1 ± sqrt 5)/2, product -1
        let m = IntMatrix::from_rows(&[[1, 1], [1, 0]]);
        assert_eq!(char_poly(&m).unwrap(), Polynomial::from_ints(&[-1, -1, 1]));
        assert_eq!(distinct_nonzero_eigenvalue_product(&m).unwrap(), rat(-1));
    }

    #[test]
    fn zero_matrix_rejected() {
        assert!(distinct_nonzero_eigenvalue_product(&IntMatrix::zeros(2, 2)).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(Polynomial::from_ints(&[0, -3, 0, 1]).to_string(), "x^3 - 3*x");
        assert_eq!(Polynomial::from_ints(&[4, 1]).to_string(), "x + 4");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}
