use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// Monic polynomial with big-integer coefficients, stored lowest power first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// `coeffs[p]` is the coefficient of `λ^p`. The last entry must be 1.
    pub fn monic(coeffs: Vec<BigInt>) -> Result<Self> {
        match coeffs.last() {
            Some(lead) if lead.is_one() => Ok(IntPolynomial { coeffs }),
            _ => Err(Error::Invariant("polynomial is not monic".into())),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `λ^power`.
    pub fn coefficient(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    /// Coefficient in the 1-based layout `λ^m + c(m) λ^(m-1) + ... + c(1)`,
    /// i.e. the coefficient of `λ^(j-1)` for `j` in `1..=m`.
    pub fn tail_coefficient(&self, j: usize) -> Result<BigInt> {
        let m = self.degree();
        if j == 0 || j > m {
            return Err(Error::IndexOutOfRange { index: j, bound: m });
        }
        Ok(self.coeffs[j - 1].clone())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation with a matrix argument.
    pub fn eval_matrix(&self, m: &IntMatrix) -> IntMatrix {
        let n = m.order();
        let mut acc = IntMatrix::zeros(n);
        for c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(m).expect("same order");
            for i in 0..n {
                let v = acc.get(i, i) + c;
                acc.set(i, i, v);
            }
        }
        acc
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            if p == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match p {
                0 => {}
                1 => f.write_str("λ")?,
                _ => write!(f, "λ^{p}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(λI - M)` by the Faddeev–LeVerrier recursion.
///
/// Intermediates are exact rationals; the coefficients are checked to be
/// integral before they are returned.
pub fn char_poly(m: &IntMatrix) -> Result<IntPolynomial> {
    let n = m.order();
    let a: Vec<BigRational> = m
        .rows()
        .flatten()
        .map(|e| BigRational::from_integer(e.clone()))
        .collect();

    // coeffs[p] multiplies λ^p
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut aux = vec![BigRational::zero(); n * n];
    for k in 1..=n {
        // aux <- A * aux + c_{n-k+1} I
        let mut next = vec![BigRational::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let ail = &a[i * n + l];
                if ail.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let x = &aux[l * n + j];
                    if !x.is_zero() {
                        next[i * n + j] += ail * x;
                    }
                }
            }
            next[i * n + i] += &coeffs[n - k + 1];
        }
        aux = next;
        // c_{n-k} = -tr(A * aux) / k
        let mut tr = BigRational::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &a[i * n + l] * &aux[l * n + i];
            }
        }
        coeffs[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
    }

    let ints = coeffs
        .into_iter()
        .enumerate()
        .map(|(p, c)| {
            if c.denom().is_one() {
                Ok(c.to_integer())
            } else {
                Err(Error::Invariant(format!(
                    "characteristic polynomial coefficient of λ^{p} is not integral: {c}"
                )))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    IntPolynomial::monic(ints)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn a2_polynomial() {
        let a2 = IntMatrix::from_rows([[1, 1], [2, 1]]).unwrap();
        let p = char_poly(&a2).unwrap();
        assert_eq!(p.coefficients(), ints(&[-1, -2, 1]).as_slice());
        assert_eq!(p.to_string(), "λ^2 - 2λ - 1");
    }

    #[test]
    fn a3_polynomial() {
        let a3 = IntMatrix::from_rows([[1, 2, 1], [2, 3, 1], [3, 3, 1]]).unwrap();
        let p = char_poly(&a3).unwrap();
        assert_eq!(p.coefficients(), ints(&[1, -3, -5, 1]).as_slice());
        assert_eq!(p.to_string(), "λ^3 - 5λ^2 - 3λ + 1");
        assert_eq!(a3.trace(), BigInt::from(5));
        assert_eq!(p.tail_coefficient(3).unwrap(), BigInt::from(-5));
        assert_eq!(p.tail_coefficient(1).unwrap(), BigInt::from(1));
        assert!(p.tail_coefficient(4).is_err());
    }

    #[test]
    fn identity_polynomial() {
        let p = char_poly(&IntMatrix::identity(3)).unwrap();
        assert_eq!(p.coefficients(), ints(&[-1, 3, -3, 1]).as_slice());
        assert_eq!(p.eval(&BigInt::one()), BigInt::zero());
    }

    #[test]
    fn one_by_one() {
        let p = char_poly(&IntMatrix::identity(1)).unwrap();
        assert_eq!(p.to_string(), "λ - 1");
    }

    #[test]
    fn cayley_hamilton_on_non_symmetric() {
        let m = IntMatrix::from_rows([[2, -1, 0, 4], [7, 0, 3, -2], [1, 1, 1, 1], [0, 5, -3, 2]])
            .unwrap();
        let p = char_poly(&m).unwrap();
        assert!(p.eval_matrix(&m).is_zero());
    }

    #[test]
    fn monic_is_enforced() {
        assert!(IntPolynomial::monic(ints(&[1, 2])).is_err());
        assert!(IntPolynomial::monic(vec![]).is_err());
    }
}
