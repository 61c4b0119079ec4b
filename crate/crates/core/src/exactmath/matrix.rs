use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense square matrix of big integers, stored row-major.
///
/// Indices are 0-based; row `i` here is row `i + 1` in the usual 1-based
/// combinatorial notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(order: usize) -> Self {
        assert!(order > 0, "matrix order must be positive");
        IntMatrix {
            order,
            entries: vec![BigInt::zero(); order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.entries[i * order + i] = BigInt::one();
        }
        m
    }

    pub fn diagonal<I, T>(diag: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let diag: Vec<BigInt> = diag.into_iter().map(Into::into).collect();
        let mut m = Self::zeros(diag.len());
        let order = m.order;
        for (i, d) in diag.into_iter().enumerate() {
            m.entries[i * order + i] = d;
        }
        m
    }

    /// Builds a matrix from rows; every row must have as many entries as there are rows.
    pub fn from_rows<R, T>(rows: R) -> Result<Self>
    where
        R: IntoIterator,
        R::Item: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let rows: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(Into::into).collect())
            .collect();
        let order = rows.len();
        if order == 0 {
            return Err(Error::Domain("matrix must have at least one row".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != order) {
            return Err(Error::Dimension {
                lhs: order,
                rhs: bad.len(),
            });
        }
        Ok(IntMatrix {
            order,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        assert!(row < self.order && col < self.order, "entry out of range");
        &self.entries[row * self.order + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: impl Into<BigInt>) {
        assert!(row < self.order && col < self.order, "entry out of range");
        self.entries[row * self.order + col] = value.into();
    }

    pub fn row(&self, row: usize) -> &[BigInt] {
        &self.entries[row * self.order..(row + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.order)
    }

    pub fn column(&self, col: usize) -> Vec<BigInt> {
        (0..self.order).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.order);
        for i in 0..self.order {
            for j in 0..self.order {
                t.entries[j * self.order + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn trace(&self) -> BigInt {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        self.same_order(rhs)?;
        let n = self.order;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.entries[k * n + j];
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        self.same_order(rhs)?;
        Ok(IntMatrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scaled(&self, factor: &BigInt) -> IntMatrix {
        IntMatrix {
            order: self.order,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    /// `M · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.order {
            return Err(Error::Dimension {
                lhs: self.order,
                rhs: v.len(),
            });
        }
        Ok(self.rows().map(|row| dot(row, v)).collect())
    }

    /// `v · M` for a row vector `v`.
    pub fn vec_mul(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.order {
            return Err(Error::Dimension {
                lhs: self.order,
                rhs: v.len(),
            });
        }
        let n = self.order;
        let mut out = vec![BigInt::zero(); n];
        for (k, vk) in v.iter().enumerate() {
            if vk.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o += vk * &self.entries[k * n + j];
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.order;
        let mut a = self.entries.clone();
        let mut sign = 1;
        let mut prev = BigInt::one();
        for k in 0..n.saturating_sub(1) {
            if a[k * n + k].is_zero() {
                match (k + 1..n).find(|&r| !a[r * n + k].is_zero()) {
                    Some(r) => {
                        for j in 0..n {
                            a.swap(k * n + j, r * n + j);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j]) / &prev;
                    a[i * n + j] = v;
                }
            }
            prev = a[k * n + k].clone();
        }
        let det = a[n * n - 1].clone();
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    fn same_order(&self, rhs: &IntMatrix) -> Result<()> {
        if self.order != rhs.order {
            Err(Error::Dimension {
                lhs: self.order,
                rhs: rhs.order,
            })
        } else {
            Ok(())
        }
    }
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Exact product of two square matrices of equal order.
pub fn mat_mul(lhs: &IntMatrix, rhs: &IntMatrix) -> Result<IntMatrix> {
    lhs.checked_mul(rhs)
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
