//! Total orders (sums of cardinalities) of the families counted by [`FTable`].
//!
//! `s_i(m, k)` is the sum of `|M|` over connected sets `M` that meet layers
//! `1..k-1` and meet layer `k` in a fixed `i`-vertex footprint. Three
//! independent evaluations are provided and must agree:
//!
//! * the recursion `s(k) = A_m s(k-1) + B_m f(k)` (default, `O(k m²)`),
//! * the literal matrix sum `Σ_s A_m^(k-s-1) B_m A_m^s · 1` (reference),
//! * the convolution of footprint counts for the layer sum `S(F(m,k))`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{dot, IntMatrix};
use crate::layer::{f_table, FTable, RecurrenceMatrix};

/// Which evaluation of the layer order sums to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrderPath {
    #[default]
    Recursive,
    Convolution,
    Direct,
}

/// `B_m = diag(1, 2, ..., m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMatrix(IntMatrix);

impl WeightMatrix {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Domain("layer size m must be at least 1".into()));
        }
        Ok(WeightMatrix(IntMatrix::diagonal(1..=m as u64)))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    /// `B_m · v`, which just scales entry `i` by `i`.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        v.iter()
            .enumerate()
            .map(|(idx, x)| x * BigInt::from(idx + 1))
            .collect()
    }
}

/// Order sums `s_i(m,k)` and layer order sums `S(F(m,k))` for `k = 1..=horizon`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct STable {
    m: usize,
    columns: Vec<Vec<BigInt>>,
    layer_sums: Vec<BigInt>,
}

impl STable {
    /// Runs the recursion against an existing footprint table.
    pub fn build(ftable: &FTable, k_max: usize) -> Result<Self> {
        if k_max == 0 {
            return Err(Error::Domain("horizon k_max must be at least 1".into()));
        }
        if ftable.horizon() < k_max {
            return Err(Error::Domain(format!(
                "footprint table horizon {} is shorter than {k_max}",
                ftable.horizon()
            )));
        }
        let m = ftable.m();
        let rec = ftable.recurrence();
        let weights = WeightMatrix::new(m)?;

        let mut columns = Vec::with_capacity(k_max);
        let mut layer_sums = Vec::with_capacity(k_max);
        let mut s = weights.apply(ftable.column(1)?);
        for k in 1..=k_max {
            if k > 1 {
                let carried = rec.matrix().mul_vec(&s)?;
                let fresh = weights.apply(ftable.column(k)?);
                s = carried.into_iter().zip(fresh).map(|(a, b)| a + b).collect();
            }
            layer_sums.push(dot(rec.binomials(), &s));
            columns.push(s.clone());
        }
        Ok(STable {
            m,
            columns,
            layer_sums,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn horizon(&self) -> usize {
        self.columns.len()
    }

    fn check_k(&self, k: usize) -> Result<usize> {
        if k == 0 || k > self.horizon() {
            Err(Error::IndexOutOfRange {
                index: k,
                bound: self.horizon(),
            })
        } else {
            Ok(k - 1)
        }
    }

    /// `[s_1(m,k), ..., s_m(m,k)]`.
    pub fn column(&self, k: usize) -> Result<&[BigInt]> {
        Ok(&self.columns[self.check_k(k)?])
    }

    pub fn s_i(&self, i: usize, k: usize) -> Result<&BigInt> {
        let col = self.column(k)?;
        if i == 0 || i > col.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: col.len(),
            });
        }
        Ok(&col[i - 1])
    }

    /// `S(F(m,k)) = Σ_i C(m,i) s_i(m,k)`.
    pub fn layer_sum(&self, k: usize) -> Result<&BigInt> {
        Ok(&self.layer_sums[self.check_k(k)?])
    }

    pub fn layer_sums(&self) -> &[BigInt] {
        &self.layer_sums
    }
}

pub fn s_table_recursive(m: usize, k_max: usize) -> Result<STable> {
    let ft = f_table(m, k_max)?;
    STable::build(&ft, k_max)
}

/// `Σ_{s=0}^{k-1} A_m^(k-s-1) B_m A_m^s · 1`, summed literally from materialized powers.
pub fn s_table_direct(m: usize, k: usize) -> Result<Vec<BigInt>> {
    if k == 0 {
        return Err(Error::Domain("layer index k must be at least 1".into()));
    }
    let rec = RecurrenceMatrix::new(m)?;
    let weights = WeightMatrix::new(m)?;
    let powers = matrix_powers(&rec, k);
    let mut total = IntMatrix::zeros(m);
    for s in 0..k {
        let term = powers[k - s - 1]
            .checked_mul(weights.matrix())?
            .checked_mul(&powers[s])?;
        total = total.checked_add(&term)?;
    }
    total.mul_vec(&vec![BigInt::from(1); m])
}

fn matrix_powers(rec: &RecurrenceMatrix, k: usize) -> Vec<IntMatrix> {
    let mut powers = vec![IntMatrix::identity(rec.m())];
    for _ in 1..k {
        let next = powers.last().unwrap().checked_mul(rec.matrix()).unwrap();
        powers.push(next);
    }
    powers
}

fn check_ftable(m: usize, k: usize, ftable: &FTable) -> Result<()> {
    if ftable.m() != m {
        return Err(Error::Domain(format!(
            "footprint table is for m={}, not m={m}",
            ftable.m()
        )));
    }
    if k == 0 {
        return Err(Error::Domain("layer index k must be at least 1".into()));
    }
    if ftable.horizon() < k {
        return Err(Error::Domain(format!(
            "footprint table horizon {} is shorter than {k}",
            ftable.horizon()
        )));
    }
    Ok(())
}

/// `Σ_{s=1}^{k} f_i(m,s) f_i(m,k+1-s)`, summed forwards or with `s ↔ k+1-s` swapped.
pub fn footprint_convolution(
    ftable: &FTable,
    i: usize,
    k: usize,
    reversed: bool,
) -> Result<BigInt> {
    let mut acc = BigInt::zero();
    for s in 1..=k {
        let (a, b) = if reversed {
            (k + 1 - s, s)
        } else {
            (s, k + 1 - s)
        };
        acc += ftable.f_i(i, a)? * ftable.f_i(i, b)?;
    }
    Ok(acc)
}

fn convolution_with(m: usize, k: usize, ftable: &FTable, reversed: bool) -> Result<BigInt> {
    check_ftable(m, k, ftable)?;
    let binomials = ftable.recurrence().binomials();
    let mut correction = BigInt::zero();
    for i in 1..m {
        let conv = footprint_convolution(ftable, i, k, reversed)?;
        correction += &binomials[i - 1] * BigInt::from(m - i) * conv;
    }
    Ok(BigInt::from(m * k) * ftable.total(k)? - correction)
}

/// `S(F(m,k)) = m k f(m,k) - Σ_{i<m} Σ_s C(m,i) (m-i) f_i(m,s) f_i(m,k+1-s)`.
pub fn layer_order_sum_convolution(m: usize, k: usize, ftable: &FTable) -> Result<BigInt> {
    convolution_with(m, k, ftable, false)
}

/// Same as [`layer_order_sum_convolution`] with the inner index reversed.
pub fn layer_order_sum_convolution_reversed(m: usize, k: usize, ftable: &FTable) -> Result<BigInt> {
    convolution_with(m, k, ftable, true)
}

/// Compares `Σ_j C(m,j) x_{i,j}(k)`, where `x_i = Σ_s A^(k-s-1) E_ii A^s · 1` is
/// summed literally, against `C(m,i) Σ_s f_i(m,s) f_i(m,k+1-s)`.
pub fn convolution_identity_check(m: usize, i: usize, k: usize, ftable: &FTable) -> Result<bool> {
    check_ftable(m, k, ftable)?;
    if i == 0 || i > m {
        return Err(Error::IndexOutOfRange { index: i, bound: m });
    }
    let rec = ftable.recurrence();
    let mut unit = IntMatrix::zeros(m);
    unit.set(i - 1, i - 1, 1);
    let powers = matrix_powers(rec, k);
    let mut total = IntMatrix::zeros(m);
    for s in 0..k {
        let term = powers[k - s - 1]
            .checked_mul(&unit)?
            .checked_mul(&powers[s])?;
        total = total.checked_add(&term)?;
    }
    let x = total.mul_vec(&vec![BigInt::from(1); m])?;
    let lhs = dot(rec.binomials(), &x);
    let rhs = &rec.binomials()[i - 1] * footprint_convolution(ftable, i, k, false)?;
    Ok(lhs == rhs)
}
