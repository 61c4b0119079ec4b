//! Layer transfer matrix and the per-footprint counts it generates.
//!
//! For a connected set of `K_m × P_k` that meets every layer, its footprint is
//! its intersection with layer `k`. The number of such sets with a given
//! footprint depends only on the footprint's size `i`, so an `m`-vector per
//! layer carries the whole state. That vector advances by the recurrence
//! matrix: `column(k) = A_m · column(k - 1)` with `column(1)` all ones.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactmath::{choose, dot, pascal_triangle, IntMatrix};

/// The `m × m` transfer matrix with entries `C(m, j) - C(m - i, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceMatrix {
    m: usize,
    matrix: IntMatrix,
    /// `C(m, 1), ..., C(m, m)`
    binomials: Vec<BigInt>,
}

impl RecurrenceMatrix {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Domain("layer size m must be at least 1".into()));
        }
        let tri = pascal_triangle(m);
        let mut matrix = IntMatrix::zeros(m);
        for i in 1..=m {
            for j in 1..=m {
                matrix.set(i - 1, j - 1, choose(&tri, m, j) - choose(&tri, m - i, j));
            }
        }
        let binomials = (1..=m).map(|j| tri[m][j].clone()).collect();
        Ok(RecurrenceMatrix {
            m,
            matrix,
            binomials,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// The weight row `[C(m,1), ..., C(m,m)]`.
    pub fn binomials(&self) -> &[BigInt] {
        &self.binomials
    }

    /// `C_m = diag(C(m,1), ..., C(m,m))`.
    pub fn binomial_diagonal(&self) -> IntMatrix {
        IntMatrix::diagonal(self.binomials.iter().cloned())
    }

    /// `A_m^e`, materialized. Only meant for the small exponents of the
    /// reference and symmetry checks.
    pub fn power(&self, e: usize) -> IntMatrix {
        let mut acc = IntMatrix::identity(self.m);
        for _ in 0..e {
            acc = acc.checked_mul(&self.matrix).expect("same order");
        }
        acc
    }
}

pub fn build_recurrence_matrix(m: usize) -> Result<RecurrenceMatrix> {
    RecurrenceMatrix::new(m)
}

/// Footprint counts `f_i(m, k)` and layer totals `f(m, k)` for `k = 1..=horizon`.
///
/// The table only ever grows; prefixes already computed never change.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FTable {
    recurrence: RecurrenceMatrix,
    columns: Vec<Vec<BigInt>>,
    totals: Vec<BigInt>,
}

impl FTable {
    pub fn new(m: usize) -> Result<Self> {
        let recurrence = RecurrenceMatrix::new(m)?;
        let first = vec![BigInt::one(); m];
        let total = recurrence.binomials().iter().sum();
        Ok(FTable {
            recurrence,
            columns: vec![first],
            totals: vec![total],
        })
    }

    pub fn m(&self) -> usize {
        self.recurrence.m
    }

    pub fn recurrence(&self) -> &RecurrenceMatrix {
        &self.recurrence
    }

    pub fn horizon(&self) -> usize {
        self.columns.len()
    }

    /// Appends columns until the horizon reaches `k_max`.
    pub fn extend_to(&mut self, k_max: usize) {
        while self.columns.len() < k_max {
            let prev = self.columns.last().expect("non-empty");
            let next = self.recurrence.matrix.mul_vec(prev).expect("same order");
            self.totals.push(dot(self.recurrence.binomials(), &next));
            self.columns.push(next);
        }
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

    /// `[f_1(m,k), ..., f_m(m,k)]`.
    pub fn column(&self, k: usize) -> Result<&[BigInt]> {
        Ok(&self.columns[self.check_k(k)?])
    }

    /// `f_i(m, k)`, both indices 1-based.
    pub fn f_i(&self, i: usize, k: usize) -> Result<&BigInt> {
        let col = self.column(k)?;
        if i == 0 || i > col.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: col.len(),
            });
        }
        Ok(&col[i - 1])
    }

    /// `f(m, k) = Σ_i C(m,i) f_i(m,k)`.
    pub fn total(&self, k: usize) -> Result<&BigInt> {
        Ok(&self.totals[self.check_k(k)?])
    }

    pub fn totals(&self) -> &[BigInt] {
        &self.totals
    }

    pub fn columns(&self) -> &[Vec<BigInt>] {
        &self.columns
    }
}

pub fn f_table(m: usize, k_max: usize) -> Result<FTable> {
    if k_max == 0 {
        return Err(Error::Domain("horizon k_max must be at least 1".into()));
    }
    let mut t = FTable::new(m)?;
    t.extend_to(k_max);
    Ok(t)
}

/// `[C(m,1), ..., C(m,m)] · (column i of A_m^(k-1))`, which equals `C(m,i) f_i(m,k)`.
pub fn weighted_profile_sum(m: usize, i: usize, k: usize) -> Result<BigInt> {
    let rec = RecurrenceMatrix::new(m)?;
    if i == 0 || i > m {
        return Err(Error::IndexOutOfRange { index: i, bound: m });
    }
    if k == 0 {
        return Err(Error::Domain("layer index k must be at least 1".into()));
    }
    let mut row = rec.binomials().to_vec();
    for _ in 1..k {
        row = rec.matrix.vec_mul(&row)?;
    }
    Ok(row[i - 1].clone())
}

/// Whether `C_m · A_m^k` is symmetric.
pub fn check_weighted_symmetry(m: usize, k: usize) -> Result<bool> {
    let rec = RecurrenceMatrix::new(m)?;
    let prod = rec.binomial_diagonal().checked_mul(&rec.power(k))?;
    Ok(prod.is_symmetric())
}
