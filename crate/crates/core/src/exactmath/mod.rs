//! Exact numeric substrate: big integers and rationals, dense integer
//! matrices, characteristic polynomials, ℤ[√2], and decimal rendering.

mod decimal;
mod matrix;
mod poly;
mod quad;

pub use decimal::to_decimal;
pub use matrix::{dot, mat_mul, IntMatrix};
pub use poly::{char_poly, IntPolynomial};
pub use quad::{quad_pow, QuadInt};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Row `m` of Pascal's triangle: `C(m, 0), ..., C(m, m)`.
pub fn binomial_row(m: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1)];
    for j in 1..=m {
        let next = &row[j - 1] * BigInt::from(m + 1 - j) / BigInt::from(j);
        row.push(next);
    }
    row
}

/// Rows `0..=m` of Pascal's triangle.
pub fn pascal_triangle(m: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
    for n in 1..=m {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        row.push(BigInt::from(1));
        for j in 1..n {
            row.push(&prev[j - 1] + &prev[j]);
        }
        row.push(BigInt::from(1));
        rows.push(row);
    }
    rows
}

/// `C(n, k)` read from a precomputed triangle, zero when `k > n`.
pub(crate) fn choose(triangle: &[Vec<BigInt>], n: usize, k: usize) -> BigInt {
    if k > n {
        BigInt::from(0)
    } else {
        triangle[n][k].clone()
    }
}
