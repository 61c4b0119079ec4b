//! Headline quantities for `K_m × P_n`: the number of connected sets, their
//! total order, the average order and the density.
//!
//! A connected set of `K_m × P_n` meets a contiguous run of layers, and every
//! run of `k` layers contributes `f(m,k)` sets. There are `n + 1 - k` such
//! runs, which gives `N = Σ_k (n+1-k) f(m,k)` and likewise for the orders.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::layer::{f_table, FTable};
use crate::order::{layer_order_sum_convolution, s_table_direct, OrderPath, STable};

/// Exact census of `K_m × P_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductResult {
    pub m: usize,
    pub n: usize,
    pub count: BigInt,
    pub total_order: BigInt,
    pub average: BigRational,
    pub density: BigRational,
}

impl ProductResult {
    pub fn from_parts(m: usize, n: usize, count: BigInt, total_order: BigInt) -> Result<Self> {
        if count.is_zero() {
            return Err(Error::Invariant("connected-set count is zero".into()));
        }
        let average = BigRational::new(total_order.clone(), count.clone());
        let density = &average / BigInt::from(m * n);
        Ok(ProductResult {
            m,
            n,
            count,
            total_order,
            average,
            density,
        })
    }
}

fn check_dims(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        Err(Error::Domain(format!(
            "m and n must both be at least 1 (got m={m}, n={n})"
        )))
    } else {
        Ok(())
    }
}

/// `Σ_{k=1}^{n} (n+1-k) x_k` for `x_1..x_n`.
fn run_weighted_sum<'a>(values: impl IntoIterator<Item = &'a BigInt>, n: usize) -> BigInt {
    values
        .into_iter()
        .take(n)
        .enumerate()
        .map(|(idx, x)| x * BigInt::from(n - idx))
        .sum()
}

fn layer_sums(m: usize, n: usize, ftable: &FTable, path: OrderPath) -> Result<Vec<BigInt>> {
    match path {
        OrderPath::Recursive => Ok(STable::build(ftable, n)?.layer_sums().to_vec()),
        OrderPath::Convolution => (1..=n)
            .map(|k| layer_order_sum_convolution(m, k, ftable))
            .collect(),
        OrderPath::Direct => {
            let binomials = ftable.recurrence().binomials();
            (1..=n)
                .map(|k| Ok(crate::exactmath::dot(binomials, &s_table_direct(m, k)?)))
                .collect()
        }
    }
}

pub fn count_connected_sets(m: usize, n: usize) -> Result<BigInt> {
    check_dims(m, n)?;
    let ft = f_table(m, n)?;
    Ok(run_weighted_sum(ft.totals(), n))
}

pub fn total_order(m: usize, n: usize) -> Result<BigInt> {
    check_dims(m, n)?;
    let ft = f_table(m, n)?;
    let st = STable::build(&ft, n)?;
    Ok(run_weighted_sum(st.layer_sums(), n))
}

pub fn average_order(m: usize, n: usize) -> Result<BigRational> {
    Ok(product_result(m, n)?.average)
}

pub fn density(m: usize, n: usize) -> Result<BigRational> {
    Ok(product_result(m, n)?.density)
}

pub fn product_result(m: usize, n: usize) -> Result<ProductResult> {
    product_result_with(m, n, OrderPath::Recursive)
}

/// Like [`product_result`], choosing how the layer order sums are evaluated.
pub fn product_result_with(m: usize, n: usize, path: OrderPath) -> Result<ProductResult> {
    check_dims(m, n)?;
    let ft = f_table(m, n)?;
    let count = run_weighted_sum(ft.totals(), n);
    let sums = layer_sums(m, n, &ft, path)?;
    let total = run_weighted_sum(&sums, n);
    ProductResult::from_parts(m, n, count, total)
}

/// Results for `n = 1..=n_max`, sharing one table and using
/// `N(n) = N(n-1) + Σ_{k≤n} f(m,k)` (and the same for orders).
pub fn product_sweep(m: usize, n_max: usize) -> Result<Vec<ProductResult>> {
    check_dims(m, n_max)?;
    let ft = f_table(m, n_max)?;
    let st = STable::build(&ft, n_max)?;
    let mut out = Vec::with_capacity(n_max);
    let (mut prefix_f, mut prefix_s) = (BigInt::zero(), BigInt::zero());
    let (mut count, mut total) = (BigInt::zero(), BigInt::zero());
    for n in 1..=n_max {
        prefix_f += ft.total(n)?;
        prefix_s += st.layer_sum(n)?;
        count += &prefix_f;
        total += &prefix_s;
        out.push(ProductResult::from_parts(
            m,
            n,
            count.clone(),
            total.clone(),
        )?);
    }
    Ok(out)
}
