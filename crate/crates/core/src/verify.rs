//! Cross-checks between the formula paths, the closed forms and the oracle.
//!
//! Every suite returns a flat list of [`Check`]s so callers can print them,
//! stop at the first failure, or count passes.

use std::fmt::Display;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::aggregate::{product_result_with, product_sweep, ProductResult};
use crate::error::Result;
use crate::exactmath::char_poly;
use crate::layer::{check_weighted_symmetry, f_table, weighted_profile_sum, RecurrenceMatrix};
use crate::oracle::{
    build_km_pn, census, census_union_find, footprint_census, span_census, CensusReport, OracleCap,
    SimpleGraph,
};
use crate::order::{
    layer_order_sum_convolution, layer_order_sum_convolution_reversed, s_table_direct, OrderPath,
    STable,
};
use crate::pell::{
    closed_form_f1, closed_form_f2, ladder_average, ladder_count, ladder_density,
    ladder_sum_identities, vince_average, PellPair,
};
use crate::recurrence::{build_recurrence, coefficient_report, stream_f};

/// One comparison of two independently computed values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub cell: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

impl Check {
    pub fn compare<T: PartialEq + Display>(
        name: impl Into<String>,
        cell: impl Into<String>,
        expected: &T,
        actual: &T,
    ) -> Self {
        Check {
            name: name.into(),
            cell: cell.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            passed: expected == actual,
        }
    }

    fn truth(name: impl Into<String>, cell: impl Into<String>, ok: bool) -> Self {
        Check {
            name: name.into(),
            cell: cell.into(),
            expected: "true".into(),
            actual: ok.to_string(),
            passed: ok,
        }
    }

    fn from_result<T>(
        name: impl Into<String>,
        cell: impl Into<String>,
        r: Result<T>,
        describe: impl FnOnce(&T) -> String,
    ) -> Self {
        let (actual, passed) = match &r {
            Ok(v) => (describe(v), true),
            Err(e) => (e.to_string(), false),
        };
        Check {
            name: name.into(),
            cell: cell.into(),
            expected: "ok".into(),
            actual,
            passed,
        }
    }
}

pub fn first_failure(checks: &[Check]) -> Option<&Check> {
    checks.iter().find(|c| !c.passed)
}

fn cell(m: usize, n: usize) -> String {
    format!("m={m} n={n}")
}

fn failed(name: &str, cell: String, err: impl Display) -> Check {
    Check {
        name: name.into(),
        cell,
        expected: "ok".into(),
        actual: err.to_string(),
        passed: false,
    }
}

fn compare_with_census(r: &ProductResult, c: &CensusReport) -> Vec<Check> {
    let at = cell(r.m, r.n);
    vec![
        Check::compare("count vs oracle", &at, &c.count, &r.count),
        Check::compare("total order vs oracle", &at, &c.total_order, &r.total_order),
        Check::compare("average order vs oracle", &at, &c.average, &r.average),
        Check::compare("density vs oracle", &at, &c.density(), &r.density),
    ]
}

/// `N`, `S`, `A`, `D` of `K_m × P_n` from the transfer-matrix path against the census.
pub fn oracle_cell(m: usize, n: usize, cap: OracleCap) -> Result<Vec<Check>> {
    let g = build_km_pn(m, n)?;
    let c = census(g.graph(), cap)?;
    let r = crate::aggregate::product_result(m, n)?;
    Ok(compare_with_census(&r, &c))
}

/// Layer counts `f(m,k)`, order sums `S(F(m,k))` and per-footprint counts
/// against the oracle restricted to sets meeting every layer of `K_m × P_k`.
pub fn oracle_layers(m: usize, k_max: usize, cap: OracleCap) -> Result<Vec<Check>> {
    let ft = f_table(m, k_max)?;
    let st = STable::build(&ft, k_max)?;
    let mut out = Vec::new();
    for k in 1..=k_max {
        let at = format!("m={m} k={k}");
        let g = build_km_pn(m, k)?;
        let spans = span_census(&g, cap)?;
        out.push(Check::compare(
            "layer total vs oracle",
            &at,
            &spans.count(1, k),
            ft.total(k)?,
        ));
        out.push(Check::compare(
            "layer order sum vs oracle",
            &at,
            &spans.order_sum(1, k),
            st.layer_sum(k)?,
        ));
        for i in 1..=m {
            // every i-subset of the last layer should give the same numbers
            for fp in subsets_of_size(m, i) {
                let (count, orders) = footprint_census(&g, k, &fp, cap)?;
                let at = format!("m={m} k={k} footprint={fp:?}");
                out.push(Check::compare(
                    "footprint count vs oracle",
                    &at,
                    &count,
                    ft.f_i(i, k)?,
                ));
                out.push(Check::compare(
                    "footprint order sum vs oracle",
                    &at,
                    &orders,
                    st.s_i(i, k)?,
                ));
            }
        }
    }
    Ok(out)
}

fn subsets_of_size(m: usize, size: usize) -> Vec<Vec<usize>> {
    (0u64..1 << m)
        .filter(|s| s.count_ones() as usize == size)
        .map(|s| (0..m).filter(|&b| s >> b & 1 == 1).collect())
        .collect()
}

/// The run decomposition `N = Σ_k (n+1-k) f(m,k)` checked run by run on the oracle.
pub fn oracle_run_decomposition(m: usize, n: usize, cap: OracleCap) -> Result<Vec<Check>> {
    let g = build_km_pn(m, n)?;
    let spans = span_census(&g, cap)?;
    let ft = f_table(m, n)?;
    let mut out = Vec::new();
    for len in 1..=n {
        for first in 1..=n + 1 - len {
            out.push(Check::compare(
                "run of layers vs layer total",
                format!("m={m} n={n} layers={first}..{}", first + len - 1),
                ft.total(len)?,
                &spans.count(first, len),
            ));
        }
    }
    Ok(out)
}

/// Closed forms for `K_2 × P_n` against the general path and against each other.
pub fn ladder_suite(n_max: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let sweep = match product_sweep(2, n_max) {
        Ok(s) => s,
        Err(e) => return vec![failed("ladder sweep", format!("n_max={n_max}"), e)],
    };
    let pell = PellPair::up_to(n_max);
    for r in &sweep {
        let n = r.n;
        let at = cell(2, n);
        match (
            ladder_count(n),
            ladder_average(n),
            vince_average(n),
            ladder_density(n),
        ) {
            (Ok(count), Ok(avg), Ok(vince), Ok(dens)) => {
                out.push(Check::compare(
                    "ladder count closed form",
                    &at,
                    &r.count,
                    &count,
                ));
                out.push(Check::compare(
                    "ladder average closed form",
                    &at,
                    &r.average,
                    &avg,
                ));
                out.push(Check::compare(
                    "ladder average in Pell-Lucas form",
                    &at,
                    &avg,
                    &vince,
                ));
                out.push(Check::compare(
                    "ladder density closed form",
                    &at,
                    &r.density,
                    &dens,
                ));
            }
            (a, b, c, d) => {
                let err = [a.err(), b.err(), c.err(), d.err()]
                    .into_iter()
                    .flatten()
                    .next();
                out.push(failed("ladder closed forms", at, err.expect("one failed")));
            }
        }
        let at = format!("k={n}");
        out.push(Check::from_result(
            "ladder total f(2,k) in Z[sqrt2]",
            &at,
            closed_form_f2(n).and_then(|v| {
                if &v == pell.halfcomp(n) {
                    Ok(v)
                } else {
                    Err(crate::Error::validation("f(2,k)", pell.halfcomp(n), v))
                }
            }),
            |v| v.to_string(),
        ));
        out.push(Check::from_result(
            "ladder footprint f_1(2,k) in Z[sqrt2]",
            &at,
            closed_form_f1(n).and_then(|v| {
                if &v == pell.pell(n) {
                    Ok(v)
                } else {
                    Err(crate::Error::validation("f_1(2,k)", pell.pell(n), v))
                }
            }),
            |v| v.to_string(),
        ));
    }
    for n in 1..=n_max {
        out.push(Check::from_result(
            "ladder summation identities",
            format!("n={n}"),
            ladder_sum_identities(n),
            |ids| format!("{} identities hold", ids.len()),
        ));
    }
    out
}

/// Characteristic-polynomial coefficient identities and Cayley–Hamilton for `A_m`.
pub fn charpoly_suite(m_max: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for m in 2..=m_max {
        match coefficient_report(m) {
            Ok(r) => {
                let at = format!("m={m}");
                out.push(Check::compare(
                    "trace coefficient c(m,m)",
                    &at,
                    &r.expected_trace_coefficient,
                    &r.trace_coefficient,
                ));
                out.push(Check::compare(
                    "constant coefficient c(m,1)",
                    &at,
                    &r.expected_constant_coefficient,
                    &r.constant_coefficient,
                ));
            }
            Err(e) => out.push(failed("characteristic polynomial", format!("m={m}"), e)),
        }
        let ch = RecurrenceMatrix::new(m)
            .and_then(|rec| Ok(char_poly(rec.matrix())?.eval_matrix(rec.matrix()).is_zero()));
        out.push(match ch {
            Ok(ok) => Check::truth("Cayley-Hamilton", format!("m={m}"), ok),
            Err(e) => failed("Cayley-Hamilton", format!("m={m}"), e),
        });
    }
    out
}

/// Scalar recurrence stream against the matrix path.
pub fn recurrence_suite(
    m_range: std::ops::RangeInclusive<usize>,
    k_max: usize,
) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for m in m_range {
        let stream = stream_f(&build_recurrence(m)?, k_max);
        let ft = f_table(m, k_max)?;
        for (k, (s, f)) in stream.iter().zip(ft.totals()).enumerate() {
            out.push(Check::compare(
                "recurrence vs matrix path",
                format!("m={m} k={}", k + 1),
                f,
                s,
            ));
        }
    }
    Ok(out)
}

/// Symmetry of `C_m A_m^k` and the weighted column sums.
pub fn symmetry_suite(
    m_range: std::ops::RangeInclusive<usize>,
    k_max: usize,
) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for m in m_range {
        let ft = f_table(m, k_max)?;
        for k in 1..=k_max {
            let at = format!("m={m} k={k}");
            out.push(Check::truth(
                "weighted symmetry",
                &at,
                check_weighted_symmetry(m, k)?,
            ));
            for i in 1..=m {
                let expect = &ft.recurrence().binomials()[i - 1] * ft.f_i(i, k)?;
                out.push(Check::compare(
                    "weighted profile sum",
                    format!("m={m} i={i} k={k}"),
                    &expect,
                    &weighted_profile_sum(m, i, k)?,
                ));
            }
        }
    }
    Ok(out)
}

/// Recursive, literal-sum and convolution evaluations of the order sums.
pub fn order_paths_suite(
    m_range: std::ops::RangeInclusive<usize>,
    k_max: usize,
) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for m in m_range {
        let ft = f_table(m, k_max)?;
        let st = STable::build(&ft, k_max)?;
        for k in 1..=k_max {
            let at = format!("m={m} k={k}");
            let direct = s_table_direct(m, k)?;
            out.push(Check::truth(
                "order sums: recursion vs literal sum",
                &at,
                direct == st.column(k)?,
            ));
            let conv = layer_order_sum_convolution(m, k, &ft)?;
            out.push(Check::compare(
                "layer order sum: recursion vs convolution",
                &at,
                st.layer_sum(k)?,
                &conv,
            ));
            out.push(Check::compare(
                "convolution reindexing",
                &at,
                &conv,
                &layer_order_sum_convolution_reversed(m, k, &ft)?,
            ));
            for i in 1..=m {
                out.push(Check::truth(
                    "footprint convolution identity",
                    format!("m={m} i={i} k={k}"),
                    crate::order::convolution_identity_check(m, i, k, &ft)?,
                ));
            }
        }
    }
    Ok(out)
}

/// Averages on one-layer products and on paths, where closed forms are elementary.
pub fn analytic_suite(m_max: usize, n_max: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for m in 1..=m_max {
        let r = crate::aggregate::product_result(m, 1)?;
        let expect = BigRational::new(BigInt::from(m) << (m - 1), (BigInt::from(1) << m) - 1);
        out.push(Check::compare(
            "single layer average m*2^(m-1)/(2^m-1)",
            cell(m, 1),
            &expect,
            &r.average,
        ));
    }
    for r in product_sweep(1, n_max)? {
        let expect = BigRational::new(BigInt::from(r.n + 2), BigInt::from(3));
        out.push(Check::compare(
            "path average (n+2)/3",
            cell(1, r.n),
            &expect,
            &r.average,
        ));
    }
    Ok(out)
}

/// Census of an arbitrary graph, recounted with the union-find connectivity test.
pub fn graph_suite(g: &SimpleGraph, cap: OracleCap) -> Result<(CensusReport, Vec<Check>)> {
    let flood = census(g, cap)?;
    let uf = census_union_find(g, cap)?;
    let at = format!("v={}", g.vertices());
    let checks = vec![
        Check::truth("flood fill vs union-find census", &at, flood == uf),
        Check::truth(
            "census sizes are nonnegative and bounded",
            &at,
            flood.count >= BigInt::from(g.vertices()),
        ),
    ];
    Ok((flood, checks))
}

/// Grid of cells compared against the oracle by the default suite.
pub const ORACLE_CELLS: &[(usize, usize)] = &[
    (1, 1),
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (1, 6),
    (1, 7),
    (1, 8),
    (1, 9),
    (1, 10),
    (2, 1),
    (2, 2),
    (2, 3),
    (2, 4),
    (2, 5),
    (2, 6),
    (2, 7),
    (2, 8),
    (3, 1),
    (3, 2),
    (3, 3),
    (3, 4),
    (3, 5),
    (4, 1),
    (4, 2),
    (4, 3),
    (4, 4),
    (5, 1),
    (5, 2),
    (5, 3),
];

/// Everything, at desk scale.
pub fn full_suite(cap: OracleCap) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for &(m, n) in ORACLE_CELLS {
        out.extend(oracle_cell(m, n, cap)?);
    }
    for m in 1..=4 {
        out.extend(oracle_layers(m, 4.min(16 / m), cap)?);
    }
    out.extend(oracle_run_decomposition(2, 6, cap)?);
    out.extend(oracle_run_decomposition(3, 4, cap)?);
    out.extend(ladder_suite(200));
    out.extend(charpoly_suite(10));
    out.extend(recurrence_suite(2..=6, 200)?);
    out.extend(symmetry_suite(2..=6, 12)?);
    out.extend(order_paths_suite(2..=5, 10)?);
    out.extend(analytic_suite(10, 50)?);
    for m in 1..=5 {
        for n in 1..=12 {
            let rec = crate::aggregate::product_result(m, n)?;
            let conv = product_result_with(m, n, OrderPath::Convolution)?;
            out.push(Check::compare(
                "average: recursion vs explicit double sum",
                cell(m, n),
                &rec.average,
                &conv.average,
            ));
        }
    }
    Ok(out)
}
