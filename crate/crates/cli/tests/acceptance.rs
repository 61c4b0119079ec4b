//! Acceptance criteria, one PASS/FAIL line each. Every comparison is exact.

use std::process::Command;
use std::time::{Duration, Instant};

use consets_core::exactmath::{binomial_row, BigInt, BigRational};
use consets_core::layer::{check_weighted_symmetry, weighted_profile_sum};
use consets_core::oracle::{build_km_pn, census, OracleCap};
use consets_core::order::{
    layer_order_sum_convolution, layer_order_sum_convolution_reversed, s_table_direct,
};
use consets_core::pell::{ladder_average, ladder_count, ladder_sum_identities, vince_average};
use consets_core::recurrence::{build_recurrence, coefficient_report, fibonacci, stream_f};
use consets_core::{
    average_order, count_connected_sets, f_table, product_result, product_sweep, s_table_recursive,
    STable,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn oracle_equivalence() -> Outcome {
    let cells: Vec<(usize, usize)> = [(1, 10), (2, 8), (3, 5), (4, 4), (5, 3)]
        .iter()
        .flat_map(|&(m, n_max)| (1..=n_max).map(move |n| (m, n)))
        .collect();
    let cap = OracleCap::new(OracleCap::DEFAULT).map_err(|e| e.to_string())?;
    for &(m, n) in &cells {
        let formula = product_result(m, n).map_err(|e| e.to_string())?;
        let g = build_km_pn(m, n).map_err(|e| e.to_string())?;
        let oracle = census(g.graph(), cap).map_err(|e| e.to_string())?;
        let cells_q = BigRational::from_integer(BigInt::from(m * n));
        let same = formula.count == oracle.count
            && formula.total_order == oracle.total_order
            && formula.average == oracle.average
            && formula.density == &oracle.average / &cells_q;
        ensure(same, || {
            format!(
                "m={m} n={n}: formula N={} S={} vs census N={} S={}",
                formula.count, formula.total_order, oracle.count, oracle.total_order
            )
        })?;
    }
    Ok(format!("{} cells, N/S/A/D equal", cells.len()))
}

fn ladder_closed_forms() -> Outcome {
    let sweep = product_sweep(2, 200).map_err(|e| e.to_string())?;
    for (idx, r) in sweep.iter().enumerate() {
        let n = idx + 1;
        let count = ladder_count(n).map_err(|e| e.to_string())?;
        let avg = ladder_average(n).map_err(|e| e.to_string())?;
        let vince = vince_average(n).map_err(|e| e.to_string())?;
        ensure(count == r.count, || {
            format!("n={n}: count {count} vs {}", r.count)
        })?;
        ensure(avg == r.average, || {
            format!("n={n}: average {avg} vs {}", r.average)
        })?;
        ensure(vince == r.average, || {
            format!("n={n}: Vince {vince} vs {}", r.average)
        })?;
    }
    let anchors_n: Vec<BigInt> = (1..=3).map(|n| ladder_count(n).unwrap()).collect();
    ensure(anchors_n == [3, 13, 40].map(BigInt::from), || {
        format!("anchors N {anchors_n:?}")
    })?;
    let a1 = ladder_average(1).map_err(|e| e.to_string())?;
    let a2 = ladder_average(2).map_err(|e| e.to_string())?;
    ensure(a1 == ratio(4, 3) && a2 == ratio(28, 13), || {
        format!("anchors A {a1}, {a2}")
    })?;
    ensure(
        count_connected_sets(2, 3).unwrap() == BigInt::from(40),
        || "N(2,3)".into(),
    )?;
    ensure(average_order(2, 2).unwrap() == ratio(28, 13), || {
        "A(2,2)".into()
    })?;
    Ok("n = 1..200 and anchors agree".into())
}

fn charpoly_identities() -> Outcome {
    let mut failures = Vec::new();
    for m in 3..=10 {
        let r = coefficient_report(m).map_err(|e| e.to_string())?;
        let expected_trace = fibonacci(m + 1) - (BigInt::from(1) << m);
        if r.trace_coefficient != expected_trace {
            failures.push(format!(
                "m={m}: c(m,m) = {} != {expected_trace}",
                r.trace_coefficient
            ));
        }
        if r.constant_coefficient != BigInt::from(1) {
            failures.push(format!("m={m}: c(m,1) = {} != 1", r.constant_coefficient));
        }
    }
    let r2 = coefficient_report(2).map_err(|e| e.to_string())?;
    if (
        r2.trace_coefficient.clone(),
        r2.constant_coefficient.clone(),
    ) != (BigInt::from(-2), BigInt::from(-1))
    {
        failures.push(format!(
            "m=2: ({}, {}) != (-2, -1)",
            r2.trace_coefficient, r2.constant_coefficient
        ));
    }
    if failures.is_empty() {
        Ok("m = 2..10 coefficients match".into())
    } else {
        Err(failures.join("; "))
    }
}

fn recurrence_agreement() -> Outcome {
    for m in 2..=6 {
        let ft = f_table(m, 200).map_err(|e| e.to_string())?;
        let rec = build_recurrence(m).map_err(|e| e.to_string())?;
        let streamed = stream_f(&rec, 200);
        ensure(streamed.as_slice() == ft.totals(), || {
            let k = streamed
                .iter()
                .zip(ft.totals())
                .position(|(a, b)| a != b)
                .unwrap_or(0)
                + 1;
            format!("m={m}: first disagreement at k={k}")
        })?;
    }
    Ok("m = 2..6, k = 1..200".into())
}

fn weighted_symmetry() -> Outcome {
    for m in 2..=6 {
        let ft = f_table(m, 12).map_err(|e| e.to_string())?;
        let binom = binomial_row(m);
        for k in 1..=12 {
            let sym = check_weighted_symmetry(m, k).map_err(|e| e.to_string())?;
            ensure(sym, || format!("m={m} k={k}: C_m A_m^k not symmetric"))?;
            for (i, b) in binom.iter().enumerate().skip(1) {
                let lhs = weighted_profile_sum(m, i, k).map_err(|e| e.to_string())?;
                let rhs = b * ft.f_i(i, k).map_err(|e| e.to_string())?;
                ensure(lhs == rhs, || format!("m={m} k={k} i={i}: {lhs} != {rhs}"))?;
            }
        }
    }
    Ok("m = 2..6, k = 1..12, all i".into())
}

fn order_paths() -> Outcome {
    for m in 2..=5 {
        let ft = f_table(m, 10).map_err(|e| e.to_string())?;
        let recursive: STable = s_table_recursive(m, 10).map_err(|e| e.to_string())?;
        let binom = binomial_row(m);
        for k in 1..=10 {
            let direct = s_table_direct(m, k).map_err(|e| e.to_string())?;
            let rec_col = recursive.column(k).map_err(|e| e.to_string())?;
            ensure(direct.as_slice() == rec_col, || {
                format!("m={m} k={k}: s_i direct vs recursive")
            })?;
            let direct_sum: BigInt = (1..=m).map(|i| &binom[i] * &direct[i - 1]).sum();
            let rec_sum = recursive.layer_sum(k).map_err(|e| e.to_string())?;
            let conv = layer_order_sum_convolution(m, k, &ft).map_err(|e| e.to_string())?;
            let conv_rev =
                layer_order_sum_convolution_reversed(m, k, &ft).map_err(|e| e.to_string())?;
            ensure(
                &direct_sum == rec_sum && rec_sum == &conv && conv == conv_rev,
                || {
                    format!(
                        "m={m} k={k}: direct {direct_sum}, recursive {rec_sum}, convolution {conv}"
                    )
                },
            )?;
        }
    }
    Ok("m = 2..5, k = 1..10".into())
}

fn analytic_anchors() -> Outcome {
    for m in 1..=10usize {
        let expected = BigRational::new(BigInt::from(m) << (m - 1), (BigInt::from(1) << m) - 1);
        let got = average_order(m, 1).map_err(|e| e.to_string())?;
        ensure(got == expected, || {
            format!("m={m} n=1: {got} != {expected}")
        })?;
    }
    for n in 1..=50i64 {
        let got = average_order(1, n as usize).map_err(|e| e.to_string())?;
        ensure(got == ratio(n + 2, 3), || format!("m=1 n={n}: {got}"))?;
    }
    Ok("complete graphs m = 1..10, paths n = 1..50".into())
}

fn summation_identities() -> Outcome {
    let mut checked = 0;
    for n in 1..=100 {
        for id in ladder_sum_identities(n).map_err(|e| e.to_string())? {
            ensure(id.direct == id.closed, || {
                format!(
                    "n={n} {}: direct {} vs closed {}",
                    id.name, id.direct, id.closed
                )
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} identity instances, n = 1..100"))
}

fn performance_floor() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_consets"))
        .args(["compute", "--m", "6", "--n", "1000", "--format", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        String::from_utf8_lossy(&out.stderr).into_owned()
    })?;
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let expected = product_result(6, 1000).map_err(|e| e.to_string())?;
    let n = doc[0]["N"].as_str().unwrap_or_default();
    let s = doc[0]["S"].as_str().unwrap_or_default();
    ensure(
        n == expected.count.to_string() && s == expected.total_order.to_string(),
        || "binary output differs from library".into(),
    )?;
    Ok(format!("N has {} digits", n.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (
            "oracle equivalence",
            oracle_equivalence,
            Duration::from_secs(60),
        ),
        (
            "ladder closed forms",
            ladder_closed_forms,
            Duration::from_secs(5),
        ),
        (
            "characteristic polynomial coefficients",
            charpoly_identities,
            Duration::from_secs(1),
        ),
        (
            "recurrence vs matrix path",
            recurrence_agreement,
            Duration::from_secs(5),
        ),
        (
            "weighted symmetry",
            weighted_symmetry,
            Duration::from_secs(5),
        ),
        (
            "order-sum three paths",
            order_paths,
            Duration::from_secs(10),
        ),
        ("analytic anchors", analytic_anchors, Duration::from_secs(1)),
        (
            "ladder summation identities",
            summation_identities,
            Duration::from_secs(2),
        ),
        (
            "compute --m 6 --n 1000",
            performance_floor,
            Duration::from_secs(10),
        ),
    ];
    let mut failed = 0;
    for (idx, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > *budget => Err(format!("{detail}; over budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {} {name} ({elapsed:.2?}): {detail}", idx + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name} ({elapsed:.2?}): {detail}", idx + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
