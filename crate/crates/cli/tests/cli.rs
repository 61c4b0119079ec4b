use std::process::{Command, Output};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;

fn consets(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_consets"))
        .args(args)
        .env_remove("CONSETS_ORACLE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Vec<Value> {
    let out = consets(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn rational(s: &str) -> BigRational {
    match s.split_once('/') {
        Some((n, d)) => BigRational::new(n.parse().unwrap(), d.parse().unwrap()),
        None => BigRational::from_integer(s.parse().unwrap()),
    }
}

#[test]
fn compute_cells() {
    let r = &json(&["compute", "--m", "3", "--n", "2", "--format", "json"])[0];
    assert_eq!(r["N"], "51");
    assert_eq!(r["A_exact"], "54/17");
    let r = &json(&["compute", "--m", "1", "--n", "4", "--format", "json"])[0];
    assert_eq!(r["N"], "10");
    assert_eq!(r["A_exact"], "2");
    let r = &json(&["compute", "--m", "2", "--n", "1", "--format", "json"])[0];
    assert_eq!(r["N"], "3");
    assert_eq!(r["A_exact"], "4/3");
    assert_eq!(r["D_decimal"], "0.666666666667");
}

#[test]
fn json_round_trips_average() {
    for r in json(&["table", "--m", "4", "--n-max", "6", "--format", "json"]) {
        let n: BigInt = r["N"].as_str().unwrap().parse().unwrap();
        let s: BigInt = r["S"].as_str().unwrap().parse().unwrap();
        assert_eq!(
            BigRational::new(s.clone(), n.clone()),
            rational(r["A_exact"].as_str().unwrap())
        );
        let cells = r["m"].as_u64().unwrap() * r["n"].as_u64().unwrap();
        assert_eq!(
            BigRational::new(s, n * BigInt::from(cells)),
            rational(r["D_exact"].as_str().unwrap())
        );
    }
}

#[test]
fn csv_matches_golden_file() {
    let out = consets(&["table", "--m", "2", "--n-max", "3", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), include_str!("golden/table_m2_n3.csv"));
}

#[test]
fn csv_header_is_shared_by_record_commands() {
    let header = "m,n,N,S,A_num,A_den,A_dec,D_num,D_den,D_dec";
    for args in [
        &["compute", "--m", "3", "--n", "2", "--format", "csv"][..],
        &["table", "--m", "1", "--n-max", "2", "--format", "csv"],
        &["ladder", "--n-max", "4", "--format", "csv"],
    ] {
        let text = stdout(&consets(args));
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some(header), "{args:?}");
        for line in lines {
            assert_eq!(line.split(',').count(), 10, "{args:?}: {line}");
        }
    }
}

#[test]
fn table_of_paths() {
    let rows = json(&["table", "--m", "1", "--n-max", "2", "--format", "json"]);
    let counts: Vec<&str> = rows.iter().map(|r| r["N"].as_str().unwrap()).collect();
    assert_eq!(counts, ["1", "3"]);
}

#[test]
fn ladder_matches_table() {
    let ladder = json(&["ladder", "--n-max", "12", "--format", "json"]);
    let table = json(&["table", "--m", "2", "--n-max", "12", "--format", "json"]);
    assert_eq!(ladder, table);
    let single = json(&["ladder", "--n", "3", "--format", "json"]);
    assert_eq!(single[0]["N"], "40");
}

#[test]
fn precision_flag() {
    let r = &json(&[
        "compute",
        "--m",
        "3",
        "--n",
        "2",
        "--format",
        "json",
        "--precision",
        "4",
    ])[0];
    assert_eq!(r["A_decimal"], "3.176");
    assert_eq!(r["D_decimal"], "0.5294");
}

#[test]
fn charpoly_output() {
    assert!(stdout(&consets(&["charpoly", "--m", "2"])).starts_with("λ^2 - 2λ - 1\n"));
    assert!(stdout(&consets(&["charpoly", "--m", "1"])).starts_with("λ - 1\n"));
    assert!(stdout(&consets(&["charpoly", "--m", "3"])).starts_with("λ^3 - 5λ^2 - 3λ + 1\n"));
    let out = consets(&["charpoly", "--m", "3", "--format", "json"]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        doc["coefficients"],
        serde_json::json!(["1", "-3", "-5", "1"])
    );
    assert_eq!(doc["recurrence"], serde_json::json!(["5", "3", "-1"]));
    assert_eq!(doc["constant_identity_holds"], true);
}

#[test]
fn verify_exit_codes() {
    assert_eq!(
        consets(&["verify", "--m", "3", "--n", "2"]).status.code(),
        Some(0)
    );
    assert_eq!(
        consets(&["verify", "--ladder", "--n-max", "50"])
            .status
            .code(),
        Some(0)
    );
    // c(m,1) = 1 fails from m = 5 on
    assert_eq!(
        consets(&["verify", "--charpoly", "--m-max", "4"])
            .status
            .code(),
        Some(0)
    );
    let out = consets(&["verify", "--charpoly", "--m-max", "8"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("m=5") && err.contains("expected 1, got -1"),
        "{err}"
    );
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        consets(&["compute", "--m", "0", "--n", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(consets(&["compute", "--m", "2"]).status.code(), Some(2));
    assert_eq!(consets(&["bogus"]).status.code(), Some(2));
    assert_eq!(consets(&["ladder"]).status.code(), Some(2));
    assert_eq!(
        consets(&["charpoly", "--m", "2", "--format", "csv"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        consets(&["verify", "--oracle-cap", "27"]).status.code(),
        Some(2)
    );
    assert_eq!(
        consets(&["verify", "--graph", "/nonexistent/graph.txt"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn oracle_cap_from_environment() {
    let refused = Command::new(env!("CARGO_BIN_EXE_consets"))
        .args(["verify", "--m", "3", "--n", "4"])
        .env("CONSETS_ORACLE_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(refused.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&refused.stderr).contains("cap of 10"));
    let flag_wins = Command::new(env!("CARGO_BIN_EXE_consets"))
        .args(["verify", "--m", "3", "--n", "4", "--oracle-cap", "12"])
        .env("CONSETS_ORACLE_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(flag_wins.status.code(), Some(0));
}

#[test]
fn verify_graph_file() {
    let path = std::env::temp_dir().join(format!("consets-c4-{}.txt", std::process::id()));
    std::fs::write(&path, "0 1\n1 2\n2 3\n3 0\n").unwrap();
    let out = consets(&["verify", "--graph", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("connected sets by size: 4 4 4 1"), "{text}");
    assert!(text.contains("N=13 S=28 A=28/13"), "{text}");
}
