mod record;

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use consets_core::exactmath::BigInt;
use consets_core::oracle::{OracleCap, SimpleGraph};
use consets_core::pell::{ladder_average, ladder_count};
use consets_core::recurrence::{build_recurrence, coefficient_report};
use consets_core::verify::{self, Check};
use consets_core::{exactmath, layer, product_result, product_sweep, Error, ProductResult};
use serde::Serialize;

use record::{write_records, Format, OutputRecord};

#[derive(Debug, Parser)]
#[command(
    name = "consets",
    version,
    about = "Connected vertex sets of K_m x P_n, counted exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Significant digits in decimal renderings.
    #[arg(long, global = true, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..=1000))]
    precision: u32,

    /// Largest vertex count the brute-force oracle will enumerate.
    #[arg(long, global = true, env = "CONSETS_ORACLE_CAP", default_value_t = OracleCap::DEFAULT as u32,
          value_parser = clap::value_parser!(u32).range(1..=OracleCap::MAX as i64))]
    oracle_cap: u32,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// N, S, A and D for a single K_m x P_n.
    Compute {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// One record per n = 1..=n-max.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
    },
    /// Cross-check formulas against each other and against brute force.
    ///
    /// With no selection flags the whole desk-scale suite runs.
    Verify {
        #[arg(long, requires = "n", value_parser = clap::value_parser!(u64).range(1..))]
        m: Option<u64>,
        #[arg(long, requires = "m", value_parser = clap::value_parser!(u64).range(1..))]
        n: Option<u64>,
        /// Ladder closed forms and summation identities.
        #[arg(long)]
        ladder: bool,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: Option<u64>,
        /// Characteristic polynomial coefficient identities.
        #[arg(long)]
        charpoly: bool,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        m_max: Option<u64>,
        /// Census of an arbitrary graph given as an edge list ("u v" per line, 0-based).
        #[arg(long)]
        graph: Option<std::path::PathBuf>,
    },
    /// Characteristic polynomial of the layer recurrence matrix.
    Charpoly {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
    },
    /// Closed forms for the ladder K_2 x P_n.
    Ladder {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..), conflicts_with = "n_max")]
        n: Option<u64>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: Option<u64>,
    },
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Validation { .. } => Failure::Mismatch(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let out = &cli.output;
    let precision = out.precision as usize;
    let cap = OracleCap::new(out.oracle_cap as usize)?;
    let stdout = io::stdout().lock();
    match cli.command {
        Command::Compute { m, n } => {
            let r = product_result(m as usize, n as usize)?;
            write_records(stdout, &[OutputRecord::new(&r, precision)], out.format)?;
        }
        Command::Table { m, n_max } => {
            let rows: Vec<_> = product_sweep(m as usize, n_max as usize)?
                .iter()
                .map(|r| OutputRecord::new(r, precision))
                .collect();
            write_records(stdout, &rows, out.format)?;
        }
        Command::Ladder { n, n_max } => {
            let range = match (n, n_max) {
                (Some(n), None) => n..=n,
                (None, Some(n_max)) => 1..=n_max,
                _ => return Err(Failure::Usage("ladder needs --n or --n-max".into())),
            };
            let rows = range
                .map(|n| ladder_record(n as usize).map(|r| OutputRecord::new(&r, precision)))
                .collect::<Result<Vec<_>, _>>()?;
            write_records(stdout, &rows, out.format)?;
        }
        Command::Charpoly { m } => charpoly(stdout, m as usize, out.format)?,
        Command::Verify {
            m,
            n,
            ladder,
            n_max,
            charpoly,
            m_max,
            graph,
        } => {
            let mut checks = Vec::new();
            let mut selected = false;
            if let (Some(m), Some(n)) = (m, n) {
                selected = true;
                checks.extend(verify::oracle_cell(m as usize, n as usize, cap)?);
                checks.extend(verify::oracle_run_decomposition(
                    m as usize, n as usize, cap,
                )?);
            }
            if ladder {
                selected = true;
                checks.extend(verify::ladder_suite(n_max.unwrap_or(50) as usize));
            }
            if charpoly {
                selected = true;
                checks.extend(verify::charpoly_suite(m_max.unwrap_or(10) as usize));
            }
            let mut stdout = stdout;
            if let Some(path) = graph {
                selected = true;
                let text = fs::read_to_string(&path)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                let g = SimpleGraph::from_edge_list(&text)?;
                let (census, graph_checks) = verify::graph_suite(&g, cap)?;
                if out.format != Format::Json {
                    let sizes: Vec<String> =
                        census.by_size.iter().map(ToString::to_string).collect();
                    writeln!(
                        stdout,
                        "graph: {} vertices, {} edges",
                        g.vertices(),
                        g.edge_count()
                    )?;
                    writeln!(stdout, "connected sets by size: {}", sizes.join(" "))?;
                    writeln!(
                        stdout,
                        "N={} S={} A={} ({})",
                        census.count,
                        census.total_order,
                        census.average,
                        exactmath::to_decimal(&census.average, precision)
                    )?;
                }
                checks.extend(graph_checks);
            }
            if !selected {
                checks = verify::full_suite(cap)?;
            }
            report(stdout, &checks, out.format)?;
            if let Some(bad) = verify::first_failure(&checks) {
                return Err(Failure::Mismatch(format!(
                    "{} at {}: expected {}, got {}",
                    bad.name, bad.cell, bad.expected, bad.actual
                )));
            }
        }
    }
    Ok(())
}

fn ladder_record(n: usize) -> Result<ProductResult, Error> {
    let count = ladder_count(n)?;
    let average = ladder_average(n)?;
    let total = &average * &count;
    if !total.is_integer() {
        return Err(Error::Invariant(format!(
            "ladder total order at n={n} is not integral"
        )));
    }
    let r = ProductResult::from_parts(2, n, count, total.to_integer())?;
    debug_assert_eq!(r.average, average);
    Ok(r)
}

#[derive(Serialize)]
struct CharpolyJson {
    m: usize,
    polynomial: String,
    /// Lowest power first.
    coefficients: Vec<String>,
    trace_identity_holds: Option<bool>,
    constant_identity_holds: Option<bool>,
    recurrence: Vec<String>,
}

fn charpoly<W: Write>(mut out: W, m: usize, format: Format) -> Result<(), Failure> {
    let rec = layer::build_recurrence_matrix(m)?;
    let poly = exactmath::char_poly(rec.matrix())?;
    let report = if m >= 2 {
        Some(coefficient_report(m)?)
    } else {
        None
    };
    let recurrence = build_recurrence(m)?;
    match format {
        Format::Json => {
            let doc = CharpolyJson {
                m,
                polynomial: poly.to_string(),
                coefficients: poly
                    .coefficients()
                    .iter()
                    .map(ToString::to_string)
                    .collect(),
                trace_identity_holds: report.as_ref().map(|r| r.trace_identity_holds()),
                constant_identity_holds: report.as_ref().map(|r| r.constant_identity_holds()),
                recurrence: recurrence
                    .coefficients()
                    .iter()
                    .map(ToString::to_string)
                    .collect(),
            };
            serde_json::to_writer_pretty(&mut out, &doc).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        Format::Csv => {
            return Err(Failure::Usage(
                "charpoly supports --format plain or json".into(),
            ))
        }
        Format::Plain => {
            writeln!(out, "{poly}")?;
            if let Some(r) = &report {
                let verdict = |ok: bool| if ok { "holds" } else { "does not hold" };
                writeln!(
                    out,
                    "c({m},{m}) = {}; F({}) - 2^{m} = {}: {}",
                    r.trace_coefficient,
                    m + 1,
                    r.expected_trace_coefficient,
                    verdict(r.trace_identity_holds())
                )?;
                writeln!(
                    out,
                    "c({m},1) = {}; predicted {}: {}",
                    r.constant_coefficient,
                    r.expected_constant_coefficient,
                    verdict(r.constant_identity_holds())
                )?;
            }
            writeln!(
                out,
                "f({m},k) = {}",
                recurrence_text(m, recurrence.coefficients())
            )?;
        }
    }
    Ok(())
}

fn recurrence_text(m: usize, coeffs: &[BigInt]) -> String {
    let mut s = String::new();
    for (j, c) in coeffs.iter().enumerate() {
        if c == &BigInt::from(0) {
            continue;
        }
        let term = format!("f({m},k-{})", j + 1);
        let mag = if c < &BigInt::from(0) { -c } else { c.clone() };
        let body = if mag == BigInt::from(1) {
            term
        } else {
            format!("{mag}*{term}")
        };
        if s.is_empty() {
            if c < &BigInt::from(0) {
                s.push('-');
            }
        } else {
            s.push_str(if c < &BigInt::from(0) { " - " } else { " + " });
        }
        s.push_str(&body);
    }
    s
}

#[derive(Serialize)]
struct GroupJson<'a> {
    name: &'a str,
    checks: usize,
    failed: usize,
    first_cell: &'a str,
    last_cell: &'a str,
}

#[derive(Serialize)]
struct CheckJson<'a> {
    name: &'a str,
    cell: &'a str,
    expected: &'a str,
    actual: &'a str,
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    passed: bool,
    groups: Vec<GroupJson<'a>>,
    first_failure: Option<CheckJson<'a>>,
}

fn report<W: Write>(mut out: W, checks: &[Check], format: Format) -> io::Result<()> {
    let mut groups: Vec<GroupJson> = Vec::new();
    for c in checks {
        match groups.iter_mut().find(|g| g.name == c.name) {
            Some(g) => {
                g.checks += 1;
                g.failed += usize::from(!c.passed);
                g.last_cell = &c.cell;
            }
            None => groups.push(GroupJson {
                name: &c.name,
                checks: 1,
                failed: usize::from(!c.passed),
                first_cell: &c.cell,
                last_cell: &c.cell,
            }),
        }
    }
    let failure = verify::first_failure(checks);
    if format == Format::Json {
        let doc = VerifyJson {
            passed: failure.is_none(),
            groups,
            first_failure: failure.map(|c| CheckJson {
                name: &c.name,
                cell: &c.cell,
                expected: &c.expected,
                actual: &c.actual,
            }),
        };
        serde_json::to_writer_pretty(&mut out, &doc)?;
        return writeln!(out);
    }
    for g in &groups {
        let status = if g.failed == 0 { "PASS" } else { "FAIL" };
        let span = if g.first_cell == g.last_cell {
            g.first_cell.to_string()
        } else {
            format!("{} .. {}", g.first_cell, g.last_cell)
        };
        writeln!(
            out,
            "{status} {} [{} checks, {} failed; {span}]",
            g.name, g.checks, g.failed
        )?;
    }
    for c in checks.iter().filter(|c| !c.passed) {
        writeln!(
            out,
            "  mismatch: {} at {}: expected {}, got {}",
            c.name, c.cell, c.expected, c.actual
        )?;
    }
    match failure {
        None => writeln!(out, "all {} checks passed", checks.len()),
        Some(_) => writeln!(
            out,
            "{} of {} checks failed",
            checks.iter().filter(|c| !c.passed).count(),
            checks.len()
        ),
    }
}
