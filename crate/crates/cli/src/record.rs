use std::io::{self, Write};

use consets_core::exactmath::{to_decimal, BigRational};
use consets_core::ProductResult;
use serde::{Deserialize, Serialize};

pub const CSV_HEADER: [&str; 10] = [
    "m", "n", "N", "S", "A_num", "A_den", "A_dec", "D_num", "D_den", "D_dec",
];

/// One row of output. Big integers travel as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub m: usize,
    pub n: usize,
    #[serde(rename = "N")]
    pub count: String,
    #[serde(rename = "S")]
    pub total_order: String,
    #[serde(rename = "A_exact")]
    pub average_exact: String,
    #[serde(rename = "A_decimal")]
    pub average_decimal: String,
    #[serde(rename = "D_exact")]
    pub density_exact: String,
    #[serde(rename = "D_decimal")]
    pub density_decimal: String,
    #[serde(skip)]
    average: BigRational,
    #[serde(skip)]
    density: BigRational,
}

impl OutputRecord {
    pub fn new(r: &ProductResult, precision: usize) -> Self {
        OutputRecord {
            m: r.m,
            n: r.n,
            count: r.count.to_string(),
            total_order: r.total_order.to_string(),
            average_exact: r.average.to_string(),
            average_decimal: to_decimal(&r.average, precision),
            density_exact: r.density.to_string(),
            density_decimal: to_decimal(&r.density, precision),
            average: r.average.clone(),
            density: r.density.clone(),
        }
    }

    fn csv_row(&self) -> [String; 10] {
        let parts = |q: &BigRational| (q.numer().to_string(), q.denom().to_string());
        let (a_num, a_den) = parts(&self.average);
        let (d_num, d_den) = parts(&self.density);
        [
            self.m.to_string(),
            self.n.to_string(),
            self.count.clone(),
            self.total_order.clone(),
            a_num,
            a_den,
            self.average_decimal.clone(),
            d_num,
            d_den,
            self.density_decimal.clone(),
        ]
    }

    fn plain(&self) -> String {
        format!(
            "m={} n={} N={} S={} A={} ({}) D={} ({})",
            self.m,
            self.n,
            self.count,
            self.total_order,
            self.average_exact,
            self.average_decimal,
            self.density_exact,
            self.density_decimal,
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

pub fn write_records<W: Write>(out: W, records: &[OutputRecord], format: Format) -> io::Result<()> {
    match format {
        Format::Plain => {
            let mut out = out;
            for r in records {
                writeln!(out, "{}", r.plain())?;
            }
            Ok(())
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(CSV_HEADER)?;
            for r in records {
                w.write_record(r.csv_row())?;
            }
            w.flush()
        }
        Format::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, records)?;
            writeln!(out)
        }
    }
}
