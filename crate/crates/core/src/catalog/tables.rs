//! Square tables of the triangle families, formatted for golden files.

use std::fmt::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::families::{even_central, triangle, CentralKind, Triangle};
use crate::rational::Rational;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Tsv,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "tsv" => Ok(Format::Tsv),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableFamily {
    Triangle(Triangle),
    /// `t(2i,2j)` or `T(2i,2j)`
    EvenCentral(CentralKind),
}

impl TableFamily {
    pub fn name(&self) -> String {
        match self {
            TableFamily::Triangle(t) => match t {
                Triangle::S1 => "stirling1".into(),
                Triangle::S2 => "stirling2".into(),
                Triangle::CUnsigned => "stirling1-unsigned".into(),
                Triangle::Lah => "lah".into(),
                Triangle::LahUnsigned => "lah-unsigned".into(),
                Triangle::CfSmall => "central-t".into(),
                Triangle::CfBig => "central-bigt".into(),
                Triangle::LambdaS2(l) => format!("lambda-stirling2({l})"),
            },
            TableFamily::EvenCentral(CentralKind::Small) => "even-central-t".into(),
            TableFamily::EvenCentral(CentralKind::Big) => "even-central-bigt".into(),
        }
    }

    /// Parses a family name; `lambda-stirling2` needs `param`.
    pub fn parse(s: &str, param: Option<&Rational>) -> Result<Self, Error> {
        let key = s.to_ascii_lowercase().replace(['-', '_'], "");
        Ok(match key.as_str() {
            "evencentralt" | "event" => TableFamily::EvenCentral(CentralKind::Small),
            "evencentralbigt" | "evenbigt" => TableFamily::EvenCentral(CentralKind::Big),
            "lambdastirling2" | "lambdas2" => match param {
                Some(l) => TableFamily::Triangle(Triangle::LambdaS2(l.clone())),
                None => return Err(Error::Parse("lambda-stirling2 needs --param".into())),
            },
            _ => TableFamily::Triangle(Triangle::from_str(s)?),
        })
    }

    fn cell(&self, i: usize, j: usize) -> Rational {
        if j > i {
            return Rational::zero();
        }
        match self {
            TableFamily::Triangle(t) => triangle(t, i, j),
            TableFamily::EvenCentral(k) => even_central(*k, i, j),
        }
    }

    /// Rows `0..=max`, each padded with zeros to `max + 1` columns.
    pub fn rows(&self, max: usize) -> Vec<Vec<Rational>> {
        (0..=max).map(|i| (0..=max).map(|j| self.cell(i, j)).collect()).collect()
    }
}

#[derive(Serialize)]
struct JsonTable {
    family: String,
    rows: Vec<Vec<String>>,
}

/// TSV gives a `# name` line followed by tab-separated rows; JSON gives a
/// list of `{family, rows}` with entries as rational strings.
pub fn emit_tables(which: &[TableFamily], max: usize, format: Format) -> String {
    match format {
        Format::Tsv => {
            let mut s = String::new();
            for f in which {
                writeln!(s, "# {}", f.name()).unwrap();
                for row in f.rows(max) {
                    let cells: Vec<String> = row.iter().map(Rational::to_string).collect();
                    writeln!(s, "{}", cells.join("\t")).unwrap();
                }
            }
            s
        }
        Format::Json => {
            let v: Vec<JsonTable> = which
                .iter()
                .map(|f| JsonTable {
                    family: f.name(),
                    rows: f.rows(max).iter().map(|r| r.iter().map(Rational::to_string).collect()).collect(),
                })
                .collect();
            serde_json::to_string_pretty(&v).expect("tables serialize") + "\n"
        }
    }
}
