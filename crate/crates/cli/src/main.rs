use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use padic_core::catalog::{self, emit_tables, render_errata, render_json, render_tsv, Format, Status, TableFamily};
use padic_core::families::{generating_function, sequence, Sequence};
use padic_core::integrate::{finite_sum, integral};
use padic_core::series::{StdSeries, TruncatedSeries};
use padic_core::{ord_p, Basis, Error, Functional, Polynomial, Prime, Rational};

#[derive(Parser)]
#[command(name = "padic", version, about = "Exact p-adic integrals of polynomials and the numbers they produce")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Tsv,
    Json,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Tsv => Format::Tsv,
            OutFormat::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Monomial,
    Falling,
    Rising,
    Binomial,
    Central,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::Monomial => Basis::Monomial,
            BasisArg::Falling => Basis::Falling,
            BasisArg::Rising => Basis::Rising,
            BasisArg::Binomial => Basis::Mahler,
            BasisArg::Central => Basis::Central,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Coefficients of a power series: exp, log1p, t-over-log1p, or the
    /// generating function of a sequence family.
    Series {
        kind: String,
        #[arg(long, default_value_t = 16)]
        order: usize,
    },
    /// A triangle family as a square table.
    Table {
        family: String,
        #[arg(long)]
        max: usize,
        #[arg(long)]
        param: Option<Rational>,
        #[arg(long, value_enum, default_value_t = OutFormat::Tsv)]
        format: OutFormat,
    },
    /// Values of a sequence family.
    Seq {
        family: String,
        #[arg(long)]
        max: usize,
    },
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Exact integral of a polynomial.
    Integrate {
        #[arg(long)]
        measure: Functional,
        #[arg(long)]
        poly: Polynomial,
        /// `p,N`: also print the level-N finite sum and the valuation of
        /// its distance to the exact value
        #[arg(long)]
        approx: Option<String>,
    },
    /// Run the identity catalog.
    Verify {
        #[arg(long = "id")]
        ids: Vec<String>,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = OutFormat::Tsv)]
        format: OutFormat,
        /// print the errata report after the results
        #[arg(long)]
        errata: bool,
    },
}

#[derive(Subcommand)]
enum PolyCmd {
    /// Parse and print in canonical form.
    Parse {
        expr: Polynomial,
        /// rewrite in this basis first
        #[arg(long, value_enum)]
        basis: Option<BasisArg>,
    },
}

fn series(kind: &str, order: usize) -> Result<String, Error> {
    let s = match kind.parse::<StdSeries>() {
        Ok(k) => TruncatedSeries::standard(k, order),
        Err(_) => {
            let fam: Sequence = kind.parse()?;
            generating_function(fam, order)
                .ok_or_else(|| Error::Parse(format!("{kind} has no generating function")))?
        }
    };
    Ok(s.coeffs().iter().enumerate().map(|(n, c)| format!("{n}\t{c}\n")).collect())
}

fn approx(measure: Functional, p: &Polynomial, exact: &Rational, spec: &str) -> Result<String, Error> {
    let bad = || Error::Parse(format!("--approx wants p,N, got {spec:?}"));
    let (ps, ns) = spec.split_once(',').ok_or_else(bad)?;
    let prime = Prime::new(ps.trim().parse().map_err(|_| bad())?)?;
    let level: u32 = ns.trim().parse().map_err(|_| bad())?;
    let s = finite_sum(measure, p, prime, level)?;
    let v = ord_p(&(&s - exact), prime);
    Ok(format!("finite_sum\t{s}\nord_{prime}(difference)\t{v}\n"))
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Series { kind, order } => print!("{}", series(&kind, order)?),
        Cmd::Table { family, max, param, format } => {
            let fam = TableFamily::parse(&family, param.as_ref())?;
            print!("{}", emit_tables(&[fam], max, format.into()));
        }
        Cmd::Seq { family, max } => {
            let fam: Sequence = family.parse()?;
            for n in 0..=max {
                println!("{n}\t{}", sequence(fam, n));
            }
        }
        Cmd::Poly(PolyCmd::Parse { expr, basis }) => {
            let p = match basis {
                Some(b) => expr.convert(b.into()),
                None => expr,
            };
            println!("{p}");
        }
        Cmd::Integrate { measure, poly, approx: a } => {
            let r = integral(measure, &poly)?;
            println!("value\t{}", r.value);
            if let Some(spec) = a {
                print!("{}", approx(measure, &poly, &r.value, &spec)?);
            }
        }
        Cmd::Verify { ids, max_n, format, errata } => {
            let results = catalog::run(&ids, max_n)?;
            match format {
                OutFormat::Tsv => print!("{}", render_tsv(&results)),
                OutFormat::Json => print!("{}", render_json(&results)),
            }
            if errata {
                print!("\n{}", render_errata(&results));
            }
            if results.iter().any(|r| r.status == Status::Fail) {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("padic: {e}");
            ExitCode::from(2)
        }
    }
}
