//! Executable identity catalog.
//!
//! Each manifest entry maps to a check that evaluates both sides of an
//! identity exactly over a parameter range. Entries whose printed form is
//! known to be wrong carry a corrected companion check; the printed form is
//! still evaluated and reported.

mod entries;
mod manifest;
mod report;
mod runner;
mod tables;
mod util;

pub use manifest::{manifest, ErratumKind, ManifestEntry};
pub use report::{render_errata, render_json, render_tsv};
pub use runner::{run, run_with, Counterexample, ErratumDetail, IdentityResult, Status};
pub use tables::{emit_tables, Format, TableFamily};

use crate::poly::Polynomial;
use crate::rational::Rational;

/// Parameter ranges shared by all checks.
#[derive(Clone, Debug)]
pub struct Ctx {
    pub max_n: usize,
    pub max_m: usize,
    pub max_r: usize,
    pub max_mu: u32,
    pub lambdas: Vec<Rational>,
    pub thetas: Vec<Rational>,
}

impl Default for Ctx {
    fn default() -> Self {
        Ctx::with_max_n(10)
    }
}

impl Ctx {
    pub fn with_max_n(max_n: usize) -> Self {
        Ctx {
            max_n,
            max_m: max_n.min(6),
            max_r: 3,
            max_mu: 3,
            lambdas: vec![
                Rational::from(2),
                Rational::from(3),
                Rational::from(-2),
                Rational::frac(1, 2),
            ],
            thetas: vec![Rational::from(2), Rational::from(3)],
        }
    }
}

/// Collects the outcome of one check: how many cases ran and the
/// disagreements seen.
#[derive(Debug, Default)]
pub struct Tally {
    tested: usize,
    failures: Vec<Counterexample>,
    failed: usize,
    samples: Vec<Counterexample>,
}

const KEEP: usize = 3;

impl Tally {
    /// Compares two exact values.
    pub fn eq(&mut self, params: impl FnOnce() -> String, lhs: &Rational, rhs: &Rational) {
        self.tested += 1;
        let ok = lhs == rhs;
        if !ok || self.samples.len() < KEEP {
            let c = Counterexample { params: params(), lhs: lhs.to_string(), rhs: rhs.to_string() };
            if ok {
                self.samples.push(c);
            } else {
                self.failed += 1;
                if self.failures.len() < KEEP {
                    self.failures.push(c);
                }
            }
        }
    }

    /// Compares two polynomials coefficient by coefficient. A disagreement
    /// is recorded at the lowest differing degree.
    pub fn poly_eq(&mut self, params: impl FnOnce() -> String, lhs: &Polynomial, rhs: &Polynomial) {
        let (a, b) = (lhs.to_monomial(), rhs.to_monomial());
        let d = a.coeffs().len().max(b.coeffs().len());
        match (0..d).find(|&k| a.coeff(k) != b.coeff(k)) {
            None => {
                let c = a.coeff(d.saturating_sub(1));
                self.eq(params, &c, &c);
            }
            Some(k) => {
                let p = params();
                self.eq(|| format!("{p}, [x^{k}]"), &a.coeff(k), &b.coeff(k));
            }
        }
    }

    /// Records a boolean condition that has no natural two-sided form.
    pub fn holds(&mut self, params: impl FnOnce() -> String, ok: bool) {
        let one = Rational::one();
        let other = if ok { one.clone() } else { Rational::zero() };
        self.eq(params, &other, &one);
    }

    pub fn tested(&self) -> usize {
        self.tested
    }

    pub fn passed(&self) -> bool {
        self.failed == 0 && self.tested > 0
    }

    pub fn first_failure(&self) -> Option<&Counterexample> {
        self.failures.first()
    }

    pub(crate) fn into_parts(self) -> (usize, usize, Vec<Counterexample>, Vec<Counterexample>) {
        (self.tested, self.failed, self.failures, self.samples)
    }
}

/// A registered check: the identity as printed, and optionally a corrected
/// form for printed statements that do not hold.
#[derive(Clone, Copy)]
pub(crate) struct Check {
    pub id: &'static str,
    pub printed: fn(&Ctx, &mut Tally),
    pub corrected: Option<fn(&Ctx, &mut Tally)>,
}

pub(crate) fn registry() -> Vec<Check> {
    entries::all()
}
