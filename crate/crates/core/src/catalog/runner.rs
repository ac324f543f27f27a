//! Evaluates registered checks and assigns a status.

use std::panic::{catch_unwind, AssertUnwindSafe};

use serde::Serialize;

use super::manifest::{manifest, ErratumKind, ManifestEntry};
use super::{registry, Check, Ctx, Tally};
use crate::par::{map_with, Exec};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "ERRATUM_CANDIDATE")]
    ErratumCandidate,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::ErratumCandidate => "ERRATUM_CANDIDATE",
        }
    }
}

/// One disagreement, with both sides as exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub params: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one side of a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub tested: usize,
    pub failed: usize,
    pub failures: Vec<Counterexample>,
    /// agreeing cases, kept so a report can show computed values
    pub samples: Vec<Counterexample>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failed == 0 && self.tested > 0
    }
}

/// Everything the errata report needs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErratumDetail {
    pub kind: ErratumKind,
    pub note: String,
    pub citation: String,
    pub anchor: String,
    pub printed: Outcome,
    pub corrected: Option<Outcome>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityResult {
    pub id: String,
    pub paper_eq: String,
    pub tested: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip)]
    pub detail: Option<ErratumDetail>,
}

fn evaluate(body: fn(&Ctx, &mut Tally), ctx: &Ctx) -> Outcome {
    let mut t = Tally::default();
    let caught = catch_unwind(AssertUnwindSafe(|| body(ctx, &mut t)));
    let (tested, mut failed, mut failures, samples) = t.into_parts();
    if let Err(e) = caught {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        failed += 1;
        failures.insert(0, Counterexample { params: format!("aborted: {msg}"), lhs: "?".into(), rhs: "?".into() });
    }
    Outcome { tested, failed, failures, samples }
}

fn run_one(check: &Check, entry: &ManifestEntry, ctx: &Ctx) -> IdentityResult {
    let printed = evaluate(check.printed, ctx);
    let kind = entry.erratum.as_ref().map(|e| e.kind);
    let corrected = match kind {
        Some(_) => check.corrected.map(|f| evaluate(f, ctx)),
        None => None,
    };
    let status = match (printed.passed(), kind) {
        (_, Some(ErratumKind::Preflagged)) => Status::ErratumCandidate,
        (true, _) => Status::Pass,
        (false, Some(ErratumKind::Printed)) if corrected.as_ref().is_some_and(Outcome::passed) => {
            Status::ErratumCandidate
        }
        (false, _) => Status::Fail,
    };
    let counterexample = match status {
        Status::Pass => None,
        _ => printed.failures.first().cloned(),
    };
    let detail = entry.erratum.as_ref().map(|e| ErratumDetail {
        kind: e.kind,
        note: e.note.clone(),
        citation: entry.citation.clone(),
        anchor: entry.anchor.clone(),
        printed: printed.clone(),
        corrected,
    });
    IdentityResult {
        id: entry.id.clone(),
        paper_eq: entry.paper_eq(),
        tested: printed.tested,
        status,
        counterexample,
        detail,
    }
}

/// Runs the selected checks (all when `ids` is empty) with the default
/// ranges capped at `max_n`. Results are sorted by id.
pub fn run(ids: &[String], max_n: usize) -> Result<Vec<IdentityResult>, Error> {
    run_with(Exec::default(), ids, &Ctx::with_max_n(max_n))
}

pub fn run_with(exec: Exec, ids: &[String], ctx: &Ctx) -> Result<Vec<IdentityResult>, Error> {
    let entries = manifest()?;
    let reg = registry();
    let mut jobs = Vec::new();
    let selected: Vec<&ManifestEntry> = if ids.is_empty() {
        entries.iter().collect()
    } else {
        let mut v = Vec::new();
        for id in ids {
            let e = entries.iter().find(|e| &e.id == id).ok_or_else(|| Error::UnknownId(id.clone()))?;
            if !v.iter().any(|x: &&ManifestEntry| x.id == e.id) {
                v.push(e);
            }
        }
        v
    };
    for e in selected {
        let c = reg.iter().find(|c| c.id == e.id).ok_or_else(|| Error::UnknownId(e.id.clone()))?;
        jobs.push((*c, e));
    }
    let mut out = map_with(exec, &jobs, |(c, e)| run_one(c, e, ctx));
    out.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_id_is_an_error() {
        assert_eq!(run(&["NOPE.X".into()], 4), Err(Error::UnknownId("NOPE.X".into())));
    }

    #[test]
    fn documented_examples() {
        let r = run(&["VOLK.L1".into(), "SEQ.YE_ZERO".into(), "FAC.CV".into()], 8).unwrap();
        let ids: Vec<_> = r.iter().map(|x| x.id.as_str()).collect();
        assert_eq!(ids, ["FAC.CV", "SEQ.YE_ZERO", "VOLK.L1"]);
        assert!(r.iter().all(|x| x.status == Status::Pass && x.tested > 0 && x.counterexample.is_none()));
    }

    #[test]
    fn status_serializes_in_upper_case() {
        assert_eq!(serde_json::to_string(&Status::ErratumCandidate).unwrap(), "\"ERRATUM_CANDIDATE\"");
    }
}
