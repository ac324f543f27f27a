//! Text renderings of catalog results.

use std::fmt::Write;

use super::runner::{Counterexample, IdentityResult, Outcome, Status};

fn clean(s: &str) -> String {
    s.replace(['\t', '\n'], " ")
}

/// One line per result: id, status, tested, then the first counterexample
/// if there is one.
pub fn render_tsv(results: &[IdentityResult]) -> String {
    let mut s = String::from("id\tstatus\ttested\tparams\tlhs\trhs\n");
    for r in results {
        let (p, l, rh) = match &r.counterexample {
            Some(c) => (clean(&c.params), c.lhs.clone(), c.rhs.clone()),
            None => Default::default(),
        };
        writeln!(s, "{}\t{}\t{}\t{p}\t{l}\t{rh}", r.id, r.status.as_str(), r.tested).unwrap();
    }
    s
}

pub fn render_json(results: &[IdentityResult]) -> String {
    serde_json::to_string_pretty(results).expect("results serialize") + "\n"
}

fn cases(s: &mut String, label: &str, o: &Outcome) {
    let verdict = if o.passed() { "holds" } else { "fails" };
    writeln!(s, "  {label}: {verdict}, {} of {} cases disagree", o.failed, o.tested).unwrap();
    let show = |s: &mut String, c: &Counterexample, tag: &str| {
        writeln!(s, "    {tag} {}: lhs = {}, rhs = {}", c.params, c.lhs, c.rhs).unwrap();
    };
    for c in &o.failures {
        show(s, c, "differs at");
    }
    if o.failures.is_empty() {
        for c in o.samples.iter().take(2) {
            show(s, c, "agrees at");
        }
    }
}

/// A section per ERRATUM_CANDIDATE giving both computed sides of the
/// printed form and, when present, the corrected companion.
pub fn render_errata(results: &[IdentityResult]) -> String {
    let mut s = String::new();
    for r in results.iter().filter(|r| r.status == Status::ErratumCandidate) {
        writeln!(s, "== {}", r.id).unwrap();
        if let Some(d) = &r.detail {
            writeln!(s, "  at: {} \"{}\"", d.citation, d.anchor).unwrap();
            writeln!(s, "  note: {}", d.note).unwrap();
            cases(&mut s, "as printed", &d.printed);
            match &d.corrected {
                Some(c) => cases(&mut s, "corrected", c),
                None => writeln!(s, "  corrected: none").unwrap(),
            }
        }
        s.push('\n');
    }
    s
}
