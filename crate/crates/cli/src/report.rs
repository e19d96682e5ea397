//! Report serialization: a stable, versioned JSON schema (identical bytes
//! for identical seeds) and the human-readable table.

use actegory_core::lawsuite::{SuiteReport, Verdict};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
struct JsonReport<'a> {
    schema: u32,
    seed: u64,
    instances: usize,
    notes: &'a [&'static str],
    laws: Vec<JsonLaw<'a>>,
}

#[derive(Serialize)]
struct JsonLaw<'a> {
    id: &'a str,
    statement: &'a str,
    arity: &'a str,
    passes: usize,
    canonical: usize,
    search: usize,
    skips: usize,
    not_applicable: usize,
    counterexamples: Vec<JsonCounterexample<'a>>,
}

#[derive(Serialize)]
struct JsonCounterexample<'a> {
    law: &'a str,
    seed: u64,
    instance: usize,
    detail: &'a str,
}

pub fn to_json(report: &SuiteReport) -> String {
    let laws = report
        .laws
        .iter()
        .map(|l| JsonLaw {
            id: &l.id,
            statement: l.statement,
            arity: l.arity,
            passes: l.passes,
            canonical: l.canonical,
            search: l.search,
            skips: l.skips,
            not_applicable: l.not_applicable,
            counterexamples: l
                .counterexamples
                .iter()
                .map(|c| JsonCounterexample {
                    law: &c.law,
                    seed: c.seed,
                    instance: c.instance,
                    detail: &c.detail,
                })
                .collect(),
        })
        .collect();
    let out = JsonReport {
        schema: SCHEMA_VERSION,
        seed: report.seed,
        instances: report.instances,
        notes: &report.notes,
        laws,
    };
    serde_json::to_string_pretty(&out).expect("report serializes")
}

pub fn to_text(report: &SuiteReport) -> String {
    let mut out = format!(
        "law suite: seed {}, {} instances per law\n",
        report.seed, report.instances
    );
    for l in &report.laws {
        let status = if !l.counterexamples.is_empty() {
            "FAIL"
        } else if l.skips > 0 {
            "pass (with skips)"
        } else {
            "pass"
        };
        out.push_str(&format!(
            "  {:<12} {:<4} pass {:>3}  canonical {:>3}  search {:>3}  skip {:>2}  n/a {:>2}   {}\n",
            l.id, status, l.passes, l.canonical, l.search, l.skips, l.not_applicable, l.statement
        ));
        for c in &l.counterexamples {
            out.push_str(&format!(
                "      counterexample: instance {} (seed {}): {}\n",
                c.instance, c.seed, c.detail
            ));
        }
    }
    for note in &report.notes {
        out.push_str(&format!("note: {note}\n"));
    }
    let verdict = if report.all_pass() { "ALL LAWS PASS" } else { "COUNTEREXAMPLES FOUND" };
    out.push_str(&format!("{verdict}\n"));
    out
}

pub fn describe_verdict(v: &Verdict) -> String {
    match v {
        Verdict::Witness { path } => format!("pass ({})", path.name()),
        Verdict::Counterexample { detail } => format!("counterexample: {detail}"),
        Verdict::NotApplicable { reason } => format!("not applicable: {reason}"),
        Verdict::Skip { reason } => format!("skipped: {reason}"),
    }
}
