use std::fmt::Write as _;

use serde::Serialize;

use crate::harness::{Status, Summary, TheoremId, Verdict, Witness};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReportOptions {
    /// Include wall-clock time per verdict. Off by default so that repeated
    /// runs produce identical reports.
    pub timings: bool,
}

#[derive(Serialize)]
struct Record<'a> {
    theorem: TheoremId,
    #[serde(skip_serializing_if = "Option::is_none")]
    variant: Option<&'a str>,
    structure: &'a str,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a Witness>,
    instances: usize,
    #[serde(skip_serializing_if = "<[String]>::is_empty")]
    notes: &'a [String],
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
}

impl<'a> Record<'a> {
    fn of(v: &'a Verdict, opts: ReportOptions) -> Self {
        Self {
            theorem: v.theorem,
            variant: v.variant.as_deref(),
            structure: &v.structure,
            status: v.status,
            witness: v.witness.as_ref(),
            instances: v.instances,
            notes: &v.notes,
            elapsed_ms: opts.timings.then_some(v.elapsed.as_millis() as u64),
        }
    }
}

/// A JSON array with one object per verdict, newline terminated.
pub fn render_json(verdicts: &[Verdict], opts: ReportOptions) -> String {
    let records: Vec<Record<'_>> = verdicts.iter().map(|v| Record::of(v, opts)).collect();
    let mut out = serde_json::to_string_pretty(&records).expect("reports serialize");
    out.push('\n');
    out
}

/// One line per verdict and a closing summary line.
pub fn render_text(verdicts: &[Verdict], opts: ReportOptions) -> String {
    let mut out = String::new();
    for v in verdicts {
        let _ = write!(out, "{:<36} {:<28} {}", v.label(), v.structure, v.status);
        let _ = write!(out, " instances={}", v.instances);
        if let Some(w) = &v.witness {
            let _ = write!(out, " witness: {w}");
        }
        if !v.notes.is_empty() {
            let _ = write!(out, " notes: {}", v.notes.join("; "));
        }
        if opts.timings {
            let _ = write!(out, " elapsed_ms={}", v.elapsed.as_millis());
        }
        out.push('\n');
    }
    let s = Summary::of(verdicts);
    let _ = writeln!(
        out,
        "{} verdicts: {} verified, {} counterexample, {} hypotheses-unmet, {} skipped(size)",
        verdicts.len(),
        s.verified,
        s.counterexample,
        s.hypotheses_unmet,
        s.skipped
    );
    out
}
