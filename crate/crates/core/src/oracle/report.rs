//! Plain-text rendering of suite reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::suites::{SuiteReport, Verdict};

/// One line per report, counterexamples indented beneath it with their
/// replayable instance file on a single line.
pub fn render_report(r: &SuiteReport) -> String {
    let mut s = format!("[{}] {} {}", r.verdict, r.suite, r.instance);
    for (k, v) in &r.counts {
        let _ = write!(s, " {k}={v}");
    }
    if let Some(note) = &r.note {
        let _ = write!(s, " ({note})");
    }
    s.push('\n');
    for c in &r.counterexamples {
        let _ = writeln!(s, "    counterexample: {}", c.message);
        let one_line: String = c
            .document
            .to_json()
            .lines()
            .map(str::trim)
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(s, "    replay: {one_line}");
    }
    s
}

pub fn tally(reports: &[SuiteReport]) -> BTreeMap<Verdict, usize> {
    let mut t = BTreeMap::new();
    for r in reports {
        *t.entry(r.verdict).or_insert(0) += 1;
    }
    t
}

/// Overall verdict: any counterexample wins, then any resource verdict.
pub fn overall(reports: &[SuiteReport]) -> Verdict {
    let t = tally(reports);
    if t.contains_key(&Verdict::Counterexample) {
        Verdict::Counterexample
    } else if t.contains_key(&Verdict::Resource) {
        Verdict::Resource
    } else {
        Verdict::Pass
    }
}

/// The `key=value` summary block that closes a verification run.
pub fn summary_block(reports: &[SuiteReport], instances: usize) -> String {
    let t = tally(reports);
    let get = |v: Verdict| t.get(&v).copied().unwrap_or(0);
    let mut s = String::from("---\n");
    let _ = writeln!(s, "instances={instances}");
    let _ = writeln!(s, "reports={}", reports.len());
    let _ = writeln!(s, "pass={}", get(Verdict::Pass));
    let _ = writeln!(s, "counterexample={}", get(Verdict::Counterexample));
    let _ = writeln!(s, "resource={}", get(Verdict::Resource));
    let _ = writeln!(s, "not_applicable={}", get(Verdict::NotApplicable));
    let _ = writeln!(s, "verdict={}", overall(reports));
    s
}
