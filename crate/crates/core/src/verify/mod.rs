//! Exhaustive and randomized verification of the small-case results.
//!
//! Every verifier returns a [`VerificationReport`]; success means no
//! counterexample was found and every internal cross-check held.

mod k6;
mod partition;
mod reductions;
mod regular;
mod supersat;
mod tightness;
mod triangle;
mod two_cliques;

use std::fmt::Write as _;
use std::time::Duration;

pub use k6::{classify_k6, k6_survivors, verify_k6_dichotomy, K6Branch};
pub use partition::{bell, stirling2, EdgePartitionCursor};
pub use reductions::{
    cubic_survivors, k9_eliminations, two_regular_survivors, verify_k8_reduction,
    verify_k9_reduction, verify_saturation_solutions, Elimination,
};
pub use regular::{canonical_form, enumerate_regular, sparse_subset, SmallGraph};
pub use supersat::{
    parse_rational, supersaturation_experiment, supersaturation_target, SupersatRow, SupersatTable,
};
pub use tightness::verify_tightness;
pub use triangle::{verify_triangle_threshold, verify_triangle_threshold_at};
pub use two_cliques::falsify_two_cliques;

use crate::ecg;
use crate::error::{Error, Result};
use crate::graph::ColoredGraph;

/// Outcome of one verifier run.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub lemma_id: String,
    /// Number of candidates examined.
    pub space_size: u64,
    /// Graphs violating the checked statement.
    pub counterexamples: Vec<ColoredGraph>,
    /// Internal cross-checks that did not hold (not tied to a single graph).
    pub failed_checks: Vec<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub(crate) fn new(lemma_id: &str) -> Self {
        VerificationReport {
            lemma_id: lemma_id.to_string(),
            space_size: 0,
            counterexamples: Vec::new(),
            failed_checks: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn success(&self) -> bool {
        self.counterexamples.is_empty() && self.failed_checks.is_empty()
    }

    /// Total number of reported violations.
    pub fn violation_count(&self) -> usize {
        self.counterexamples.len() + self.failed_checks.len()
    }

    /// Sorts counterexamples by their ECG text so parallel runs report
    /// identically.
    pub(crate) fn normalize(&mut self) {
        self.counterexamples.sort_by_cached_key(ecg::write);
        self.counterexamples.dedup();
    }

    /// The summary line `LEMMA <id> SPACE <count> CE <count> TIME <ms>`.
    pub fn summary_line(&self) -> String {
        format!(
            "LEMMA {} SPACE {} CE {} TIME {}",
            self.lemma_id,
            self.space_size,
            self.violation_count(),
            self.elapsed.as_millis()
        )
    }

    /// Summary line, then one `CHECK` line per failed check, then each
    /// counterexample as an ECG document between `BEGIN ECG` and `END ECG`.
    pub fn to_text(&self) -> String {
        let mut out = self.summary_line();
        out.push('\n');
        for check in &self.failed_checks {
            writeln!(out, "CHECK {check}").unwrap();
        }
        for g in &self.counterexamples {
            out.push_str("BEGIN ECG\n");
            out.push_str(&ecg::write(g));
            out.push_str("END ECG\n");
        }
        out
    }

    /// Parses the output of [`to_text`](Self::to_text).
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |line: usize, message: &str| Error::Parse {
            line,
            message: message.to_string(),
        };
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let (_, header) = lines.next().ok_or_else(|| bad(1, "empty report"))?;
        let tokens: Vec<&str> = header.split_whitespace().collect();
        let ["LEMMA", id, "SPACE", space, "CE", ce, "TIME", ms] = tokens[..] else {
            return Err(bad(1, "expected `LEMMA <id> SPACE <n> CE <n> TIME <ms>`"));
        };
        let number = |s: &str| s.parse::<u64>().map_err(|_| bad(1, "expected a number"));
        let mut report = VerificationReport::new(id);
        report.space_size = number(space)?;
        report.elapsed = Duration::from_millis(number(ms)?);
        let declared = number(ce)? as usize;

        let mut block: Option<(usize, String)> = None;
        for (line_no, line) in lines {
            match (&mut block, line) {
                (None, "BEGIN ECG") => block = Some((line_no, String::new())),
                (None, l) if l.starts_with("CHECK ") => {
                    report.failed_checks.push(l["CHECK ".len()..].to_string())
                }
                (None, l) if l.trim().is_empty() => {}
                (None, _) => return Err(bad(line_no, "unexpected line outside an ECG block")),
                (Some((start, body)), "END ECG") => {
                    let g = ecg::parse(body).map_err(|e| match e {
                        Error::Parse { line, message } => bad(*start + line, &message),
                        other => other,
                    })?;
                    report.counterexamples.push(g);
                    block = None;
                }
                (Some((_, body)), l) => {
                    body.push_str(l);
                    body.push('\n');
                }
            }
        }
        if block.is_some() {
            return Err(bad(text.lines().count(), "unterminated ECG block"));
        }
        if report.violation_count() != declared {
            return Err(bad(1, "CE count does not match the listed violations"));
        }
        Ok(report)
    }
}
