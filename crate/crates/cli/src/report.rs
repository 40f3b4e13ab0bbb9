//! The run report. JSON schema (stable key order):
//!
//! ```text
//! {
//!   "algebra": { "name", "field", "vertices", "arrows", "relations", "dimension" },
//!   "command": { "name", "version", "n", "trials", "cutoff", "trace" },
//!   "seed": <u64>,
//!   "results": <command specific>,
//!   "passed": <bool>
//! }
//! ```
//!
//! `results` is a `DimComparison` for `gldim`, a [`TheoremResults`] for
//! `check-theorem`, a list of [`ResolutionSummary`] for `resolve` and a list
//! of [`DemoEntry`] for `demo`.

use std::fmt::Write as _;

use serde::Serialize;

use kercoker::homdim::{DimComparison, ProjDim};
use kercoker::quiverrep::PathAlgebra;

use crate::algebra_file::relation_text;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraSummary {
    pub name: String,
    pub field: String,
    pub vertices: Vec<String>,
    /// `"a: 1 -> 2"`.
    pub arrows: Vec<String>,
    /// In file syntax.
    pub relations: Vec<String>,
    pub dimension: usize,
}

impl AlgebraSummary {
    pub fn of(name: &str, algebra: &PathAlgebra) -> AlgebraSummary {
        let q = algebra.quiver();
        AlgebraSummary {
            name: name.to_string(),
            field: algebra.field().to_string(),
            vertices: q.vertices().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| format!("{}: {} -> {}", a.name, q.vertices()[a.source], q.vertices()[a.target]))
                .collect(),
            relations: algebra.relations().iter().map(|r| relation_text(algebra, r)).collect(),
            dimension: algebra.dimension(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommandInfo {
    pub name: String,
    pub version: String,
    pub n: Option<usize>,
    pub trials: Option<usize>,
    pub cutoff: usize,
    pub trace: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Precondition {
    /// `gldim mod Λ` at the cutoff.
    pub gldim: ProjDim,
    /// Largest global dimension the construction supports for this `n`.
    pub required_at_most: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialFailure {
    pub trial: u64,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremResults {
    /// `"n-cokernel"` or `"0-cokernel"`.
    pub mode: String,
    pub n: usize,
    pub precondition: Precondition,
    pub trials: usize,
    pub verified: usize,
    /// Trials with `n = 1` where `d_2 b_1` was already the identity.
    pub fast_path: Option<usize>,
    pub failures: Vec<TrialFailure>,
    /// Trace of the lowest-indexed failing trial, when requested.
    pub first_failure_trace: Option<String>,
}

impl TheoremResults {
    pub fn summary_line(&self) -> String {
        let what = if self.n == 0 { "0-cokernels" } else { "constructed n-cokernels" };
        format!("{}/{} {what} verified", self.verified, self.trials)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionSummary {
    pub simple: String,
    /// Multiplicity vectors of `P_0, P_1, …`.
    pub projectives: Vec<Vec<usize>>,
    /// `d_1, d_2, …` as path matrices.
    pub differentials: Vec<String>,
    pub pdim: ProjDim,
    pub minimal: bool,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DemoEntry {
    pub algebra: AlgebraSummary,
    pub gldim: DimComparison,
    pub theorem: Option<TheoremResults>,
    pub idempotents_split: usize,
    pub duality_checks: usize,
    pub trials: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Results {
    Gldim(DimComparison),
    Theorem(TheoremResults),
    Resolve(Vec<ResolutionSummary>),
    Demo(Vec<DemoEntry>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub algebra: Option<AlgebraSummary>,
    pub command: CommandInfo,
    pub seed: u64,
    pub results: Results,
    pub passed: bool,
}

fn theorem_text(out: &mut String, t: &TheoremResults) {
    if !t.precondition.holds {
        let _ = writeln!(
            out,
            "precondition violated: gldim mod Λ = {} exceeds {} (n = {})",
            t.precondition.gldim, t.precondition.required_at_most, t.n
        );
    }
    let _ = writeln!(out, "{}", t.summary_line());
    for f in &t.failures {
        let _ = writeln!(out, "  trial {} failed: {}", f.trial, f.reason);
    }
    if let Some(trace) = &t.first_failure_trace {
        let _ = write!(out, "{trace}");
    }
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.results {
            Results::Gldim(cmp) => {
                let _ = writeln!(out, "{cmp}");
            }
            Results::Theorem(t) => theorem_text(&mut out, t),
            Results::Resolve(list) => {
                for r in list {
                    let _ = writeln!(out, "S({}): pdim {}", r.simple, r.pdim);
                    for (k, p) in r.projectives.iter().enumerate() {
                        let _ = writeln!(out, "  P_{k} multiplicities {p:?}");
                    }
                    for (k, d) in r.differentials.iter().enumerate() {
                        let _ = writeln!(out, "  d_{}: {d}", k + 1);
                    }
                }
            }
            Results::Demo(entries) => {
                for e in entries {
                    let _ = writeln!(out, "{} (dimension {}):", e.algebra.name, e.algebra.dimension);
                    let _ = writeln!(out, "  {}", e.gldim);
                    match &e.theorem {
                        Some(t) => {
                            let mut inner = String::new();
                            theorem_text(&mut inner, t);
                            for line in inner.lines() {
                                let _ = writeln!(out, "  {line}");
                            }
                        }
                        None => {
                            let _ = writeln!(out, "  construction skipped: global dimension above cutoff");
                        }
                    }
                    let _ = writeln!(out, "  {}/{} idempotents split", e.idempotents_split, e.trials);
                    let _ = writeln!(out, "  {}/{} duality checks passed", e.duality_checks, e.trials);
                }
            }
        }
        let _ = writeln!(out, "{}", if self.passed { "PASSED" } else { "FAILED" });
        out
    }
}
