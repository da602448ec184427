//! The invariant report and its machine-readable and text renderings.
//!
//! Integers that can leave the 64-bit range (β and h entries) are written as
//! decimal strings; counts are plain JSON integers. Nothing is a float.

use std::fmt::Write as _;

use serde::Serialize;

use crate::hdepth::{AlphaVector, BetaVector, HdepthScan};
use crate::homology::{CoefficientField, DepthReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub details: String,
}

impl Check {
    pub fn new(name: &str, passed: bool, details: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            status: if passed {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            details: details.into(),
        }
    }

    pub fn skipped(name: &str, details: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            status: CheckStatus::Skipped,
            details: details.into(),
        }
    }
}

/// Everything computed for one module `J/I`. Fields a command did not
/// compute stay `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub n: usize,
    pub field: CoefficientField,
    pub alpha: Option<AlphaVector>,
    pub scan: Option<HdepthScan>,
    pub dim: Option<usize>,
    pub depth: Option<DepthReport>,
    pub h_vector: Option<BetaVector>,
    pub checks: Vec<Check>,
}

impl InvariantReport {
    pub fn new(n: usize, field: CoefficientField) -> Self {
        Self {
            n,
            field,
            alpha: None,
            scan: None,
            dim: None,
            depth: None,
            h_vector: None,
            checks: Vec::new(),
        }
    }

    pub fn hdepth(&self) -> Option<usize> {
        self.scan.as_ref().map(|s| s.hdepth)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BetaRowDoc {
    pub q: usize,
    pub beta: Vec<String>,
    pub first_negative: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessDoc {
    pub face: Vec<usize>,
    pub degree: isize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CmDoc {
    pub cohen_macaulay: bool,
    pub dimension: usize,
    pub criterion: &'static str,
    pub witness: Option<WitnessDoc>,
}

/// The serialized report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub label: Option<String>,
    pub n: usize,
    #[serde(rename = "J")]
    pub upper: String,
    #[serde(rename = "I")]
    pub lower: String,
    pub field: String,
    pub alpha: Option<Vec<u64>>,
    pub beta_table: Option<Vec<BetaRowDoc>>,
    pub hdepth: Option<usize>,
    pub dim: Option<usize>,
    pub depth: Option<usize>,
    pub h_vector: Option<Vec<String>>,
    pub cm: Option<CmDoc>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

pub struct ProblemHeader<'a> {
    pub command: &'a str,
    pub label: Option<&'a str>,
    pub upper: String,
    pub lower: String,
}

impl ReportDocument {
    pub fn build(header: ProblemHeader<'_>, report: &InvariantReport, timing_ms: Option<u64>) -> Self {
        let strings = |v: &[i128]| v.iter().map(i128::to_string).collect::<Vec<_>>();
        Self {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: header.command.to_string(),
            label: header.label.map(str::to_string),
            n: report.n,
            upper: header.upper,
            lower: header.lower,
            field: report.field.characteristic().to_string(),
            alpha: report.alpha.as_ref().map(|a| a.entries().to_vec()),
            beta_table: report.scan.as_ref().map(|scan| {
                scan.table
                    .iter()
                    .map(|row| BetaRowDoc {
                        q: row.beta.level(),
                        beta: strings(row.beta.entries()),
                        first_negative: row.first_negative,
                    })
                    .collect()
            }),
            hdepth: report.hdepth(),
            dim: report.dim,
            depth: report.depth.as_ref().map(|d| d.depth),
            h_vector: report.h_vector.as_ref().map(|h| strings(h.entries())),
            cm: report.depth.as_ref().map(|d| CmDoc {
                cohen_macaulay: d.cm.cohen_macaulay,
                dimension: d.cm.dimension,
                criterion: if d.absolute { "reisner" } else { "relative-reisner" },
                witness: d.cm.witness.map(|w| WitnessDoc {
                    face: w.face.vars().collect(),
                    degree: w.degree,
                }),
            }),
            checks: report.checks.clone(),
            timing_ms,
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    /// The human-readable rendering.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {} ({})", self.tool, self.command, self.version);
        if let Some(label) = &self.label {
            let _ = writeln!(s, "label:  {label}");
        }
        let _ = writeln!(s, "n:      {}", self.n);
        let _ = writeln!(s, "J:      {}", self.upper);
        let _ = writeln!(s, "I:      {}", self.lower);
        let field = if self.field == "0" {
            "QQ".to_string()
        } else {
            format!("GF({})", self.field)
        };
        let _ = writeln!(s, "field:  {field}");
        if let Some(alpha) = &self.alpha {
            let _ = writeln!(s, "alpha:  {}", join(alpha));
        }
        if let Some(table) = &self.beta_table {
            let _ = writeln!(s, "beta table:");
            for row in table {
                let verdict = match row.first_negative {
                    None => "nonnegative".to_string(),
                    Some(k) => format!("negative at k = {k}"),
                };
                let _ = writeln!(s, "  q = {:>2}: ({})  {verdict}", row.q, row.beta.join(","));
            }
        }
        for (key, value) in [("hdepth", self.hdepth), ("dim", self.dim), ("depth", self.depth)] {
            if let Some(v) = value {
                let _ = writeln!(s, "{key:<7} {v}");
            }
        }
        if let Some(h) = &self.h_vector {
            let _ = writeln!(s, "h:      ({})", h.join(","));
        }
        if let Some(cm) = &self.cm {
            let _ = write!(
                s,
                "cm:     {} (dimension {}, {})",
                cm.cohen_macaulay, cm.dimension, cm.criterion
            );
            if let Some(w) = &cm.witness {
                let _ = write!(s, "; witness face {{{}}} in degree {}", join(&w.face), w.degree);
            }
            s.push('\n');
        }
        if !self.checks.is_empty() {
            let _ = writeln!(s, "checks:");
            for c in &self.checks {
                let status = match c.status {
                    CheckStatus::Pass => "PASS",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::Skipped => "SKIP",
                };
                let _ = writeln!(s, "  [{status}] {}: {}", c.name, c.details);
            }
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(s, "time:   {ms} ms");
        }
        s
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}
