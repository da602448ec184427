//! Problem files and the command implementations behind the `hdepth` binary.
//!
//! A problem file names the ring size and the two ideals of `J/I`:
//!
//! ```text
//! # comment
//! n: 3
//! label: hollow triangle
//! J: unit
//! I: x1*x2*x3
//! ```

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::monomial::{parse_ideal_at, IdealPair, MonomialIdeal, RingContext};
use crate::random::{random_pair, random_quotient};
use crate::report::{ProblemHeader, ReportDocument};
use crate::verify::{self, Options};

/// A parsed problem file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub label: Option<String>,
    pub pair: IdealPair,
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<ProblemFile> {
        let mut n: Option<(usize, usize)> = None;
        let mut label = None;
        let mut upper: Option<(&str, usize, usize)> = None;
        let mut lower: Option<(&str, usize, usize)> = None;
        let parse_err = |line: usize, column: usize, message: String| Error::Parse {
            line,
            column,
            message,
        };
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let trimmed = raw.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let indent = raw.len() - trimmed.len();
            let Some((key, value)) = trimmed.split_once(':') else {
                return Err(parse_err(line_no, indent + 1, "expected 'key: value'".into()));
            };
            let key = key.trim();
            let value_col = indent + key.len() + 2;
            let seen = match key {
                "n" => n.is_some(),
                "label" => label.is_some(),
                "J" => upper.is_some(),
                "I" => lower.is_some(),
                other => {
                    return Err(parse_err(line_no, indent + 1, format!("unknown key '{other}'")))
                }
            };
            if seen {
                return Err(parse_err(line_no, indent + 1, format!("duplicate key '{key}'")));
            }
            match key {
                "n" => {
                    let v = value.split('#').next().unwrap_or("").trim();
                    let parsed = v.parse::<usize>().map_err(|_| {
                        parse_err(line_no, value_col, format!("invalid variable count '{v}'"))
                    })?;
                    n = Some((parsed, line_no));
                }
                "label" => label = Some(value.trim().to_string()),
                "J" => upper = Some((value, line_no, value_col)),
                _ => lower = Some((value, line_no, value_col)),
            }
        }
        let last = text.lines().count().max(1);
        let (n, n_line) = n.ok_or_else(|| parse_err(last, 1, "missing key 'n'".into()))?;
        let ring = RingContext::new(n).map_err(|e| parse_err(n_line, 1, e.to_string()))?;
        let ideal = |entry: Option<(&str, usize, usize)>, key: &str| -> Result<MonomialIdeal> {
            let (value, line, col) =
                entry.ok_or_else(|| parse_err(last, 1, format!("missing key '{key}'")))?;
            parse_ideal_at(value, ring, line, col)
        };
        let upper = ideal(upper, "J")?;
        let lower = ideal(lower, "I")?;
        Ok(ProblemFile {
            label,
            pair: IdealPair::new(lower, upper)?,
        })
    }

    pub fn read(path: &Path) -> anyhow::Result<ProblemFile> {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("parsing {}", path.display()))
    }

    fn header<'a>(&'a self, command: &'a str) -> ProblemHeader<'a> {
        ProblemHeader {
            command,
            label: self.label.as_deref(),
            upper: self.pair.upper().to_string(),
            lower: self.pair.lower().to_string(),
        }
    }
}

fn elapsed_ms(start: Instant) -> Option<u64> {
    Some(start.elapsed().as_millis() as u64)
}

pub fn cmd_invariants(problem: &ProblemFile, options: &Options) -> Result<ReportDocument> {
    let start = Instant::now();
    let report = verify::invariants(&problem.pair, options)?;
    Ok(ReportDocument::build(problem.header("invariants"), &report, elapsed_ms(start)))
}

pub fn cmd_depth(problem: &ProblemFile, options: &Options) -> Result<ReportDocument> {
    let start = Instant::now();
    let report = verify::depth(&problem.pair, options)?;
    Ok(ReportDocument::build(problem.header("depth"), &report, elapsed_ms(start)))
}

pub fn cmd_verify(problem: &ProblemFile, options: &Options) -> Result<ReportDocument> {
    let start = Instant::now();
    let report = verify::verify(&problem.pair, options)?;
    Ok(ReportDocument::build(problem.header("verify"), &report, elapsed_ms(start)))
}

/// Outcome of a seeded sweep of `verify` over random pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSummary {
    pub instances: usize,
    pub checks_passed: usize,
    pub checks_skipped: usize,
    /// `(instance description, failing check name, details)`.
    pub failures: Vec<(String, String, String)>,
}

/// Runs `verify` on `count` random instances with `1 <= n <= max_n`,
/// alternating quotients `S/I` and general pairs `J/I`.
pub fn random_sweep(count: usize, seed: u64, max_n: usize, options: &Options) -> Result<SweepSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = SweepSummary {
        instances: count,
        checks_passed: 0,
        checks_skipped: 0,
        failures: Vec::new(),
    };
    for i in 0..count {
        let n = 1 + (i % max_n.max(1));
        let ring = RingContext::new(n)?;
        let pair = if i % 2 == 0 {
            random_quotient(ring, &mut rng)
        } else {
            random_pair(ring, &mut rng)
        };
        let report = verify::verify(&pair, options)?;
        for check in &report.checks {
            match check.status {
                crate::report::CheckStatus::Pass => summary.checks_passed += 1,
                crate::report::CheckStatus::Skipped => summary.checks_skipped += 1,
                crate::report::CheckStatus::Fail => summary.failures.push((
                    format!("n = {n}, J = ({}), I = ({})", pair.upper(), pair.lower()),
                    check.name.clone(),
                    check.details.clone(),
                )),
            }
        }
    }
    Ok(summary)
}

/// Result of comparing one corpus entry with its golden report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusOutcome {
    Pass,
    /// Written because the corpus was run in bless mode.
    Blessed,
    MissingGolden,
    /// First differing line (1-based), expected and actual text.
    Diff {
        line: usize,
        expected: String,
        actual: String,
    },
    /// The report itself has failing checks.
    FailedChecks(Vec<String>),
    Error(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CorpusSummary {
    pub entries: Vec<(PathBuf, CorpusOutcome)>,
}

impl CorpusSummary {
    pub fn all_passed(&self) -> bool {
        self.entries
            .iter()
            .all(|(_, o)| matches!(o, CorpusOutcome::Pass | CorpusOutcome::Blessed))
    }
}

/// `<stem>.golden.json` next to `<stem>.ideal`.
pub fn golden_path(problem: &Path) -> PathBuf {
    problem.with_extension("golden.json")
}

/// The canonical corpus rendering: the `verify` report at default options
/// with the timing omitted.
pub fn corpus_report(problem: &ProblemFile) -> Result<ReportDocument> {
    let mut doc = cmd_verify(problem, &Options::default())?;
    doc.timing_ms = None;
    Ok(doc)
}

/// Runs every `*.ideal` file in `dir` and compares its report with the
/// golden sidecar byte for byte. With `bless`, missing or stale goldens are
/// (re)written instead.
pub fn cmd_corpus(dir: &Path, bless: bool) -> anyhow::Result<CorpusSummary> {
    if !dir.is_dir() {
        bail!("{} is not a directory", dir.display());
    }
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "ideal"))
        .collect();
    files.sort();
    let mut summary = CorpusSummary::default();
    for path in files {
        let outcome = corpus_entry(&path, bless)?;
        summary.entries.push((path, outcome));
    }
    Ok(summary)
}

fn corpus_entry(path: &Path, bless: bool) -> anyhow::Result<CorpusOutcome> {
    let problem = match ProblemFile::read(path) {
        Ok(p) => p,
        Err(e) => return Ok(CorpusOutcome::Error(format!("{e:#}"))),
    };
    let doc = match corpus_report(&problem) {
        Ok(d) => d,
        Err(e) => return Ok(CorpusOutcome::Error(e.to_string())),
    };
    let failed: Vec<String> = doc
        .checks
        .iter()
        .filter(|c| c.status == crate::report::CheckStatus::Fail)
        .map(|c| c.name.clone())
        .collect();
    if !failed.is_empty() {
        return Ok(CorpusOutcome::FailedChecks(failed));
    }
    let actual = doc.to_json();
    let golden = golden_path(path);
    let expected = match fs::read_to_string(&golden) {
        Ok(text) => Some(text),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => None,
        Err(e) => return Err(e).with_context(|| format!("reading {}", golden.display())),
    };
    if expected.as_deref() == Some(actual.as_str()) {
        return Ok(CorpusOutcome::Pass);
    }
    if bless {
        fs::write(&golden, &actual).with_context(|| format!("writing {}", golden.display()))?;
        return Ok(CorpusOutcome::Blessed);
    }
    let Some(expected) = expected else {
        return Ok(CorpusOutcome::MissingGolden);
    };
    let mut exp_lines = expected.lines();
    let mut act_lines = actual.lines();
    let mut line = 1;
    loop {
        match (exp_lines.next(), act_lines.next()) {
            (Some(e), Some(a)) if e == a => line += 1,
            (e, a) => {
                return Ok(CorpusOutcome::Diff {
                    line,
                    expected: e.unwrap_or("<end of file>").to_string(),
                    actual: a.unwrap_or("<end of file>").to_string(),
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn problem_file_round_trip() {
        let text = "# sample\nn: 3\nlabel: two components\nJ: unit\nI: x1*x2, x1*x3 # gens\n";
        let p = ProblemFile::parse(text).unwrap();
        assert_eq!(p.label.as_deref(), Some("two components"));
        assert!(p.pair.is_quotient());
        assert_eq!(p.pair.lower().to_string(), "x1*x2, x1*x3");
    }

    #[test]
    fn problem_file_errors() {
        let err = ProblemFile::parse("n: 3\nJ: unit\nI: x1*x4\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, column: 7, .. }), "{err:?}");
        assert!(ProblemFile::parse("n: 3\nJ: unit\n").is_err());
        assert!(ProblemFile::parse("n: 3\nn: 4\nJ: unit\nI: zero\n").is_err());
        assert!(ProblemFile::parse("n: 3\nK: unit\n").is_err());
        assert!(ProblemFile::parse("n: x\nJ: unit\nI: zero\n").is_err());
        assert!(ProblemFile::parse("n: 0\nJ: unit\nI: zero\n").is_err());
        // I ⊄ J.
        assert!(matches!(
            ProblemFile::parse("n: 2\nJ: x1\nI: x2\n"),
            Err(Error::InvalidPair(_))
        ));
        // I = J.
        assert!(matches!(
            ProblemFile::parse("n: 2\nJ: x1\nI: x1\n"),
            Err(Error::InvalidPair(_))
        ));
    }
}
