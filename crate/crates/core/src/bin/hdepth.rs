use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use hdepth::cli::{self, CorpusOutcome, ProblemFile};
use hdepth::homology::CoefficientField;
use hdepth::monomial::{Limits, DEFAULT_MAX_FACES, DEFAULT_MAX_N};
use hdepth::report::ReportDocument;
use hdepth::verify::Options;

#[derive(Parser)]
#[command(name = "hdepth", version, about = "Hilbert depth, dimension and depth of J/I for squarefree monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Homology coefficients: 0 for the rationals, or a prime p.
    #[arg(long, default_value_t = 0)]
    field: u64,
    /// Largest n for subset enumeration.
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
    /// Largest face count handed to the homology routines.
    #[arg(long, default_value_t = DEFAULT_MAX_FACES)]
    max_faces: usize,
    /// Also write the report as JSON to this path.
    #[arg(long)]
    json: Option<PathBuf>,
}

impl Common {
    fn options(&self) -> anyhow::Result<Options> {
        Ok(Options {
            field: CoefficientField::from_characteristic(self.field)?,
            limits: Limits {
                max_n: self.max_n,
                max_faces: self.max_faces,
            },
            skip_depth: false,
            include_h_vector: false,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// α-vector, β table, Hilbert depth and dimension.
    Invariants {
        file: PathBuf,
        /// Include the h-vector β^d.
        #[arg(long)]
        h_vector: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Depth and the Cohen–Macaulay verdict via simplicial homology.
    Depth {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Compute everything and check every known relation.
    Verify {
        /// Problem file; optional with --random.
        file: Option<PathBuf>,
        /// Omit the homology computations.
        #[arg(long)]
        skip_depth: bool,
        /// Check this many random instances instead of a file.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Largest n for random instances.
        #[arg(long, default_value_t = 6)]
        random_max_n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Run a directory of problem files against their golden reports.
    Corpus {
        dir: PathBuf,
        /// Write missing or stale goldens instead of failing.
        #[arg(long)]
        bless: bool,
    },
}

fn emit(doc: &ReportDocument, json: Option<&Path>) -> anyhow::Result<()> {
    print!("{}", doc.to_text());
    if let Some(path) = json {
        fs::write(path, doc.to_json()).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn run() -> anyhow::Result<bool> {
    match Cli::parse().command {
        Command::Invariants {
            file,
            h_vector,
            common,
        } => {
            let options = Options {
                include_h_vector: h_vector,
                ..common.options()?
            };
            let doc = cli::cmd_invariants(&ProblemFile::read(&file)?, &options)?;
            emit(&doc, common.json.as_deref())?;
            Ok(true)
        }
        Command::Depth { file, common } => {
            let doc = cli::cmd_depth(&ProblemFile::read(&file)?, &common.options()?)?;
            emit(&doc, common.json.as_deref())?;
            Ok(true)
        }
        Command::Verify {
            file,
            skip_depth,
            random,
            seed,
            random_max_n,
            common,
        } => {
            let options = Options {
                skip_depth,
                ..common.options()?
            };
            if let Some(count) = random {
                let summary = cli::random_sweep(count, seed, random_max_n, &options)?;
                println!(
                    "random sweep: {} instances (seed {seed}), {} checks passed, {} skipped, {} failed",
                    summary.instances,
                    summary.checks_passed,
                    summary.checks_skipped,
                    summary.failures.len()
                );
                for (instance, name, details) in &summary.failures {
                    println!("  FAIL {name} on {instance}: {details}");
                }
                return Ok(summary.failures.is_empty());
            }
            let Some(file) = file else {
                bail!("verify needs a problem file or --random <count>");
            };
            let doc = cli::cmd_verify(&ProblemFile::read(&file)?, &options)?;
            emit(&doc, common.json.as_deref())?;
            Ok(doc
                .checks
                .iter()
                .all(|c| c.status != hdepth::report::CheckStatus::Fail))
        }
        Command::Corpus { dir, bless } => {
            let summary = cli::cmd_corpus(&dir, bless)?;
            for (path, outcome) in &summary.entries {
                let name = path.display();
                match outcome {
                    CorpusOutcome::Pass => println!("ok       {name}"),
                    CorpusOutcome::Blessed => println!("blessed  {name}"),
                    CorpusOutcome::MissingGolden => println!("MISSING  {name}: no golden report"),
                    CorpusOutcome::Diff {
                        line,
                        expected,
                        actual,
                    } => println!(
                        "DIFF     {name}: line {line}\n  expected: {expected}\n  actual:   {actual}"
                    ),
                    CorpusOutcome::FailedChecks(names) => {
                        println!("FAIL     {name}: checks {}", names.join(", "))
                    }
                    CorpusOutcome::Error(e) => println!("ERROR    {name}: {e}"),
                }
            }
            let passed = summary
                .entries
                .iter()
                .filter(|(_, o)| matches!(o, CorpusOutcome::Pass | CorpusOutcome::Blessed))
                .count();
            println!("{passed}/{} corpus entries passed", summary.entries.len());
            Ok(summary.all_passed())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
