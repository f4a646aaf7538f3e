use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ndlu_cli::io::{parse_columns, read_csv_file, read_dump, write_dump};
use ndlu_cli::{bench, render_bench, run_workload, sort_online, verify, Scenario, Workload};
use ndlu_core::{Approach, FrontSet, TreeVariant};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "ndlu",
    version,
    about = "Maintain non-domination levels under online insertion and deletion"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sort a CSV population online, one solution at a time in file order
    Sort {
        /// CSV with header `id,obj_1,...,obj_M`
        input: PathBuf,
        #[command(flatten)]
        common: Common,
        /// Comma-separated 1-based objective columns to maximize
        #[arg(long, value_name = "COLS")]
        negate: Option<String>,
        /// Write the final front set as JSON
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Execute a workload of inserts, deletes and lookups
    Run {
        /// Workload file; when omitted a seeded random workload is generated
        workload: Option<PathBuf>,
        /// Start from this front-set dump instead of an empty set
        #[arg(long = "fs", value_name = "DUMP")]
        initial: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
        /// Seed of the generated workload
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Length of the generated workload
        #[arg(long, default_value_t = 200)]
        steps: usize,
        /// Objective count of the generated workload on an empty set
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// Write the final front set as JSON
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare measured comparison counts with their closed forms
    Bench {
        #[arg(value_enum)]
        scenario: ScenarioArg,
        #[arg(long)]
        n: usize,
        /// Number of fronts (equal-fronts only)
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// Restrict to one approach (default: all three)
        #[arg(long, value_enum)]
        approach: Option<ApproachArg>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
    /// Check a front-set dump against the level invariants and a full re-sort
    Verify {
        dump: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value_t = ApproachArg::Linear)]
    approach: ApproachArg,
    /// Validate after every step and compare with a full re-sort
    #[arg(long)]
    check: bool,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    report: ReportFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum ApproachArg {
    Linear,
    Ltree,
    Rtree,
}

impl From<ApproachArg> for Approach {
    fn from(a: ApproachArg) -> Self {
        match a {
            ApproachArg::Linear => Approach::Linear,
            ApproachArg::Ltree => Approach::Tree(TreeVariant::LeftBalanced),
            ApproachArg::Rtree => Approach::Tree(TreeVariant::RightBalanced),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ScenarioArg {
    Chain,
    Antichain,
    EqualFronts,
    WorstTwoFront,
}

impl From<ScenarioArg> for Scenario {
    fn from(s: ScenarioArg) -> Self {
        match s {
            ScenarioArg::Chain => Scenario::Chain,
            ScenarioArg::Antichain => Scenario::Antichain,
            ScenarioArg::EqualFronts => Scenario::EqualFronts,
            ScenarioArg::WorstTwoFront => Scenario::WorstTwoFront,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

fn emit<T: Serialize + std::fmt::Display>(format: ReportFormat, report: &T) {
    match format {
        ReportFormat::Text => print!("{report}"),
        ReportFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(report).expect("report serializes")
        ),
    }
}

fn status(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn execute(cli: Cli) -> Result<ExitCode> {
    let started = Instant::now();
    let code = match cli.command {
        Command::Sort {
            input,
            common,
            negate,
            out,
        } => {
            let negate = negate
                .as_deref()
                .map(parse_columns)
                .transpose()?
                .unwrap_or_default();
            let stream = read_csv_file(&input, &negate)?;
            let (fs, report) = sort_online(&stream, common.approach.into(), common.check)?;
            if let Some(out) = out {
                write_dump(&out, &fs)?;
            }
            emit(common.report, &report);
            status(report.passed())
        }
        Command::Run {
            workload,
            initial,
            common,
            seed,
            steps,
            m,
            out,
        } => {
            let fs = match initial {
                Some(path) => {
                    let fs = read_dump(&path)?;
                    if let Some(v) = ndlu_core::validate(&fs).first() {
                        bail!("{} is not a valid front set: {v}", path.display());
                    }
                    fs
                }
                None => FrontSet::new(),
            };
            let workload = match workload {
                Some(path) => Workload::read(&path)?,
                None => {
                    if m < 2 {
                        bail!("--m must be at least 2");
                    }
                    Workload::fuzz(seed, steps, m, &fs)
                }
            };
            let (fs, report) = run_workload(fs, &workload, common.approach.into(), common.check)?;
            if let Some(out) = out {
                write_dump(&out, &fs)?;
            }
            emit(common.report, &report);
            status(report.passed())
        }
        Command::Bench {
            scenario,
            n,
            k,
            m,
            approach,
            report,
        } => {
            let approaches: Vec<Approach> = match approach {
                Some(a) => vec![a.into()],
                None => Approach::ALL.to_vec(),
            };
            let rows = bench(scenario.into(), n, k, m, &approaches)?;
            match report {
                ReportFormat::Text => print!("{}", render_bench(&rows)),
                ReportFormat::Json => println!("{}", serde_json::to_string_pretty(&rows)?),
            }
            status(rows.iter().all(|r| r.pass))
        }
        Command::Verify { dump, report } => {
            let fs = read_dump(&dump)?;
            let r = verify(&fs)?;
            emit(report, &r);
            status(r.pass)
        }
    };
    eprintln!("elapsed: {:.3?}", started.elapsed());
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
