//! The `emo-lab` command line: `sweep`, `run`, `oracle` and `plot`.
//!
//! Exit codes: 0 success, 2 usage or validation failure, 3 I/O failure.
//! Every subcommand echoes its fully resolved configuration to stderr (as
//! `#`-prefixed lines) before doing any work; data goes to stdout or files.

mod plot;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::evolve::{run_traced, AlgorithmConfig, RunResult};
use crate::lab::{
    preset, read_summary_csv, reference_seed, run_experiment, summarize, write_summary_csv,
    write_trials_csv, ExperimentPlan,
};
use crate::problems::{
    default_reference_point, enumerate_pareto_front, pareto_front_closed_form, NkInstance,
    ProblemSpec,
};
use crate::space::{ObjectiveVector, RngStream};

pub use plot::render_svg;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_IO: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "emo-lab",
    version,
    about = "NSGA-II vs R-NSGA-II runtime experiments"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a preset or plan file and write trials.csv and summary.csv.
    Sweep(SweepArgs),
    /// Run a single seeded optimization and print its result as JSON.
    Run(RunArgs),
    /// Print a problem's Pareto front, one objective vector per line.
    Oracle(OracleArgs),
    /// Draw an SVG line chart from a summary CSV.
    Plot(PlotArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProblemName {
    Omm,
    Ojzj,
    Ommstar,
    Nk,
}

impl ProblemName {
    fn as_str(&self) -> &'static str {
        match self {
            Self::Omm => "omm",
            Self::Ojzj => "ojzj",
            Self::Ommstar => "ommstar",
            Self::Nk => "nk",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Nsga2,
    Rnsga2,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Built-in experiment.
    #[arg(
        long,
        value_enum,
        required_unless_present = "plan",
        conflicts_with = "plan"
    )]
    pub preset: Option<ProblemName>,
    /// JSON plan file.
    #[arg(long)]
    pub plan: Option<PathBuf>,
    /// Override runs per cell (for NK this is also the instance count).
    #[arg(long)]
    pub runs: Option<usize>,
    /// Override the master seed.
    #[arg(long, env = "EMO_LAB_SEED")]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = default_parallelism())]
    pub parallelism: usize,
    /// Output directory.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct ProblemArgs {
    #[arg(long, value_enum)]
    pub problem: ProblemName,
    #[arg(long)]
    pub n: usize,
    /// Jump width for ojzj (default 2) or epistasis K for nk (default 3).
    #[arg(long)]
    pub k: Option<usize>,
}

impl ProblemArgs {
    fn resolve(&self, nk_seed: u64) -> Result<ProblemSpec, CliError> {
        let p = match self.problem {
            ProblemName::Omm => ProblemSpec::one_min_max(self.n)?,
            ProblemName::Ojzj => ProblemSpec::one_jump_zero_jump(self.n, self.k.unwrap_or(2))?,
            ProblemName::Ommstar => ProblemSpec::one_min_max_star(self.n)?,
            ProblemName::Nk => ProblemSpec::nk_landscape(NkInstance::generate(
                self.n,
                self.k.unwrap_or(3),
                nk_seed,
            )?),
        };
        Ok(p)
    }
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long, value_enum, default_value = "rnsga2")]
    pub algorithm: Algorithm,
    /// Population size; defaults to 4(n+1).
    #[arg(long)]
    pub pop_size: Option<usize>,
    /// Run seed, also the NK instance seed.
    #[arg(long, env = "EMO_LAB_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub max_evals: Option<u64>,
    /// Write a per-generation CSV trace here.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Enumerate all 2^n solutions instead of using the closed form (always on for nk).
    #[arg(long)]
    pub enumerate: bool,
    /// NK instance seed.
    #[arg(long, env = "EMO_LAB_SEED", default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    /// summary.csv produced by `sweep`.
    pub summary: PathBuf,
    /// Output SVG file.
    #[arg(long)]
    pub out: PathBuf,
    /// Logarithmic y axis.
    #[arg(long)]
    pub log_y: bool,
}

fn default_parallelism() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    pub fn io(context: &Path, err: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_IO,
            message: format!("{}: {err}", context.display()),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Io(_) => EXIT_IO,
            Error::Csv(c) if matches!(c.kind(), csv::ErrorKind::Io(_)) => EXIT_IO,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        Self {
            code: EXIT_IO,
            message: e.to_string(),
        }
    }
}

type CliResult = Result<(), CliError>;

/// Parses `args` (including the program name) and runs the subcommand.
/// Returns the process exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code() as u8;
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

pub fn execute(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    match cmd {
        Command::Sweep(a) => cmd_sweep(a, out, err),
        Command::Run(a) => cmd_run(a, out, err),
        Command::Oracle(a) => cmd_oracle(a, out, err),
        Command::Plot(a) => cmd_plot(a, out, err),
    }
}

/// The plan a sweep will execute, after applying overrides.
pub fn resolve_plan(args: &SweepArgs) -> Result<ExperimentPlan, CliError> {
    let mut plan = match (&args.preset, &args.plan) {
        (Some(name), _) => preset(name.as_str())
            .ok_or_else(|| CliError::usage(format!("unknown preset {}", name.as_str())))?,
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| {
                CliError::usage(format!("cannot read plan {}: {e}", path.display()))
            })?;
            serde_json::from_str(&text)
                .map_err(|e| CliError::usage(format!("invalid plan {}: {e}", path.display())))?
        }
        (None, None) => return Err(CliError::usage("either --preset or --plan is required")),
    };
    if let Some(runs) = args.runs {
        plan = plan.with_runs(runs);
    }
    if let Some(seed) = args.seed {
        plan = plan.with_seed(seed);
    }
    plan.validate()?;
    Ok(plan)
}

fn echo_config<T: Serialize>(err: &mut dyn Write, what: &str, value: &T) -> io::Result<()> {
    let json = serde_json::to_string_pretty(value).expect("configuration serializes");
    writeln!(err, "# {what}")?;
    for line in json.lines() {
        writeln!(err, "# {line}")?;
    }
    Ok(())
}

pub fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let plan = resolve_plan(args)?;
    echo_config(
        err,
        "effective plan (save as a --plan file to reproduce)",
        &plan,
    )?;
    writeln!(err, "# master seed: {}", plan.master_seed)?;
    writeln!(err, "# parallelism: {}", args.parallelism)?;

    fs::create_dir_all(&args.out).map_err(|e| CliError::io(&args.out, e))?;
    let records = run_experiment(&plan, args.parallelism)?;
    let summary = summarize(&records)?;

    let trials_path = args.out.join("trials.csv");
    let file = fs::File::create(&trials_path).map_err(|e| CliError::io(&trials_path, e))?;
    write_trials_csv(io::BufWriter::new(file), &records)
        .map_err(|e| CliError::io(&trials_path, e))?;
    let summary_path = args.out.join("summary.csv");
    let file = fs::File::create(&summary_path).map_err(|e| CliError::io(&summary_path, e))?;
    write_summary_csv(io::BufWriter::new(file), &summary)
        .map_err(|e| CliError::io(&summary_path, e))?;

    write_summary_csv(&mut *out, &summary)?;
    writeln!(
        err,
        "# wrote {} trials to {} and {} summary rows to {}",
        records.len(),
        trials_path.display(),
        summary.len(),
        summary_path.display()
    )?;
    Ok(())
}

#[derive(Serialize)]
struct RunReport<'a> {
    problem: String,
    algorithm: &'a str,
    pop_size: usize,
    reference_point: ObjectiveVector,
    max_evaluations: Option<u64>,
    seed: u64,
}

pub fn cmd_run(args: &RunArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let problem = args.problem.resolve(args.seed)?;
    let n = problem.n();
    let mut rng = RngStream::from_seed(reference_seed(args.seed));
    let z = default_reference_point(&problem, &mut rng)?;
    let pop_size = args.pop_size.unwrap_or(4 * (n + 1));
    let (config, algorithm) = match args.algorithm {
        Algorithm::Nsga2 => (AlgorithmConfig::nsga2(pop_size, z), "nsga2"),
        Algorithm::Rnsga2 => (AlgorithmConfig::rnsga2(pop_size, z), "rnsga2"),
    };
    let config = config.with_max_evaluations(args.max_evals);
    config.validate(&problem)?;
    echo_config(
        err,
        "run configuration",
        &RunReport {
            problem: problem.to_string(),
            algorithm,
            pop_size,
            reference_point: z,
            max_evaluations: args.max_evals,
            seed: args.seed,
        },
    )?;

    let front = match &problem {
        ProblemSpec::NkLandscape { .. } => enumerate_pareto_front(&problem, false).ok(),
        _ => pareto_front_closed_form(&problem).ok(),
    };
    let result: RunResult = match &args.trace {
        Some(path) => {
            let file = fs::File::create(path).map_err(|e| CliError::io(path, e))?;
            run_traced(
                &problem,
                &config,
                args.seed,
                front.as_ref(),
                io::BufWriter::new(file),
            )?
        }
        None => run_traced(&problem, &config, args.seed, None, io::sink())?,
    };
    serde_json::to_writer(&mut *out, &result).map_err(Error::from)?;
    writeln!(out)?;
    Ok(())
}

pub fn cmd_oracle(args: &OracleArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let problem = args.problem.resolve(args.seed)?;
    let enumerate = args.enumerate || matches!(problem, ProblemSpec::NkLandscape { .. });
    writeln!(err, "# problem: {problem}")?;
    writeln!(
        err,
        "# method: {}",
        if enumerate {
            "exhaustive enumeration"
        } else {
            "closed form"
        }
    )?;
    let front = if enumerate {
        enumerate_pareto_front(&problem, false)?
    } else {
        pareto_front_closed_form(&problem)?
    };
    for p in front.points() {
        writeln!(out, "{p}")?;
    }
    writeln!(err, "# front size: {}", front.len())?;
    Ok(())
}

pub fn cmd_plot(args: &PlotArgs, _out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    writeln!(err, "# summary: {}", args.summary.display())?;
    writeln!(err, "# out: {}", args.out.display())?;
    writeln!(err, "# log_y: {}", args.log_y)?;
    let file = fs::File::open(&args.summary).map_err(|e| CliError::io(&args.summary, e))?;
    let rows = read_summary_csv(io::BufReader::new(file)).map_err(|e| match e {
        Error::Csv(c) if matches!(c.kind(), csv::ErrorKind::Io(_)) => {
            CliError::io(&args.summary, c)
        }
        other => CliError::usage(format!(
            "malformed summary {}: {other}",
            args.summary.display()
        )),
    })?;
    let svg = render_svg(&rows, args.log_y).map_err(CliError::usage)?;
    fs::write(&args.out, svg).map_err(|e| CliError::io(&args.out, e))?;
    Ok(())
}
