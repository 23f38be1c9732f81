//! Thin batch front end over the library: one subcommand per job kind, a
//! JSON job file per run, deterministic reports.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gradus::jobs::{run_job, JobError, JobOptions, EXIT_INPUT};

#[derive(Parser)]
#[command(
    name = "gradus",
    about = "Exact degree-like functions, Bezout bounds and sparse-system equality checks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct JobArgs {
    /// JSON job file with "inputs" and optional "options"
    #[arg(long)]
    job: PathBuf,
    /// write the JSON report here as well
    #[arg(long)]
    out: Option<PathBuf>,
    /// RNG seed; overrides the job file
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a degree function on polynomials
    Eval(JobArgs),
    /// Sweep the degree-like / semidegree axioms
    Axioms(JobArgs),
    /// Evaluate an iterated semidegree and print its presentation
    Iterate(JobArgs),
    /// Build the quasidegree of a polytope and evaluate it
    Polytope(JobArgs),
    /// Degree ratio, fiber bound and optional fiber counts
    Bezout(JobArgs),
    /// Count a two-variable fiber by shear and resultant
    Count(JobArgs),
    /// Mixed-volume bound, torus count, degeneracy and the equality verdict
    Bernstein(JobArgs),
    /// Build a filtration from a certificate
    ReesBuild(JobArgs),
    /// Check preservation at infinity for a filtration
    ReesCheck(JobArgs),
    /// Normalized degree probe delta(h^m)/m
    Probe(JobArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Eval(_) => "eval",
            Command::Axioms(_) => "axioms",
            Command::Iterate(_) => "iterate",
            Command::Polytope(_) => "polytope",
            Command::Bezout(_) => "bezout",
            Command::Count(_) => "count",
            Command::Bernstein(_) => "bernstein",
            Command::ReesBuild(_) => "rees-build",
            Command::ReesCheck(_) => "rees-check",
            Command::Probe(_) => "probe",
        }
    }

    fn args(&self) -> &JobArgs {
        match self {
            Command::Eval(a)
            | Command::Axioms(a)
            | Command::Iterate(a)
            | Command::Polytope(a)
            | Command::Bezout(a)
            | Command::Count(a)
            | Command::Bernstein(a)
            | Command::ReesBuild(a)
            | Command::ReesCheck(a)
            | Command::Probe(a) => a,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let args = cli.command.args();

    let mut defaults = JobOptions::default();
    if let Ok(bound) = std::env::var("GRADUS_DEGREE_BOUND") {
        match bound.parse::<i64>() {
            Ok(b) if b > 0 => defaults.degree_bound = b,
            _ => {
                eprintln!("error: GRADUS_DEGREE_BOUND must be a positive integer");
                return ExitCode::from(EXIT_INPUT as u8);
            }
        }
    }
    if let Some(seed) = args.seed {
        defaults.seed = seed;
    }

    let text = match std::fs::read_to_string(&args.job) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.job.display());
            return ExitCode::from(EXIT_INPUT as u8);
        }
    };
    let job: serde_json::Value = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {}: invalid JSON: {e}", args.job.display());
            return ExitCode::from(EXIT_INPUT as u8);
        }
    };

    match run_job(cli.command.name(), &job, &defaults) {
        Ok(output) => {
            println!("{}", output.text);
            if let Some(out) = &args.out {
                let rendered = serde_json::to_string_pretty(&output.report)
                    .expect("reports serialize");
                if let Err(e) = std::fs::write(out, rendered) {
                    eprintln!("error: cannot write {}: {e}", out.display());
                    return ExitCode::from(EXIT_INPUT as u8);
                }
            }
            ExitCode::from(output.exit_code as u8)
        }
        Err(err @ (JobError::Schema { .. } | JobError::Input(_))) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_INPUT as u8)
        }
        Err(err @ JobError::Internal(_)) => {
            eprintln!("error: {err}");
            ExitCode::from(3)
        }
    }
}
