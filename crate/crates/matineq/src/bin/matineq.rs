//! Command line front end: verification batches, sharpness probes,
//! counterexample hunts, and instance replay.
//!
//! Exit codes: 0 = all checks hold / no counterexample; 1 = violation or
//! counterexample found; 2 = configuration or hypothesis error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use matineq::laws::{self, TolerancePolicy};
use matineq::search::{self, ProblemId, SearchConfig, SearchVerdict};
use matineq::io;

#[derive(Parser)]
#[command(name = "matineq", version, about = "Numerical verification laboratory for matrix inequalities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a law on random hypothesis-valid instances, or replay one
    /// instance file.
    Verify(VerifyArgs),
    /// Probe how close random/perturbed instances get to a multiplicative
    /// bound.
    Sharpness(SharpnessArgs),
    /// Hunt for counterexamples to an open problem or failure regime.
    Hunt(HuntArgs),
    /// List the law registry.
    List,
}

#[derive(Args)]
struct VerifyArgs {
    /// Law id, e.g. L-HLP.
    #[arg(long)]
    law: Option<String>,
    /// Replay a saved instance file instead of generating.
    #[arg(long)]
    instance: Option<PathBuf>,
    #[arg(long, default_value_t = 100)]
    trials: u64,
    /// Inclusive dimension range lo..hi, a single dim, or a comma list.
    #[arg(long, default_value = "2..4")]
    dims: String,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long = "rel-tol")]
    rel_tol: Option<f64>,
    #[arg(long = "abs-tol")]
    abs_tol: Option<f64>,
    /// Write the report JSON here (stdout otherwise).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the worst instance (minimum slack) as a replayable file.
    #[arg(long = "dump-worst")]
    dump_worst: Option<PathBuf>,
}

#[derive(Args)]
struct SharpnessArgs {
    #[arg(long)]
    law: String,
    #[arg(long, default_value_t = 3)]
    dim: usize,
    #[arg(long, default_value_t = 10_000)]
    budget: u64,
    #[arg(long, default_value_t = 16)]
    restarts: u32,
    #[arg(long = "step-scale", default_value_t = 0.3)]
    step_scale: f64,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct HuntArgs {
    /// Problem id: DET-ANTIMONOTONE-ALL-SUBSPACES, SCHATTEN-P-IN-1-2,
    /// SCHATTEN-P-GT-2.
    #[arg(long)]
    problem: String,
    #[arg(long, default_value_t = 3)]
    dim: usize,
    #[arg(long, default_value_t = 100_000)]
    budget: u64,
    #[arg(long, default_value_t = 16)]
    restarts: u32,
    #[arg(long = "step-scale", default_value_t = 0.3)]
    step_scale: f64,
    /// Schatten exponent for the Schatten problems.
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn default_seed(cli_seed: Option<u64>) -> u64 {
    cli_seed
        .or_else(|| {
            std::env::var("MATINEQ_SEED")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(0)
}

fn parse_dims(text: &str) -> Result<Vec<usize>, String> {
    let text = text.trim();
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(|_| format!("bad dims range {text:?}"))?;
        let hi: usize = hi.trim().parse().map_err(|_| format!("bad dims range {text:?}"))?;
        if lo == 0 || hi < lo {
            return Err(format!("dims range {text:?} must satisfy 1 <= lo <= hi"));
        }
        return Ok((lo..=hi).collect());
    }
    let dims: Result<Vec<usize>, _> = text.split(',').map(|p| p.trim().parse::<usize>()).collect();
    let dims = dims.map_err(|_| format!("bad dims {text:?}"))?;
    if dims.is_empty() || dims.contains(&0) {
        return Err(format!("dims {text:?} must be positive"));
    }
    Ok(dims)
}

fn timestamp() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

#[derive(Serialize)]
struct TimestampedReport<T: Serialize> {
    #[serde(flatten)]
    body: T,
    timestamp_unix_s: u64,
}

fn emit<T: Serialize>(out: Option<&PathBuf>, body: T) -> Result<(), String> {
    let doc = TimestampedReport {
        body,
        timestamp_unix_s: timestamp(),
    };
    let text = serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?;
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| e.to_string())?,
        None => println!("{text}"),
    }
    Ok(())
}

fn tolerance(rel: Option<f64>, abs: Option<f64>) -> TolerancePolicy {
    let mut tol = TolerancePolicy::default();
    if let Some(rel) = rel {
        tol.rel = rel;
    }
    if let Some(abs) = abs {
        tol.abs = abs;
    }
    tol
}

fn run_verify(args: &VerifyArgs) -> Result<ExitCode, String> {
    let tol = tolerance(args.rel_tol, args.abs_tol);

    if let Some(path) = &args.instance {
        let inst = io::load_instance(path).map_err(|e| e.to_string())?;
        let verdict = laws::check_by_id(&inst.law, &inst, &tol).map_err(|e| e.to_string())?;
        let holds = verdict.holds;
        let hypothesis_ok = verdict.hypothesis_ok;
        emit(args.out.as_ref(), &verdict)?;
        return Ok(match (hypothesis_ok, holds) {
            (false, _) => ExitCode::from(2),
            (true, Some(true)) => ExitCode::SUCCESS,
            _ => ExitCode::from(1),
        });
    }

    let law = args
        .law
        .as_ref()
        .ok_or("verify needs --law or --instance")?;
    let dims = parse_dims(&args.dims)?;
    let seed = default_seed(args.seed);
    let report = laws::batch_verify(law, args.trials, &dims, seed, &tol).map_err(|e| e.to_string())?;

    if let (Some(path), Some(key)) = (&args.dump_worst, &report.worst_instance) {
        let inst = laws::random_instance(&key.law, key.dim, key.seed).map_err(|e| e.to_string())?;
        io::save_instance(path, &inst).map_err(|e| e.to_string())?;
    }

    let violations = report.violations;
    emit(args.out.as_ref(), &report)?;
    Ok(if violations == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_sharpness(args: &SharpnessArgs) -> Result<ExitCode, String> {
    let cfg = SearchConfig {
        budget: args.budget,
        restarts: args.restarts,
        step_scale: args.step_scale,
        dim: args.dim,
        seed: default_seed(args.seed),
        exponent: None,
    };
    let result = search::sharpness_search(&args.law, &cfg).map_err(|e| e.to_string())?;
    let verdict = result.verdict;
    emit(args.out.as_ref(), &result)?;
    Ok(if verdict == SearchVerdict::CounterexampleFound {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn run_hunt(args: &HuntArgs) -> Result<ExitCode, String> {
    let problem: ProblemId = args.problem.parse()?;
    let mut cfg = SearchConfig {
        budget: args.budget,
        restarts: args.restarts,
        step_scale: args.step_scale,
        dim: args.dim,
        seed: default_seed(args.seed),
        exponent: args.p,
    };
    if cfg.exponent.is_none() {
        cfg.exponent = match problem {
            ProblemId::SchattenPGt2 => Some(4.0),
            ProblemId::SchattenPIn1To2 => Some(1.5),
            ProblemId::DetAntimonotoneAllSubspaces => None,
        };
    }
    let result = search::counterexample_hunt(problem, &cfg).map_err(|e| e.to_string())?;
    let verdict = result.verdict;
    emit(args.out.as_ref(), &result)?;
    Ok(if verdict == SearchVerdict::CounterexampleFound {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn run_list() -> ExitCode {
    for def in laws::registry() {
        println!("{:<22} {}", def.id, def.summary);
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Verify(args) => run_verify(args),
        Command::Sharpness(args) => run_sharpness(args),
        Command::Hunt(args) => run_hunt(args),
        Command::List => return run_list(),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
