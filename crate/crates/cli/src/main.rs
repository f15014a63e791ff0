//! `mqdc`: dense-coding advantage vs. genuine multipartite entanglement.

mod angle;
mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use mqdc_core::complementarity::{analyze, audit, sweep_ghz, sweep_w, AnalyzeOptions, AuditOptions, Grid};
use mqdc_core::linalg::DimensionProfile;
use mqdc_core::rel_ent::{er_heuristic, ErConfig};
use mqdc_core::states::{
    make_ghz, make_w, mix_with_white_noise, read_state, sample_haar_pure, sample_mixed_hs, write_state, Ensemble,
    EnsembleSpec, State,
};
use mqdc_core::Error;

use angle::parse_angle;

const EXIT_USAGE: u8 = 1;
const EXIT_INVALID_STATE: u8 = 2;
const EXIT_GUARD: u8 = 3;
const EXIT_VIOLATION: u8 = 4;

#[derive(Parser)]
#[command(name = "mqdc", version, about = "Multiport dense-coding advantage and genuine multipartite entanglement")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named or random state to a JSON state file.
    Make(MakeArgs),
    /// Full complementarity report for a state file.
    Check(CheckArgs),
    /// Sweep delta_C over the generalized GHZ or W family.
    Sweep(SweepArgs),
    /// Check the complementarity bounds over a random ensemble.
    Audit(AuditArgs),
    /// Relative-entropy-of-entanglement bounds for a state file.
    RelEnt(RelEntArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MakeFamily {
    Ghz,
    W,
    HaarPure,
    HsMixed,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepFamily {
    Ghz,
    W,
}

#[derive(Args)]
struct MakeArgs {
    #[arg(long, value_enum)]
    family: MakeFamily,
    #[arg(long, value_parser = parse_angle, default_value = "pi/4", allow_hyphen_values = true)]
    theta: f64,
    #[arg(long, value_parser = parse_angle, default_value = "pi/4", allow_hyphen_values = true)]
    phi: f64,
    #[arg(long, default_value_t = 3)]
    parties: usize,
    #[arg(long, default_value_t = 2)]
    dim: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Mix the state with white noise of this weight.
    #[arg(long)]
    noise: Option<f64>,
    #[arg(long, default_value = "")]
    label: String,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ErArgs {
    #[arg(long, default_value_t = 32)]
    restarts: usize,
    #[arg(long, default_value_t = 2000)]
    max_iters: usize,
    /// Ansatz size; defaults to D^2.
    #[arg(long)]
    max_terms: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl ErArgs {
    fn config(&self) -> ErConfig {
        ErConfig {
            restarts: self.restarts,
            max_terms: self.max_terms,
            max_iters: self.max_iters,
            seed: self.seed,
            ..ErConfig::default()
        }
    }
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    state: PathBuf,
    /// Also run the relative-entropy minimizer.
    #[arg(long)]
    er: bool,
    #[command(flatten)]
    er_args: ErArgs,
    /// Party to treat as the sender (moved to position 0).
    #[arg(long, default_value_t = 0)]
    sender: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    family: SweepFamily,
    #[arg(long, value_parser = parse_angle, default_value = "0", allow_hyphen_values = true)]
    theta_min: f64,
    #[arg(long, value_parser = parse_angle, default_value = "pi", allow_hyphen_values = true)]
    theta_max: f64,
    #[arg(long, default_value_t = 201)]
    steps: usize,
    #[arg(long, value_parser = parse_angle, default_value = "0", allow_hyphen_values = true)]
    phi_min: f64,
    #[arg(long, value_parser = parse_angle, default_value = "2pi", allow_hyphen_values = true)]
    phi_max: f64,
    #[arg(long, default_value_t = 101)]
    phi_steps: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AuditArgs {
    #[arg(long, value_parser = parse_ensemble)]
    ensemble: Ensemble,
    #[arg(long, default_value_t = 3)]
    parties: usize,
    #[arg(long, default_value_t = 2)]
    dim: usize,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    noise: Option<f64>,
    /// Use the relative-entropy minimizer for the E_R bound.
    #[arg(long)]
    er: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RelEntArgs {
    #[arg(long)]
    state: PathBuf,
    #[command(flatten)]
    er_args: ErArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_ensemble(s: &str) -> Result<Ensemble, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    /// Errors while loading or validating a state file.
    fn state(e: Error) -> Self {
        match e {
            Error::GuardExceeded(_) => Self::from(e),
            other => Self {
                code: EXIT_INVALID_STATE,
                message: format!("invalid state input: {other}"),
            },
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::GuardExceeded(_) => EXIT_GUARD,
            e if e.is_invalid_state() => EXIT_INVALID_STATE,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Failure::usage(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn load_state(path: &PathBuf) -> Result<(State, String), Failure> {
    read_state(path).map_err(|e| match e {
        Error::Io(io) => Failure {
            code: EXIT_INVALID_STATE,
            message: format!("cannot read {}: {io}", path.display()),
        },
        other => Failure::state(other),
    })
}

fn cmd_make(a: &MakeArgs) -> Result<u8, Failure> {
    let pure = match a.family {
        MakeFamily::Ghz => Some(make_ghz(a.theta)),
        MakeFamily::W => Some(make_w(a.theta, a.phi)),
        MakeFamily::HaarPure => Some(sample_haar_pure(&DimensionProfile::uniform(a.parties, a.dim)?, a.seed)),
        MakeFamily::HsMixed => None,
    };
    let state = match (pure, a.noise) {
        (Some(psi), None) => State::Pure(psi),
        (Some(psi), Some(p)) => State::Mixed(mix_with_white_noise(&psi, p)?),
        (None, noise) => {
            if noise.is_some() {
                return Err(Failure::usage("--noise is not supported for hs-mixed"));
            }
            State::Mixed(sample_mixed_hs(&DimensionProfile::uniform(a.parties, a.dim)?, a.seed))
        }
    };
    write_state(&state, &a.label, &a.out)?;
    Ok(0)
}

fn sender_first(state: State, sender: usize) -> Result<State, Failure> {
    let n = state.profile().parties();
    if sender >= n {
        return Err(Failure::usage(format!("sender {sender} out of range for {n} parties")));
    }
    if sender == 0 {
        return Ok(state);
    }
    let order: Vec<usize> = std::iter::once(sender).chain((0..n).filter(|&p| p != sender)).collect();
    Ok(state.permute_parties(&order)?)
}

fn cmd_check(a: &CheckArgs) -> Result<u8, Failure> {
    let (state, _) = load_state(&a.state)?;
    let state = sender_first(state, a.sender)?;
    let report = analyze(
        &state,
        &AnalyzeOptions {
            compute_er: a.er,
            er_config: a.er_args.config(),
            decomposition: None,
        },
    )
    .map_err(Failure::state)?;
    let text = match a.format {
        Format::Json => to_json(&report)?,
        Format::Csv => output::report_csv(&report),
    };
    emit(&text, a.out.as_ref())?;
    Ok(0)
}

fn cmd_sweep(a: &SweepArgs) -> Result<u8, Failure> {
    let theta = Grid::new(a.theta_min, a.theta_max, a.steps).map_err(|e| Failure::usage(e.to_string()))?;
    let (rows, with_phi) = match a.family {
        SweepFamily::Ghz => (sweep_ghz(&theta)?, false),
        SweepFamily::W => {
            let phi = Grid::new(a.phi_min, a.phi_max, a.phi_steps).map_err(|e| Failure::usage(e.to_string()))?;
            (sweep_w(&theta, &phi)?, true)
        }
    };
    let text = match a.format {
        Format::Csv => output::sweep_csv(&rows, with_phi),
        Format::Json => to_json(&rows)?,
    };
    emit(&text, a.out.as_ref())?;
    Ok(0)
}

fn cmd_audit(a: &AuditArgs) -> Result<u8, Failure> {
    let spec = EnsembleSpec {
        ensemble: a.ensemble,
        parties: a.parties,
        local_dim: a.dim,
        count: a.samples,
        seed: a.seed,
        noise: a.noise,
    };
    spec.validate().map_err(|e| match e {
        Error::DimensionOverflow(_) => Failure {
            code: EXIT_GUARD,
            message: e.to_string(),
        },
        e => Failure::usage(e.to_string()),
    })?;
    let summary = audit(
        &spec,
        &AuditOptions {
            compute_er: a.er,
            er_config: ErConfig::default(),
        },
    )?;
    emit(&to_json(&summary)?, a.out.as_ref())?;
    Ok(if summary.violations.is_empty() { 0 } else { EXIT_VIOLATION })
}

fn cmd_rel_ent(a: &RelEntArgs) -> Result<u8, Failure> {
    let (state, _) = load_state(&a.state)?;
    let bounds = er_heuristic(&state, &a.er_args.config()).map_err(Failure::state)?;
    emit(&to_json(&bounds)?, a.out.as_ref())?;
    Ok(0)
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("MQDC_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::usage(format!("MQDC_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::usage(e.to_string()))
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    configure_threads()?;
    match &cli.command {
        Command::Make(a) => cmd_make(a),
        Command::Check(a) => cmd_check(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Audit(a) => cmd_audit(a),
        Command::RelEnt(a) => cmd_rel_ent(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("mqdc: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
