//! Command-line surface and the implementation of each subcommand.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use qudit_pt::states::{phi_plus, werner, WernerSpec};
use qudit_pt::transforms::{momentum_distribution, partial_transpose_1, wigner};
use qudit_pt::witness::{negativity_oracle, ppt_verdict, ur_check};
use qudit_pt::{DensityLike, LatticeDim, Particles, UrVerdict};
use serde_json::json;

use crate::scan::{werner_scan, write_sweep, ScanConfig};
use crate::tables::{write_jpd, write_wigner};
use crate::{CliError, ExitCode, StateFile, DEFAULT_CLI_TOL};

/// Metadata key toggled by `ptranspose`.
const PT_KEY: &str = "partial_transpose_1";

#[derive(Debug, Parser)]
#[command(name = "qudit-pt", version, about = "Partial transposition and uncertainty-relation entanglement tests for qudit pairs")]
pub struct Cli {
    /// Numerical tolerance for every check.
    #[arg(long, global = true, env = "QW_TOL", default_value_t = DEFAULT_CLI_TOL)]
    pub tol: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Create or inspect state files.
    #[command(subcommand)]
    State(StateCommand),
    /// Partially transpose particle 1 of a two-particle state file.
    Ptranspose(InOut),
    /// Evaluate the uncertainty relation (exit 0 satisfied, 3 violated, 4 inconclusive).
    UrCheck(Input),
    /// Sweep Werner states over N and r and write a CSV table.
    WernerScan(ScanArgs),
    /// Dump the discrete Wigner function (odd prime N) as CSV.
    Wigner(InOut),
    /// Dump the momentum probability distribution as CSV.
    MomentumJpd(InOut),
    /// Negativity from the spectrum of the partial transpose.
    Negativity(Input),
    /// Positive-partial-transpose test.
    Ppt(Input),
}

#[derive(Debug, Subcommand)]
pub enum StateCommand {
    /// Write a Werner, Φ⁺ or maximally mixed state.
    Make(MakeArgs),
    /// Report Hermiticity, trace and positivity of a state file.
    Validate(Input),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StateKind {
    Werner,
    PhiPlus,
    Mixed,
}

#[derive(Debug, Args)]
pub struct MakeArgs {
    #[arg(long, value_enum)]
    pub kind: StateKind,
    #[arg(long = "n", visible_alias = "N")]
    pub n: usize,
    /// Werner mixing parameter.
    #[arg(long, allow_negative_numbers = true)]
    pub r: Option<f64>,
    /// Particle count for `mixed`.
    #[arg(long, default_value_t = 2)]
    pub particles: u32,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct Input {
    pub state: PathBuf,
}

#[derive(Debug, Args)]
pub struct InOut {
    pub state: PathBuf,
    /// Output path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Comma-separated lattice sizes.
    #[arg(long = "n", visible_alias = "N", value_delimiter = ',', required = true)]
    pub ns: Vec<usize>,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub r_min: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub r_max: f64,
    #[arg(long, default_value_t = 101)]
    pub steps: usize,
    /// Worker threads (0 = all cores). Output does not depend on it.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let tol = cli.tol;
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(CliError::InvalidArgs(format!("tolerance must be finite and non-negative, got {tol}")));
    }
    match cli.command {
        Command::State(StateCommand::Make(args)) => state_make(&args),
        Command::State(StateCommand::Validate(input)) => state_validate(&input.state, tol),
        Command::Ptranspose(io) => ptranspose(&io),
        Command::UrCheck(input) => cmd_ur_check(&input.state, tol),
        Command::WernerScan(args) => cmd_werner_scan(args, tol),
        Command::Wigner(io) => cmd_wigner(&io, tol),
        Command::MomentumJpd(io) => cmd_momentum_jpd(&io),
        Command::Negativity(input) => cmd_negativity(&input.state, tol),
        Command::Ppt(input) => cmd_ppt(&input.state, tol),
    }
}

fn load(path: &Path) -> Result<(StateFile, DensityLike), CliError> {
    let file = StateFile::read(path)?;
    let rho = file.to_density()?;
    Ok((file, rho))
}

fn with_output<F>(out: Option<&Path>, f: F) -> Result<(), CliError>
where
    F: FnOnce(&mut dyn Write) -> Result<(), CliError>,
{
    match out {
        Some(path) => {
            let file = File::create(path).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
            let mut w = BufWriter::new(file);
            f(&mut w)?;
            w.flush().map_err(|source| CliError::Io { path: path.to_owned(), source })
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            f(&mut lock)
        }
    }
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("json value serialises"));
}

fn state_make(args: &MakeArgs) -> Result<ExitCode, CliError> {
    let n = LatticeDim::new(args.n).map_err(|e| CliError::InvalidArgs(e.to_string()))?;
    let mut metadata = BTreeMap::new();
    let rho = match args.kind {
        StateKind::Werner => {
            let r = args.r.ok_or_else(|| CliError::InvalidArgs("--r is required for werner".into()))?;
            if !r.is_finite() {
                return Err(CliError::InvalidArgs(format!("r must be finite, got {r}")));
            }
            let spec = WernerSpec::new(n, r);
            if !spec.is_valid_state() {
                let n2 = (args.n * args.n) as f64;
                eprintln!(
                    "warning: not PSD: r = {r} lies outside [{}, 1], the result is not a valid state",
                    -1.0 / (n2 - 1.0)
                );
            }
            metadata.insert("kind".to_owned(), "werner".to_owned());
            metadata.insert("r".to_owned(), r.to_string());
            werner(spec)
        }
        StateKind::PhiPlus => {
            metadata.insert("kind".to_owned(), "phi-plus".to_owned());
            phi_plus(n)
        }
        StateKind::Mixed => {
            let particles = Particles::from_count(args.particles)
                .ok_or_else(|| CliError::InvalidArgs(format!("particles must be 1 or 2, got {}", args.particles)))?;
            metadata.insert("kind".to_owned(), "mixed".to_owned());
            DensityLike::maximally_mixed(n, particles)
        }
    };
    StateFile::from_density(&rho, metadata).write(&args.out)?;
    Ok(ExitCode::Success)
}

fn state_validate(path: &Path, tol: f64) -> Result<ExitCode, CliError> {
    let (_, rho) = load(path)?;
    let report = rho.validate(tol);
    print_json(&json!({
        "hermitian": report.hermitian,
        "unit_trace": report.unit_trace,
        "psd": report.psd,
        "trace": [report.trace.re, report.trace.im],
        "min_eigenvalue": report.min_eigenvalue,
        "bona_fide": report.is_state(),
    }));
    Ok(ExitCode::Success)
}

fn ptranspose(io: &InOut) -> Result<ExitCode, CliError> {
    let (file, rho) = load(&io.state)?;
    let pt = partial_transpose_1(&rho)?;
    let mut metadata = file.metadata;
    if metadata.remove(PT_KEY).is_none() {
        metadata.insert(PT_KEY.to_owned(), "applied".to_owned());
    }
    let out = StateFile::from_density(&pt, metadata).to_json();
    with_output(io.out.as_deref(), |w| w.write_all(out.as_bytes()).map_err(CliError::Output))?;
    Ok(ExitCode::Success)
}

fn cmd_ur_check(path: &Path, tol: f64) -> Result<ExitCode, CliError> {
    let (_, rho) = load(path)?;
    let report = ur_check(&rho, tol)?;
    print_json(&json!({
        "N": rho.n().get(),
        "particles": rho.particles().count(),
        "var_a": report.var_a,
        "var_b": report.var_b,
        "lhs": report.lhs,
        "commutator_expectation": [report.commutator_expectation.re, report.commutator_expectation.im],
        "rhs": report.rhs,
        "rhs_closed_form": report.rhs_closed_form,
        "margin": report.margin,
        "verdict": report.verdict.as_str(),
    }));
    Ok(match report.verdict {
        UrVerdict::Satisfied => ExitCode::Success,
        UrVerdict::Violated => ExitCode::Violated,
        UrVerdict::Inconclusive => ExitCode::Inconclusive,
    })
}

fn cmd_werner_scan(args: ScanArgs, tol: f64) -> Result<ExitCode, CliError> {
    let config = ScanConfig {
        ns: args.ns,
        r_min: args.r_min,
        r_max: args.r_max,
        steps: args.steps,
        tol,
        threads: args.threads,
    };
    let rows = werner_scan(&config)?;
    with_output(args.out.as_deref(), |w| write_sweep(&rows, w))?;
    Ok(ExitCode::Success)
}

fn cmd_wigner(io: &InOut, tol: f64) -> Result<ExitCode, CliError> {
    let (_, rho) = load(&io.state)?;
    let table = wigner(&rho, tol)?;
    with_output(io.out.as_deref(), |w| write_wigner(&table, w))?;
    Ok(ExitCode::Success)
}

fn cmd_momentum_jpd(io: &InOut) -> Result<ExitCode, CliError> {
    let (_, rho) = load(&io.state)?;
    let jpd = momentum_distribution(&rho);
    with_output(io.out.as_deref(), |w| write_jpd(&jpd, w))?;
    Ok(ExitCode::Success)
}

fn cmd_negativity(path: &Path, tol: f64) -> Result<ExitCode, CliError> {
    let (_, rho) = load(path)?;
    let negativity = negativity_oracle(&rho, tol)?;
    let ppt = ppt_verdict(&rho, tol)?;
    print_json(&json!({
        "negativity": negativity,
        "min_pt_eigenvalue": ppt.min_pt_eigenvalue,
    }));
    Ok(ExitCode::Success)
}

fn cmd_ppt(path: &Path, tol: f64) -> Result<ExitCode, CliError> {
    let (_, rho) = load(path)?;
    let ppt = ppt_verdict(&rho, tol)?;
    print_json(&json!({
        "min_pt_eigenvalue": ppt.min_pt_eigenvalue,
        "entangled": ppt.entangled,
    }));
    Ok(ExitCode::Success)
}
