//! `uae` — single-atom quantum heat engine simulator.
//!
//! Subcommands:
//!   uae cycle --config <path> --out <dir>   run one engine cycle
//!   uae scan  --config <path> --out <dir>   parameter sweep
//!   uae ramp  --start-freq <Hz> --end-freq <Hz>
//!             (--duration <s> | --min-time) --out <dir>
//!
//! Exit codes: 0 success, 2 configuration error, 3 physics domain error.
//! Verbosity via UAE_LOG ∈ {quiet, info, debug} (default info).

mod config;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use uae_core::constants::angular;
use uae_core::cycle::run_cycle;
use uae_core::error::Error as CoreError;
use uae_core::ramp::{min_ramp_time, superadiabatic_ramp, DEFAULT_RAMP_SAMPLES};
use uae_core::scan::scan;

use config::RunConfig;
use output::{cycle_csv, ramp_csv, scan_csv, scan_gnuplot, write_atomic, Summary};

const EXIT_CONFIG: u8 = 2;
const EXIT_PHYSICS: u8 = 3;

#[derive(Parser)]
#[command(name = "uae", version, about = "Single-atom quantum heat engine simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one engine cycle; writes cycle.csv and summary.json.
    Cycle {
        /// JSON run configuration.
        #[arg(long)]
        config: PathBuf,
        /// Output directory (created if missing).
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a parameter sweep; writes scan.csv and scan.gp.
    Scan {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate a super-adiabatic trap ramp; writes ramp.csv.
    #[command(group(ArgGroup::new("length").required(true).args(["duration", "min_time"])))]
    Ramp {
        /// Start trap frequency (ordinary Hz).
        #[arg(long = "start-freq")]
        start_freq: f64,
        /// End trap frequency (ordinary Hz).
        #[arg(long = "end-freq")]
        end_freq: f64,
        /// Ramp duration (s).
        #[arg(long)]
        duration: Option<f64>,
        /// Find and use the shortest valid duration; prints it.
        #[arg(long = "min-time")]
        min_time: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, PartialOrd)]
enum Verbosity {
    Quiet = 0,
    Info = 1,
    Debug = 2,
}

fn verbosity() -> Verbosity {
    match std::env::var("UAE_LOG").as_deref() {
        Ok("quiet") => Verbosity::Quiet,
        Ok("debug") => Verbosity::Debug,
        _ => Verbosity::Info,
    }
}

fn log_info(msg: &str) {
    if verbosity() >= Verbosity::Info {
        eprintln!("uae: {msg}");
    }
}

fn log_debug(msg: &str) {
    if verbosity() >= Verbosity::Debug {
        eprintln!("uae[debug]: {msg}");
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn config(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_CONFIG,
            message: message.into(),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::InvalidInput(_) => EXIT_CONFIG,
            CoreError::Unphysical(_) => EXIT_PHYSICS,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn load_config(path: &Path) -> Result<RunConfig, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::config(format!("cannot read {}: {e}", path.display())))?;
    RunConfig::parse(&text).map_err(Failure::config)
}

fn ensure_out_dir(out: &Path) -> Result<(), Failure> {
    std::fs::create_dir_all(out)
        .map_err(|e| Failure::config(format!("cannot create {}: {e}", out.display())))
}

fn cmd_cycle(config_path: &Path, out: &Path) -> Result<(), Failure> {
    let config = load_config(config_path)?;
    let spec = config.to_cycle_spec().map_err(Failure::config)?;
    log_debug(&format!(
        "engine {:?}, T_A = {:.4} μK, ω_A = 2π × {:.3} kHz",
        spec.engine,
        spec.start_temperature * 1e6,
        spec.resolved_start_omega() / (2.0 * std::f64::consts::PI) / 1e3
    ));
    let result = run_cycle(&spec)?;
    ensure_out_dir(out)?;
    let csv_path = out.join("cycle.csv");
    write_atomic(&csv_path, &cycle_csv(&result)).map_err(Failure::config)?;
    let summary = Summary::from_result(&result);
    let json = serde_json::to_string_pretty(&summary)
        .map_err(|e| Failure::config(format!("serialization: {e}")))?;
    let json_path = out.join("summary.json");
    write_atomic(&json_path, &json).map_err(Failure::config)?;
    log_info(&format!(
        "{} cycle: η_max = {:.6}, η_real = {:.6}, P = {:.6} mK/s, τ = {:.4} ms",
        result.engine.label(),
        result.eta_max,
        result.eta_real,
        result.power_kb_mk_per_s(),
        result.cycle_time * 1e3
    ));
    log_info(&format!("wrote {} and {}", csv_path.display(), json_path.display()));
    Ok(())
}

fn cmd_scan(config_path: &Path, out: &Path) -> Result<(), Failure> {
    let config = load_config(config_path)?;
    let request = config.to_scan_request().map_err(Failure::config)?;
    log_debug(&format!(
        "sweep {:?} over {} grid points",
        request.swept_parameter,
        request.grid.len()
    ));
    let rows = scan(&request)?;
    ensure_out_dir(out)?;
    let csv_path = out.join("scan.csv");
    write_atomic(&csv_path, &scan_csv(&rows)).map_err(Failure::config)?;
    let gp_path = out.join("scan.gp");
    write_atomic(&gp_path, &scan_gnuplot("scan.csv")).map_err(Failure::config)?;
    let flagged = rows.iter().filter(|r| !r.is_ok()).count();
    log_info(&format!(
        "scan: {} rows ({flagged} flagged); wrote {} and {}",
        rows.len(),
        csv_path.display(),
        gp_path.display()
    ));
    Ok(())
}

fn cmd_ramp(
    start_freq: f64,
    end_freq: f64,
    duration: Option<f64>,
    min_time: bool,
    out: &Path,
) -> Result<(), Failure> {
    if start_freq <= 0.0 || end_freq <= 0.0 {
        return Err(Failure::config("frequencies must be positive"));
    }
    let w0 = angular(start_freq);
    let w1 = angular(end_freq);
    let duration = if min_time {
        let t = min_ramp_time(w0, w1)?;
        println!("minimum ramp time: {} s", output::fmt(t));
        t.max(1e-6)
    } else {
        let d = duration.expect("clap enforces the duration/min-time group");
        if d <= 0.0 {
            return Err(Failure::config("duration must be positive"));
        }
        d
    };
    let ramp = superadiabatic_ramp(w0, w1, duration, DEFAULT_RAMP_SAMPLES)?;
    if !ramp.valid {
        log_info("warning: ramp inverts the trap (omega² < 0 somewhere); flagged invalid");
    }
    ensure_out_dir(out)?;
    let path = out.join("ramp.csv");
    write_atomic(&path, &ramp_csv(&ramp)).map_err(Failure::config)?;
    log_info(&format!(
        "ramp 2π×{:.3} kHz → 2π×{:.3} kHz over {:.6e} s (valid: {}); wrote {}",
        start_freq / 1e3,
        end_freq / 1e3,
        duration,
        ramp.valid,
        path.display()
    ));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Cycle { config, out } => cmd_cycle(&config, &out),
        Command::Scan { config, out } => cmd_scan(&config, &out),
        Command::Ramp {
            start_freq,
            end_freq,
            duration,
            min_time,
            out,
        } => cmd_ramp(start_freq, end_freq, duration, min_time, &out),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("uae: error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
