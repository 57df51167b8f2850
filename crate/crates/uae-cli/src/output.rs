//! File emission: CSV tables, JSON summaries, gnuplot scripts.
//!
//! Numbers are written with 17 significant digits ({:.16e}), locale
//! independent, so identical runs produce byte-identical files. Writes are
//! atomic (temp file + rename).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use uae_core::bath::FrictionLedger;
use uae_core::constants::BOLTZMANN;
use uae_core::cycle::{CornerState, CycleResult};
use uae_core::ramp::{scaling_factor, RampSchedule};
use uae_core::scan::ScanRow;
use uae_core::stroke::StrokeKind;

/// Full-precision float formatting (17 significant digits).
pub fn fmt(x: f64) -> String {
    format!("{x:.16e}")
}

/// Writes atomically: temp file in the same directory, then rename.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), String> {
    let tmp: PathBuf = path.with_extension("tmp");
    let mut file =
        fs::File::create(&tmp).map_err(|e| format!("cannot create {}: {e}", tmp.display()))?;
    file.write_all(contents.as_bytes())
        .map_err(|e| format!("cannot write {}: {e}", tmp.display()))?;
    file.sync_all().ok();
    drop(file);
    fs::rename(&tmp, path).map_err(|e| format!("cannot rename to {}: {e}", path.display()))
}

/// Per-stroke ledger entry of the summary document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StrokeSummary {
    pub kind: StrokeKind,
    pub duration_s: f64,
    pub work_on_fluid_j: f64,
    pub heat_into_fluid_j: f64,
    pub entropy_change_j_per_k: f64,
    pub bath_contact: bool,
}

/// Cycle summary: the CycleResult ledger minus the sampled trajectories
/// (those live in cycle.csv).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub engine: String,
    pub net_work_extracted_j: f64,
    pub net_work_extracted_kb_uk: f64,
    pub heat_in_j: f64,
    pub cycle_time_s: f64,
    pub eta_max: f64,
    pub survival: f64,
    pub eta_real: f64,
    pub power_j_per_s: f64,
    pub power_kb_mk_per_s: f64,
    pub strokes: Vec<StrokeSummary>,
    pub corners: Vec<CornerState>,
    pub friction: Vec<Option<FrictionLedger>>,
}

impl Summary {
    pub fn from_result(result: &CycleResult) -> Self {
        Self {
            engine: result.engine.label().to_string(),
            net_work_extracted_j: result.net_work_extracted,
            net_work_extracted_kb_uk: result.net_work_extracted / BOLTZMANN * 1e6,
            heat_in_j: result.heat_in,
            cycle_time_s: result.cycle_time,
            eta_max: result.eta_max,
            survival: result.survival,
            eta_real: result.eta_real,
            power_j_per_s: result.power,
            power_kb_mk_per_s: result.power_kb_mk_per_s(),
            strokes: result
                .strokes
                .iter()
                .map(|s| StrokeSummary {
                    kind: s.kind,
                    duration_s: s.duration,
                    work_on_fluid_j: s.work_on_fluid,
                    heat_into_fluid_j: s.heat_into_fluid,
                    entropy_change_j_per_k: s.entropy_change,
                    bath_contact: s.bath_contact,
                })
                .collect(),
            corners: result.corners.clone(),
            friction: result.friction.clone(),
        }
    }
}

pub fn cycle_csv(result: &CycleResult) -> String {
    let mut out = String::with_capacity(result.trace.len() * 160);
    out.push_str(
        "time_s,omega_fluid_rad_s,omega_bath_rad_s,temperature_K,entropy_kB,pressure_N,stroke_kind,bath_contact\n",
    );
    for p in &result.trace {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            fmt(p.time),
            fmt(p.fluid_omega),
            fmt(p.bath_omega),
            fmt(p.temperature),
            fmt(p.entropy_kb),
            fmt(p.pressure),
            p.kind.label(),
            p.bath_contact
        ));
    }
    out
}

pub fn scan_csv(rows: &[ScanRow]) -> String {
    let mut out = String::with_capacity(rows.len() * 160 + 128);
    out.push_str(
        "parameter_value,eta_max,eta_real,ratio,power,survival,atom_bath_rate,photon_rate,flag\n",
    );
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            fmt(r.parameter_value),
            fmt(r.eta_max),
            fmt(r.eta_real),
            fmt(r.ratio),
            fmt(r.power),
            fmt(r.survival),
            fmt(r.atom_bath_rate),
            fmt(r.photon_rate),
            r.flag
        ));
    }
    out
}

/// gnuplot companion for scan.csv.
pub fn scan_gnuplot(csv_name: &str) -> String {
    format!(
        "set datafile separator \",\"\n\
         set key autotitle columnheader\n\
         set xlabel \"parameter value\"\n\
         set ylabel \"efficiency\"\n\
         set y2label \"power (k_B mK/s)\"\n\
         set y2tics\n\
         set grid\n\
         plot \"{csv_name}\" using 1:2 with linespoints title \"eta_max\", \\\n\
         \x20    \"{csv_name}\" using 1:3 with linespoints title \"eta_real\", \\\n\
         \x20    \"{csv_name}\" using 1:5 axes x1y2 with linespoints title \"power\"\n"
    )
}

pub fn ramp_csv(ramp: &RampSchedule) -> String {
    let mut out = String::with_capacity(ramp.samples.len() * 96 + 64);
    out.push_str("time_s,omega_rad_s,b,b_ddot\n");
    for s in &ramp.samples {
        let (b, _, bddot) =
            scaling_factor(ramp.start_omega, ramp.end_omega, ramp.duration, s.time);
        out.push_str(&format!(
            "{},{},{},{}\n",
            fmt(s.time),
            fmt(s.omega),
            fmt(b),
            fmt(bddot)
        ));
    }
    out
}
