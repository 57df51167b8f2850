//! Parameter sweeps and constrained working-point optimization.
//!
//! A scan runs one full engine cycle per grid point and reports the
//! efficiency/power/constraint quantities per row. Grid points that fail
//! closure or domain checks become flagged rows rather than aborting the
//! sweep. The working-point optimizer maximizes extracted power over a
//! (T₁, t_f) grid subject to the heating constraint
//! atom-bath rate ≥ margin × tweezer photon-scattering rate.
//!
//! The tweezer power is assumed to be servoed so its axial frequency
//! matches the working point's ω_A; since the scattering rate scales
//! linearly with power and ω² does too, the photon rate at a working point
//! is base_rate × (ω_A/ω_axial,base)².

use serde::{Deserialize, Serialize};

use crate::bath::tweezer_trap;
use crate::cycle::{run_cycle, solve_qde_expansion_ratio, CycleResult, CycleSpec, Engine};
use crate::error::{Error, Result};

/// Which knob the scan sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweptParameter {
    /// T₁ = T_A (K).
    StartTemperature,
    /// Contact stroke duration t_f (s).
    StrokeTime,
    /// Target maximum efficiency (dimensionless).
    EtaMax,
}

/// Scan description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRequest {
    pub swept_parameter: SweptParameter,
    /// Strictly increasing grid of parameter values, units per parameter.
    pub grid: Vec<f64>,
    pub base_spec: CycleSpec,
}

/// One scan result row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub parameter_value: f64,
    pub eta_max: f64,
    pub eta_real: f64,
    /// eta_real/eta_max = survival by construction.
    pub ratio: f64,
    /// Extracted power (k_B·mK/s).
    pub power: f64,
    pub survival: f64,
    /// Imposed elastic thermalization rate of the hot contact stroke (1/s).
    pub atom_bath_rate: f64,
    /// Tweezer photon scattering rate at the working point (1/s).
    pub photon_rate: f64,
    /// "ok", or the failure reason for flagged grid points.
    pub flag: String,
}

impl ScanRow {
    fn flagged(parameter_value: f64, reason: &str) -> Self {
        Self {
            parameter_value,
            eta_max: f64::NAN,
            eta_real: f64::NAN,
            ratio: f64::NAN,
            power: f64::NAN,
            survival: f64::NAN,
            atom_bath_rate: f64::NAN,
            photon_rate: f64::NAN,
            flag: reason.replace([',', '\n'], ";"),
        }
    }

    pub fn is_ok(&self) -> bool {
        self.flag == "ok"
    }
}

/// Default temperature grid: 30 log-spaced points in [0.2, 3] μK.
pub fn default_temperature_grid() -> Vec<f64> {
    let (lo, hi) = (0.2e-6_f64, 3.0e-6_f64);
    (0..30)
        .map(|i| lo * (hi / lo).powf(i as f64 / 29.0))
        .collect()
}

/// Default contact stroke time grid: {0.5, 1, 2, 5} ms.
pub fn default_stroke_time_grid() -> Vec<f64> {
    vec![0.5e-3, 1e-3, 2e-3, 5e-3]
}

/// The spec at one grid point of the sweep.
pub fn spec_at(base: &CycleSpec, swept: SweptParameter, value: f64) -> Result<CycleSpec> {
    let mut spec = base.clone();
    match swept {
        SweptParameter::StartTemperature => {
            if value <= 0.0 {
                return Err(Error::invalid("temperature grid values must be positive"));
            }
            spec.start_temperature = value;
            spec.bath.temperature = value;
        }
        SweptParameter::StrokeTime => {
            if value <= 0.0 {
                return Err(Error::invalid("stroke time grid values must be positive"));
            }
            spec.contact_stroke_time = value;
        }
        SweptParameter::EtaMax => {
            if !(value > 0.0 && value < 1.0) {
                return Err(Error::invalid("eta_max grid values must lie in (0, 1)"));
            }
            match spec.engine {
                Engine::Qce => spec.temperature_ratio = 1.0 - value,
                Engine::Qoe => spec.frequency_ratio = 1.0 - value,
                Engine::Qde => {
                    // keep the Diesel convention Δ_D/Δ_A = 0.9 × the Otto value
                    spec.frequency_ratio = 0.9 * (1.0 - value);
                    spec.expansion_ratio =
                        solve_qde_expansion_ratio(value, spec.frequency_ratio)?;
                }
            }
        }
    }
    Ok(spec)
}

fn row_from_result(spec: &CycleSpec, value: f64, result: &CycleResult) -> Result<ScanRow> {
    let trap = tweezer_trap(&spec.tweezer, &spec.mixture)?;
    let omega_a = spec.resolved_start_omega();
    let photon_rate =
        trap.photon_scatter_rate * (omega_a / trap.axial_frequency).powi(2);
    let atom_bath_rate = result
        .friction
        .iter()
        .flatten()
        .next()
        .map(|l| l.elastic_rate)
        .unwrap_or(0.0);
    let ratio = if result.eta_max > 0.0 {
        result.eta_real / result.eta_max
    } else {
        result.survival
    };
    Ok(ScanRow {
        parameter_value: value,
        eta_max: result.eta_max,
        eta_real: result.eta_real,
        ratio,
        power: result.power_kb_mk_per_s(),
        survival: result.survival,
        atom_bath_rate,
        photon_rate,
        flag: "ok".to_string(),
    })
}

/// Runs the sweep: one row per grid point, deterministic and independent.
pub fn scan(request: &ScanRequest) -> Result<Vec<ScanRow>> {
    if request.grid.is_empty() {
        return Err(Error::invalid("scan grid must be non-empty"));
    }
    if request.grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::invalid("scan grid must be strictly increasing"));
    }
    let mut rows = Vec::with_capacity(request.grid.len());
    for &value in &request.grid {
        let row = match spec_at(&request.base_spec, request.swept_parameter, value) {
            Ok(spec) => match run_cycle(&spec) {
                Ok(result) => row_from_result(&spec, value, &result)?,
                Err(e) => ScanRow::flagged(value, &e.to_string()),
            },
            Err(e) => ScanRow::flagged(value, &e.to_string()),
        };
        rows.push(row);
    }
    Ok(rows)
}

/// An optimizer outcome: the winning spec and its scan row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WorkingPoint {
    pub spec: CycleSpec,
    pub row: ScanRow,
    /// The (T₁, t_f) coordinates of the winner.
    pub start_temperature: f64,
    pub stroke_time: f64,
}

/// Maximizes extracted power over the (T₁, t_f) grid subject to
/// atom_bath_rate ≥ margin × photon_rate. Ties break toward larger
/// η_real, then smaller t_f. margin = 0 disables the constraint.
pub fn optimize_working_point(
    base: &CycleSpec,
    margin: f64,
    temperatures: &[f64],
    stroke_times: &[f64],
) -> Result<WorkingPoint> {
    if margin < 0.0 {
        return Err(Error::invalid("margin must be non-negative"));
    }
    if temperatures.is_empty() || stroke_times.is_empty() {
        return Err(Error::invalid("optimizer grids must be non-empty"));
    }
    let mut best: Option<WorkingPoint> = None;
    for &t1 in temperatures {
        for &tf in stroke_times {
            let Ok(spec) = spec_at(base, SweptParameter::StartTemperature, t1) else {
                continue;
            };
            let Ok(spec) = spec_at(&spec, SweptParameter::StrokeTime, tf) else {
                continue;
            };
            let Ok(result) = run_cycle(&spec) else {
                continue;
            };
            let row = row_from_result(&spec, t1, &result)?;
            if row.atom_bath_rate < margin * row.photon_rate {
                continue;
            }
            let candidate = WorkingPoint {
                spec,
                row,
                start_temperature: t1,
                stroke_time: tf,
            };
            let better = match &best {
                None => true,
                Some(b) => {
                    let c = &candidate.row;
                    let br = &b.row;
                    c.power > br.power
                        || (c.power == br.power
                            && (c.eta_real > br.eta_real
                                || (c.eta_real == br.eta_real
                                    && candidate.stroke_time < b.stroke_time)))
                }
            };
            if better {
                best = Some(candidate);
            }
        }
    }
    best.ok_or_else(|| {
        Error::unphysical(format!(
            "no feasible working point: atom-bath rate < {margin} × photon rate everywhere"
        ))
    })
}
