//! The four elementary quantum thermodynamic transformations.
//!
//! Sign convention: `work_on_fluid` > 0 means work done ON the fluid,
//! `heat_into_fluid` > 0 means heat INTO the fluid, so ΔE = W + Q per
//! stroke. Stored ledgers are exact endpoint closed forms (isothermal
//! Q = TΔS, isobaric W = −ΠΔa_ho, isochoric W = 0, adiabatic Q = 0);
//! the sampled trajectory provides an independent route through
//! [`trajectory_quadrature`], whose trapezoid pairing satisfies
//! W + Q = ΔE identically and converges to the stored values as
//! O(steps⁻²).

use serde::{Deserialize, Serialize};

use crate::constants::HBAR;
use crate::error::{Error, Result};
use crate::oscillator::{
    entropy, harmonic_length, isobaric_temperature, mean_energy, quantum_pressure,
    OscillatorState,
};
use crate::ramp::{superadiabatic_ramp, RampSchedule};

/// Elementary transformation kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StrokeKind {
    Adiabatic,
    Isothermal,
    Isochoric,
    Isobaric,
}

impl StrokeKind {
    pub fn label(self) -> &'static str {
        match self {
            StrokeKind::Adiabatic => "adiabatic",
            StrokeKind::Isothermal => "isothermal",
            StrokeKind::Isochoric => "isochoric",
            StrokeKind::Isobaric => "isobaric",
        }
    }
}

/// One sampled point along a stroke.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryPoint {
    /// Time since the start of the stroke (s).
    pub time: f64,
    /// Working-fluid state at that instant.
    pub state: OscillatorState,
}

/// Record of one transformation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StrokeResult {
    pub kind: StrokeKind,
    /// Stroke duration (s).
    pub duration: f64,
    /// Work done on the fluid (J).
    pub work_on_fluid: f64,
    /// Heat absorbed by the fluid (J).
    pub heat_into_fluid: f64,
    /// Entropy change of the fluid (J/K).
    pub entropy_change: f64,
    /// Sampled states, first = initial, last = final.
    pub trajectory: Vec<TrajectoryPoint>,
    /// False exactly for adiabatic strokes (fluid decoupled from the bath).
    pub bath_contact: bool,
}

impl StrokeResult {
    pub fn initial_state(&self) -> &OscillatorState {
        &self.trajectory.first().expect("non-empty trajectory").state
    }

    pub fn final_state(&self) -> &OscillatorState {
        &self.trajectory.last().expect("non-empty trajectory").state
    }

    /// ΔE between trajectory endpoints (J).
    pub fn energy_change(&self) -> f64 {
        mean_energy(self.final_state()) - mean_energy(self.initial_state())
    }
}

/// Quantum adiabatic transformation: populations frozen along a valid
/// super-adiabatic ramp, Q = 0, ΔS = 0, W = ΔE. A thermal input stays
/// thermal with T scaled by ω_f/ω_i.
pub fn adiabatic_stroke(initial: &OscillatorState, ramp: &RampSchedule) -> Result<StrokeResult> {
    if !ramp.valid {
        return Err(Error::invalid(
            "adiabatic stroke requires a valid (non-inverting) ramp",
        ));
    }
    if ((initial.omega - ramp.start_omega) / ramp.start_omega).abs() > 1e-9 {
        return Err(Error::invalid(
            "initial state frequency does not match the ramp start",
        ));
    }
    let mut trajectory = Vec::with_capacity(ramp.samples.len());
    for sample in &ramp.samples {
        trajectory.push(TrajectoryPoint {
            time: sample.time,
            state: initial.frozen_rescaled(sample.omega)?,
        });
    }
    let work = mean_energy(&trajectory.last().unwrap().state) - mean_energy(initial);
    Ok(StrokeResult {
        kind: StrokeKind::Adiabatic,
        duration: ramp.duration,
        work_on_fluid: work,
        heat_into_fluid: 0.0,
        entropy_change: 0.0,
        trajectory,
        bath_contact: false,
    })
}

/// Quantum isothermal transformation: quasi-static frequency sweep in
/// contact with a bath at fixed `temperature`. The path is geometric in ω
/// with populations re-thermalized at every substep; Q = TΔS from the
/// endpoint entropies and W = ΔE − Q (= ΔF).
pub fn isothermal_stroke(
    temperature: f64,
    start_omega: f64,
    end_omega: f64,
    duration: f64,
    steps: usize,
) -> Result<StrokeResult> {
    if temperature <= 0.0 || start_omega <= 0.0 || end_omega <= 0.0 || duration <= 0.0 {
        return Err(Error::invalid("isothermal stroke arguments must be positive"));
    }
    if steps < 128 {
        return Err(Error::invalid("isothermal stroke needs at least 128 steps"));
    }
    let ratio = (end_omega / start_omega).powf(1.0 / steps as f64);
    let mut trajectory = Vec::with_capacity(steps + 1);
    for i in 0..=steps {
        let omega = if i == steps {
            end_omega
        } else {
            start_omega * ratio.powi(i as i32)
        };
        trajectory.push(TrajectoryPoint {
            time: duration * i as f64 / steps as f64,
            state: OscillatorState::thermal(omega, temperature)?,
        });
    }
    let first = &trajectory.first().unwrap().state;
    let last = &trajectory.last().unwrap().state;
    let delta_s = entropy(last) - entropy(first);
    let heat = temperature * delta_s;
    let work = mean_energy(last) - mean_energy(first) - heat;
    Ok(StrokeResult {
        kind: StrokeKind::Isothermal,
        duration,
        work_on_fluid: work,
        heat_into_fluid: heat,
        entropy_change: delta_s,
        trajectory,
        bath_contact: true,
    })
}

/// Quantum isochoric transformation: fixed trap frequency, bath temperature
/// ramped from `start_temperature` to `end_temperature`. The temperature
/// path follows the bath's own super-adiabatic trap ramp,
/// T(t) = T_i · ω_bath(t)/ω_bath(0), with ω_bath(0) = `bath_start_omega`.
/// No work is done (dE_n = 0); Q = ΔE.
pub fn isochoric_stroke(
    omega: f64,
    start_temperature: f64,
    end_temperature: f64,
    duration: f64,
    steps: usize,
    bath_start_omega: f64,
) -> Result<StrokeResult> {
    if omega <= 0.0
        || start_temperature <= 0.0
        || end_temperature <= 0.0
        || duration <= 0.0
        || bath_start_omega <= 0.0
    {
        return Err(Error::invalid("isochoric stroke arguments must be positive"));
    }
    let bath_end = bath_start_omega * end_temperature / start_temperature;
    let bath_ramp = superadiabatic_ramp(bath_start_omega, bath_end, duration, steps)?;
    if !bath_ramp.valid {
        return Err(Error::unphysical(format!(
            "bath cannot ramp {:.3e} -> {:.3e} rad/s in {:.3e} s without trap inversion",
            bath_start_omega, bath_end, duration
        )));
    }
    let mut trajectory = Vec::with_capacity(bath_ramp.samples.len());
    for sample in &bath_ramp.samples {
        let t_bath = start_temperature * sample.omega / bath_start_omega;
        trajectory.push(TrajectoryPoint {
            time: sample.time,
            state: OscillatorState::thermal(omega, t_bath)?,
        });
    }
    let first = &trajectory.first().unwrap().state;
    let last = &trajectory.last().unwrap().state;
    let heat = mean_energy(last) - mean_energy(first);
    Ok(StrokeResult {
        kind: StrokeKind::Isochoric,
        duration,
        work_on_fluid: 0.0,
        heat_into_fluid: heat,
        entropy_change: entropy(last) - entropy(first),
        trajectory,
        bath_contact: true,
    })
}

/// Quantum isobaric transformation: the trap frequency sweeps geometrically
/// to `end_omega` while the temperature tracks the isobaric law so the
/// pressure stays at its initial value. W = −Π·Δa_ho exactly, Q = ΔE − W.
/// Fails if the path would need a pressure at or below the zero-point
/// floor (no finite temperature exists there).
pub fn isobaric_stroke(
    start: &OscillatorState,
    mass: f64,
    end_omega: f64,
    duration: f64,
    steps: usize,
) -> Result<StrokeResult> {
    if end_omega <= 0.0 || duration <= 0.0 || mass <= 0.0 {
        return Err(Error::invalid("isobaric stroke arguments must be positive"));
    }
    if steps < 64 {
        return Err(Error::invalid("isobaric stroke needs at least 64 steps"));
    }
    let pressure = quantum_pressure(start, mass)?;
    let start_omega = start.omega;
    let ratio = (end_omega / start_omega).powf(1.0 / steps as f64);
    let mut trajectory = Vec::with_capacity(steps + 1);
    for i in 0..=steps {
        let omega = if i == steps {
            end_omega
        } else {
            start_omega * ratio.powi(i as i32)
        };
        let temperature = isobaric_temperature(pressure, omega, mass)?;
        trajectory.push(TrajectoryPoint {
            time: duration * i as f64 / steps as f64,
            state: OscillatorState::thermal(omega, temperature)?,
        });
    }
    let first = &trajectory.first().unwrap().state;
    let last = &trajectory.last().unwrap().state;
    let work = -pressure * (harmonic_length(end_omega, mass) - harmonic_length(start_omega, mass));
    let heat = mean_energy(last) - mean_energy(first) - work;
    Ok(StrokeResult {
        kind: StrokeKind::Isobaric,
        duration,
        work_on_fluid: work,
        heat_into_fluid: heat,
        entropy_change: entropy(last) - entropy(first),
        trajectory,
        bath_contact: true,
    })
}

/// Independent trajectory route: trapezoid discretization of
/// W = ∫ Σ P_n dE_n and Q = ∫ Σ E_n dP_n over the stored samples.
/// The pairing (P̄·ΔE + Ē·ΔP = Δ(PE) per level) makes W + Q equal the
/// endpoint ΔE identically; each term separately converges O(steps⁻²)
/// to the stroke's stored ledger.
pub fn trajectory_quadrature(stroke: &StrokeResult) -> (f64, f64) {
    let mut work = 0.0;
    let mut heat = 0.0;
    for pair in stroke.trajectory.windows(2) {
        let a = &pair[0].state;
        let b = &pair[1].state;
        let levels = a.populations.len().max(b.populations.len());
        let (ea, eb) = (HBAR * a.omega, HBAR * b.omega);
        for n in 0..levels {
            let quanta = n as f64 + 0.5;
            let pa = a.populations.get(n).copied().unwrap_or(0.0);
            let pb = b.populations.get(n).copied().unwrap_or(0.0);
            work += 0.5 * (pa + pb) * (eb - ea) * quanta;
            heat += 0.5 * (ea + eb) * quanta * (pb - pa);
        }
    }
    (work, heat)
}
