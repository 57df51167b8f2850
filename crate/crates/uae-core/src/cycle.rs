//! Carnot, Otto and Diesel cycles assembled from the elementary strokes.
//!
//! Stage conventions (Δ_i = ħω_i):
//!
//! - QCE: hot isothermal expansion A→B at T₁, super-adiabatic expansion
//!   B→C, cold isothermal compression C→D at T₂, super-adiabatic
//!   compression D→A. Closure: T₁/T₂ = Δ_B/Δ_C = Δ_A/Δ_D.
//! - QOE: isochoric heat-in A→B at ω_A, super-adiabatic expansion B→C to
//!   ω_D, isochoric heat-out C→D, super-adiabatic compression D→A.
//!   Closure requires T_B/T_D ≥ Δ_A/Δ_D.
//! - QDE: isobaric expansion A→B (bath trap ramped linearly), then as QOE.
//!
//! Contact strokes default to the configured contact time; each
//! super-adiabatic stroke takes the larger of the fluid's and the bath's
//! minimum valid ramp time (the bath ramps between its temperature stages
//! during the decoupled strokes, and it is almost always the slower one).
//! The starting stage satisfies T_A = ħω_A/2k_B unless overridden.
//!
//! Survival against three-body losses accumulates only over bath-contact
//! strokes. The thermalization condition Γ = collisions/t_f fixes the
//! scattering length instantaneously along the stroke; the resulting
//! per-stroke loss exponent is ħμ/(2 m_bath k_B T t_f) for a constant
//! bath temperature, independent of the bath density.

use serde::{Deserialize, Serialize};

use crate::bath::{
    bath_peak_density, fluid_gaussian_widths, required_scattering_length,
    three_body_coefficient, tweezer_trap, AlphaMass, BathSpec, FrictionLedger, MixtureSpec,
    TweezerSpec,
};
use crate::constants::{BOLTZMANN, HBAR};
use crate::error::{Error, Result};
use crate::oscillator::{entropy, mean_energy, quantum_pressure, OscillatorState};
use crate::ramp::{min_ramp_time_with_margin, superadiabatic_ramp, RampSchedule};
use crate::stroke::{
    adiabatic_stroke, isobaric_stroke, isochoric_stroke, isothermal_stroke, StrokeKind,
    StrokeResult,
};

/// Engine selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Qce,
    Qoe,
    Qde,
}

impl Engine {
    pub fn label(self) -> &'static str {
        match self {
            Engine::Qce => "qce",
            Engine::Qoe => "qoe",
            Engine::Qde => "qde",
        }
    }
}

/// Discretization and model knobs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Numerics {
    /// Substeps per contact stroke.
    pub steps_per_stroke: usize,
    /// Samples per super-adiabatic ramp.
    pub ramp_samples: usize,
    /// Bisection tolerance of the minimum-ramp-time search (s).
    pub min_time_tolerance: f64,
    /// Elastic collisions required for thermalization per stroke.
    pub collisions_required: f64,
    /// Optional temperature dependence: collisions × (T/1μK)^exponent.
    pub collisions_temperature_exponent: f64,
    /// Mass entering the three-body coefficient.
    pub alpha_mass: AlphaMass,
    /// Stricter ramp validity: ω(t) must stay above margin × min(ω₀, ω_f).
    /// 0 disables (bare no-inversion criterion).
    pub ramp_positivity_margin: f64,
}

impl Default for Numerics {
    fn default() -> Self {
        Self {
            steps_per_stroke: 512,
            ramp_samples: 512,
            min_time_tolerance: 1e-6,
            collisions_required: 4.0,
            collisions_temperature_exponent: 0.0,
            alpha_mass: AlphaMass::Bath,
            ramp_positivity_margin: 0.0,
        }
    }
}

/// Full cycle configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CycleSpec {
    pub engine: Engine,
    /// T_A = T₁ (K).
    pub start_temperature: f64,
    /// QCE: T₂/T₁ (≤ 1). QOE: T_B/T_A (≥ 1). Unused by QDE.
    pub temperature_ratio: f64,
    /// QCE: ω_B/ω_A (≤ 1). QDE: ω_A/ω_B (≥ 1). Unused by QOE.
    pub expansion_ratio: f64,
    /// QOE/QDE: ω_D/ω_A (< 1). Unused by QCE.
    pub frequency_ratio: f64,
    /// Duration of each bath-contact stroke (s).
    pub contact_stroke_time: f64,
    /// Override for ω_A; default 2k_B·T_A/ħ (rad/s).
    pub start_omega: Option<f64>,
    pub bath: BathSpec,
    pub mixture: MixtureSpec,
    pub tweezer: TweezerSpec,
    pub numerics: Numerics,
}

impl CycleSpec {
    /// ω_A: the override, or the canonical 2k_B·T_A/ħ.
    pub fn resolved_start_omega(&self) -> f64 {
        self.start_omega
            .unwrap_or(2.0 * BOLTZMANN * self.start_temperature / HBAR)
    }

    fn validate_common(&self) -> Result<()> {
        if self.start_temperature <= 0.0 {
            return Err(Error::invalid("start temperature must be positive"));
        }
        if self.contact_stroke_time <= 0.0 {
            return Err(Error::invalid("contact stroke time must be positive"));
        }
        if let Some(w) = self.start_omega {
            if w <= 0.0 {
                return Err(Error::invalid("start omega must be positive"));
            }
        }
        self.bath.validate()?;
        self.mixture.validate()?;
        self.tweezer.validate()?;
        if self.numerics.steps_per_stroke < 128 {
            return Err(Error::invalid("steps_per_stroke must be at least 128"));
        }
        if self.numerics.ramp_samples < 64 {
            return Err(Error::invalid("ramp_samples must be at least 64"));
        }
        Ok(())
    }
}

/// One corner (stage) of the cycle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CornerState {
    pub label: String,
    pub omega: f64,
    pub temperature: f64,
    pub mean_energy: f64,
    pub entropy: f64,
    pub pressure: f64,
}

/// One row of the assembled cycle trace (for CSV emission).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CyclePoint {
    /// Time since the start of the cycle (s).
    pub time: f64,
    pub fluid_omega: f64,
    pub bath_omega: f64,
    pub temperature: f64,
    /// Fluid entropy in units of k_B.
    pub entropy_kb: f64,
    /// Quantum pressure (N).
    pub pressure: f64,
    pub kind: StrokeKind,
    pub bath_contact: bool,
}

/// Per-cycle ledger.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CycleResult {
    pub engine: Engine,
    pub strokes: Vec<StrokeResult>,
    /// Friction accounting per stroke; None for decoupled (adiabatic) ones.
    pub friction: Vec<Option<FrictionLedger>>,
    pub corners: Vec<CornerState>,
    /// −ΣW over the cycle (J); positive for an engine.
    pub net_work_extracted: f64,
    /// Σ of positive heat inputs (J).
    pub heat_in: f64,
    /// Total cycle time τ (s).
    pub cycle_time: f64,
    /// net_work_extracted / heat_in.
    pub eta_max: f64,
    /// Probability the atom survives one full cycle.
    pub survival: f64,
    /// eta_max × survival.
    pub eta_real: f64,
    /// net_work_extracted / τ (J/s).
    pub power: f64,
    pub trace: Vec<CyclePoint>,
}

impl CycleResult {
    /// Power in the reporting unit k_B·mK/s.
    pub fn power_kb_mk_per_s(&self) -> f64 {
        self.power / BOLTZMANN * 1e3
    }

    /// Hottest and coldest corner temperatures (K).
    pub fn temperature_extremes(&self) -> (f64, f64) {
        let mut hot = f64::MIN;
        let mut cold = f64::MAX;
        for c in &self.corners {
            hot = hot.max(c.temperature);
            cold = cold.min(c.temperature);
        }
        (hot, cold)
    }
}

/// Dispatch on the spec's engine.
pub fn run_cycle(spec: &CycleSpec) -> Result<CycleResult> {
    match spec.engine {
        Engine::Qce => run_qce(spec),
        Engine::Qoe => run_qoe(spec),
        Engine::Qde => run_qde(spec),
    }
}

/// A stroke plus the bath trap frequency sampled along it.
struct ScheduledStroke {
    stroke: StrokeResult,
    bath_curve: Vec<f64>,
}

fn constant_bath_curve(stroke: &StrokeResult, bath_omega: f64) -> Vec<f64> {
    vec![bath_omega; stroke.trajectory.len()]
}

/// Bath frequency tracking the fluid temperature (isochoric strokes:
/// T(t) = T_i ω_b(t)/ω_b(0)).
fn tracking_bath_curve(stroke: &StrokeResult, bath_start_omega: f64) -> Vec<f64> {
    let t0 = stroke.trajectory[0]
        .state
        .temperature
        .expect("contact strokes are thermal");
    stroke
        .trajectory
        .iter()
        .map(|p| bath_start_omega * p.state.temperature.expect("thermal") / t0)
        .collect()
}

/// Linear-in-time bath ramp (isobaric strokes).
fn linear_bath_curve(stroke: &StrokeResult, from: f64, to: f64) -> Vec<f64> {
    let t_f = stroke.duration;
    stroke
        .trajectory
        .iter()
        .map(|p| from + (to - from) * p.time / t_f)
        .collect()
}

/// Schedules a super-adiabatic stroke: duration is the larger of the
/// fluid's and the bath's minimum ramp time (1 μs floor so degenerate
/// strokes keep a strictly increasing time axis).
fn schedule_adiabatic(
    fluid: (f64, f64),
    bath: (f64, f64),
    numerics: &Numerics,
) -> Result<(RampSchedule, RampSchedule)> {
    let t_fluid = min_ramp_time_with_margin(
        fluid.0,
        fluid.1,
        numerics.min_time_tolerance,
        numerics.ramp_samples,
        numerics.ramp_positivity_margin,
    )?;
    let t_bath = min_ramp_time_with_margin(
        bath.0,
        bath.1,
        numerics.min_time_tolerance,
        numerics.ramp_samples,
        numerics.ramp_positivity_margin,
    )?;
    let duration = t_fluid.max(t_bath).max(1e-6);
    let fluid_ramp = superadiabatic_ramp(fluid.0, fluid.1, duration, numerics.ramp_samples)?;
    let bath_ramp = superadiabatic_ramp(bath.0, bath.1, duration, numerics.ramp_samples)?;
    if !fluid_ramp.valid || !bath_ramp.valid {
        return Err(Error::unphysical(
            "scheduled super-adiabatic ramp is invalid at its own minimum time",
        ));
    }
    Ok((fluid_ramp, bath_ramp))
}

/// Collisions required for thermalization at bath temperature T.
fn collisions_at(numerics: &Numerics, temperature: f64) -> f64 {
    numerics.collisions_required
        * (temperature / 1e-6).powf(numerics.collisions_temperature_exponent)
}

/// Three-body loss accounting over one contact stroke. The scattering
/// length is re-solved per substep from Γ = collisions/t_f at the local
/// bath conditions; the exponent integrates α(a)·n_bath²·dt.
fn contact_friction(spec: &CycleSpec, scheduled: &ScheduledStroke) -> Result<FrictionLedger> {
    let stroke = &scheduled.stroke;
    let trap = tweezer_trap(&spec.tweezer, &spec.mixture)?;
    let radial_per_axial = trap.radial_frequency / trap.axial_frequency;
    let alpha_mass = spec.numerics.alpha_mass.mass(&spec.mixture);
    let mut exponent = 0.0;
    let mut a_integral = 0.0;
    let mut rate_integral = 0.0;
    for (pair, bath_pair) in stroke
        .trajectory
        .windows(2)
        .zip(scheduled.bath_curve.windows(2))
    {
        let dt = pair[1].time - pair[0].time;
        let t_mid = 0.5
            * (pair[0].state.temperature.expect("thermal")
                + pair[1].state.temperature.expect("thermal"));
        let bath_omega_mid = 0.5 * (bath_pair[0] + bath_pair[1]);
        let stage = BathSpec {
            atom_number: spec.bath.atom_number,
            mean_trap_frequency: bath_omega_mid,
            temperature: t_mid,
        };
        let fluid_omega_mid = 0.5 * (pair[0].state.omega + pair[1].state.omega);
        let widths = fluid_gaussian_widths(
            radial_per_axial * fluid_omega_mid,
            fluid_omega_mid,
            spec.mixture.fluid_mass,
            t_mid,
        );
        let collisions = collisions_at(&spec.numerics, t_mid);
        let a = required_scattering_length(
            stroke.duration,
            &spec.mixture,
            &stage,
            widths,
            collisions,
        )?;
        let density = bath_peak_density(&stage, spec.mixture.bath_mass);
        exponent += three_body_coefficient(a, alpha_mass) * density * density * dt;
        a_integral += a * dt;
        rate_integral += collisions / stroke.duration * dt;
    }
    let mean_a = a_integral / stroke.duration;
    Ok(FrictionLedger {
        scattering_length: mean_a,
        elastic_rate: rate_integral / stroke.duration,
        three_body_coefficient: three_body_coefficient(mean_a, alpha_mass),
        survival: (-exponent).exp(),
        contact_time: stroke.duration,
    })
}

fn corner(label: &str, state: &OscillatorState, mass: f64) -> Result<CornerState> {
    Ok(CornerState {
        label: label.to_string(),
        omega: state.omega,
        temperature: state
            .temperature
            .ok_or_else(|| Error::unphysical("corner state is not thermal"))?,
        mean_energy: mean_energy(state),
        entropy: entropy(state),
        pressure: quantum_pressure(state, mass)?,
    })
}

/// Assembles the ledger, friction and trace from the four scheduled strokes.
fn assemble(
    spec: &CycleSpec,
    engine: Engine,
    scheduled: Vec<ScheduledStroke>,
    corners: Vec<CornerState>,
) -> Result<CycleResult> {
    // closure: last state must reproduce the first (ω and β to 1e-8)
    let first = scheduled.first().unwrap().stroke.initial_state().clone();
    let last = scheduled.last().unwrap().stroke.final_state().clone();
    let beta_first = first.beta().ok_or_else(|| Error::unphysical("open cycle"))?;
    let beta_last = last.beta().ok_or_else(|| Error::unphysical("open cycle"))?;
    if ((last.omega - first.omega) / first.omega).abs() > 1e-8
        || ((beta_last - beta_first) / beta_first).abs() > 1e-8
    {
        return Err(Error::unphysical("cycle failed to close on (ω, β)"));
    }

    let mut friction = Vec::with_capacity(scheduled.len());
    let mut survival = 1.0;
    for s in &scheduled {
        if s.stroke.bath_contact {
            let ledger = contact_friction(spec, s)?;
            survival *= ledger.survival;
            friction.push(Some(ledger));
        } else {
            friction.push(None);
        }
    }

    let total_work: f64 = scheduled.iter().map(|s| s.stroke.work_on_fluid).sum();
    let heat_in: f64 = scheduled
        .iter()
        .map(|s| s.stroke.heat_into_fluid.max(0.0))
        .sum();
    let net_work_extracted = -total_work;
    let cycle_time: f64 = scheduled.iter().map(|s| s.stroke.duration).sum();
    let eta_max = if heat_in > 0.0 {
        net_work_extracted / heat_in
    } else {
        0.0
    };
    let eta_real = eta_max * survival;
    let power = net_work_extracted / cycle_time;

    let mass = spec.mixture.fluid_mass;
    let mut trace = Vec::new();
    let mut offset = 0.0;
    for s in &scheduled {
        let skip = usize::from(!trace.is_empty());
        for (point, &bath_omega) in s.stroke.trajectory.iter().zip(&s.bath_curve).skip(skip) {
            trace.push(CyclePoint {
                time: offset + point.time,
                fluid_omega: point.state.omega,
                bath_omega,
                temperature: point.state.temperature.unwrap_or(f64::NAN),
                entropy_kb: entropy(&point.state) / BOLTZMANN,
                pressure: quantum_pressure(&point.state, mass)?,
                kind: s.stroke.kind,
                bath_contact: s.stroke.bath_contact,
            });
        }
        offset += s.stroke.duration;
    }

    Ok(CycleResult {
        engine,
        strokes: scheduled.into_iter().map(|s| s.stroke).collect(),
        friction,
        corners,
        net_work_extracted,
        heat_in,
        cycle_time,
        eta_max,
        survival,
        eta_real,
        power,
        trace,
    })
}

/// Quantum Carnot engine run.
pub fn run_qce(spec: &CycleSpec) -> Result<CycleResult> {
    spec.validate_common()?;
    let r_t = spec.temperature_ratio;
    if !(r_t > 0.0 && r_t <= 1.0) {
        return Err(Error::invalid("QCE temperature_ratio T₂/T₁ must lie in (0, 1]"));
    }
    let r_e = spec.expansion_ratio;
    if !(r_e > 0.0 && r_e <= 1.0) {
        return Err(Error::invalid("QCE expansion_ratio ω_B/ω_A must lie in (0, 1]"));
    }
    let t1 = spec.start_temperature;
    let t2 = r_t * t1;
    let w_a = spec.resolved_start_omega();
    let w_b = r_e * w_a;
    let w_c = w_b * r_t;
    let w_d = w_a * r_t;
    let wb_hot = spec.bath.mean_trap_frequency;
    let wb_cold = wb_hot * r_t;
    let steps = spec.numerics.steps_per_stroke;
    let t_c = spec.contact_stroke_time;

    let s1 = isothermal_stroke(t1, w_a, w_b, t_c, steps)?;
    let (f1, b1) = schedule_adiabatic((w_b, w_c), (wb_hot, wb_cold), &spec.numerics)?;
    let s2 = adiabatic_stroke(s1.final_state(), &f1)?;
    let s3 = isothermal_stroke(t2, w_c, w_d, t_c, steps)?;
    let (f2, b2) = schedule_adiabatic((w_d, w_a), (wb_cold, wb_hot), &spec.numerics)?;
    let s4 = adiabatic_stroke(s3.final_state(), &f2)?;

    let mass = spec.mixture.fluid_mass;
    let corners = vec![
        corner("A", s1.initial_state(), mass)?,
        corner("B", s1.final_state(), mass)?,
        corner("C", s3.initial_state(), mass)?,
        corner("D", s3.final_state(), mass)?,
    ];
    let bath1 = constant_bath_curve(&s1, wb_hot);
    let bath2 = b1.samples.iter().map(|s| s.omega).collect();
    let bath3 = constant_bath_curve(&s3, wb_cold);
    let bath4 = b2.samples.iter().map(|s| s.omega).collect();
    assemble(
        spec,
        Engine::Qce,
        vec![
            ScheduledStroke { stroke: s1, bath_curve: bath1 },
            ScheduledStroke { stroke: s2, bath_curve: bath2 },
            ScheduledStroke { stroke: s3, bath_curve: bath3 },
            ScheduledStroke { stroke: s4, bath_curve: bath4 },
        ],
        corners,
    )
}

/// Quantum Otto engine run.
pub fn run_qoe(spec: &CycleSpec) -> Result<CycleResult> {
    spec.validate_common()?;
    let r_t = spec.temperature_ratio; // T_B/T_A
    let f = spec.frequency_ratio; // ω_D/ω_A
    if !(f > 0.0 && f < 1.0) {
        return Err(Error::invalid("QOE frequency_ratio ω_D/ω_A must lie in (0, 1)"));
    }
    if r_t <= 0.0 {
        return Err(Error::invalid("QOE temperature_ratio T_B/T_A must be positive"));
    }
    let t_a = spec.start_temperature;
    let t_b = r_t * t_a;
    let t_c = t_b * f;
    let t_d = t_a * f;
    // closure: T_B/T_D ≥ Δ_A/Δ_D (equality is the degenerate zero-work cycle)
    if t_b / t_d < (1.0 / f) * (1.0 - 1e-12) {
        return Err(Error::unphysical(format!(
            "QOE closure violated: T_B/T_D = {:.6} < Δ_A/Δ_D = {:.6}",
            t_b / t_d,
            1.0 / f
        )));
    }
    let w_a = spec.resolved_start_omega();
    let w_d = f * w_a;
    let wb0 = spec.bath.mean_trap_frequency;
    let steps = spec.numerics.steps_per_stroke;
    let t_contact = spec.contact_stroke_time;

    let s1 = isochoric_stroke(w_a, t_a, t_b, t_contact, steps, wb0)?;
    let (f1, b1) = schedule_adiabatic((w_a, w_d), (wb0 * r_t, wb0 * r_t * f), &spec.numerics)?;
    let s2 = adiabatic_stroke(s1.final_state(), &f1)?;
    let s3 = isochoric_stroke(w_d, t_c, t_d, t_contact, steps, wb0 * r_t * f)?;
    let (f2, b2) = schedule_adiabatic((w_d, w_a), (wb0 * f, wb0), &spec.numerics)?;
    let s4 = adiabatic_stroke(s3.final_state(), &f2)?;

    let mass = spec.mixture.fluid_mass;
    let corners = vec![
        corner("A", s1.initial_state(), mass)?,
        corner("B", s1.final_state(), mass)?,
        corner("C", s3.initial_state(), mass)?,
        corner("D", s3.final_state(), mass)?,
    ];
    let bath1 = tracking_bath_curve(&s1, wb0);
    let bath2 = b1.samples.iter().map(|s| s.omega).collect();
    let bath3 = tracking_bath_curve(&s3, wb0 * r_t * f);
    let bath4 = b2.samples.iter().map(|s| s.omega).collect();
    assemble(
        spec,
        Engine::Qoe,
        vec![
            ScheduledStroke { stroke: s1, bath_curve: bath1 },
            ScheduledStroke { stroke: s2, bath_curve: bath2 },
            ScheduledStroke { stroke: s3, bath_curve: bath3 },
            ScheduledStroke { stroke: s4, bath_curve: bath4 },
        ],
        corners,
    )
}

/// Quantum Diesel engine run.
pub fn run_qde(spec: &CycleSpec) -> Result<CycleResult> {
    spec.validate_common()?;
    let f = spec.frequency_ratio; // ω_D/ω_A
    if !(f > 0.0 && f < 1.0) {
        return Err(Error::invalid("QDE frequency_ratio ω_D/ω_A must lie in (0, 1)"));
    }
    let x = spec.expansion_ratio; // ω_A/ω_B
    if x < 1.0 {
        return Err(Error::invalid("QDE expansion_ratio ω_A/ω_B must be ≥ 1"));
    }
    let t_a = spec.start_temperature;
    let w_a = spec.resolved_start_omega();
    let w_b = w_a / x;
    let w_cd = f * w_a;
    let t_d = f * t_a;
    let wb0 = spec.bath.mean_trap_frequency;
    let steps = spec.numerics.steps_per_stroke;
    let t_contact = spec.contact_stroke_time;

    let state_a = OscillatorState::thermal(w_a, t_a)?;
    let s1 = isobaric_stroke(&state_a, spec.mixture.fluid_mass, w_b, t_contact, steps)?;
    let t_b = s1
        .final_state()
        .temperature
        .expect("isobaric states are thermal");
    let t_c = t_b * w_cd / w_b;
    let (f1, b1) = schedule_adiabatic(
        (w_b, w_cd),
        (wb0 * t_b / t_a, wb0 * t_c / t_a),
        &spec.numerics,
    )?;
    let s2 = adiabatic_stroke(s1.final_state(), &f1)?;
    let s3 = isochoric_stroke(w_cd, t_c, t_d, t_contact, steps, wb0 * t_c / t_a)?;
    let (f2, b2) = schedule_adiabatic((w_cd, w_a), (wb0 * f, wb0), &spec.numerics)?;
    let s4 = adiabatic_stroke(s3.final_state(), &f2)?;

    let mass = spec.mixture.fluid_mass;
    let corners = vec![
        corner("A", s1.initial_state(), mass)?,
        corner("B", s1.final_state(), mass)?,
        corner("C", s3.initial_state(), mass)?,
        corner("D", s3.final_state(), mass)?,
    ];
    let bath1 = linear_bath_curve(&s1, wb0, wb0 * t_b / t_a);
    let bath2 = b1.samples.iter().map(|s| s.omega).collect();
    let bath3 = tracking_bath_curve(&s3, wb0 * t_c / t_a);
    let bath4 = b2.samples.iter().map(|s| s.omega).collect();
    assemble(
        spec,
        Engine::Qde,
        vec![
            ScheduledStroke { stroke: s1, bath_curve: bath1 },
            ScheduledStroke { stroke: s2, bath_curve: bath2 },
            ScheduledStroke { stroke: s3, bath_curve: bath3 },
            ScheduledStroke { stroke: s4, bath_curve: bath4 },
        ],
        corners,
    )
}

/// Diesel maximum-efficiency formula:
/// η = 1 − (Δ_D/Δ_A)·[(Δ_A/Δ_B)^{3/2} − 1]/[3(Δ_A/Δ_B)^{1/2} − 3].
/// The bracket → 1 as Δ_A/Δ_B → 1 (Otto limit).
pub fn qde_max_efficiency(freq_ratio: f64, expansion_ratio: f64) -> f64 {
    if expansion_ratio == 1.0 {
        return 1.0 - freq_ratio;
    }
    let sqrt_x = expansion_ratio.sqrt();
    let bracket = (expansion_ratio * sqrt_x - 1.0) / (3.0 * (sqrt_x - 1.0));
    1.0 - freq_ratio * bracket
}

/// Root-finds the QDE expansion ratio Δ_A/Δ_B > 1 realizing a target
/// maximum efficiency at fixed Δ_D/Δ_A, bisected to 1e-10.
pub fn solve_qde_expansion_ratio(eta_target: f64, freq_ratio: f64) -> Result<f64> {
    if !(eta_target > 0.0 && eta_target < 1.0) {
        return Err(Error::invalid("eta_target must lie in (0, 1)"));
    }
    if !(freq_ratio > 0.0 && freq_ratio < 1.0) {
        return Err(Error::invalid("freq_ratio must lie in (0, 1)"));
    }
    // η is strictly decreasing in the expansion ratio from 1 − freq_ratio
    let mut lo = 1.0;
    let mut hi = 100.0;
    if eta_target >= 1.0 - freq_ratio || qde_max_efficiency(freq_ratio, hi) > eta_target {
        return Err(Error::unphysical(format!(
            "no QDE expansion ratio in (1, 100] reaches η = {eta_target}"
        )));
    }
    while hi - lo > 1e-10 {
        let mid = 0.5 * (lo + hi);
        if qde_max_efficiency(freq_ratio, mid) > eta_target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Efficiency at maximum power for super-adiabatic engines:
/// η* = 1 − (γ + sqrt(4γ(1+γ)))/(2+γ), with γ the ratio of working-medium
/// mean energies at the start of the isentropic compression (D) and
/// expansion (B).
pub fn efficiency_at_max_power(gamma: f64) -> Result<f64> {
    if gamma < 0.0 {
        return Err(Error::invalid("gamma must be non-negative"));
    }
    Ok(1.0 - (gamma + (4.0 * gamma * (1.0 + gamma)).sqrt()) / (2.0 + gamma))
}

/// Curzon-Ahlborn efficiency 1 − sqrt(T_cold/T_hot).
pub fn curzon_ahlborn(t_cold: f64, t_hot: f64) -> Result<f64> {
    if !(t_cold > 0.0 && t_cold <= t_hot) {
        return Err(Error::invalid("need 0 < t_cold ≤ t_hot"));
    }
    Ok(1.0 - (t_cold / t_hot).sqrt())
}

/// η_real = η_max × survival.
pub fn real_efficiency(eta_max: f64, survival: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&eta_max) || !(0.0..=1.0).contains(&survival) {
        return Err(Error::invalid("eta_max and survival must lie in [0, 1]"));
    }
    Ok(eta_max * survival)
}
