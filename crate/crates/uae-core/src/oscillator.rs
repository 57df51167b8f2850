//! Exact statistical mechanics of the 1-D quantum harmonic oscillator.
//!
//! Level energies are E_n = ħω(n + 1/2). The 1-D "volume" is the oscillator
//! length a_ho = sqrt(ħ/mω), so the conjugate pressure Π = -Σ P_n dE_n/da_ho
//! carries units of force. With β = ħω/k_BT the thermal closed forms are
//!
//!   Z(β)  = e^{-β/2} / (1 - e^{-β})
//!   E(β)  = ħω (1/2 + 1/(e^β - 1))
//!   Π(β)  = sqrt(ħ m ω³) · sinh β / (cosh β - 1) = sqrt(ξ) coth(β/2)
//!
//! and the isobaric temperature law inverts Π exactly:
//!   ħω/k_BT = ln[(Π + √ξ)/(Π - √ξ)],  ξ = ħ m ω³.
//!
//! The √ξ prefactor is fixed by the finite-difference identity
//! Π = -Σ P_n dE_n/da_ho (ħ m ω³, not h m ω³).

use serde::{Deserialize, Serialize};

use crate::constants::{BOLTZMANN, HBAR};
use crate::error::{Error, Result};

/// Tail bound for the truncated Boltzmann distribution.
const TAIL_BOUND: f64 = 1e-12;
/// Never truncate below this many levels.
const MIN_LEVELS: usize = 64;
/// Refuse absurd truncations (β so small the state would not fit in memory).
const MAX_LEVELS: usize = 1 << 22;

/// Working-fluid descriptor: trap frequency, level populations and, when the
/// state is (frozen-)thermal, the temperature they correspond to.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OscillatorState {
    /// Trap angular frequency (rad/s).
    pub omega: f64,
    /// Temperature (K); `None` for isolated non-thermal populations.
    pub temperature: Option<f64>,
    /// Level occupation probabilities P_n, Σ P_n = 1.
    pub populations: Vec<f64>,
}

impl OscillatorState {
    /// Thermal state at `omega`, `temperature`, with the level cutoff chosen
    /// so the truncated Boltzmann tail is below 1e-12.
    pub fn thermal(omega: f64, temperature: f64) -> Result<Self> {
        if omega <= 0.0 {
            return Err(Error::invalid("omega must be positive"));
        }
        if temperature <= 0.0 {
            return Err(Error::invalid("temperature must be positive"));
        }
        let beta = HBAR * omega / (BOLTZMANN * temperature);
        let cutoff = level_cutoff(beta)?;
        let populations = thermal_populations(beta, cutoff)?;
        Ok(Self {
            omega,
            temperature: Some(temperature),
            populations,
        })
    }

    /// State from explicit populations (renormalization is the caller's job;
    /// the sum is checked to 1e-12).
    pub fn with_populations(
        omega: f64,
        populations: Vec<f64>,
        temperature: Option<f64>,
    ) -> Result<Self> {
        if omega <= 0.0 {
            return Err(Error::invalid("omega must be positive"));
        }
        if let Some(t) = temperature {
            if t <= 0.0 {
                return Err(Error::invalid("temperature must be positive"));
            }
        }
        if populations.is_empty() {
            return Err(Error::invalid("populations must be non-empty"));
        }
        if populations.iter().any(|&p| p < 0.0) {
            return Err(Error::invalid("populations must be non-negative"));
        }
        let sum: f64 = populations.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::invalid("populations must sum to 1 within 1e-12"));
        }
        Ok(Self {
            omega,
            temperature,
            populations,
        })
    }

    /// β = ħω/k_BT when the state carries a temperature.
    pub fn beta(&self) -> Option<f64> {
        self.temperature
            .map(|t| HBAR * self.omega / (BOLTZMANN * t))
    }

    /// Number of retained levels.
    pub fn level_cutoff(&self) -> usize {
        self.populations.len()
    }

    /// Adiabatic transport: same populations at a new frequency. A thermal
    /// state stays thermal with T scaled by ω_new/ω (β is invariant).
    pub fn frozen_rescaled(&self, new_omega: f64) -> Result<Self> {
        if new_omega <= 0.0 {
            return Err(Error::invalid("omega must be positive"));
        }
        Ok(Self {
            omega: new_omega,
            temperature: self.temperature.map(|t| t * new_omega / self.omega),
            populations: self.populations.clone(),
        })
    }
}

/// Derived thermodynamic quantities of a state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThermoSnapshot {
    /// Σ P_n E_n (J).
    pub mean_energy: f64,
    /// -k_B Σ P_n ln P_n (J/K).
    pub entropy: f64,
    /// Quantum pressure Π (N).
    pub pressure: f64,
    /// a_ho = sqrt(ħ/mω) (m).
    pub harmonic_length: f64,
}

/// Smallest level count with Boltzmann tail e^{-Nβ}/(1-e^{-β}) < 1e-12,
/// floored at 64 levels.
pub fn level_cutoff(beta: f64) -> Result<usize> {
    if beta <= 0.0 {
        return Err(Error::invalid("beta must be positive"));
    }
    let denom = -(-beta).exp_m1(); // 1 - e^{-β}
    let needed = (-(TAIL_BOUND * denom).ln() / beta).ceil();
    let n = if needed.is_finite() && needed > 0.0 {
        needed as usize
    } else {
        0
    };
    let n = n.max(MIN_LEVELS);
    if n > MAX_LEVELS {
        return Err(Error::invalid(format!(
            "beta = {beta:e} needs more than {MAX_LEVELS} levels for the 1e-12 tail bound"
        )));
    }
    Ok(n)
}

/// Partition function Z = e^{-β/2}/(1 - e^{-β}) for E_n = ħω(n + 1/2).
pub fn partition_function(beta: f64) -> Result<f64> {
    if beta <= 0.0 {
        return Err(Error::invalid("beta must be positive"));
    }
    Ok((-beta / 2.0).exp() / -(-beta).exp_m1())
}

/// Boltzmann populations P_n = e^{-nβ}(1 - e^{-β}), n < cutoff, renormalized
/// over the cutoff. Errors if the cutoff leaves a tail above 1e-12.
pub fn thermal_populations(beta: f64, cutoff: usize) -> Result<Vec<f64>> {
    if beta <= 0.0 {
        return Err(Error::invalid("beta must be positive"));
    }
    if cutoff < 1 {
        return Err(Error::invalid("cutoff must be at least 1"));
    }
    let x = (-beta).exp();
    let one_minus_x = -(-beta).exp_m1();
    // Same tail measure as level_cutoff: e^{-Nβ}/(1-e^{-β}).
    let tail = (-beta * cutoff as f64).exp() / one_minus_x;
    if tail > TAIL_BOUND {
        return Err(Error::invalid(format!(
            "cutoff {cutoff} leaves a Boltzmann tail {tail:e} > {TAIL_BOUND:e} at beta = {beta}"
        )));
    }
    let mut populations = Vec::with_capacity(cutoff);
    let mut weight = one_minus_x;
    let mut sum = 0.0;
    for _ in 0..cutoff {
        populations.push(weight);
        sum += weight;
        weight *= x;
    }
    for p in &mut populations {
        *p /= sum;
    }
    Ok(populations)
}

/// Mean energy Σ P_n ħω(n + 1/2) (J).
pub fn mean_energy(state: &OscillatorState) -> f64 {
    let quanta: f64 = state
        .populations
        .iter()
        .enumerate()
        .map(|(n, p)| p * (n as f64 + 0.5))
        .sum();
    HBAR * state.omega * quanta
}

/// Thermal entropy S = -k_B Σ P_n ln P_n (J/K), with 0·ln 0 = 0.
pub fn entropy(state: &OscillatorState) -> f64 {
    let s: f64 = state
        .populations
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p * p.ln())
        .sum();
    -BOLTZMANN * s
}

/// Quantum pressure of a thermal state (N):
/// Π = sqrt(ħ m ω³) sinh β/(cosh β - 1) = sqrt(ξ)·coth(β/2).
pub fn quantum_pressure(state: &OscillatorState, mass: f64) -> Result<f64> {
    let beta = state
        .beta()
        .ok_or_else(|| Error::unphysical("quantum pressure requires a thermal state"))?;
    Ok(zero_point_pressure(state.omega, mass) / (beta / 2.0).tanh())
}

/// Zero-point pressure floor sqrt(ħ m ω³) (N).
pub fn zero_point_pressure(omega: f64, mass: f64) -> f64 {
    (HBAR * mass * omega.powi(3)).sqrt()
}

/// Harmonic oscillator length a_ho = sqrt(ħ/mω) (m).
pub fn harmonic_length(omega: f64, mass: f64) -> f64 {
    (HBAR / (mass * omega)).sqrt()
}

/// Isobaric temperature law: the T at which a trap of frequency `omega`
/// sustains pressure Π, from ħω/k_BT = ln[(Π + √ξ)/(Π - √ξ)]. No finite
/// temperature exists at or below the zero-point floor √ξ.
pub fn isobaric_temperature(pressure: f64, omega: f64, mass: f64) -> Result<f64> {
    if omega <= 0.0 {
        return Err(Error::invalid("omega must be positive"));
    }
    let floor = zero_point_pressure(omega, mass);
    if pressure <= floor {
        return Err(Error::unphysical(format!(
            "pressure {pressure:e} N is at or below the zero-point floor {floor:e} N"
        )));
    }
    let beta = ((pressure + floor) / (pressure - floor)).ln();
    Ok(HBAR * omega / (BOLTZMANN * beta))
}

/// Bundle of derived quantities for a thermal state.
pub fn snapshot(state: &OscillatorState, mass: f64) -> Result<ThermoSnapshot> {
    Ok(ThermoSnapshot {
        mean_energy: mean_energy(state),
        entropy: entropy(state),
        pressure: quantum_pressure(state, mass)?,
        harmonic_length: harmonic_length(state.omega, mass),
    })
}
