//! JSON run configuration.
//!
//! Units are the reporting units (μK, ms, nm, μm, mW, ordinary Hz); the
//! conversion to SI happens here. Unknown keys are rejected. Every default
//! is spelled out in the reference configs under `config/`.

use serde::{Deserialize, Serialize};
use uae_core::bath::{AlphaMass, BathSpec, MixtureSpec, TweezerSpec};
use uae_core::constants::{angular, microkelvin, ATOMIC_MASS_UNIT};
use uae_core::cycle::{CycleSpec, Engine, Numerics};
use uae_core::scan::{ScanRequest, SweptParameter};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub engine: Engine,
    pub start_temperature_uk: f64,
    /// QCE: T₂/T₁. QOE: T_B/T_A. Unused by QDE.
    #[serde(default)]
    pub temperature_ratio: Option<f64>,
    /// QCE: ω_B/ω_A. QDE: ω_A/ω_B. Unused by QOE.
    #[serde(default)]
    pub expansion_ratio: Option<f64>,
    /// QOE/QDE: ω_D/ω_A. Unused by QCE.
    #[serde(default)]
    pub frequency_ratio: Option<f64>,
    pub contact_stroke_time_ms: f64,
    /// Overrides the canonical ω_A = 2k_B·T_A/ħ (ordinary Hz).
    #[serde(default)]
    pub start_frequency_override_hz: Option<f64>,
    pub bath: BathConfig,
    #[serde(default)]
    pub mixture: MixtureConfig,
    pub tweezer: TweezerConfig,
    #[serde(default)]
    pub numerics: NumericsConfig,
    /// Required by `uae scan`, ignored by `uae cycle`.
    #[serde(default)]
    pub scan: Option<ScanConfig>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BathConfig {
    pub atom_number: u64,
    pub mean_trap_frequency_hz: f64,
    /// Defaults to the start temperature.
    #[serde(default)]
    pub temperature_uk: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct MixtureConfig {
    pub fluid_mass_amu: f64,
    pub bath_mass_amu: f64,
    pub fluid_d1_wavelength_nm: f64,
    pub fluid_d2_wavelength_nm: f64,
    /// Natural linewidths Γ/2π (MHz).
    pub fluid_d1_linewidth_mhz: f64,
    pub fluid_d2_linewidth_mhz: f64,
    pub tweezer_wavelength_nm: f64,
}

impl Default for MixtureConfig {
    fn default() -> Self {
        let m = MixtureSpec::default();
        Self {
            fluid_mass_amu: m.fluid_mass / ATOMIC_MASS_UNIT,
            bath_mass_amu: m.bath_mass / ATOMIC_MASS_UNIT,
            fluid_d1_wavelength_nm: m.fluid_transition_wavelengths[0] * 1e9,
            fluid_d2_wavelength_nm: m.fluid_transition_wavelengths[1] * 1e9,
            fluid_d1_linewidth_mhz: m.fluid_linewidths[0] / (2.0 * std::f64::consts::PI) / 1e6,
            fluid_d2_linewidth_mhz: m.fluid_linewidths[1] / (2.0 * std::f64::consts::PI) / 1e6,
            tweezer_wavelength_nm: m.tweezer_wavelength * 1e9,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TweezerConfig {
    pub waist_um: f64,
    pub power_mw: f64,
    pub wavelength_nm: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct NumericsConfig {
    pub steps_per_stroke: usize,
    pub ramp_samples: usize,
    pub min_ramp_time_tolerance_us: f64,
    pub collisions_required: f64,
    pub collisions_temperature_exponent: f64,
    pub alpha_mass: AlphaMass,
    pub ramp_positivity_margin: f64,
}

impl Default for NumericsConfig {
    fn default() -> Self {
        let n = Numerics::default();
        Self {
            steps_per_stroke: n.steps_per_stroke,
            ramp_samples: n.ramp_samples,
            min_ramp_time_tolerance_us: n.min_time_tolerance * 1e6,
            collisions_required: n.collisions_required,
            collisions_temperature_exponent: n.collisions_temperature_exponent,
            alpha_mass: n.alpha_mass,
            ramp_positivity_margin: n.ramp_positivity_margin,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanConfig {
    pub swept_parameter: SweptParameter,
    /// Grid in reporting units: μK for start_temperature, ms for
    /// stroke_time, dimensionless for eta_max. Strictly increasing.
    pub grid: Vec<f64>,
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("config: {e}"))
    }

    pub fn to_cycle_spec(&self) -> Result<CycleSpec, String> {
        let ratio_for = |value: Option<f64>, name: &str, needed: bool| -> Result<f64, String> {
            match (value, needed) {
                (Some(v), _) => Ok(v),
                (None, false) => Ok(1.0),
                (None, true) => Err(format!("config: `{name}` is required for {:?}", self.engine)),
            }
        };
        let (t_needed, e_needed, f_needed) = match self.engine {
            Engine::Qce => (true, true, false),
            Engine::Qoe => (true, false, true),
            Engine::Qde => (false, true, true),
        };
        let temperature_ratio = ratio_for(self.temperature_ratio, "temperature_ratio", t_needed)?;
        let expansion_ratio = ratio_for(self.expansion_ratio, "expansion_ratio", e_needed)?;
        let frequency_ratio = ratio_for(self.frequency_ratio, "frequency_ratio", f_needed)?;

        let start_temperature = microkelvin(self.start_temperature_uk);
        let mixture = MixtureSpec {
            fluid_mass: self.mixture.fluid_mass_amu * ATOMIC_MASS_UNIT,
            bath_mass: self.mixture.bath_mass_amu * ATOMIC_MASS_UNIT,
            fluid_transition_wavelengths: [
                self.mixture.fluid_d1_wavelength_nm * 1e-9,
                self.mixture.fluid_d2_wavelength_nm * 1e-9,
            ],
            fluid_linewidths: [
                angular(self.mixture.fluid_d1_linewidth_mhz * 1e6),
                angular(self.mixture.fluid_d2_linewidth_mhz * 1e6),
            ],
            tweezer_wavelength: self.mixture.tweezer_wavelength_nm * 1e-9,
        };
        Ok(CycleSpec {
            engine: self.engine,
            start_temperature,
            temperature_ratio,
            expansion_ratio,
            frequency_ratio,
            contact_stroke_time: self.contact_stroke_time_ms * 1e-3,
            start_omega: self.start_frequency_override_hz.map(angular),
            bath: BathSpec {
                atom_number: self.bath.atom_number,
                mean_trap_frequency: angular(self.bath.mean_trap_frequency_hz),
                temperature: self
                    .bath
                    .temperature_uk
                    .map(microkelvin)
                    .unwrap_or(start_temperature),
            },
            mixture,
            tweezer: TweezerSpec {
                waist: self.tweezer.waist_um * 1e-6,
                power: self.tweezer.power_mw * 1e-3,
                wavelength: self.tweezer.wavelength_nm * 1e-9,
            },
            numerics: Numerics {
                steps_per_stroke: self.numerics.steps_per_stroke,
                ramp_samples: self.numerics.ramp_samples,
                min_time_tolerance: self.numerics.min_ramp_time_tolerance_us * 1e-6,
                collisions_required: self.numerics.collisions_required,
                collisions_temperature_exponent: self.numerics.collisions_temperature_exponent,
                alpha_mass: self.numerics.alpha_mass,
                ramp_positivity_margin: self.numerics.ramp_positivity_margin,
            },
        })
    }

    pub fn to_scan_request(&self) -> Result<ScanRequest, String> {
        let scan = self
            .scan
            .as_ref()
            .ok_or("config: a `scan` section is required for `uae scan`")?;
        let grid: Vec<f64> = match scan.swept_parameter {
            SweptParameter::StartTemperature => {
                scan.grid.iter().map(|&v| microkelvin(v)).collect()
            }
            SweptParameter::StrokeTime => scan.grid.iter().map(|&v| v * 1e-3).collect(),
            SweptParameter::EtaMax => scan.grid.clone(),
        };
        Ok(ScanRequest {
            swept_parameter: scan.swept_parameter,
            grid,
            base_spec: self.to_cycle_spec()?,
        })
    }
}
