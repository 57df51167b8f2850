//! Physical constants (SI) and default species data for the K-Rb mixture.
//!
//! CODATA 2018: `h`, `k_B` and the unified atomic mass unit are exact or
//! measured values; `ħ` is derived as `h / 2π` so that the pair stays
//! consistent to machine precision.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Planck constant (J·s), exact by SI definition.
pub const PLANCK: f64 = 6.626_070_15e-34;

/// Reduced Planck constant (J·s), derived from `PLANCK`.
pub const HBAR: f64 = PLANCK / (2.0 * std::f64::consts::PI);

/// Boltzmann constant (J/K), exact by SI definition.
pub const BOLTZMANN: f64 = 1.380_649e-23;

/// Unified atomic mass unit (kg).
pub const ATOMIC_MASS_UNIT: f64 = 1.660_539_066_60e-27;

/// Speed of light in vacuum (m/s), exact.
pub const SPEED_OF_LIGHT: f64 = 2.997_924_58e8;

/// Mass of the 41K working-fluid atom (kg).
pub const K41_MASS: f64 = 40.961_825_26 * ATOMIC_MASS_UNIT;

/// Mass of the 87Rb bath atom (kg).
pub const RB87_MASS: f64 = 86.909_180_53 * ATOMIC_MASS_UNIT;

/// K D1 transition wavelength, 4S_1/2 -> 4P_1/2 (m).
pub const K_D1_WAVELENGTH: f64 = 770.108e-9;

/// K D2 transition wavelength, 4S_1/2 -> 4P_3/2 (m).
pub const K_D2_WAVELENGTH: f64 = 766.701e-9;

/// K D1 natural linewidth (rad/s).
pub const K_D1_LINEWIDTH: f64 = 2.0 * std::f64::consts::PI * 5.956e6;

/// K D2 natural linewidth (rad/s).
pub const K_D2_LINEWIDTH: f64 = 2.0 * std::f64::consts::PI * 6.035e6;

/// Species-selective tweezer wavelength for the K-Rb mixture (m): the Rb
/// polarizability null between its D lines, red-detuned for K.
pub const KRB_TWEEZER_WAVELENGTH: f64 = 789.82e-9;

/// Fundamental constants bundle, checked for internal consistency.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    /// ħ (J·s)
    pub reduced_planck: f64,
    /// h (J·s)
    pub planck: f64,
    /// k_B (J/K)
    pub boltzmann: f64,
    /// u (kg)
    pub atomic_mass_unit: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self {
            reduced_planck: HBAR,
            planck: PLANCK,
            boltzmann: BOLTZMANN,
            atomic_mass_unit: ATOMIC_MASS_UNIT,
        }
    }
}

impl PhysicalConstants {
    /// Checks positivity and the h = 2π·ħ relation (1e-12 relative).
    pub fn validate(&self) -> Result<()> {
        if !(self.reduced_planck > 0.0
            && self.planck > 0.0
            && self.boltzmann > 0.0
            && self.atomic_mass_unit > 0.0)
        {
            return Err(Error::invalid("physical constants must be strictly positive"));
        }
        let two_pi_hbar = 2.0 * std::f64::consts::PI * self.reduced_planck;
        if ((two_pi_hbar - self.planck) / self.planck).abs() > 1e-12 {
            return Err(Error::invalid("planck must equal 2π × reduced_planck"));
        }
        Ok(())
    }
}

/// μK → K.
pub fn microkelvin(t_uk: f64) -> f64 {
    t_uk * 1e-6
}

/// Ordinary frequency in Hz → angular frequency in rad/s.
pub fn angular(freq_hz: f64) -> f64 {
    2.0 * std::f64::consts::PI * freq_hz
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_consistent() {
        PhysicalConstants::default().validate().unwrap();
        // ħ derived from exact h
        assert!((2.0 * std::f64::consts::PI * HBAR - PLANCK).abs() / PLANCK < 1e-15);
    }

    #[test]
    fn validate_rejects_inconsistent_planck() {
        let c = PhysicalConstants {
            planck: PLANCK * (1.0 + 1e-9),
            ..PhysicalConstants::default()
        };
        assert!(c.validate().is_err());
    }
}
