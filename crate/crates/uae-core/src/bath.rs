//! Bath, interspecies thermalization, three-body loss, and tweezer models.
//!
//! The bath is a classical Gaussian thermal cloud of N atoms in a harmonic
//! trap. Thermalization of the single working-fluid atom proceeds through
//! interspecies elastic collisions at rate
//!
//!   Γ = 4πa² · v̄ · N_bath · Π_i [2π(σ_i,fluid² + σ_i,bath²)]^{-1/2}
//!
//! (Gaussian-overlap form; the fluid atom count is 1 and v̄ is the mean
//! relative thermal speed sqrt(8k_BT/πμ)). Three-body losses remove the
//! fluid atom at rate α·n_bath² with α = 4πħa⁴/m, giving an exponential
//! survival probability. The species-selective tweezer is a two-line
//! (D1/D2) Gaussian-beam dipole trap.

use serde::{Deserialize, Serialize};

use crate::constants::{
    BOLTZMANN, HBAR, K41_MASS, KRB_TWEEZER_WAVELENGTH, K_D1_LINEWIDTH, K_D1_WAVELENGTH,
    K_D2_LINEWIDTH, K_D2_WAVELENGTH, RB87_MASS, SPEED_OF_LIGHT,
};
use crate::error::{Error, Result};

/// Species pair: working fluid (trapped by the tweezer) and bath.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MixtureSpec {
    /// Working-fluid atom mass (kg).
    pub fluid_mass: f64,
    /// Bath atom mass (kg).
    pub bath_mass: f64,
    /// Fluid D1 and D2 transition wavelengths (m).
    pub fluid_transition_wavelengths: [f64; 2],
    /// Fluid D1 and D2 natural linewidths (rad/s).
    pub fluid_linewidths: [f64; 2],
    /// Species-selective tweezer design wavelength (m).
    pub tweezer_wavelength: f64,
}

impl Default for MixtureSpec {
    /// The 41K (fluid) - 87Rb (bath) mixture.
    fn default() -> Self {
        Self {
            fluid_mass: K41_MASS,
            bath_mass: RB87_MASS,
            fluid_transition_wavelengths: [K_D1_WAVELENGTH, K_D2_WAVELENGTH],
            fluid_linewidths: [K_D1_LINEWIDTH, K_D2_LINEWIDTH],
            tweezer_wavelength: KRB_TWEEZER_WAVELENGTH,
        }
    }
}

impl MixtureSpec {
    pub fn validate(&self) -> Result<()> {
        if self.fluid_mass <= 0.0 || self.bath_mass <= 0.0 {
            return Err(Error::invalid("masses must be positive"));
        }
        let [d1, d2] = self.fluid_transition_wavelengths;
        if self.tweezer_wavelength <= d1.max(d2) {
            return Err(Error::unphysical(
                "tweezer wavelength must be red-detuned from both fluid transitions",
            ));
        }
        Ok(())
    }

    /// Reduced mass of the fluid-bath pair (kg).
    pub fn reduced_mass(&self) -> f64 {
        self.fluid_mass * self.bath_mass / (self.fluid_mass + self.bath_mass)
    }
}

/// Thermal-cloud bath parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BathSpec {
    /// Number of bath atoms.
    pub atom_number: u64,
    /// Mean trap angular frequency (rad/s).
    pub mean_trap_frequency: f64,
    /// Bath temperature (K).
    pub temperature: f64,
}

impl BathSpec {
    pub fn validate(&self) -> Result<()> {
        if self.atom_number < 1 {
            return Err(Error::invalid("bath needs at least one atom"));
        }
        if self.mean_trap_frequency <= 0.0 || self.temperature <= 0.0 {
            return Err(Error::invalid("bath frequency and temperature must be positive"));
        }
        Ok(())
    }
}

/// Optical tweezer beam parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TweezerSpec {
    /// 1/e² intensity radius at the focus (m).
    pub waist: f64,
    /// Beam power (W).
    pub power: f64,
    /// Laser wavelength (m).
    pub wavelength: f64,
}

impl TweezerSpec {
    pub fn validate(&self) -> Result<()> {
        if self.waist <= 0.0 || self.power <= 0.0 || self.wavelength <= 0.0 {
            return Err(Error::invalid("tweezer parameters must be positive"));
        }
        Ok(())
    }
}

/// Which mass enters the three-body coefficient α = 4πħa⁴/m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlphaMass {
    /// Bath-atom mass (loss events involve two bath atoms).
    #[default]
    Bath,
    Fluid,
    Reduced,
}

impl AlphaMass {
    pub fn mass(self, mixture: &MixtureSpec) -> f64 {
        match self {
            AlphaMass::Bath => mixture.bath_mass,
            AlphaMass::Fluid => mixture.fluid_mass,
            AlphaMass::Reduced => mixture.reduced_mass(),
        }
    }
}

/// Per-stroke friction accounting.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FrictionLedger {
    /// Interspecies scattering length in use (m); time-averaged when the
    /// bath conditions vary along the stroke.
    pub scattering_length: f64,
    /// Imposed elastic thermalization rate (1/s).
    pub elastic_rate: f64,
    /// Three-body coefficient α = 4πħa⁴/m at the average a (m⁶/s).
    pub three_body_coefficient: f64,
    /// Survival probability over this stroke's contact.
    pub survival: f64,
    /// Bath contact time (s).
    pub contact_time: f64,
}

/// Gaussian widths of the thermal bath cloud, σ = sqrt(k_BT/mω²) per axis
/// (isotropic mean frequency).
pub fn thermal_cloud_widths(bath: &BathSpec, bath_mass: f64) -> [f64; 3] {
    let sigma =
        (BOLTZMANN * bath.temperature / (bath_mass * bath.mean_trap_frequency.powi(2))).sqrt();
    [sigma, sigma, sigma]
}

/// Peak density of the Gaussian cloud, n₀ = N/((2π)^{3/2} σx σy σz).
pub fn bath_peak_density(bath: &BathSpec, bath_mass: f64) -> f64 {
    let [sx, sy, sz] = thermal_cloud_widths(bath, bath_mass);
    bath.atom_number as f64 / ((2.0 * std::f64::consts::PI).powf(1.5) * sx * sy * sz)
}

/// Mean relative thermal speed sqrt(8k_BT/πμ) of the fluid-bath pair (m/s).
pub fn mean_relative_speed(temperature: f64, mixture: &MixtureSpec) -> f64 {
    (8.0 * BOLTZMANN * temperature / (std::f64::consts::PI * mixture.reduced_mass())).sqrt()
}

/// Gaussian-overlap factor Π_i [2π(σ_i,f² + σ_i,b²)]^{-1/2} (1/m³).
fn overlap_density(fluid_widths: [f64; 3], bath_widths: [f64; 3]) -> f64 {
    fluid_widths
        .iter()
        .zip(bath_widths.iter())
        .map(|(sf, sb)| 1.0 / (2.0 * std::f64::consts::PI * (sf * sf + sb * sb)).sqrt())
        .product()
}

/// Interspecies elastic collision rate of the single fluid atom with the
/// cloud (1/s): Γ = 4πa²·v̄·N·overlap. Exactly quadratic in a; reduces to
/// 4πa²v̄n₀ when the fluid widths are negligible.
pub fn elastic_collision_rate(
    scattering_length: f64,
    mixture: &MixtureSpec,
    bath: &BathSpec,
    fluid_widths: [f64; 3],
) -> Result<f64> {
    if scattering_length < 0.0 {
        return Err(Error::invalid("scattering length must be non-negative"));
    }
    Ok(scattering_length * scattering_length
        * elastic_rate_per_a2(mixture, bath, fluid_widths))
}

/// Γ/a²: the rate with the cross-section factor 4πa² divided out (1/(s·m²)).
pub fn elastic_rate_per_a2(
    mixture: &MixtureSpec,
    bath: &BathSpec,
    fluid_widths: [f64; 3],
) -> f64 {
    let v = mean_relative_speed(bath.temperature, mixture);
    let bath_widths = thermal_cloud_widths(bath, mixture.bath_mass);
    4.0 * std::f64::consts::PI
        * v
        * bath.atom_number as f64
        * overlap_density(fluid_widths, bath_widths)
}

/// The scattering length enforcing `collisions_required` elastic collisions
/// within `stroke_time`: the unique a > 0 with Γ(a) = collisions/t. Closed
/// form since Γ ∝ a².
pub fn required_scattering_length(
    stroke_time: f64,
    mixture: &MixtureSpec,
    bath: &BathSpec,
    fluid_widths: [f64; 3],
    collisions_required: f64,
) -> Result<f64> {
    if stroke_time <= 0.0 {
        return Err(Error::invalid("stroke time must be positive"));
    }
    if collisions_required <= 0.0 {
        return Err(Error::invalid("collisions_required must be positive"));
    }
    let target = collisions_required / stroke_time;
    Ok((target / elastic_rate_per_a2(mixture, bath, fluid_widths)).sqrt())
}

/// Three-body loss coefficient α = 4πħa⁴/m (m⁶/s).
pub fn three_body_coefficient(scattering_length: f64, mass: f64) -> f64 {
    4.0 * std::f64::consts::PI * HBAR * scattering_length.powi(4) / mass
}

/// Survival probability of the trapped atom against three-body losses:
/// dn_f/dt = -α n_f n_bath² at constant bath density gives exp(-α n² t).
pub fn survival_probability(
    scattering_length: f64,
    bath_density: f64,
    contact_time: f64,
    mass: f64,
) -> Result<f64> {
    if scattering_length < 0.0 || bath_density < 0.0 || contact_time < 0.0 {
        return Err(Error::invalid("survival arguments must be non-negative"));
    }
    let alpha = three_body_coefficient(scattering_length, mass);
    Ok((-alpha * bath_density * bath_density * contact_time).exp())
}

/// Derived dipole-trap parameters for the fluid atom.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrapParams {
    /// Trap depth U₀ (J).
    pub depth: f64,
    /// Radial trap angular frequency sqrt(4U₀/mw₀²) (rad/s).
    pub radial_frequency: f64,
    /// Axial trap angular frequency sqrt(2U₀/mz_R²) (rad/s).
    pub axial_frequency: f64,
    /// Peak photon scattering rate (1/s). Scales linearly with power.
    pub photon_scatter_rate: f64,
}

/// Gaussian-beam dipole trap from the two-line rotating-wave potential,
/// each D line entering as an independent two-level term:
///
///   U₀ = (πc²I₀/2) Σ_i Γ_i/(ω_i³ Δ_i),   Δ_i = ω_i − ω_laser,
///
/// with peak intensity I₀ = 2P/πw₀². The scattering rate carries the
/// corresponding (Γ_i/Δ_i)² terms with the (ω/ω_i)³ spontaneous factor.
/// Blue-detuned light does not trap and is rejected.
pub fn tweezer_trap(tweezer: &TweezerSpec, mixture: &MixtureSpec) -> Result<TrapParams> {
    tweezer.validate()?;
    let [l1, l2] = mixture.fluid_transition_wavelengths;
    if tweezer.wavelength <= l1.max(l2) {
        return Err(Error::unphysical(
            "tweezer light is blue-detuned: no trapping potential for the fluid",
        ));
    }
    let omega_laser = 2.0 * std::f64::consts::PI * SPEED_OF_LIGHT / tweezer.wavelength;
    let c2 = SPEED_OF_LIGHT * SPEED_OF_LIGHT;
    let prefactor = std::f64::consts::PI * c2 / 2.0;
    let intensity = 2.0 * tweezer.power / (std::f64::consts::PI * tweezer.waist * tweezer.waist);

    let mut depth_per_intensity = 0.0;
    let mut scatter_per_intensity = 0.0;
    for (lambda, gamma) in mixture
        .fluid_transition_wavelengths
        .iter()
        .zip(mixture.fluid_linewidths.iter())
    {
        let omega_line = 2.0 * std::f64::consts::PI * SPEED_OF_LIGHT / lambda;
        let detuning = omega_line - omega_laser;
        let line_cubed = omega_line.powi(3);
        depth_per_intensity += prefactor * gamma / (line_cubed * detuning);
        scatter_per_intensity += prefactor / HBAR
            * (gamma / detuning).powi(2)
            * (omega_laser / omega_line).powi(3)
            / line_cubed;
    }
    let depth = depth_per_intensity * intensity;
    let rayleigh = std::f64::consts::PI * tweezer.waist * tweezer.waist / tweezer.wavelength;
    let radial = (4.0 * depth / (mixture.fluid_mass * tweezer.waist * tweezer.waist)).sqrt();
    let axial = (2.0 * depth / (mixture.fluid_mass * rayleigh * rayleigh)).sqrt();
    Ok(TrapParams {
        depth,
        radial_frequency: radial,
        axial_frequency: axial,
        photon_scatter_rate: scatter_per_intensity * intensity,
    })
}

/// Thermal Gaussian widths of the fluid atom in its trap, including the
/// zero-point contribution: σ_i² = (ħ/2mω_i)·coth(ħω_i/2k_BT).
pub fn fluid_gaussian_widths(
    radial_frequency: f64,
    axial_frequency: f64,
    mass: f64,
    temperature: f64,
) -> [f64; 3] {
    let width = |omega: f64| -> f64 {
        let x = HBAR * omega / (2.0 * BOLTZMANN * temperature);
        (HBAR / (2.0 * mass * omega) / x.tanh()).sqrt()
    };
    [
        width(radial_frequency),
        width(radial_frequency),
        width(axial_frequency),
    ]
}
