//! Super-adiabatic (shortcut-to-adiabaticity) trap-frequency ramps.
//!
//! A time-dependent harmonic oscillator follows a self-similar evolution
//! when the scaling factor b(t) obeys the Ermakov equation
//! b̈ = ω₀²/b³ − ω(t)²b. Inverse engineering picks the quintic interpolant
//!
//!   b(t) = 1 + (γ − 1)(10s³ − 15s⁴ + 6s⁵),  s = t/t_f,  γ = sqrt(ω₀/ω_f),
//!
//! which satisfies b(0) = 1, b(t_f) = γ, ḃ = b̈ = 0 at both ends, and the
//! trap must then run
//!
//!   ω(t)² = ω₀²/b⁴ − b̈/b.
//!
//! Populations stay frozen throughout, so the ramp is adiabatic in the
//! quantum sense at any finite duration — provided ω(t)² stays positive.
//! Too-fast ramps would need an inverted (expelling) trap; they are flagged
//! invalid rather than rejected, and `min_ramp_time` bisects for the
//! shortest duration that avoids inversion.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default number of sample intervals per ramp.
pub const DEFAULT_RAMP_SAMPLES: usize = 512;

/// Default bisection tolerance for `min_ramp_time` (s).
pub const DEFAULT_MIN_TIME_TOLERANCE: f64 = 1e-6;

/// One sampled point of a ramp. For invalid (inverted-trap) schedules the
/// stored omega is sign(ω²)·sqrt(|ω²|) so the inversion is visible in plots.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RampSample {
    /// Time since the start of the ramp (s).
    pub time: f64,
    /// Trap angular frequency (rad/s).
    pub omega: f64,
}

/// Time-sampled trap-frequency schedule.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RampSchedule {
    /// Total duration t_f (s).
    pub duration: f64,
    /// Samples at uniform times from 0 to `duration` inclusive.
    pub samples: Vec<RampSample>,
    /// ω(0) (rad/s).
    pub start_omega: f64,
    /// ω(t_f) (rad/s).
    pub end_omega: f64,
    /// True iff ω(t)² > 0 at every sample (no trap inversion).
    pub valid: bool,
}

/// b, ḃ, b̈ of the quintic scaling ansatz at time `t`.
pub fn scaling_factor(
    start_omega: f64,
    end_omega: f64,
    duration: f64,
    t: f64,
) -> (f64, f64, f64) {
    let gamma = (start_omega / end_omega).sqrt();
    let s = t / duration;
    let poly = s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
    let dpoly = 30.0 * s * s * (1.0 - s) * (1.0 - s);
    let ddpoly = 60.0 * s * (1.0 - s) * (1.0 - 2.0 * s);
    let b = 1.0 + (gamma - 1.0) * poly;
    let bdot = (gamma - 1.0) * dpoly / duration;
    let bddot = (gamma - 1.0) * ddpoly / (duration * duration);
    (b, bdot, bddot)
}

/// ω(t)² = ω₀²/b⁴ − b̈/b along the engineered ramp. May be negative for
/// too-short durations (trap inversion).
pub fn omega_squared_at(start_omega: f64, end_omega: f64, duration: f64, t: f64) -> f64 {
    let (b, _, bddot) = scaling_factor(start_omega, end_omega, duration, t);
    let b2 = b * b;
    start_omega * start_omega / (b2 * b2) - bddot / b
}

/// Builds the super-adiabatic schedule between two trap frequencies.
///
/// Boundary conditions hold analytically: ω(0) = start, ω(t_f) = end,
/// populations frozen throughout. The `valid` flag records strict
/// positivity of ω² at all samples; an inverted-trap schedule is returned
/// rather than rejected.
pub fn superadiabatic_ramp(
    start_omega: f64,
    end_omega: f64,
    duration: f64,
    steps: usize,
) -> Result<RampSchedule> {
    if start_omega <= 0.0 || end_omega <= 0.0 {
        return Err(Error::invalid("ramp frequencies must be positive"));
    }
    if duration <= 0.0 {
        return Err(Error::invalid("ramp duration must be positive"));
    }
    if steps < 64 {
        return Err(Error::invalid("ramp needs at least 64 steps"));
    }
    let mut samples = Vec::with_capacity(steps + 1);
    let mut valid = true;
    for i in 0..=steps {
        let t = duration * i as f64 / steps as f64;
        let w2 = omega_squared_at(start_omega, end_omega, duration, t);
        if w2 <= 0.0 {
            valid = false;
        }
        samples.push(RampSample {
            time: t,
            omega: w2.signum() * w2.abs().sqrt(),
        });
    }
    Ok(RampSchedule {
        duration,
        samples,
        start_omega,
        end_omega,
        valid,
    })
}

/// Validity with an optional stricter floor: ω(t)² must exceed
/// (margin · min(ω₀, ω_f))² at every sample. margin = 0 is the bare
/// no-inversion criterion.
pub fn duration_is_valid_with_margin(
    start_omega: f64,
    end_omega: f64,
    duration: f64,
    steps: usize,
    margin: f64,
) -> bool {
    let floor = margin * start_omega.min(end_omega);
    let floor_sq = floor * floor;
    (0..=steps).all(|i| {
        let t = duration * i as f64 / steps as f64;
        omega_squared_at(start_omega, end_omega, duration, t) > floor_sq
    })
}

/// Shortest valid ramp duration, bisected to 1 μs. Equal frequencies need
/// no ramp at all and return 0.
pub fn min_ramp_time(start_omega: f64, end_omega: f64) -> Result<f64> {
    min_ramp_time_with(
        start_omega,
        end_omega,
        DEFAULT_MIN_TIME_TOLERANCE,
        DEFAULT_RAMP_SAMPLES,
    )
}

/// Shortest valid ramp duration at a caller-chosen bisection tolerance and
/// sample count. The result scales as 1/start_omega at fixed frequency
/// ratio (the positivity condition is (ω₀t_f)² > max_s b³b″, dimensionless
/// in everything but ω₀t_f).
pub fn min_ramp_time_with(
    start_omega: f64,
    end_omega: f64,
    tolerance: f64,
    steps: usize,
) -> Result<f64> {
    min_ramp_time_with_margin(start_omega, end_omega, tolerance, steps, 0.0)
}

/// `min_ramp_time_with` under the stricter positivity-margin criterion.
pub fn min_ramp_time_with_margin(
    start_omega: f64,
    end_omega: f64,
    tolerance: f64,
    steps: usize,
    margin: f64,
) -> Result<f64> {
    if start_omega <= 0.0 || end_omega <= 0.0 {
        return Err(Error::invalid("ramp frequencies must be positive"));
    }
    if tolerance <= 0.0 {
        return Err(Error::invalid("tolerance must be positive"));
    }
    if !(0.0..1.0).contains(&margin) {
        return Err(Error::invalid("positivity margin must lie in [0, 1)"));
    }
    if start_omega == end_omega {
        // γ = 1, ω(t) ≡ ω₀: any duration clears a sub-unity margin
        return Ok(0.0);
    }
    let mut hi = 1.0 / start_omega.min(end_omega);
    let mut grow = 0;
    while !duration_is_valid_with_margin(start_omega, end_omega, hi, steps, margin) {
        hi *= 2.0;
        grow += 1;
        if grow > 200 {
            return Err(Error::unphysical("no valid ramp duration found"));
        }
    }
    let mut lo = 0.0;
    while hi - lo > tolerance {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // float resolution exhausted
        }
        if duration_is_valid_with_margin(start_omega, end_omega, mid, steps, margin) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::angular;

    #[test]
    fn equal_frequencies_give_constant_ramp() {
        let w = angular(2e3);
        let ramp = superadiabatic_ramp(w, w, 1e-3, 128).unwrap();
        assert!(ramp.valid);
        for s in &ramp.samples {
            assert!(((s.omega - w) / w).abs() < 1e-14);
        }
        // γ = 1 ⟹ b ≡ 1
        let (b, bdot, bddot) = scaling_factor(w, w, 1e-3, 0.4e-3);
        assert_eq!((b, bdot, bddot), (1.0, 0.0, 0.0));
    }

    #[test]
    fn boundary_conditions_exact() {
        for &(f0, f1) in &[(2e3, 0.5e3), (48e3, 12e3), (1e3, 3e3)] {
            let (w0, w1) = (angular(f0), angular(f1));
            let ramp = superadiabatic_ramp(w0, w1, 2e-3, 256).unwrap();
            let first = ramp.samples.first().unwrap();
            let last = ramp.samples.last().unwrap();
            assert!(((first.omega - w0) / w0).abs() < 1e-9);
            assert!(((last.omega - w1) / w1).abs() < 1e-9);
            assert_eq!(first.time, 0.0);
            assert_eq!(last.time, ramp.duration);
        }
    }

    #[test]
    fn samples_strictly_increasing_in_time() {
        let ramp = superadiabatic_ramp(angular(2e3), angular(0.5e3), 1e-3, 128).unwrap();
        for w in ramp.samples.windows(2) {
            assert!(w[1].time > w[0].time);
        }
    }

    #[test]
    fn too_fast_decompression_is_flagged_invalid() {
        let w0 = angular(2e3);
        let ramp = superadiabatic_ramp(w0, w0 / 4.0, 0.05e-3, 256).unwrap();
        assert!(!ramp.valid);
        assert!(ramp.samples.iter().any(|s| s.omega < 0.0));
    }

    #[test]
    fn min_time_zero_for_equal_frequencies() {
        let w = angular(2e3);
        assert_eq!(min_ramp_time(w, w).unwrap(), 0.0);
    }

    #[test]
    fn min_time_in_reference_band() {
        // bath decompression 2π×2 kHz by factor 0.25: within [0.1, 1] ms
        let w0 = angular(2e3);
        let t = min_ramp_time(w0, w0 / 4.0).unwrap();
        assert!(t > 0.1e-3 && t < 1.0e-3, "got {t:e}");
    }

    #[test]
    fn min_time_bracketing() {
        let w0 = angular(2e3);
        let t = min_ramp_time(w0, w0 / 4.0).unwrap();
        assert!(superadiabatic_ramp(w0, w0 / 4.0, t, DEFAULT_RAMP_SAMPLES).unwrap().valid);
        assert!(
            !superadiabatic_ramp(w0, w0 / 4.0, t - 2e-6, DEFAULT_RAMP_SAMPLES)
                .unwrap()
                .valid
        );
    }

    #[test]
    fn min_time_scales_inversely_with_start_omega() {
        let w0 = angular(2e3);
        let t1 = min_ramp_time_with(w0, w0 / 4.0, 1e-9, DEFAULT_RAMP_SAMPLES).unwrap();
        let t2 = min_ramp_time_with(2.0 * w0, w0 / 2.0, 1e-9, DEFAULT_RAMP_SAMPLES).unwrap();
        assert!(
            (t2 - t1 / 2.0).abs() / (t1 / 2.0) < 1e-3,
            "t1={t1:e} t2={t2:e}"
        );
    }

    #[test]
    fn min_time_monotone_in_start_omega() {
        let mut last = f64::INFINITY;
        for &f in &[1e3, 2e3, 4e3, 8e3] {
            let w0 = angular(f);
            let t = min_ramp_time(w0, w0 / 4.0).unwrap();
            assert!(t <= last);
            last = t;
        }
    }

    #[test]
    fn compression_ramps_also_bounded() {
        // compression (γ < 1) has its own positivity constraint on s > 1/2
        let w0 = angular(0.5e3);
        let t = min_ramp_time(w0, 4.0 * w0).unwrap();
        assert!(t > 0.0);
        assert!(superadiabatic_ramp(w0, 4.0 * w0, t, DEFAULT_RAMP_SAMPLES).unwrap().valid);
        assert!(
            !superadiabatic_ramp(w0, 4.0 * w0, t - 2e-6, DEFAULT_RAMP_SAMPLES)
                .unwrap()
                .valid
        );
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(superadiabatic_ramp(-1.0, 1.0, 1e-3, 128).is_err());
        assert!(superadiabatic_ramp(1.0, 1.0, 0.0, 128).is_err());
        assert!(superadiabatic_ramp(1.0, 1.0, 1e-3, 16).is_err());
        assert!(min_ramp_time(0.0, 1.0).is_err());
    }
}
