//! Shared oracles for the integration suites: a deterministic PRNG and an
//! independent Runge-Kutta integrator of the Ermakov equation. These stay
//! separate from the library code they verify.

use uae_core::bath::{BathSpec, MixtureSpec, TweezerSpec};
use uae_core::constants::{angular, microkelvin, KRB_TWEEZER_WAVELENGTH};
use uae_core::cycle::{CycleSpec, Engine, Numerics};
use uae_core::ramp::omega_squared_at;

/// Small deterministic xorshift PRNG (seeded per test, no external deps).
pub struct XorShift64 {
    state: u64,
}

impl XorShift64 {
    pub fn new(seed: u64) -> Self {
        Self {
            state: seed.max(1),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.state = x;
        x
    }

    /// Uniform in [0, 1).
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform in [lo, hi).
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Log-uniform in [lo, hi).
    pub fn log_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo * (hi / lo).powf(self.uniform())
    }
}

/// Forward RK4 integration of the Ermakov equation
/// b̈ = ω₀²/b³ − ω(t)²·b from (b, ḃ) = (1, 0), with ω(t)² evaluated from
/// the engineered ramp's closed form. Returns (b, ḃ) at t = duration.
pub fn integrate_ermakov(
    start_omega: f64,
    end_omega: f64,
    duration: f64,
    steps: usize,
) -> (f64, f64) {
    let w0_sq = start_omega * start_omega;
    let omega_sq = |t: f64| omega_squared_at(start_omega, end_omega, duration, t);
    let accel = |t: f64, b: f64| w0_sq / (b * b * b) - omega_sq(t) * b;
    let dt = duration / steps as f64;
    let mut b = 1.0;
    let mut v = 0.0;
    for i in 0..steps {
        let t = i as f64 * dt;
        let k1b = v;
        let k1v = accel(t, b);
        let k2b = v + 0.5 * dt * k1v;
        let k2v = accel(t + 0.5 * dt, b + 0.5 * dt * k1b);
        let k3b = v + 0.5 * dt * k2v;
        let k3v = accel(t + 0.5 * dt, b + 0.5 * dt * k2b);
        let k4b = v + dt * k3v;
        let k4v = accel(t + dt, b + dt * k3b);
        b += dt / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
        v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    }
    (b, v)
}

/// Reference working points (T₁ = 1.1 μK, 1 ms contact strokes, the bath
/// of 10⁶ Rb atoms at 2π×2 kHz, the 7 mW / 1 μm tweezer).
pub fn reference_spec(engine: Engine) -> CycleSpec {
    CycleSpec {
        engine,
        start_temperature: microkelvin(1.1),
        temperature_ratio: match engine {
            Engine::Qce => 0.25,
            Engine::Qoe => 2.0,
            Engine::Qde => 1.0,
        },
        expansion_ratio: match engine {
            Engine::Qce => 0.5,
            Engine::Qoe => 1.0,
            Engine::Qde => 1.226_058_2,
        },
        frequency_ratio: match engine {
            Engine::Qce => 0.5,
            Engine::Qoe => 0.25,
            Engine::Qde => 0.225,
        },
        contact_stroke_time: 1e-3,
        start_omega: None,
        bath: BathSpec {
            atom_number: 1_000_000,
            mean_trap_frequency: angular(2e3),
            temperature: microkelvin(1.1),
        },
        mixture: MixtureSpec::default(),
        tweezer: TweezerSpec {
            waist: 1e-6,
            power: 7e-3,
            wavelength: KRB_TWEEZER_WAVELENGTH,
        },
        numerics: Numerics::default(),
    }
}

/// A randomized valid spec for the property suite.
pub fn random_spec(rng: &mut XorShift64, engine: Engine) -> CycleSpec {
    let mut spec = reference_spec(engine);
    spec.start_temperature = rng.range(0.6e-6, 2.5e-6);
    spec.bath.temperature = spec.start_temperature;
    spec.contact_stroke_time = rng.range(0.8e-3, 2.0e-3);
    match engine {
        Engine::Qce => {
            spec.temperature_ratio = rng.range(0.2, 0.9);
            spec.expansion_ratio = rng.range(0.3, 0.9);
        }
        Engine::Qoe => {
            spec.temperature_ratio = rng.range(1.1, 2.5);
            spec.frequency_ratio = rng.range(0.2, 0.8);
        }
        Engine::Qde => {
            spec.frequency_ratio = rng.range(0.2, 0.7);
            spec.expansion_ratio = rng.range(1.05, 1.8);
        }
    }
    spec
}
