//! Property suite: conservation laws and structural invariants over
//! randomized configurations, checked against independent oracles.

mod common;

use common::{integrate_ermakov, random_spec, reference_spec, XorShift64};
use uae_core::bath::{
    elastic_collision_rate, required_scattering_length, survival_probability, BathSpec,
    MixtureSpec,
};
use uae_core::constants::{angular, microkelvin, BOLTZMANN, HBAR, RB87_MASS};
use uae_core::cycle::{run_cycle, Engine};
use uae_core::oscillator::{entropy, mean_energy, OscillatorState};
use uae_core::ramp::{min_ramp_time, superadiabatic_ramp};
use uae_core::stroke::{isothermal_stroke, trajectory_quadrature, StrokeKind};

#[test]
fn first_law_holds_for_every_stroke_of_randomized_cycles() {
    let mut rng = XorShift64::new(0x1157_0001);
    for case in 0..60 {
        let engine = match case % 3 {
            0 => Engine::Qce,
            1 => Engine::Qoe,
            _ => Engine::Qde,
        };
        let spec = random_spec(&mut rng, engine);
        let result = run_cycle(&spec).unwrap_or_else(|e| panic!("case {case} {engine:?}: {e}"));
        for stroke in &result.strokes {
            let de = stroke.energy_change();
            let scale = de.abs().max(stroke.heat_into_fluid.abs()).max(1e-30);
            // stored ledger
            let defect = (de - stroke.work_on_fluid - stroke.heat_into_fluid).abs();
            assert!(defect < 1e-8 * scale, "{engine:?} {:?}: ledger defect {defect:e}", stroke.kind);
            // independent trajectory route
            let (w, q) = trajectory_quadrature(stroke);
            assert!(((w + q) - de).abs() < 1e-8 * scale);
            // structural zeroes
            match stroke.kind {
                StrokeKind::Adiabatic => {
                    assert_eq!(stroke.heat_into_fluid, 0.0);
                    assert_eq!(stroke.entropy_change, 0.0);
                    assert!(!stroke.bath_contact);
                }
                StrokeKind::Isochoric => {
                    assert_eq!(stroke.work_on_fluid, 0.0);
                    assert!(stroke.bath_contact);
                }
                _ => assert!(stroke.bath_contact),
            }
        }
    }
}

#[test]
fn cycles_close_and_obey_carnot() {
    let mut rng = XorShift64::new(0xCA12_0002);
    for case in 0..60 {
        let engine = match case % 3 {
            0 => Engine::Qce,
            1 => Engine::Qoe,
            _ => Engine::Qde,
        };
        let spec = random_spec(&mut rng, engine);
        let result = run_cycle(&spec).unwrap();
        // closure on (ω, β)
        let first = result.strokes.first().unwrap().initial_state();
        let last = result.strokes.last().unwrap().final_state();
        assert!(((last.omega - first.omega) / first.omega).abs() < 1e-8);
        let b0 = first.beta().unwrap();
        let b1 = last.beta().unwrap();
        assert!(((b1 - b0) / b0).abs() < 1e-8);
        // energy ledger sums to zero over the cycle
        let total: f64 = result
            .strokes
            .iter()
            .map(|s| s.work_on_fluid + s.heat_into_fluid)
            .sum();
        assert!(total.abs() < 1e-8 * result.heat_in.max(1e-30));
        // Carnot bound from the corner temperature extremes
        let (hot, cold) = result.temperature_extremes();
        assert!(
            result.eta_max <= 1.0 - cold / hot + 1e-9,
            "{engine:?}: η = {} > Carnot {}",
            result.eta_max,
            1.0 - cold / hot
        );
        // survival-real-efficiency identities
        assert!(result.survival > 0.0 && result.survival <= 1.0);
        assert!((result.eta_real - result.eta_max * result.survival).abs() < 1e-12);
        assert!(result.eta_real <= result.eta_max + 1e-12);
    }
}

#[test]
fn populations_stay_normalized_along_all_trajectories() {
    let mut rng = XorShift64::new(0x0909_0003);
    for case in 0..9 {
        let engine = match case % 3 {
            0 => Engine::Qce,
            1 => Engine::Qoe,
            _ => Engine::Qde,
        };
        let spec = random_spec(&mut rng, engine);
        let result = run_cycle(&spec).unwrap();
        for stroke in &result.strokes {
            for point in &stroke.trajectory {
                let sum: f64 = point.state.populations.iter().sum();
                assert!(
                    (sum - 1.0).abs() < 1e-12,
                    "{engine:?} {:?} t={}: Σ P = {sum}",
                    stroke.kind,
                    point.time
                );
                assert!(point.state.populations.iter().all(|&p| p >= 0.0));
            }
        }
    }
}

#[test]
fn every_generated_valid_ramp_passes_the_ermakov_oracle() {
    let mut rng = XorShift64::new(0xE4A4_0004);
    for _ in 0..25 {
        let w0 = angular(rng.log_range(0.5e3, 100e3));
        let ratio = rng.log_range(0.2, 4.0);
        let w1 = ratio * w0;
        let t_min = min_ramp_time(w0, w1).unwrap();
        let duration = (t_min * rng.range(1.0, 3.0)).max(1e-5);
        let ramp = superadiabatic_ramp(w0, w1, duration, 512).unwrap();
        assert!(ramp.valid, "scheduled above min time must be valid");
        let gamma = (w0 / w1).sqrt();
        let (b, bdot) = integrate_ermakov(w0, w1, duration, 8192);
        assert!(
            (b - gamma).abs() < 1e-6 * gamma.max(1.0),
            "b({duration:e}) = {b} vs γ = {gamma}"
        );
        assert!(
            (bdot * duration).abs() < 1e-6 * gamma.max(1.0),
            "ḃ·t_f = {:e}",
            bdot * duration
        );
    }
}

#[test]
fn reference_bath_decompression_at_550us_passes_the_oracle() {
    // 2π×2 kHz → 2π×0.5 kHz in 0.55 ms: comfortably above the 0.224 ms
    // minimum, and the forward integration recovers (γ, 0)
    let w0 = angular(2e3);
    let w1 = w0 / 4.0;
    let duration = 0.55e-3;
    assert!(superadiabatic_ramp(w0, w1, duration, 512).unwrap().valid);
    let (b, bdot) = integrate_ermakov(w0, w1, duration, 8192);
    assert!((b - 2.0).abs() < 1e-6, "b = {b}");
    assert!((bdot * duration).abs() < 1e-6);
}

#[test]
fn isothermal_heat_is_path_independent() {
    // Q = TΔS from endpoint entropies, independent of discretization
    let t = microkelvin(1.3);
    let w0 = 2.0 * BOLTZMANN * t / HBAR;
    let coarse = isothermal_stroke(t, w0, w0 * 0.4, 1.2e-3, 512).unwrap();
    let fine = isothermal_stroke(t, w0, w0 * 0.4, 1.2e-3, 4096).unwrap();
    assert!(
        ((coarse.heat_into_fluid - fine.heat_into_fluid) / fine.heat_into_fluid).abs() < 1e-12
    );
    let ds = coarse.entropy_change;
    assert!(((coarse.heat_into_fluid - t * ds) / (t * ds)).abs() < 1e-8);
    // and the trajectory quadrature converges to the same heat
    let (_, q) = trajectory_quadrature(&fine);
    assert!(((q - fine.heat_into_fluid) / fine.heat_into_fluid).abs() < 1e-7);
}

#[test]
fn adiabatic_strokes_commute_with_beta() {
    let mut rng = XorShift64::new(0xADAB_0005);
    for _ in 0..20 {
        let t = rng.range(0.5e-6, 3e-6);
        let w0 = angular(rng.log_range(5e3, 200e3));
        let ratio = rng.log_range(0.25, 4.0);
        let state = OscillatorState::thermal(w0, t).unwrap();
        let t_min = min_ramp_time(w0, ratio * w0).unwrap();
        let ramp = superadiabatic_ramp(w0, ratio * w0, (2.0 * t_min).max(1e-5), 256).unwrap();
        let stroke = uae_core::stroke::adiabatic_stroke(&state, &ramp).unwrap();
        let out = stroke.final_state();
        // thermal in ⟹ thermal out at T·ω_f/ω_i
        let t_out = out.temperature.unwrap();
        assert!(((t_out - t * ratio) / (t * ratio)).abs() < 1e-9);
        let fresh = OscillatorState::thermal(out.omega, t_out).unwrap();
        let energy_err =
            (mean_energy(out) - mean_energy(&fresh)).abs() / mean_energy(&fresh);
        let entropy_err = (entropy(out) - entropy(&fresh)).abs() / entropy(&fresh).max(1e-30);
        assert!(energy_err < 1e-9 && entropy_err < 1e-9);
    }
}

#[test]
fn min_ramp_time_brackets_validity() {
    let mut rng = XorShift64::new(0x3A3A_0006);
    for _ in 0..10 {
        let w0 = angular(rng.log_range(0.5e3, 50e3));
        let ratio = rng.log_range(0.2, 0.9);
        let t = min_ramp_time(w0, ratio * w0).unwrap();
        assert!(superadiabatic_ramp(w0, ratio * w0, t, 512).unwrap().valid);
        let shorter = t - 2e-6;
        if shorter > 0.0 {
            assert!(!superadiabatic_ramp(w0, ratio * w0, shorter, 512).unwrap().valid);
        }
    }
}

#[test]
fn friction_monotonicity_properties() {
    let mixture = MixtureSpec::default();
    let bath = BathSpec {
        atom_number: 1_000_000,
        mean_trap_frequency: angular(2e3),
        temperature: microkelvin(1.1),
    };
    let widths = [2e-8, 2e-8, 6e-8];
    // survival strictly decreasing in a, t and density
    let n0 = 1.2e23;
    let s = |a: f64, n: f64, t: f64| survival_probability(a, n, t, RB87_MASS).unwrap();
    assert!(s(4e-10, n0, 1e-3) > s(5e-10, n0, 1e-3));
    assert!(s(4e-10, n0, 1e-3) > s(4e-10, n0, 2e-3));
    assert!(s(4e-10, n0, 1e-3) > s(4e-10, 2.0 * n0, 1e-3));
    // longer strokes need weaker coupling
    let a1 = required_scattering_length(1e-3, &mixture, &bath, widths, 4.0).unwrap();
    let a2 = required_scattering_length(2e-3, &mixture, &bath, widths, 4.0).unwrap();
    assert!(a2 < a1);
    // rate is monotone in a
    let g1 = elastic_collision_rate(a1, &mixture, &bath, widths).unwrap();
    let g2 = elastic_collision_rate(a2, &mixture, &bath, widths).unwrap();
    assert!(g2 < g1);
}

#[test]
fn reference_cycles_are_self_consistent() {
    // spot checks of the three reference runs used throughout the suite
    for engine in [Engine::Qce, Engine::Qoe, Engine::Qde] {
        let mut spec = reference_spec(engine);
        if engine == Engine::Qde {
            spec.expansion_ratio =
                uae_core::cycle::solve_qde_expansion_ratio(0.75, 0.225).unwrap();
        }
        let result = run_cycle(&spec).unwrap();
        assert!((result.eta_max - 0.75).abs() < 1e-8, "{engine:?}");
        assert_eq!(result.strokes.len(), 4);
        assert_eq!(result.corners.len(), 4);
        // trace is strictly increasing in time and starts at zero
        assert_eq!(result.trace.first().unwrap().time, 0.0);
        for w in result.trace.windows(2) {
            assert!(w[1].time > w[0].time);
        }
        let end = result.trace.last().unwrap().time;
        assert!(((end - result.cycle_time) / result.cycle_time).abs() < 1e-12);
    }
}
