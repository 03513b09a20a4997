mod support;

use fermiwire::gas_statistics::{solve_fugacity, GasParameters, ThermalState};
use fermiwire::specfun::{Fugacity, Statistics};
use fermiwire::thin_wire::{
    classify_regime, momentum_line_integral, number_bound, quasi1d_number_integral, sigma_critical,
    sigma_critical_exact, Regime, Thresholds, WireGeometry,
};
use fermiwire::UnitSystem;
use proptest::prelude::*;
use std::f64::consts::PI;
use support::oracles;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn state(z: f64, degeneracy: f64) -> ThermalState {
    ThermalState::new(Fugacity::new(z).unwrap(), 1.0, degeneracy).unwrap()
}

fn wire(s: f64) -> WireGeometry {
    WireGeometry::new(s).unwrap()
}

fn unit_params() -> GasParameters {
    GasParameters::new(1.0, 2.0 * PI, 1.0, UnitSystem::Reduced).unwrap()
}

/// f_{1/2}(z) from the series oracle where it converges, else the trapezoidal one.
fn f_half_oracle(z: f64) -> f64 {
    if z <= 1.0 {
        oracles::fd_series(0.5, z)
    } else {
        oracles::fd_trapezoid(0.5, z.ln())
    }
}

#[test]
fn bound_examples() {
    assert!(rel(number_bound(&state(1.0, 1.0), &wire(1e-6)), 1e-6) < 1e-15);
    assert!(rel(number_bound(&state(2.0, 0.2), &wire(0.05)), 0.5) < 1e-15);
    let s = state(0.3, 4.0);
    assert!(
        rel(
            number_bound(&s, &wire(0.2)),
            2.0 * number_bound(&s, &wire(0.1))
        ) < 1e-15
    );
}

#[test]
fn bound_is_linear_in_sigma() {
    let s = state(3.7, 0.05);
    let slopes: Vec<f64> = (0..10)
        .map(|i| 10f64.powf(-7.0 + 6.0 * i as f64 / 9.0))
        .map(|sig| number_bound(&s, &wire(sig)) / sig)
        .collect();
    for v in &slopes {
        assert!(rel(*v, slopes[0]) <= 1e-12);
    }
}

#[test]
fn boltzmann_integral_equals_bound() {
    for (z, d, sig) in [
        (1.0, 1.0, 1e-6),
        (1e-5, 3e-4, 0.2),
        (7.0, 0.9, 1.0),
        (1e3, 40.0, 1e-3),
    ] {
        let s = state(z, d);
        let w = wire(sig);
        let exact = quasi1d_number_integral(Statistics::MaxwellBoltzmann, &s, &w).unwrap();
        assert!(rel(exact, number_bound(&s, &w)) <= 1e-10);
    }
}

#[test]
fn fermi_integral_at_unit_fugacity_is_eta_half() {
    let eta = oracles::fd_series(0.5, 1.0);
    assert!((eta - 0.604_899).abs() < 1e-6);
    let v = quasi1d_number_integral(Statistics::FermiDirac, &state(1.0, 1.0), &wire(1.0)).unwrap();
    assert!(rel(v, eta) < 1e-10);
}

#[test]
fn fermi_integral_matches_f_half_oracle() {
    for i in 0..40 {
        let z = 10f64.powf(-3.0 + 4.0 * i as f64 / 39.0);
        let v =
            quasi1d_number_integral(Statistics::FermiDirac, &state(z, 1.0), &wire(1.0)).unwrap();
        assert!(rel(v, f_half_oracle(z)) <= 1e-9, "z={z}");
    }
}

#[test]
fn bose_line_integral_matches_series_and_rejects_unit_fugacity() {
    for z in [1e-3, 0.2, 0.9] {
        let v =
            momentum_line_integral(Statistics::BoseEinstein, Fugacity::new(z).unwrap()).unwrap();
        assert!(rel(v, oracles::be_series(0.5, z)) < 1e-10);
    }
    assert!(momentum_line_integral(Statistics::BoseEinstein, Fugacity::new(1.0).unwrap()).is_err());
}

#[test]
fn fermi_below_boltzmann() {
    for z in [1e-6, 1e-2, 1.0, 30.0, 1e5] {
        let s = state(z, 1.0);
        let fd = quasi1d_number_integral(Statistics::FermiDirac, &s, &wire(0.1)).unwrap();
        let mb = quasi1d_number_integral(Statistics::MaxwellBoltzmann, &s, &wire(0.1)).unwrap();
        assert!(fd < mb);
    }
}

#[test]
fn classifier_examples() {
    let t = Thresholds::default();
    let r = classify_regime(&unit_params(), &state(1.0, 1.0), &wire(1e-6), &t).unwrap();
    assert_eq!(r.regime, Regime::Bosonized);
    assert!(!r.inequality_holds);
    assert!(rel(r.rhs_approx, 1e-6) < 1e-15);
    assert!(r.thin);

    let deg = 1e-3;
    let z = solve_fugacity(Statistics::FermiDirac, deg).unwrap();
    let s = ThermalState::new(z, 1.0, deg).unwrap();
    let r = classify_regime(&unit_params(), &s, &wire(1e-6), &t).unwrap();
    assert_eq!(r.regime, Regime::BosonizedClassical);

    let ln_z = 200.0;
    let deg = oracles::fd_sommerfeld(1.5, ln_z, 5);
    let s = ThermalState::new(Fugacity::from_ln(ln_z).unwrap(), 1.0, deg).unwrap();
    let r = classify_regime(&unit_params(), &s, &wire(1e-6), &t).unwrap();
    assert_eq!(r.regime, Regime::DegenerateSubFermi);
}

#[test]
fn boltzmann_branch_needs_bound_above_one() {
    let t = Thresholds::default();
    let deg = 1e-3;
    let z = solve_fugacity(Statistics::FermiDirac, deg).unwrap();
    let s = ThermalState::new(z, 1.0, deg).unwrap();
    let r = classify_regime(&unit_params(), &s, &wire(2.0), &t).unwrap();
    assert_eq!(r.regime, Regime::BoltzmannConverged);
    assert!(r.inequality_holds);
    assert!(!r.thin);
}

#[test]
fn tie_breaks_follow_priority() {
    let t = Thresholds::new(100.0, 0.01, 0.1).unwrap();
    // z exactly at z_degenerate and degeneracy exactly at deg_classical.
    let s = state(100.0, 0.01);
    let r = classify_regime(&unit_params(), &s, &wire(1e-6), &t).unwrap();
    assert_eq!(r.regime, Regime::DegenerateSubFermi);
    // Bound exactly one in the classical corner goes to the Boltzmann branch.
    let s = state(0.005, 0.01);
    let r = classify_regime(&unit_params(), &s, &wire(2.0), &t).unwrap();
    assert_eq!(r.regime, Regime::BoltzmannConverged);
}

#[test]
fn thresholds_validate_ordering() {
    assert!(Thresholds::new(1.0, 0.01, 0.1).is_err());
    assert!(Thresholds::new(100.0, 1.5, 0.1).is_err());
    assert!(Thresholds::new(100.0, 0.0, 0.1).is_err());
    assert!(Thresholds::new(100.0, 0.01, -0.1).is_err());
    assert_eq!(
        Thresholds::new(100.0, 0.01, 0.1).unwrap(),
        Thresholds::default()
    );
}

#[test]
fn sigma_critical_examples() {
    assert!(rel(sigma_critical(&state(1.0, 1.0)), 1.0) < 1e-15);
    let s = state(2.0, 0.2);
    let crit = sigma_critical(&s);
    assert!(rel(crit, 0.1) < 1e-15);
    assert!((number_bound(&s, &wire(crit)) - 1.0).abs() <= 1e-12);
}

#[test]
fn exact_critical_sigma_matches_oracle() {
    for z in [1e-3, 0.4, 1.0, 5.0] {
        let s = state(z, 0.7);
        let exact = sigma_critical_exact(Statistics::FermiDirac, &s).unwrap();
        let expected = sigma_critical(&s) * z / f_half_oracle(z);
        assert!(rel(exact, expected) < 1e-9, "z={z}");
        let at = quasi1d_number_integral(Statistics::FermiDirac, &s, &wire(exact)).unwrap();
        assert!((at - 1.0).abs() < 1e-12);
    }
}

fn regime_strategy() -> impl Strategy<Value = (f64, f64, f64)> {
    (-12.0f64..12.0, -8.0f64..4.0, -8.0f64..1.0)
}

proptest! {
    #[test]
    fn classification_is_deterministic((ln_z, log_deg, log_sigma) in regime_strategy()) {
        let s = ThermalState::new(Fugacity::from_ln(ln_z).unwrap(), 1.0, 10f64.powf(log_deg)).unwrap();
        let w = wire(10f64.powf(log_sigma));
        let t = Thresholds::default();
        let a = classify_regime(&unit_params(), &s, &w, &t).unwrap();
        let b = classify_regime(&unit_params(), &s, &w, &t).unwrap();
        prop_assert_eq!(a.regime, b.regime);
        prop_assert_eq!(a.rhs_exact.to_bits(), b.rhs_exact.to_bits());
        prop_assert_eq!(a.inequality_holds, a.rhs_approx > 1.0);
    }

    #[test]
    fn contradiction_survives_thinning((ln_z, log_deg, log_sigma) in regime_strategy(), shrink in 1.0f64..1e6) {
        let s = ThermalState::new(Fugacity::from_ln(ln_z).unwrap(), 1.0, 10f64.powf(log_deg)).unwrap();
        let t = Thresholds::default();
        let sigma = 10f64.powf(log_sigma);
        let wide = classify_regime(&unit_params(), &s, &wire(sigma), &t).unwrap();
        if wide.regime == Regime::Bosonized {
            let thin = classify_regime(&unit_params(), &s, &wire(sigma / shrink), &t).unwrap();
            prop_assert_eq!(thin.regime, Regime::Bosonized);
        }
    }
}
