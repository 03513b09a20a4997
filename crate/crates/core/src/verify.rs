//! Self-checks run by `fermiwire verify`: each compares a computed value
//! against its closed form or bound and reports PASS, FAIL or INFO.

use crate::box_oracle::{compare_continuum, BoxLattice, WireConvention};
use crate::error::Result;
use crate::gas_statistics::{
    fermi_level, occupation, solve_fugacity, thermal_wavelength, GasParameters, ThermalState,
};
use crate::one_dim_chain::{
    closure_ratio_constant, closure_temperature, ChainParameters, QUOTED_RATIO,
};
use crate::phonon_map::{correspondence_check, PhononMedium};
use crate::specfun::{
    quantum_integral_at, Fugacity, QuantumIntegralOrder, Statistics, ZETA_THREE_HALVES,
};
use crate::thin_wire::{
    classify_regime, number_bound, quasi1d_number_integral, Regime, Thresholds, WireGeometry,
};
use crate::units::UnitSystem;
use crate::Error;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub computed: f64,
    pub expected: f64,
    pub tolerance: f64,
    pub status: Status,
    pub note: String,
}

impl Check {
    /// Passes when `|computed - expected| <= tolerance * max(|expected|, tiny)`.
    fn relative(name: &'static str, computed: f64, expected: f64, tolerance: f64) -> Self {
        let ok = (computed - expected).abs() <= tolerance * expected.abs().max(f64::MIN_POSITIVE);
        Self::with_status(name, computed, expected, tolerance, ok)
    }

    /// Passes when `computed <= bound`.
    fn at_most(name: &'static str, computed: f64, bound: f64) -> Self {
        Self::with_status(name, computed, bound, bound, computed <= bound)
    }

    fn with_status(
        name: &'static str,
        computed: f64,
        expected: f64,
        tolerance: f64,
        ok: bool,
    ) -> Self {
        Self {
            name,
            computed,
            expected,
            tolerance,
            status: if ok { Status::Pass } else { Status::Fail },
            note: String::new(),
        }
    }

    fn failed(name: &'static str, err: &Error) -> Self {
        Self {
            name,
            computed: f64::NAN,
            expected: f64::NAN,
            tolerance: f64::NAN,
            status: Status::Fail,
            note: err.to_string(),
        }
    }

    fn noted(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }
}

fn log_grid(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..n).map(move |i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
}

fn record(out: &mut Vec<Check>, name: &'static str, check: Result<Check>) {
    out.push(check.unwrap_or_else(|e| Check::failed(name, &e)));
}

/// Runs every check with the given classifier thresholds.
pub fn run_checks(thresholds: &Thresholds) -> Vec<Check> {
    let mut out = Vec::new();
    record(&mut out, "eps_m_equals_eps_F", fermi_debye(true));
    record(&mut out, "p_m_equals_p_F", fermi_debye(false));
    record(&mut out, "bound_linear_in_sigma", sigma_linearity());
    record(
        &mut out,
        "reference_point_bosonized",
        reference_point(thresholds),
    );
    record(&mut out, "mb_integral_equals_bound", mb_identity());
    record(&mut out, "fd_integral_matches_f_half", fd_line_integral());
    record(
        &mut out,
        "fugacity_round_trip_fd",
        round_trip(Statistics::FermiDirac),
    );
    record(
        &mut out,
        "fugacity_round_trip_be",
        round_trip(Statistics::BoseEinstein),
    );
    out.push(condensation());
    for xi in [100.0, 1000.0] {
        record(
            &mut out,
            if xi == 100.0 {
                "sommerfeld_ln_z_100"
            } else {
                "sommerfeld_ln_z_1000"
            },
            sommerfeld(xi),
        );
    }
    record(
        &mut out,
        "boltzmann_convergence_fd",
        boltzmann(Statistics::FermiDirac),
    );
    record(
        &mut out,
        "boltzmann_convergence_be",
        boltzmann(Statistics::BoseEinstein),
    );
    match closure_checks() {
        Ok(mut checks) => out.append(&mut checks),
        Err(e) => out.push(Check::failed("closure", &e)),
    }
    record(&mut out, "thermal_wavelength_reference", wavelength());
    record(&mut out, "box_3d_continuum", box_continuum());
    match freeze_out() {
        Ok(mut checks) => out.append(&mut checks),
        Err(e) => out.push(Check::failed("box_transverse_freeze_out", &e)),
    }
    out
}

fn fermi_debye(energy: bool) -> Result<Check> {
    let values = [0.1, 1.0, 10.0, 100.0];
    let mut worst: f64 = 0.0;
    for nu in values {
        for m in values {
            for c in values {
                let r = correspondence_check(&PhononMedium::new(c, nu)?, m, UnitSystem::Reduced)?;
                worst = worst.max(if energy {
                    r.rel_diff_energy
                } else {
                    r.rel_diff_momentum
                });
            }
        }
    }
    Ok(Check::at_most(
        if energy {
            "eps_m_equals_eps_F"
        } else {
            "p_m_equals_p_F"
        },
        worst,
        1e-12,
    )
    .noted("max relative difference over a 4x4x4 (nu, m, c) grid"))
}

fn unit_state(z: f64, degeneracy: f64) -> Result<ThermalState> {
    ThermalState::new(Fugacity::new(z)?, 1.0, degeneracy)
}

fn sigma_linearity() -> Result<Check> {
    let state = unit_state(2.0, 0.2)?;
    let slopes: Vec<f64> = log_grid(1e-7, 1e-1, 10)
        .map(|s| Ok(number_bound(&state, &WireGeometry::new(s)?) / s))
        .collect::<Result<_>>()?;
    let spread = slopes
        .iter()
        .map(|s| (s / slopes[0] - 1.0).abs())
        .fold(0.0, f64::max);
    Ok(Check::at_most("bound_linear_in_sigma", spread, 1e-12)
        .noted("rhs/sigma spread over 6 decades"))
}

fn reference_point(thresholds: &Thresholds) -> Result<Check> {
    let params = GasParameters::new(1.0, 2.0 * PI, 1.0, UnitSystem::Reduced)?;
    let state = unit_state(1.0, 1.0)?;
    let report = classify_regime(&params, &state, &WireGeometry::new(1e-6)?, thresholds)?;
    let ok = report.regime == Regime::Bosonized && !report.inequality_holds;
    Ok(Check::with_status(
        "reference_point_bosonized",
        report.rhs_approx,
        1e-6,
        1e-12,
        ok,
    )
    .noted(format!("z=1, deg=1, sigma=1e-6 -> {}", report.regime)))
}

fn mb_identity() -> Result<Check> {
    let mut worst: f64 = 0.0;
    for (z, deg, s) in [
        (1e-3, 1e-3, 1e-6),
        (0.5, 2.0, 0.01),
        (3.0, 0.7, 1.0),
        (40.0, 10.0, 1e-3),
    ] {
        let state = unit_state(z, deg)?;
        let wire = WireGeometry::new(s)?;
        let exact = quasi1d_number_integral(Statistics::MaxwellBoltzmann, &state, &wire)?;
        let approx = number_bound(&state, &wire);
        worst = worst.max((exact - approx).abs() / approx);
    }
    Ok(Check::at_most("mb_integral_equals_bound", worst, 1e-10))
}

fn fd_line_integral() -> Result<Check> {
    let mut worst: f64 = 0.0;
    for z in log_grid(1e-3, 10.0, 25) {
        let state = unit_state(z, 1.0)?;
        let exact =
            quasi1d_number_integral(Statistics::FermiDirac, &state, &WireGeometry::new(1.0)?)?;
        let f_half = quantum_integral_at(
            Statistics::FermiDirac,
            QuantumIntegralOrder::Half,
            Fugacity::new(z)?,
        )?;
        worst = worst.max((exact - f_half).abs() / f_half);
    }
    Ok(Check::at_most("fd_integral_matches_f_half", worst, 1e-9).noted("z in [1e-3, 10]"))
}

fn round_trip(stat: Statistics) -> Result<Check> {
    let hi = match stat {
        Statistics::BoseEinstein => ZETA_THREE_HALVES - 1e-6,
        _ => 50.0,
    };
    let mut worst: f64 = 0.0;
    for x in log_grid(1e-6, hi, 50) {
        let z = solve_fugacity(stat, x)?;
        let back = quantum_integral_at(stat, QuantumIntegralOrder::ThreeHalves, z)?;
        worst = worst.max((back - x).abs() / x);
    }
    let name = if stat == Statistics::BoseEinstein {
        "fugacity_round_trip_be"
    } else {
        "fugacity_round_trip_fd"
    };
    Ok(Check::at_most(name, worst, 1e-10))
}

fn condensation() -> Check {
    let ok = matches!(
        solve_fugacity(Statistics::BoseEinstein, ZETA_THREE_HALVES + 1e-6),
        Err(Error::Condensation { .. })
    );
    Check::with_status(
        "be_condensation_error",
        ZETA_THREE_HALVES + 1e-6,
        ZETA_THREE_HALVES,
        0.0,
        ok,
    )
    .noted("degeneracy above zeta(3/2) must be rejected")
}

fn sommerfeld(ln_z: f64) -> Result<Check> {
    let f = quantum_integral_at(
        Statistics::FermiDirac,
        QuantumIntegralOrder::ThreeHalves,
        Fugacity::from_ln(ln_z)?,
    )?;
    let tolerance = if ln_z == 100.0 { 1e-2 } else { 1e-3 };
    let name = if ln_z == 100.0 {
        "sommerfeld_ln_z_100"
    } else {
        "sommerfeld_ln_z_1000"
    };
    Ok(Check::relative(
        name,
        f / ln_z.powf(1.5),
        4.0 / (3.0 * PI.sqrt()),
        tolerance,
    ))
}

fn boltzmann(stat: Statistics) -> Result<Check> {
    let z = Fugacity::new(1e-4)?;
    let mut worst: f64 = 0.0;
    for i in 0..=500 {
        let x = 50.0 * i as f64 / 500.0;
        let mb = occupation(Statistics::MaxwellBoltzmann, z, 1.0, x)?;
        worst = worst.max((occupation(stat, z, 1.0, x)? - mb).abs() / mb);
    }
    let (name, bound) = match stat {
        Statistics::BoseEinstein => ("boltzmann_convergence_be", 2e-4),
        _ => ("boltzmann_convergence_fd", 1e-4),
    };
    Ok(Check::at_most(name, worst, bound).noted("sup over beta*eps in [0, 50] at z = 1e-4"))
}

fn closure_checks() -> Result<Vec<Check>> {
    let mut residual: f64 = 0.0;
    let mut ratios = Vec::new();
    for d in [0.1, 0.5, 1.0, 3.0, 20.0] {
        for m in [0.01, 0.3, 1.0, 4.0, 1e3] {
            let c =
                closure_temperature(&ChainParameters::with_spacing(d, m, UnitSystem::Reduced)?)?;
            residual = residual.max(c.residual);
            ratios.push(c.ratio);
        }
    }
    let ratio = ratios[0];
    let spread = ratios
        .iter()
        .map(|r| (r / ratio - 1.0).abs())
        .fold(0.0, f64::max);
    Ok(vec![
        Check::at_most("closure_residual", residual, 1e-12),
        Check::relative("closure_ratio", ratio, closure_ratio_constant(), 1e-9)
            .noted("12/(6 pi^2)^(2/3)"),
        Check::at_most("closure_ratio_scale_invariant", spread, 1e-12),
        Check::with_status("closure_sub_fermi", ratio, 1.0, 0.0, ratio < 1.0),
        Check {
            name: "closure_ratio_vs_3_5",
            computed: ratio,
            expected: QUOTED_RATIO,
            tolerance: f64::NAN,
            status: Status::Info,
            note: format!("{ratio:.5} (3/5 is often quoted; this chain does not give it)"),
        },
    ])
}

fn wavelength() -> Result<Check> {
    Ok(Check::relative(
        "thermal_wavelength_reference",
        thermal_wavelength(1.0, 2.0 * PI, UnitSystem::Reduced)?,
        1.0,
        1e-15,
    ))
}

fn box_continuum() -> Result<Check> {
    // Reduced units with m = 1 and T = 2π, so λ = 1 and L/λ = 10 on every axis.
    let beta = 1.0 / (2.0 * PI);
    let z = Fugacity::new(0.1)?;
    let lattice = BoxLattice::with_default_cutoff(10.0, 10.0, 1.0, beta, z, UnitSystem::Reduced)?;
    let r = compare_continuum(
        &lattice,
        Statistics::MaxwellBoltzmann,
        z,
        beta,
        WireConvention::TransverseGroundMode,
    )?;
    Ok(Check::at_most("box_3d_continuum", r.rel_err_3d, 1e-2).noted("MB cube with L/lambda = 10"))
}

fn freeze_out() -> Result<Vec<Check>> {
    // β h²/(2 m a²) = 5 with λ = 1: a² = π/5.
    let beta = 1.0 / (2.0 * PI);
    let a = (PI / 5.0).sqrt();
    let z = Fugacity::new(0.01)?;
    let lattice = BoxLattice::with_default_cutoff(20.0, a, 1.0, beta, z, UnitSystem::Reduced)?;
    let r = compare_continuum(
        &lattice,
        Statistics::MaxwellBoltzmann,
        z,
        beta,
        WireConvention::TransverseGroundMode,
    )?;
    // Exact Boltzmann value: 1/Θ(5)², with Θ(b) = Σ e^{-b n²}.
    let theta: f64 = (-10i32..=10).map(|n| (-5.0 * f64::from(n * n)).exp()).sum();
    let fraction = r.ground_transverse_fraction;
    Ok(vec![
        Check::relative(
            "box_transverse_freeze_out",
            fraction,
            1.0 / (theta * theta),
            1e-12,
        )
        .noted("lowest transverse mode fraction at beta*h^2/(2 m a^2) = 5"),
        Check {
            name: "freeze_out_vs_99_percent",
            computed: fraction,
            expected: 0.99,
            tolerance: f64::NAN,
            status: Status::Info,
            note: format!("{fraction:.5}; Boltzmann weights reach 99% only from b of about 6"),
        },
    ])
}

/// The spin-free Fermi level used by the checks, exposed for reporting.
pub fn reference_fermi_energy() -> f64 {
    fermi_level(1.0, 1.0, UnitSystem::Reduced)
        .map(|f| f.energy)
        .unwrap_or(f64::NAN)
}
