//! The thin-wire reduction `d³p = σ dp` and the regime classification that
//! follows from the fermionic particle count.
//!
//! The transverse momentum cross-section is carried dimensionless,
//! `σ̃ = σ λ²/h²`, so the Boltzmann bound on the per-particle count is
//! `ν σ̃ z / λ³`. Along the wire the momentum is integrated over the full
//! line with `ε_p = p²/2m`; in units of `h/λ` this makes `βε = π q²`.

use crate::error::{positive, Error, Result};
use crate::gas_statistics::{GasParameters, ThermalState};
use crate::quad::{self, Tolerance};
use crate::specfun::{breakpoints, scaled_occupation, Fugacity, Statistics};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

const TAIL_MARGIN: f64 = 60.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WireGeometry {
    sigma_tilde: f64,
    length: Option<f64>,
}

impl WireGeometry {
    pub fn new(sigma_tilde: f64) -> Result<Self> {
        Ok(Self {
            sigma_tilde: positive("cross-section must be positive", sigma_tilde)?,
            length: None,
        })
    }

    pub fn with_length(self, length: f64) -> Result<Self> {
        Ok(Self {
            length: Some(positive("wire length must be positive", length)?),
            ..self
        })
    }

    pub fn sigma_tilde(&self) -> f64 {
        self.sigma_tilde
    }

    pub fn length(&self) -> Option<f64> {
        self.length
    }

    pub fn is_thin(&self, thresholds: &Thresholds) -> bool {
        self.sigma_tilde < thresholds.sigma_thin
    }
}

/// Classifier thresholds standing in for the qualitative "≪" and "≫".
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawThresholds", into = "RawThresholds")]
pub struct Thresholds {
    z_degenerate: f64,
    deg_classical: f64,
    sigma_thin: f64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawThresholds {
    #[serde(default = "default_z_degenerate")]
    z_degenerate: f64,
    #[serde(default = "default_deg_classical")]
    deg_classical: f64,
    #[serde(default = "default_sigma_thin")]
    sigma_thin: f64,
}

fn default_z_degenerate() -> f64 {
    100.0
}
fn default_deg_classical() -> f64 {
    0.01
}
fn default_sigma_thin() -> f64 {
    0.1
}

impl TryFrom<RawThresholds> for Thresholds {
    type Error = Error;

    fn try_from(raw: RawThresholds) -> Result<Self> {
        Thresholds::new(raw.z_degenerate, raw.deg_classical, raw.sigma_thin)
    }
}

impl From<Thresholds> for RawThresholds {
    fn from(t: Thresholds) -> Self {
        Self {
            z_degenerate: t.z_degenerate,
            deg_classical: t.deg_classical,
            sigma_thin: t.sigma_thin,
        }
    }
}

impl Default for Thresholds {
    fn default() -> Self {
        Self {
            z_degenerate: default_z_degenerate(),
            deg_classical: default_deg_classical(),
            sigma_thin: default_sigma_thin(),
        }
    }
}

impl Thresholds {
    /// Requires `z_degenerate > 1 > deg_classical > 0` and `sigma_thin > 0`.
    pub fn new(z_degenerate: f64, deg_classical: f64, sigma_thin: f64) -> Result<Self> {
        let ordered = z_degenerate.is_finite()
            && z_degenerate > 1.0
            && deg_classical < 1.0
            && deg_classical > 0.0;
        if !ordered {
            return Err(Error::Thresholds(format!(
                "need z_degenerate > 1 > deg_classical > 0, got {z_degenerate} and {deg_classical}"
            )));
        }
        if !(sigma_thin.is_finite() && sigma_thin > 0.0) {
            return Err(Error::Thresholds(format!(
                "sigma_thin must be positive, got {sigma_thin}"
            )));
        }
        Ok(Self {
            z_degenerate,
            deg_classical,
            sigma_thin,
        })
    }

    pub fn z_degenerate(&self) -> f64 {
        self.z_degenerate
    }

    pub fn deg_classical(&self) -> f64 {
        self.deg_classical
    }

    pub fn sigma_thin(&self) -> f64 {
        self.sigma_thin
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    /// Neither degenerate nor classical: the fermionic count cannot reach one
    /// particle per particle, and only a Bose occupation removes the conflict.
    Bosonized,
    /// Classical density (`z ≈ λ³/ν`) in a thin wire: the conflict persists.
    BosonizedClassical,
    /// Strongly degenerate, below the Fermi temperature.
    DegenerateSubFermi,
    /// Dilute and hot enough that all three statistics coincide.
    BoltzmannConverged,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::Bosonized => "Bosonized",
            Regime::BosonizedClassical => "BosonizedClassical",
            Regime::DegenerateSubFermi => "DegenerateSubFermi",
            Regime::BoltzmannConverged => "BoltzmannConverged",
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegimeReport {
    /// `ν σ̃ z / λ³`.
    pub rhs_approx: f64,
    /// Fermi–Dirac number integral over the wire momentum line.
    pub rhs_exact: f64,
    /// Whether `1 < rhs_approx`.
    pub inequality_holds: bool,
    pub regime: Regime,
    pub thresholds_used: Thresholds,
    pub thin: bool,
    /// `T / T_F` of the generating parameters.
    pub temperature_ratio: f64,
    /// One line per decision taken, in order.
    pub trace: Vec<String>,
}

/// The Boltzmann bound `ν σ̃ z / λ³` on the per-particle count.
pub fn number_bound(state: &ThermalState, wire: &WireGeometry) -> f64 {
    (state.fugacity().ln() + wire.sigma_tilde().ln() - state.degeneracy().ln()).exp()
}

/// `∫ n(q) dq` over the whole momentum line, with `q` in units of `h/λ`.
///
/// Equals `f_{1/2}(z)` (FD), `g_{1/2}(z)` (BE) or `z` (MB).
pub fn momentum_line_integral(stat: Statistics, z: Fugacity) -> Result<f64> {
    let ln_z = z.ln();
    if stat == Statistics::BoseEinstein && ln_z >= 0.0 {
        return Err(Error::Domain {
            what: "Bose number integral requires z < 1",
            value: z.value(),
        });
    }
    let q_max = ((ln_z.max(0.0) + TAIL_MARGIN) / PI).sqrt();
    let edge = (ln_z.abs() / PI).sqrt();
    // βε = πq², so a unit width in βε is 1/(2πq) in q.
    let width = 1.0 / (2.0 * PI * edge.max(1.0));
    let integrand = |q: f64| scaled_occupation(stat, PI * q * q, ln_z);
    let r = quad::integrate(
        integrand,
        &breakpoints(edge, width, q_max),
        Tolerance::default(),
    )?;
    // Gaussian tail beyond q_max: ∫ e^{-πq²} ≈ e^{-πQ²}/(2πQ), in the scaled units.
    let tail = (ln_z.max(0.0) - PI * q_max * q_max).exp() / (2.0 * PI * q_max);
    Ok(2.0 * (r.value + tail) * ln_z.min(0.0).exp())
}

/// Exact per-particle count `(νσ/h³) ∫ n(p) dp` in the thin-wire measure.
pub fn quasi1d_number_integral(
    stat: Statistics,
    state: &ThermalState,
    wire: &WireGeometry,
) -> Result<f64> {
    let line = momentum_line_integral(stat, state.fugacity())?;
    Ok(wire.sigma_tilde() / state.degeneracy() * line)
}

/// Cross-section σ̃* at which the Boltzmann bound equals one: `λ³/(νz)`.
pub fn sigma_critical(state: &ThermalState) -> f64 {
    (state.degeneracy().ln() - state.fugacity().ln()).exp()
}

/// Cross-section at which the exact integral for `stat` equals one.
pub fn sigma_critical_exact(stat: Statistics, state: &ThermalState) -> Result<f64> {
    Ok(state.degeneracy() / momentum_line_integral(stat, state.fugacity())?)
}

/// Assigns one of the four regimes.
///
/// Ties resolve in the order DegenerateSubFermi, BoltzmannConverged,
/// BosonizedClassical, Bosonized.
pub fn classify_regime(
    params: &GasParameters,
    state: &ThermalState,
    wire: &WireGeometry,
    thresholds: &Thresholds,
) -> Result<RegimeReport> {
    let rhs_approx = number_bound(state, wire);
    let rhs_exact = quasi1d_number_integral(Statistics::FermiDirac, state, wire)?;
    let inequality_holds = rhs_approx > 1.0;
    let ln_z = state.fugacity().ln();
    let degeneracy = state.degeneracy();
    let mut trace = vec![format!(
        "rhs = {rhs_approx:e} ({}), exact FD count = {rhs_exact:e}",
        if inequality_holds {
            "inequality holds"
        } else {
            "inequality violated"
        }
    )];

    let regime = if ln_z >= thresholds.z_degenerate.ln() {
        trace.push(format!(
            "ln z = {ln_z} >= ln {} : degenerate",
            thresholds.z_degenerate
        ));
        Regime::DegenerateSubFermi
    } else if degeneracy <= thresholds.deg_classical && rhs_approx >= 1.0 {
        trace.push(format!(
            "degeneracy {degeneracy:e} <= {} with rhs >= 1: Boltzmann limit",
            thresholds.deg_classical
        ));
        Regime::BoltzmannConverged
    } else if degeneracy <= thresholds.deg_classical {
        trace.push(format!(
            "degeneracy {degeneracy:e} <= {} with rhs < 1: classical contradiction",
            thresholds.deg_classical
        ));
        Regime::BosonizedClassical
    } else {
        trace.push(format!(
            "degeneracy {degeneracy:e} > {} and ln z < ln {}: intermediate",
            thresholds.deg_classical, thresholds.z_degenerate
        ));
        Regime::Bosonized
    };

    let fermi = params.fermi_level();
    Ok(RegimeReport {
        rhs_approx,
        rhs_exact,
        inequality_holds,
        regime,
        thresholds_used: *thresholds,
        thin: wire.is_thin(thresholds),
        temperature_ratio: params.temperature() / fermi.temperature,
        trace,
    })
}
