//! Complete Fermi–Dirac and Bose–Einstein integrals of half-integer order.
//!
//! For an order ν these are
//!
//! ```text
//! f_ν(z) = 1/Γ(ν) ∫₀^∞ t^(ν-1) dt / (z⁻¹ eᵗ + 1)
//! g_ν(z) = 1/Γ(ν) ∫₀^∞ t^(ν-1) dt / (z⁻¹ eᵗ - 1)
//! ```
//!
//! with the Maxwell–Boltzmann limit equal to `z` for every order. Small
//! fugacities (`z ≤ 1/2`) use the power series; everything else a
//! Gauss–Kronrod quadrature after the substitution `t = u²`, which removes
//! the `t^(ν-1)` endpoint behaviour for all three orders. The fugacity is
//! carried as `ln z` throughout so that strongly degenerate states
//! (`ln z` in the thousands) never overflow.

use crate::error::{positive, Error, Result};
use crate::quad::{self, Integral, Tolerance};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// ζ(3/2), the largest value `g_{3/2}` attains on its domain.
pub const ZETA_THREE_HALVES: f64 = 2.612_375_348_685_488;

/// Fugacities at or below this value are evaluated by power series.
pub const SERIES_LIMIT: f64 = 0.5;

/// Distance, in units of kT, that the quadrature extends past the Fermi edge.
const TAIL_MARGIN: f64 = 60.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Statistics {
    #[serde(rename = "fd")]
    FermiDirac,
    #[serde(rename = "be")]
    BoseEinstein,
    #[serde(rename = "mb")]
    MaxwellBoltzmann,
}

impl Statistics {
    pub const ALL: [Statistics; 3] = [
        Statistics::FermiDirac,
        Statistics::BoseEinstein,
        Statistics::MaxwellBoltzmann,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            Statistics::FermiDirac => "fd",
            Statistics::BoseEinstein => "be",
            Statistics::MaxwellBoltzmann => "mb",
        }
    }
}

impl std::fmt::Display for Statistics {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.short_name())
    }
}

impl std::str::FromStr for Statistics {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "fd" => Ok(Statistics::FermiDirac),
            "be" => Ok(Statistics::BoseEinstein),
            "mb" => Ok(Statistics::MaxwellBoltzmann),
            other => Err(format!("unknown statistics `{other}` (expected fd|be|mb)")),
        }
    }
}

/// The half-integer orders needed for number and energy integrals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuantumIntegralOrder {
    Half,
    ThreeHalves,
    FiveHalves,
}

impl QuantumIntegralOrder {
    pub fn value(self) -> f64 {
        match self {
            Self::Half => 0.5,
            Self::ThreeHalves => 1.5,
            Self::FiveHalves => 2.5,
        }
    }

    /// Γ(ν), exact for half-integers.
    pub fn gamma(self) -> f64 {
        let root_pi = PI.sqrt();
        match self {
            Self::Half => root_pi,
            Self::ThreeHalves => 0.5 * root_pi,
            Self::FiveHalves => 0.75 * root_pi,
        }
    }

    /// The order one below, i.e. the order of `z d/dz` applied to this one.
    pub fn lowered(self) -> Option<Self> {
        match self {
            Self::Half => None,
            Self::ThreeHalves => Some(Self::Half),
            Self::FiveHalves => Some(Self::ThreeHalves),
        }
    }

    /// Exponent `2ν - 1` of `u` after substituting `t = u²`.
    fn u_power(self) -> i32 {
        match self {
            Self::Half => 0,
            Self::ThreeHalves => 2,
            Self::FiveHalves => 4,
        }
    }
}

/// A fugacity stored as its logarithm.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Fugacity {
    ln: f64,
}

impl Fugacity {
    pub fn new(z: f64) -> Result<Self> {
        let z = positive("fugacity must be positive and finite", z)?;
        Ok(Self { ln: z.ln() })
    }

    pub fn from_ln(ln_z: f64) -> Result<Self> {
        if ln_z.is_finite() {
            Ok(Self { ln: ln_z })
        } else {
            Err(Error::Domain {
                what: "ln z must be finite",
                value: ln_z,
            })
        }
    }

    /// `z` itself; `inf` once `ln z` exceeds the double-precision range.
    pub fn value(self) -> f64 {
        self.ln.exp()
    }

    pub fn ln(self) -> f64 {
        self.ln
    }
}

/// Evaluates `f_ν(z)`, `g_ν(z)` or the Boltzmann value `z`.
pub fn quantum_integral(stat: Statistics, order: QuantumIntegralOrder, z: f64) -> Result<f64> {
    quantum_integral_at(stat, order, Fugacity::new(z)?)
}

/// As [`quantum_integral`], with the fugacity given in log-space.
pub fn quantum_integral_at(
    stat: Statistics,
    order: QuantumIntegralOrder,
    z: Fugacity,
) -> Result<f64> {
    check_domain(stat, order, z)?;
    match stat {
        Statistics::MaxwellBoltzmann => Ok(z.value()),
        _ if z.ln() <= SERIES_LIMIT.ln() => power_series(stat, order, z.value()),
        _ => quadrature(stat, order, z).map(|r| r.value),
    }
}

fn check_domain(stat: Statistics, order: QuantumIntegralOrder, z: Fugacity) -> Result<()> {
    if stat == Statistics::BoseEinstein {
        if z.ln() > 0.0 {
            return Err(Error::Domain {
                what: "Bose-Einstein integrals require z <= 1",
                value: z.value(),
            });
        }
        if z.ln() == 0.0 && order == QuantumIntegralOrder::Half {
            return Err(Error::Domain {
                what: "g_1/2 diverges at z = 1",
                value: 1.0,
            });
        }
    }
    Ok(())
}

/// `Σ_k s^(k+1) z^k / k^ν` with `s = -1` (FD) or `+1` (BE).
///
/// Accepts `0 < z < 1`; convergence is geometric in `z`, so this is only
/// the preferred route well inside the unit disc.
pub fn power_series(stat: Statistics, order: QuantumIntegralOrder, z: f64) -> Result<f64> {
    if !(z > 0.0 && z < 1.0) {
        return Err(Error::Domain {
            what: "power series requires 0 < z < 1",
            value: z,
        });
    }
    let sign = match stat {
        Statistics::MaxwellBoltzmann => return Ok(z),
        Statistics::FermiDirac => -1.0,
        Statistics::BoseEinstein => 1.0,
    };
    let nu = order.value();
    let mut sum = 0.0;
    let mut power = 1.0;
    let mut term_sign = 1.0;
    for k in 1..=200_000u32 {
        power *= z;
        let term = term_sign * power / f64::from(k).powf(nu);
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            return Ok(sum);
        }
        term_sign *= sign;
    }
    Err(Error::Domain {
        what: "power series did not converge",
        value: z,
    })
}

/// Quadrature evaluation valid on the whole domain of `stat`.
///
/// The integration runs over `t ∈ [0, max(ln z, 0) + 60]`; the remainder is
/// added from its leading asymptotic `z e^(-T) T^(ν-1)` and folded into
/// the reported error.
pub fn quadrature(stat: Statistics, order: QuantumIntegralOrder, z: Fugacity) -> Result<Integral> {
    check_domain(stat, order, z)?;
    let ln_z = z.ln();
    let t_cut = ln_z.max(0.0) + TAIL_MARGIN;
    let u_max = t_cut.sqrt();
    let power = order.u_power();

    // With ln z <= 0 the integrand is divided by z so its magnitude stays O(1).
    let integrand = |u: f64| 2.0 * u.powi(power) * scaled_occupation(stat, u * u, ln_z);
    let edge = ln_z.abs().sqrt();
    // dt = 2u du, so a unit width in t is 1/(2u) in u.
    let points = breakpoints(edge, 0.5 / edge.max(1.0), u_max);
    let mut r = quad::integrate(integrand, &points, Tolerance::default())?;

    // ∫_T^∞ t^(ν-1) e^(ln z - t) dt ≈ e^(ln z - T) T^(ν-1), in the same scaling.
    let tail = (-TAIL_MARGIN).exp() * t_cut.powf(order.value() - 1.0);
    r.value += tail;
    r.error += tail;

    let scale = ln_z.min(0.0).exp() / order.gamma();
    Ok(Integral {
        value: r.value * scale,
        error: r.error * scale,
        intervals: r.intervals,
    })
}

/// Occupation at reduced energy `t`, divided by `z` when `ln z <= 0`.
#[inline]
pub(crate) fn scaled_occupation(stat: Statistics, t: f64, ln_z: f64) -> f64 {
    if ln_z <= 0.0 {
        let boltzmann = (-t).exp();
        match stat {
            Statistics::FermiDirac => boltzmann / (1.0 + (ln_z - t).exp()),
            Statistics::BoseEinstein => boltzmann / -(ln_z - t).exp_m1(),
            Statistics::MaxwellBoltzmann => boltzmann,
        }
    } else {
        match stat {
            Statistics::FermiDirac => 1.0 / (1.0 + (t - ln_z).exp()),
            Statistics::BoseEinstein => 1.0 / (t - ln_z).exp_m1(),
            Statistics::MaxwellBoltzmann => (ln_z - t).exp(),
        }
    }
}

/// Initial subdivision of `[0, upper]` around the edge scale `edge` (the
/// Fermi edge for FD, the `√(-ln z)` crossover for BE near one): a
/// geometric ladder below it, plus points at multiples of the thermal width
/// `width` on either side.
pub(crate) fn breakpoints(edge: f64, width: f64, upper: f64) -> Vec<f64> {
    let mut points = vec![0.0, upper];
    if edge > 0.0 {
        points.extend((-6..=1).map(|j| edge * 2f64.powi(j)));
        points.extend((0..=6).flat_map(|k| {
            let d = width * 2f64.powi(k);
            [edge - d, edge + d]
        }));
    }
    points.retain(|&p| p >= 0.0 && p <= upper);
    points.sort_by(f64::total_cmp);
    points.dedup();
    points
}
