//! Occupation numbers, fugacity inversion and the bulk Fermi level.
//!
//! The Fermi level uses the spinless count `p_F = ħ (6π²/ν)^(1/3)`; the
//! conventional spin-½ value replaces `6π²` by `3π²`.

use crate::error::{positive, Error, Result};
use crate::specfun::{
    quantum_integral_at, Fugacity, QuantumIntegralOrder, Statistics, ZETA_THREE_HALVES,
};
use crate::units::UnitSystem;
use std::f64::consts::PI;

/// Thermodynamic input state: mass, temperature and volume per particle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasParameters {
    mass: f64,
    temperature: f64,
    specific_volume: f64,
    units: UnitSystem,
}

impl GasParameters {
    pub fn new(
        mass: f64,
        temperature: f64,
        specific_volume: f64,
        units: UnitSystem,
    ) -> Result<Self> {
        Ok(Self {
            mass: positive("mass must be positive", mass)?,
            temperature: positive("temperature must be positive", temperature)?,
            specific_volume: positive("specific volume must be positive", specific_volume)?,
            units,
        })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn specific_volume(&self) -> f64 {
        self.specific_volume
    }

    pub fn units(&self) -> UnitSystem {
        self.units
    }

    /// β = 1/kT.
    pub fn beta(&self) -> f64 {
        1.0 / (self.units.constants().boltzmann * self.temperature)
    }

    pub fn thermal_wavelength(&self) -> f64 {
        wavelength_unchecked(self.mass, self.temperature, self.units)
    }

    /// λ³/ν.
    pub fn degeneracy(&self) -> f64 {
        self.thermal_wavelength().powi(3) / self.specific_volume
    }

    pub fn fermi_level(&self) -> FermiLevel {
        fermi_level_unchecked(self.mass, self.specific_volume, self.units)
    }
}

/// Thermal de Broglie wavelength `λ = (2πħ²/mkT)^(1/2)`.
pub fn thermal_wavelength(mass: f64, temperature: f64, units: UnitSystem) -> Result<f64> {
    let mass = positive("mass must be positive", mass)?;
    let temperature = positive("temperature must be positive", temperature)?;
    Ok(wavelength_unchecked(mass, temperature, units))
}

fn wavelength_unchecked(mass: f64, temperature: f64, units: UnitSystem) -> f64 {
    let c = units.constants();
    (2.0 * PI * c.hbar * c.hbar / (mass * c.boltzmann * temperature)).sqrt()
}

/// Fermi momentum, energy and temperature of a spinless ideal gas.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FermiLevel {
    pub momentum: f64,
    pub energy: f64,
    pub temperature: f64,
}

pub fn fermi_level(mass: f64, specific_volume: f64, units: UnitSystem) -> Result<FermiLevel> {
    let mass = positive("mass must be positive", mass)?;
    let nu = positive("specific volume must be positive", specific_volume)?;
    Ok(fermi_level_unchecked(mass, nu, units))
}

fn fermi_level_unchecked(mass: f64, specific_volume: f64, units: UnitSystem) -> FermiLevel {
    let c = units.constants();
    let momentum = c.hbar * (6.0 * PI * PI / specific_volume).cbrt();
    let energy = momentum * momentum / (2.0 * mass);
    FermiLevel {
        momentum,
        energy,
        temperature: energy / c.boltzmann,
    }
}

pub fn fermi_energy(params: &GasParameters) -> f64 {
    params.fermi_level().energy
}

pub fn fermi_temperature(params: &GasParameters) -> f64 {
    params.fermi_level().temperature
}

/// The solved equilibrium: fugacity, thermal wavelength and λ³/ν.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalState {
    fugacity: Fugacity,
    lambda: f64,
    degeneracy: f64,
}

impl ThermalState {
    /// Assembles a state from independent parts. No consistency between
    /// `fugacity` and `degeneracy` is imposed; see [`ThermalState::equilibrium`].
    pub fn new(fugacity: Fugacity, lambda: f64, degeneracy: f64) -> Result<Self> {
        Ok(Self {
            fugacity,
            lambda: positive("thermal wavelength must be positive", lambda)?,
            degeneracy: positive("degeneracy must be positive", degeneracy)?,
        })
    }

    /// Solves the density constraint for the fugacity of `params`.
    pub fn equilibrium(params: &GasParameters, stat: Statistics) -> Result<Self> {
        let degeneracy = params.degeneracy();
        Ok(Self {
            fugacity: solve_fugacity(stat, degeneracy)?,
            lambda: params.thermal_wavelength(),
            degeneracy,
        })
    }

    pub fn fugacity(&self) -> Fugacity {
        self.fugacity
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn degeneracy(&self) -> f64 {
        self.degeneracy
    }
}

/// Mean occupation of a single-particle level of energy `eps`.
pub fn occupation(stat: Statistics, z: Fugacity, beta: f64, eps: f64) -> Result<f64> {
    let beta = positive("beta must be positive", beta)?;
    if !(eps >= 0.0 && eps.is_finite()) {
        return Err(Error::Domain {
            what: "level energy must be non-negative",
            value: eps,
        });
    }
    let x = beta * eps - z.ln();
    if stat == Statistics::BoseEinstein && x <= 0.0 {
        return Err(Error::Singularity {
            denominator: x.exp_m1(),
        });
    }
    Ok(occupancy(stat, x))
}

/// Occupation as a function of `x = βε - ln z`, without domain checks.
/// For Bose statistics the caller guarantees `x > 0`.
#[inline]
pub fn occupancy(stat: Statistics, x: f64) -> f64 {
    match stat {
        Statistics::FermiDirac => {
            if x > 0.0 {
                let w = (-x).exp();
                w / (1.0 + w)
            } else {
                1.0 / (1.0 + x.exp())
            }
        }
        // Written against e^{-x} so that n_BE >= n_MB >= n_FD survives rounding.
        Statistics::BoseEinstein => (-x).exp() / -(-x).exp_m1(),
        Statistics::MaxwellBoltzmann => (-x).exp(),
    }
}

const SOLVER_MAX_ITERATIONS: usize = 200;
const SOLVER_TOLERANCE: f64 = 1e-12;
/// Residual accepted when the bracket collapses before `SOLVER_TOLERANCE`.
const SOLVER_ACCEPT: f64 = 1e-10;

/// Inverts `I_{3/2}(z) = λ³/ν` for the fugacity.
pub fn solve_fugacity(stat: Statistics, degeneracy: f64) -> Result<Fugacity> {
    let x = positive("degeneracy must be positive", degeneracy)?;
    let (lo, hi, seed) = match stat {
        Statistics::MaxwellBoltzmann => return Fugacity::from_ln(x.ln()),
        Statistics::BoseEinstein => {
            if x > ZETA_THREE_HALVES {
                return Err(Error::Condensation {
                    degeneracy: x,
                    critical: ZETA_THREE_HALVES,
                });
            }
            if x == ZETA_THREE_HALVES {
                return Fugacity::from_ln(0.0);
            }
            // z <= g(z) <= ζ(3/2) z on (0, 1].
            let lo = (x / ZETA_THREE_HALVES).ln();
            let hi = x.ln().min(0.0);
            (lo, hi, 0.5 * (lo + hi))
        }
        Statistics::FermiDirac => {
            let seed = if x < 1.0 {
                (x + x * x / 2f64.powf(1.5)).ln()
            } else {
                (x * 3.0 * PI.sqrt() / 4.0).powf(2.0 / 3.0)
            };
            // f(z) < z, so ln x is a lower bracket.
            let lo = x.ln();
            let (lo, hi) = bracket_upward(stat, x, lo, seed.max(lo))?;
            (lo, hi, seed)
        }
    };
    safeguarded_newton(stat, x, lo, hi, seed)
}

fn residual(stat: Statistics, target: f64, ln_z: f64) -> Result<f64> {
    Ok(quantum_integral_at(
        stat,
        QuantumIntegralOrder::ThreeHalves,
        Fugacity::from_ln(ln_z)?,
    )? - target)
}

/// Moves `hi` upward with doubling steps until it brackets the root.
fn bracket_upward(stat: Statistics, target: f64, mut lo: f64, mut hi: f64) -> Result<(f64, f64)> {
    let mut step = hi.abs().max(1.0);
    for _ in 0..64 {
        if residual(stat, target, hi)? >= 0.0 {
            return Ok((lo, hi));
        }
        lo = hi;
        hi += step;
        step *= 2.0;
    }
    Err(Error::Convergence {
        iterations: 64,
        lo,
        hi,
        residual: f64::NAN,
    })
}

fn safeguarded_newton(
    stat: Statistics,
    target: f64,
    mut lo: f64,
    mut hi: f64,
    seed: f64,
) -> Result<Fugacity> {
    let inside = |v: f64, lo: f64, hi: f64| v > lo && v < hi;
    let mut ln_z = if inside(seed, lo, hi) {
        seed
    } else {
        0.5 * (lo + hi)
    };
    let mut best = (f64::INFINITY, ln_z);
    for _ in 0..SOLVER_MAX_ITERATIONS {
        let g = residual(stat, target, ln_z)?;
        if g.abs() < best.0 {
            best = (g.abs(), ln_z);
        }
        if g.abs() <= SOLVER_TOLERANCE * target {
            return Fugacity::from_ln(ln_z);
        }
        if g < 0.0 {
            lo = ln_z;
        } else {
            hi = ln_z;
        }
        if hi - lo <= 4.0 * f64::EPSILON * lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE) {
            break;
        }
        // d I_{3/2} / d ln z = I_{1/2}.
        let slope =
            quantum_integral_at(stat, QuantumIntegralOrder::Half, Fugacity::from_ln(ln_z)?)?;
        let next = ln_z - g / slope;
        ln_z = if next.is_finite() && inside(next, lo, hi) {
            next
        } else {
            0.5 * (lo + hi)
        };
    }
    if best.0 <= SOLVER_ACCEPT * target {
        return Fugacity::from_ln(best.1);
    }
    Err(Error::Convergence {
        iterations: SOLVER_MAX_ITERATIONS,
        lo,
        hi,
        residual: best.0,
    })
}
