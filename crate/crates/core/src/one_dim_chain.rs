//! Self-consistent temperature of a one-dimensional Fermi chain.
//!
//! The energy per length of the chain is `e = π(kT)²/(6ħ v_F)` with
//! `v_F = ħπ(N/L)/m`. Imposing `kT = e·d`, with `d = L/N` the spacing,
//! fixes `kT = 6ħ²/(m d²)`. Comparing with the bulk Fermi temperature at
//! `ν = d³` gives a ratio independent of `d` and `m`.

use crate::error::{positive, Result};
use crate::gas_statistics::fermi_level;
use crate::units::UnitSystem;
use std::f64::consts::PI;

/// The ratio `3/5` commonly quoted for this closure. The chain implemented
/// here gives [`closure_ratio_constant`] instead.
pub const QUOTED_RATIO: f64 = 0.6;

/// `12/(6π²)^(2/3)`.
pub fn closure_ratio_constant() -> f64 {
    12.0 / (6.0 * PI * PI).powf(2.0 / 3.0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainParameters {
    particle_count: f64,
    length: f64,
    mass: f64,
    units: UnitSystem,
}

impl ChainParameters {
    pub fn new(particle_count: f64, length: f64, mass: f64, units: UnitSystem) -> Result<Self> {
        Ok(Self {
            particle_count: positive("particle count must be positive", particle_count)?,
            length: positive("chain length must be positive", length)?,
            mass: positive("mass must be positive", mass)?,
            units,
        })
    }

    /// A chain of unit particle count with the given spacing.
    pub fn with_spacing(spacing: f64, mass: f64, units: UnitSystem) -> Result<Self> {
        Self::new(1.0, spacing, mass, units)
    }

    pub fn spacing(&self) -> f64 {
        self.length / self.particle_count
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn units(&self) -> UnitSystem {
        self.units
    }
}

/// `v_F = ħπ/(m d)`.
pub fn fermi_velocity(chain: &ChainParameters) -> f64 {
    chain.units.constants().hbar * PI / (chain.mass * chain.spacing())
}

/// `e = π(kT)²/(6ħ v_F)`.
pub fn energy_density_1d(temperature: f64, fermi_velocity: f64, units: UnitSystem) -> Result<f64> {
    let t = positive("temperature must be positive", temperature)?;
    let v = positive("Fermi velocity must be positive", fermi_velocity)?;
    let c = units.constants();
    let kt = c.boltzmann * t;
    Ok(PI * kt * kt / (6.0 * c.hbar * v))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Closure {
    pub temperature: f64,
    /// kT at the fixed point.
    pub thermal_energy: f64,
    pub fermi_temperature: f64,
    /// T / T_F.
    pub ratio: f64,
    /// `12/(6π²)^(2/3)`, what `ratio` should equal.
    pub ratio_constant: f64,
    /// `|kT - e(T) d| / kT`.
    pub residual: f64,
}

/// Solves `kT = e(T)·d` for the positive root.
pub fn closure_temperature(chain: &ChainParameters) -> Result<Closure> {
    let c = chain.units.constants();
    let d = chain.spacing();
    let v_f = fermi_velocity(chain);
    // kT = a (kT)² with a = π d / (6ħ v_F); the non-trivial root is 1/a.
    let a = PI * d / (6.0 * c.hbar * v_f);
    let thermal_energy = 1.0 / a;
    let temperature = thermal_energy / c.boltzmann;
    let e = energy_density_1d(temperature, v_f, chain.units)?;
    let residual = (thermal_energy - e * d).abs() / thermal_energy;
    let fermi = fermi_level(chain.mass, d.powi(3), chain.units)?;
    Ok(Closure {
        temperature,
        thermal_energy,
        fermi_temperature: fermi.temperature,
        ratio: temperature / fermi.temperature,
        ratio_constant: closure_ratio_constant(),
        residual,
    })
}
