//! Debye cutoff of a phonon medium and its match with the Fermi level.

use crate::error::{positive, Result};
use crate::gas_statistics::fermi_level;
use crate::units::UnitSystem;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhononMedium {
    sound_speed: f64,
    specific_volume: f64,
}

impl PhononMedium {
    pub fn new(sound_speed: f64, specific_volume: f64) -> Result<Self> {
        Ok(Self {
            sound_speed: positive("sound speed must be positive", sound_speed)?,
            specific_volume: positive("specific volume must be positive", specific_volume)?,
        })
    }

    pub fn sound_speed(&self) -> f64 {
        self.sound_speed
    }

    pub fn specific_volume(&self) -> f64 {
        self.specific_volume
    }
}

/// `ω_m = c (6π²/ν)^(1/3)`.
pub fn debye_omega_max(medium: &PhononMedium) -> f64 {
    medium.sound_speed * (6.0 * PI * PI / medium.specific_volume).cbrt()
}

/// `λ_m = 2πc/ω_m`.
pub fn debye_wavelength(medium: &PhononMedium) -> f64 {
    2.0 * PI * medium.sound_speed / debye_omega_max(medium)
}

/// de Broglie momentum of the cutoff mode, `p_m = ħ ω_m / c`.
pub fn debye_momentum(medium: &PhononMedium, units: UnitSystem) -> f64 {
    units.constants().hbar * debye_omega_max(medium) / medium.sound_speed
}

/// `ε_m = p_m²/2m`.
pub fn phonon_max_energy(medium: &PhononMedium, mass: f64, units: UnitSystem) -> Result<f64> {
    let mass = positive("mass must be positive", mass)?;
    let p = debye_momentum(medium, units);
    Ok(p * p / (2.0 * mass))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Correspondence {
    pub omega_max: f64,
    pub wavelength_max: f64,
    pub eps_m: f64,
    pub eps_f: f64,
    pub p_m: f64,
    pub p_f: f64,
    pub rel_diff_energy: f64,
    pub rel_diff_momentum: f64,
    /// `λ_m · p_m / h`, one by construction.
    pub de_broglie_product: f64,
    /// `λ_m / ν^(1/3)`, which is `2π/(6π²)^(1/3)`.
    pub wavelength_spacing_ratio: f64,
}

/// Compares the phonon cutoff with the Fermi level at the same `ν`.
pub fn correspondence_check(
    medium: &PhononMedium,
    mass: f64,
    units: UnitSystem,
) -> Result<Correspondence> {
    let eps_m = phonon_max_energy(medium, mass, units)?;
    let p_m = debye_momentum(medium, units);
    let fermi = fermi_level(mass, medium.specific_volume, units)?;
    let wavelength_max = debye_wavelength(medium);
    Ok(Correspondence {
        omega_max: debye_omega_max(medium),
        wavelength_max,
        eps_m,
        eps_f: fermi.energy,
        p_m,
        p_f: fermi.momentum,
        rel_diff_energy: (eps_m - fermi.energy).abs() / fermi.energy,
        rel_diff_momentum: (p_m - fermi.momentum).abs() / fermi.momentum,
        de_broglie_product: wavelength_max * p_m / units.constants().planck,
        wavelength_spacing_ratio: wavelength_max / medium.specific_volume.cbrt(),
    })
}
