//! Unit systems and the physical constants they fix.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// CODATA-2018 reduced Planck constant, J s.
pub const HBAR_SI: f64 = 1.054_571_817e-34;
/// CODATA-2018 Planck constant (exact), J s.
pub const PLANCK_SI: f64 = 6.626_070_15e-34;
/// CODATA-2018 Boltzmann constant (exact), J/K.
pub const BOLTZMANN_SI: f64 = 1.380_649e-23;
/// CODATA-2018 electron mass, kg.
pub const ELECTRON_MASS_SI: f64 = 9.109_383_701_5e-31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnitSystem {
    /// ħ = k = 1, masses in units of a reference mass.
    #[default]
    Reduced,
    Si,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub hbar: f64,
    pub planck: f64,
    pub boltzmann: f64,
}

impl UnitSystem {
    pub fn constants(self) -> Constants {
        match self {
            UnitSystem::Reduced => Constants {
                hbar: 1.0,
                planck: 2.0 * PI,
                boltzmann: 1.0,
            },
            UnitSystem::Si => Constants {
                hbar: HBAR_SI,
                planck: PLANCK_SI,
                boltzmann: BOLTZMANN_SI,
            },
        }
    }

    /// A natural default particle mass: 1 in reduced units, the electron mass in SI.
    pub fn default_mass(self) -> f64 {
        match self {
            UnitSystem::Reduced => 1.0,
            UnitSystem::Si => ELECTRON_MASS_SI,
        }
    }
}

impl std::str::FromStr for UnitSystem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "reduced" => Ok(UnitSystem::Reduced),
            "si" => Ok(UnitSystem::Si),
            other => Err(format!(
                "unknown unit system `{other}` (expected reduced|si)"
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn si_planck_constants_agree() {
        let c = UnitSystem::Si.constants();
        assert!((c.planck / (2.0 * PI) - c.hbar).abs() / c.hbar < 1e-9);
    }

    #[test]
    fn reduced_planck_is_two_pi() {
        let c = UnitSystem::Reduced.constants();
        assert_eq!(c.planck, 2.0 * PI * c.hbar);
    }
}
