//! Statistics of non-interacting fermions confined to a thin wire.
//!
//! The crate evaluates Fermi–Dirac and Bose–Einstein integrals, solves the
//! ideal-gas density constraint for the fugacity, classifies the regimes
//! that arise when the momentum-space measure collapses to `σ dp`, and
//! cross-checks the continuum counts against brute-force sums over the
//! plane-wave states of a finite box. Two closed-form relations are also
//! provided: the self-consistent temperature of a one-dimensional chain and
//! the coincidence of the Debye cutoff energy with the Fermi energy.
//!
//! All routines are pure functions of their arguments.
//!
//! ```
//! use fermiwire::gas_statistics::solve_fugacity;
//! use fermiwire::thin_wire::classify_regime;
//! use fermiwire::{GasParameters, Regime, Statistics, ThermalState, Thresholds, UnitSystem, WireGeometry};
//!
//! // Reduced units at T = 2π, where λ = 1 and λ³/ν = 1.
//! let params = GasParameters::new(1.0, 2.0 * std::f64::consts::PI, 1.0, UnitSystem::Reduced)?;
//! let state = ThermalState::equilibrium(&params, Statistics::FermiDirac)?;
//! assert!((state.fugacity().value() - solve_fugacity(Statistics::FermiDirac, 1.0)?.value()).abs() < 1e-15);
//!
//! let report = classify_regime(&params, &state, &WireGeometry::new(1e-6)?, &Thresholds::default())?;
//! assert_eq!(report.regime, Regime::Bosonized);
//! assert!(!report.inequality_holds);
//! # Ok::<(), fermiwire::Error>(())
//! ```

pub mod box_oracle;
pub mod error;
pub mod gas_statistics;
pub mod one_dim_chain;
pub mod phonon_map;
pub mod quad;
pub mod specfun;
pub mod summation;
pub mod thin_wire;
pub mod units;
pub mod verify;

pub use error::{Error, Result};
pub use gas_statistics::{FermiLevel, GasParameters, ThermalState};
pub use specfun::{Fugacity, QuantumIntegralOrder, Statistics};
pub use thin_wire::{Regime, RegimeReport, Thresholds, WireGeometry};
pub use units::UnitSystem;
