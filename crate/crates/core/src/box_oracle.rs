//! Brute-force occupation sums over the plane-wave states of a periodic
//! `L × a × a` box, and their comparison with the momentum-space continuum.
//!
//! With periodic boundaries the momenta are `p_i = h n_i / L_i`, so the
//! continuum replacement `Σ_p → (V/h³) ∫ d³p` is exact up to the lattice
//! (theta-function) corrections. The lattice is truncated at
//! `|n_i| ≤ cutoff` on every axis.

use crate::error::{positive, Error, Result};
use crate::gas_statistics::occupancy;
use crate::specfun::{quantum_integral_at, Fugacity, QuantumIntegralOrder, Statistics};
use crate::summation::{compensated_sum, NeumaierSum};
use crate::thin_wire::momentum_line_integral;
use crate::units::UnitSystem;
use rayon::prelude::*;
use std::f64::consts::PI;

/// Limit on materialised spectra.
pub const DEFAULT_MAX_LEVELS: u64 = 100_000_000;
/// Limit on Fermi sums with `z > 1`.
pub const DEGENERATE_MAX_LEVELS: u64 = 10_000_000;
/// Minimum `βε` at the cutoff on every axis, on top of `max(ln z, 0)`.
pub const CUTOFF_EXPONENT: f64 = 45.0;
/// Largest accepted truncation bound, relative to the computed sum.
pub const TRUNCATION_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Boundary {
    #[default]
    Periodic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoxLattice {
    long_length: f64,
    transverse_length: f64,
    mass: f64,
    cutoff: u32,
    units: UnitSystem,
}

impl BoxLattice {
    pub fn new(
        long_length: f64,
        transverse_length: f64,
        mass: f64,
        cutoff: u32,
        units: UnitSystem,
    ) -> Result<Self> {
        if cutoff == 0 || cutoff > i32::MAX as u32 / 2 {
            return Err(Error::Domain {
                what: "cutoff must be at least 1",
                value: f64::from(cutoff),
            });
        }
        Ok(Self {
            long_length: positive("box length must be positive", long_length)?,
            transverse_length: positive("transverse size must be positive", transverse_length)?,
            mass: positive("mass must be positive", mass)?,
            cutoff,
            units,
        })
    }

    /// Lattice whose cutoff puts `βε ≥ 45 + max(ln z, 0)` at the edge of every axis.
    pub fn with_default_cutoff(
        long_length: f64,
        transverse_length: f64,
        mass: f64,
        beta: f64,
        z: Fugacity,
        units: UnitSystem,
    ) -> Result<Self> {
        let probe = Self::new(long_length, transverse_length, mass, 1, units)?;
        let beta = positive("beta must be positive", beta)?;
        let softest = beta * probe.axis_quantum(0).min(probe.axis_quantum(1));
        let target = CUTOFF_EXPONENT + z.ln().max(0.0);
        let cutoff = (target / softest).sqrt().ceil().max(1.0);
        if cutoff > f64::from(i32::MAX / 2) {
            return Err(Error::Resource {
                requested: u64::MAX,
                limit: DEFAULT_MAX_LEVELS,
            });
        }
        Self::new(long_length, transverse_length, mass, cutoff as u32, units)
    }

    pub fn long_length(&self) -> f64 {
        self.long_length
    }

    pub fn transverse_length(&self) -> f64 {
        self.transverse_length
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn units(&self) -> UnitSystem {
        self.units
    }

    pub fn boundary(&self) -> Boundary {
        Boundary::Periodic
    }

    pub fn volume(&self) -> f64 {
        self.long_length * self.transverse_length * self.transverse_length
    }

    /// `(2·cutoff + 1)³`.
    pub fn state_count(&self) -> u64 {
        let side = 2 * u64::from(self.cutoff) + 1;
        side * side * side
    }

    /// `h²/(2m L_i²)`: axis 0 is the long axis, 1 and 2 transverse.
    pub fn axis_quantum(&self, axis: usize) -> f64 {
        let length = if axis == 0 {
            self.long_length
        } else {
            self.transverse_length
        };
        let p = self.units.constants().planck / length;
        p * p / (2.0 * self.mass)
    }

    pub fn energy(&self, n: [i32; 3]) -> f64 {
        let [x, y, z] = n.map(|k| f64::from(k) * f64::from(k));
        self.axis_quantum(0) * x + self.axis_quantum(1) * (y + z)
    }

    pub fn enumerate_levels(&self) -> Result<BoxSpectrum> {
        self.enumerate_levels_with_limit(DEFAULT_MAX_LEVELS)
    }

    pub fn enumerate_levels_with_limit(&self, max_levels: u64) -> Result<BoxSpectrum> {
        let count = self.state_count();
        if count > max_levels {
            return Err(Error::Resource {
                requested: count,
                limit: max_levels,
            });
        }
        let c = self.cutoff as i32;
        let mut levels = Vec::with_capacity(count as usize);
        for x in -c..=c {
            for y in -c..=c {
                for z in -c..=c {
                    let n = [x, y, z];
                    levels.push(Level {
                        n,
                        energy: self.energy(n),
                    });
                }
            }
        }
        levels.sort_by(|a, b| a.energy.total_cmp(&b.energy).then_with(|| a.n.cmp(&b.n)));
        Ok(BoxSpectrum {
            lattice: *self,
            levels,
        })
    }
}

/// Convenience wrapper around [`BoxLattice::enumerate_levels`].
pub fn enumerate_levels(
    long_length: f64,
    transverse_length: f64,
    mass: f64,
    cutoff: u32,
    units: UnitSystem,
) -> Result<BoxSpectrum> {
    BoxLattice::new(long_length, transverse_length, mass, cutoff, units)?.enumerate_levels()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Level {
    pub n: [i32; 3],
    pub energy: f64,
}

/// A materialised spectrum, sorted by energy (ties by quantum numbers).
#[derive(Debug, Clone, PartialEq)]
pub struct BoxSpectrum {
    lattice: BoxLattice,
    levels: Vec<Level>,
}

impl BoxSpectrum {
    pub fn lattice(&self) -> &BoxLattice {
        &self.lattice
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// Sums occupations over the stored levels in energy order.
    pub fn direct_number_sum(&self, stat: Statistics, z: Fugacity, beta: f64) -> Result<NumberSum> {
        check_sum_inputs(&self.lattice, stat, z, beta)?;
        let ln_z = z.ln();
        let occ = |l: &Level| occupancy(stat, beta * l.energy - ln_z);
        let total = compensated_sum(self.levels.iter().map(occ));
        let ground = compensated_sum(
            self.levels
                .iter()
                .filter(|l| l.n[1] == 0 && l.n[2] == 0)
                .map(occ),
        );
        finish_sum(&self.lattice, stat, z, beta, total, ground)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumberSum {
    pub total: f64,
    /// Part of `total` in the lowest transverse mode `n_y = n_z = 0`.
    pub ground_transverse: f64,
    /// Rigorous upper bound on the contribution of states beyond the cutoff.
    pub truncation_bound: f64,
    pub states: u64,
}

fn check_sum_inputs(lattice: &BoxLattice, stat: Statistics, z: Fugacity, beta: f64) -> Result<()> {
    positive("beta must be positive", beta)?;
    match stat {
        Statistics::BoseEinstein if z.ln() >= 0.0 => Err(Error::Condensate {
            fugacity: z.value(),
        }),
        Statistics::FermiDirac if z.ln() > 0.0 && lattice.state_count() > DEGENERATE_MAX_LEVELS => {
            Err(Error::Resource {
                requested: lattice.state_count(),
                limit: DEGENERATE_MAX_LEVELS,
            })
        }
        _ => Ok(()),
    }
}

/// Bounds the discarded states by the Boltzmann tail of each axis.
fn truncation_bound(lattice: &BoxLattice, stat: Statistics, z: Fugacity, beta: f64) -> f64 {
    let c = f64::from(lattice.cutoff);
    let a = [0, 1, 2].map(|i| beta * lattice.axis_quantum(i));
    // Σ_{n∈Z} e^{-a n²} ≤ 1 + √(π/a).
    let theta = a.map(|ai| 1.0 + (PI / ai).sqrt());
    // 2 Σ_{n>c} e^{-a n²} ≤ 2 e^{-a(c+1)²} / (1 - e^{-a(2c+3)}).
    let tail =
        a.map(|ai| 2.0 * (-ai * (c + 1.0) * (c + 1.0)).exp() / -(-ai * (2.0 * c + 3.0)).exp_m1());
    let cross: f64 = (0..3)
        .map(|i| {
            tail[i]
                * (0..3)
                    .filter(|&j| j != i)
                    .map(|j| theta[j])
                    .product::<f64>()
        })
        .sum();
    // n_FD ≤ n_MB and n_BE ≤ n_MB / (1 - z).
    let ln_weight = match stat {
        Statistics::BoseEinstein => z.ln() - (-(z.ln().exp_m1())).ln(),
        _ => z.ln(),
    };
    ln_weight.exp() * cross
}

fn finish_sum(
    lattice: &BoxLattice,
    stat: Statistics,
    z: Fugacity,
    beta: f64,
    total: f64,
    ground: f64,
) -> Result<NumberSum> {
    let bound = truncation_bound(lattice, stat, z, beta);
    // Also rejects a NaN bound.
    if bound.is_nan() || bound > TRUNCATION_TOLERANCE * total {
        return Err(Error::Truncation {
            bound,
            tolerance: TRUNCATION_TOLERANCE * total,
        });
    }
    Ok(NumberSum {
        total,
        ground_transverse: ground,
        truncation_bound: bound,
        states: lattice.state_count(),
    })
}

/// `N = Σ_states n(ε)` over the whole lattice, without materialising it.
///
/// Slabs of fixed `n_x` are summed in parallel and then combined in slab
/// order, so the result does not depend on the number of threads.
pub fn direct_number_sum(
    lattice: &BoxLattice,
    stat: Statistics,
    z: Fugacity,
    beta: f64,
) -> Result<NumberSum> {
    check_sum_inputs(lattice, stat, z, beta)?;
    let (total, ground) = match stat {
        Statistics::FermiDirac => {
            lattice_sum(lattice, z, beta, |x| occupancy(Statistics::FermiDirac, x))
        }
        Statistics::BoseEinstein => {
            lattice_sum(lattice, z, beta, |x| occupancy(Statistics::BoseEinstein, x))
        }
        Statistics::MaxwellBoltzmann => lattice_sum(lattice, z, beta, |x| (-x).exp()),
    };
    finish_sum(lattice, stat, z, beta, total, ground)
}

fn lattice_sum<F>(lattice: &BoxLattice, z: Fugacity, beta: f64, occ: F) -> (f64, f64)
where
    F: Fn(f64) -> f64 + Sync,
{
    let c = lattice.cutoff as i32;
    let ln_z = z.ln();
    let axis = |quantum: f64| -> Vec<f64> {
        (-c..=c)
            .map(|n| beta * quantum * f64::from(n) * f64::from(n))
            .collect()
    };
    let long = axis(lattice.axis_quantum(0));
    let transverse = axis(lattice.axis_quantum(1));
    let centre = c as usize;

    let slabs: Vec<(f64, f64)> = long
        .par_iter()
        .map(|&ex| {
            let mut slab = NeumaierSum::new();
            let base = ex - ln_z;
            for &ey in &transverse {
                let row = base + ey;
                for &ez in &transverse {
                    slab.add(occ(row + ez));
                }
            }
            (slab.value(), occ(base + transverse[centre] * 2.0))
        })
        .collect();
    (
        compensated_sum(slabs.iter().map(|s| s.0)),
        compensated_sum(slabs.iter().map(|s| s.1)),
    )
}

/// How the quasi-1D continuum assigns the transverse cross-section.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WireConvention {
    /// One transverse momentum cell: `σ = h²/a²`, i.e. `σ̃ = λ²/a²`.
    TransverseGroundMode,
    Explicit(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuumComparison {
    pub n_discrete: f64,
    /// `(V/h³) ∫ d³p n(p) = (V/λ³) I_{3/2}(z)`.
    pub n_continuum_3d: f64,
    pub rel_err_3d: f64,
    /// `(Vσ/h³) ∫ dp n(p) = (V σ̃/λ³) I_{1/2}(z)`.
    pub n_quasi1d: f64,
    pub rel_err_quasi1d: f64,
    pub sigma_tilde: f64,
    /// σ̃ that would make the quasi-1D count match the discrete sum.
    pub sigma_tilde_fitted: f64,
    pub ground_transverse_fraction: f64,
    pub truncation_bound: f64,
    pub lambda: f64,
    pub states: u64,
}

pub fn compare_continuum(
    lattice: &BoxLattice,
    stat: Statistics,
    z: Fugacity,
    beta: f64,
    convention: WireConvention,
) -> Result<ContinuumComparison> {
    let sum = direct_number_sum(lattice, stat, z, beta)?;
    let c = lattice.units.constants();
    let lambda = (2.0 * PI * c.hbar * c.hbar * beta / lattice.mass).sqrt();
    let cells = lattice.volume() / lambda.powi(3);
    let n_continuum_3d = cells * quantum_integral_at(stat, QuantumIntegralOrder::ThreeHalves, z)?;
    let sigma_tilde = match convention {
        WireConvention::TransverseGroundMode => (lambda / lattice.transverse_length).powi(2),
        WireConvention::Explicit(s) => positive("cross-section must be positive", s)?,
    };
    let line = momentum_line_integral(stat, z)?;
    let n_quasi1d = cells * sigma_tilde * line;
    let n = sum.total;
    Ok(ContinuumComparison {
        n_discrete: n,
        n_continuum_3d,
        rel_err_3d: (n - n_continuum_3d).abs() / n_continuum_3d,
        n_quasi1d,
        rel_err_quasi1d: (n - n_quasi1d).abs() / n_quasi1d,
        sigma_tilde,
        sigma_tilde_fitted: n / (cells * line),
        ground_transverse_fraction: sum.ground_transverse / n,
        truncation_bound: sum.truncation_bound,
        lambda,
        states: sum.states,
    })
}
