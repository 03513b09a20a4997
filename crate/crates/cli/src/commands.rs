use crate::cli::{OracleArgs, OutputArgs, ScanArgs, TableKind, TabulateArgs};
use crate::config::{AxisSpec, ScanConfig};
use crate::error::CliError;
use crate::table::{format_float, Cell, Format, Table};
use fermiwire::box_oracle::{compare_continuum, BoxLattice, WireConvention};
use fermiwire::gas_statistics::{occupation, solve_fugacity};
use fermiwire::phonon_map::{correspondence_check, PhononMedium};
use fermiwire::thin_wire::classify_regime;
use fermiwire::verify::{run_checks, Status};
use fermiwire::{
    Fugacity, GasParameters, Statistics, ThermalState, Thresholds, UnitSystem, WireGeometry,
};
use rayon::prelude::*;
use std::f64::consts::PI;
use std::io::Write;
use std::path::Path;

pub const SCAN_COLUMNS: &[&str] = &[
    "T",
    "nu",
    "sigma_tilde",
    "z",
    "ln_z",
    "lambda",
    "degeneracy",
    "rhs_approx",
    "rhs_exact",
    "inequality_holds",
    "regime",
    "message",
];

pub const OCCUPATION_COLUMNS: &[&str] = &["beta_eps", "n_fd", "n_mb", "n_be"];

pub const PHONON_COLUMNS: &[&str] = &[
    "nu",
    "c",
    "mass",
    "omega_max",
    "wavelength_max",
    "p_m",
    "p_f",
    "eps_m",
    "eps_f",
    "rel_diff_energy",
    "rel_diff_momentum",
    "wavelength_spacing_ratio",
];

pub const ORACLE_COLUMNS: &[&str] = &[
    "long_over_lambda",
    "transverse_over_lambda",
    "stat",
    "z",
    "cutoff",
    "states",
    "n_discrete",
    "n_continuum_3d",
    "rel_err_3d",
    "n_quasi1d",
    "rel_err_quasi1d",
    "sigma_tilde",
    "sigma_tilde_fitted",
    "ground_transverse_fraction",
    "truncation_bound",
    "message",
];

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn emit_table(table: &Table, output: &OutputArgs) -> Result<(), CliError> {
    emit(
        &table.render(output.format.unwrap_or_default()),
        output.out.as_deref(),
    )
}

pub fn verify(config: Option<&Path>) -> Result<u8, CliError> {
    let thresholds = match config {
        Some(path) => ScanConfig::load(path)?.thresholds.unwrap_or_default(),
        None => Thresholds::default(),
    };
    let checks = run_checks(&thresholds);
    let mut text = String::new();
    let short = |v: f64| {
        if v.is_nan() {
            "-".to_owned()
        } else {
            format!("{v:.9e}")
        }
    };
    for c in &checks {
        text.push_str(&format!(
            "{:<30} {:<4}  computed={:<16}  expected={:<16}  tol={:<16}  {}\n",
            format!("{}:", c.name),
            c.status.as_str(),
            short(c.computed),
            short(c.expected),
            short(c.tolerance),
            c.note
        ));
    }
    let count = |s| checks.iter().filter(|c| c.status == s).count();
    let failed = count(Status::Fail);
    text.push_str(&format!(
        "{} checks: {} passed, {} failed, {} informational\n",
        checks.len(),
        count(Status::Pass),
        failed,
        count(Status::Info)
    ));
    emit(&text, None)?;
    Ok(if failed == 0 { 0 } else { 1 })
}

/// Scan settings after merging the config file with the flags.
#[derive(Debug, Clone)]
pub struct ScanPlan {
    pub temperature: Option<AxisSpec>,
    pub degeneracy: Option<AxisSpec>,
    pub specific_volume: AxisSpec,
    pub sigma_tilde: AxisSpec,
    pub fugacity: Option<AxisSpec>,
    pub statistics: Statistics,
    pub thresholds: Thresholds,
    pub units: UnitSystem,
    pub mass: f64,
    pub format: Format,
    pub out: Option<std::path::PathBuf>,
}

impl ScanPlan {
    pub fn from_args(args: &ScanArgs) -> Result<Self, CliError> {
        let config = match &args.config {
            Some(path) => ScanConfig::load(path)?,
            None => ScanConfig::default(),
        };
        let (temperature, degeneracy) = match (args.temperature, args.degeneracy) {
            (Some(t), _) => (Some(t), None),
            (None, Some(d)) => (None, Some(d)),
            (None, None) => (config.temperature, config.degeneracy),
        };
        if temperature.is_some() && degeneracy.is_some() {
            return Err(CliError::Config(
                "give either a temperature or a degeneracy axis, not both".into(),
            ));
        }
        let units = args.units.or(config.unit_system).unwrap_or_default();
        let mass = args
            .mass
            .or(config.mass)
            .unwrap_or_else(|| units.default_mass());
        if !(mass.is_finite() && mass > 0.0) {
            return Err(CliError::Config(format!(
                "mass must be positive, got {mass}"
            )));
        }
        let base = config.thresholds.unwrap_or_default();
        let thresholds = Thresholds::new(
            args.z_degenerate.unwrap_or(base.z_degenerate()),
            args.deg_classical.unwrap_or(base.deg_classical()),
            args.sigma_thin.unwrap_or(base.sigma_thin()),
        )
        .map_err(|e| CliError::Config(e.to_string()))?;
        let output = config.output.unwrap_or_default();
        Ok(Self {
            temperature: temperature.or(if degeneracy.is_none() {
                Some(AxisSpec::single(1.0))
            } else {
                None
            }),
            degeneracy,
            specific_volume: args
                .nu
                .or(config.specific_volume)
                .unwrap_or(AxisSpec::single(1.0)),
            sigma_tilde: args
                .sigma
                .or(config.sigma_tilde)
                .unwrap_or(AxisSpec::single(1e-6)),
            fugacity: args.z.or(config.fugacity),
            statistics: args
                .stat
                .or(config.statistics)
                .unwrap_or(Statistics::FermiDirac),
            thresholds,
            units,
            mass,
            format: args.output.format.or(output.format).unwrap_or_default(),
            out: args.output.out.clone().or(output.path),
        })
    }

    /// Grid points in lexicographic order: first axis slowest.
    fn points(&self) -> Vec<[f64; 4]> {
        let first = self
            .temperature
            .or(self.degeneracy)
            .expect("one thermal axis is always set");
        let zs: Vec<f64> = self.fugacity.map_or(vec![f64::NAN], |a| a.values());
        let mut out = Vec::new();
        for t in first.values() {
            for nu in self.specific_volume.values() {
                for s in self.sigma_tilde.values() {
                    for &z in &zs {
                        out.push([t, nu, s, z]);
                    }
                }
            }
        }
        out
    }

    fn row(&self, [first, nu, sigma, z_given]: [f64; 4]) -> Vec<Cell> {
        let c = self.units.constants();
        let temperature = match self.degeneracy {
            Some(_) => {
                let lambda = (first * nu).cbrt();
                2.0 * PI * c.hbar * c.hbar / (self.mass * c.boltzmann * lambda * lambda)
            }
            None => first,
        };
        let attempt = || -> fermiwire::Result<Vec<Cell>> {
            let params = GasParameters::new(self.mass, temperature, nu, self.units)?;
            let (lambda, degeneracy) = (params.thermal_wavelength(), params.degeneracy());
            let z = if z_given.is_nan() {
                solve_fugacity(self.statistics, degeneracy)?
            } else {
                Fugacity::new(z_given)?
            };
            let state = ThermalState::new(z, lambda, degeneracy)?;
            let report = classify_regime(
                &params,
                &state,
                &WireGeometry::new(sigma)?,
                &self.thresholds,
            )?;
            Ok(vec![
                temperature.into(),
                nu.into(),
                sigma.into(),
                z.value().into(),
                z.ln().into(),
                lambda.into(),
                degeneracy.into(),
                report.rhs_approx.into(),
                report.rhs_exact.into(),
                report.inequality_holds.into(),
                report.regime.as_str().into(),
                "".into(),
            ])
        };
        attempt().unwrap_or_else(|e| {
            let z = if z_given.is_nan() {
                Cell::Empty
            } else {
                z_given.into()
            };
            let ln_z = if z_given.is_nan() {
                Cell::Empty
            } else {
                z_given.ln().into()
            };
            vec![
                temperature.into(),
                nu.into(),
                sigma.into(),
                z,
                ln_z,
                Cell::Empty,
                Cell::Empty,
                Cell::Empty,
                Cell::Empty,
                Cell::Empty,
                "ERROR".into(),
                e.to_string().into(),
            ]
        })
    }

    pub fn run(&self) -> Table {
        let rows: Vec<Vec<Cell>> = self.points().into_par_iter().map(|p| self.row(p)).collect();
        let mut table = Table::new(SCAN_COLUMNS);
        for row in rows {
            table.push(row);
        }
        table
    }
}

pub fn scan(args: &ScanArgs) -> Result<u8, CliError> {
    let plan = ScanPlan::from_args(args)?;
    let table = plan.run();
    let regime = SCAN_COLUMNS
        .iter()
        .position(|c| *c == "regime")
        .expect("regime column");
    let ok = table
        .rows()
        .iter()
        .filter(|r| r[regime] != Cell::from("ERROR"))
        .count();
    emit(&table.render(plan.format), plan.out.as_deref())?;
    if ok == 0 {
        return Err(CliError::Failed(format!(
            "all {} scan points failed",
            table.rows().len()
        )));
    }
    Ok(0)
}

fn nan_on_error(r: fermiwire::Result<f64>) -> Cell {
    Cell::Num(r.unwrap_or(f64::NAN))
}

pub fn tabulate(args: &TabulateArgs) -> Result<u8, CliError> {
    let mass = args.mass.unwrap_or_else(|| args.units.default_mass());
    let table = match args.kind {
        TableKind::Occupation => {
            let z = Fugacity::new(args.z.unwrap_or(1.0))
                .map_err(|e| CliError::Config(e.to_string()))?;
            let mut t = Table::new(OCCUPATION_COLUMNS);
            for x in args.beta_eps.values() {
                t.push(vec![
                    x.into(),
                    nan_on_error(occupation(Statistics::FermiDirac, z, 1.0, x)),
                    nan_on_error(occupation(Statistics::MaxwellBoltzmann, z, 1.0, x)),
                    nan_on_error(occupation(Statistics::BoseEinstein, z, 1.0, x)),
                ]);
            }
            t
        }
        TableKind::Phonon => {
            let mut t = Table::new(PHONON_COLUMNS);
            for nu in args.nu.values() {
                for c in args.c.values() {
                    let r = PhononMedium::new(c, nu)
                        .and_then(|m| correspondence_check(&m, mass, args.units))?;
                    t.push(vec![
                        nu.into(),
                        c.into(),
                        mass.into(),
                        r.omega_max.into(),
                        r.wavelength_max.into(),
                        r.p_m.into(),
                        r.p_f.into(),
                        r.eps_m.into(),
                        r.eps_f.into(),
                        r.rel_diff_energy.into(),
                        r.rel_diff_momentum.into(),
                        r.wavelength_spacing_ratio.into(),
                    ]);
                }
            }
            t
        }
        TableKind::Oracle => {
            let box_args = BoxArgs {
                z: args.z.unwrap_or(0.1),
                stat: args.stat,
                cutoff: None,
                temperature: None,
                units: args.units,
                mass,
            };
            let mut t = Table::new(ORACLE_COLUMNS);
            for long in args.long.values() {
                match args.transverse {
                    Some(axis) => axis
                        .values()
                        .into_iter()
                        .for_each(|a| t.push(box_args.row(long, a))),
                    None => t.push(box_args.row(long, long)),
                }
            }
            t
        }
    };
    emit_table(&table, &args.output)?;
    Ok(0)
}

struct BoxArgs {
    z: f64,
    stat: Statistics,
    cutoff: Option<u32>,
    temperature: Option<f64>,
    units: UnitSystem,
    mass: f64,
}

impl BoxArgs {
    /// Defaults to the temperature with λ = 1 in reduced units, and 1 K in SI.
    fn temperature(&self) -> f64 {
        self.temperature.unwrap_or(match self.units {
            UnitSystem::Reduced => 2.0 * PI / self.mass,
            UnitSystem::Si => 1.0,
        })
    }

    fn lattice(
        &self,
        long: f64,
        transverse: f64,
    ) -> fermiwire::Result<(BoxLattice, Fugacity, f64)> {
        let params = GasParameters::new(self.mass, self.temperature(), 1.0, self.units)?;
        let (lambda, beta) = (params.thermal_wavelength(), params.beta());
        let z = Fugacity::new(self.z)?;
        let lattice = match self.cutoff {
            Some(c) => {
                BoxLattice::new(long * lambda, transverse * lambda, self.mass, c, self.units)?
            }
            None => BoxLattice::with_default_cutoff(
                long * lambda,
                transverse * lambda,
                self.mass,
                beta,
                z,
                self.units,
            )?,
        };
        Ok((lattice, z, beta))
    }

    fn row(&self, long: f64, transverse: f64) -> Vec<Cell> {
        let attempt = || -> fermiwire::Result<Vec<Cell>> {
            let (lattice, z, beta) = self.lattice(long, transverse)?;
            let r = compare_continuum(
                &lattice,
                self.stat,
                z,
                beta,
                WireConvention::TransverseGroundMode,
            )?;
            Ok(vec![
                long.into(),
                transverse.into(),
                self.stat.short_name().into(),
                self.z.into(),
                u64::from(lattice.cutoff()).into(),
                r.states.into(),
                r.n_discrete.into(),
                r.n_continuum_3d.into(),
                r.rel_err_3d.into(),
                r.n_quasi1d.into(),
                r.rel_err_quasi1d.into(),
                r.sigma_tilde.into(),
                r.sigma_tilde_fitted.into(),
                r.ground_transverse_fraction.into(),
                r.truncation_bound.into(),
                "".into(),
            ])
        };
        attempt().unwrap_or_else(|e| {
            let mut row = vec![
                long.into(),
                transverse.into(),
                self.stat.short_name().into(),
                self.z.into(),
            ];
            row.extend(std::iter::repeat_n(Cell::Empty, ORACLE_COLUMNS.len() - 5));
            row.push(e.to_string().into());
            row
        })
    }
}

pub fn oracle(args: &OracleArgs) -> Result<u8, CliError> {
    let box_args = BoxArgs {
        z: args.z,
        stat: args.stat,
        cutoff: args.cutoff,
        temperature: args.temperature,
        units: args.units,
        mass: args.mass.unwrap_or_else(|| args.units.default_mass()),
    };
    let (lattice, _, _) = box_args.lattice(args.long, args.transverse)?;
    let mut table = Table::new(ORACLE_COLUMNS);
    table.push(box_args.row(args.long, args.transverse));
    let message = table.rows()[0].last().cloned();
    if let Some(Cell::Text(m)) = message.filter(|m| *m != Cell::from("")) {
        return Err(CliError::Failed(m));
    }
    if let Some(path) = &args.levels {
        let spectrum = lattice.enumerate_levels()?;
        let mut text = String::from("nx,ny,nz,energy\n");
        for level in spectrum.levels() {
            let [x, y, z] = level.n;
            text.push_str(&format!("{x},{y},{z},{}\n", format_float(level.energy)));
        }
        std::fs::write(path, text)?;
    }
    emit_table(&table, &args.output)?;
    Ok(0)
}
