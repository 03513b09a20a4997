//! Grid axes and the JSON scan configuration.

use crate::error::CliError;
use crate::table::Format;
use fermiwire::{Statistics, Thresholds, UnitSystem};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    #[default]
    Linear,
    Log,
}

/// `points` values from `min` to `max`, both included.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawAxis")]
pub struct AxisSpec {
    pub min: f64,
    pub max: f64,
    pub points: usize,
    pub spacing: Spacing,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawAxis {
    Text(String),
    Value(f64),
    #[serde(rename_all = "lowercase")]
    Full {
        min: f64,
        max: f64,
        points: usize,
        #[serde(default)]
        spacing: Spacing,
    },
}

impl TryFrom<RawAxis> for AxisSpec {
    type Error = String;

    fn try_from(raw: RawAxis) -> Result<Self, String> {
        match raw {
            RawAxis::Text(s) => s.parse(),
            RawAxis::Value(v) => AxisSpec::new(v, v, 1, Spacing::Linear),
            RawAxis::Full {
                min,
                max,
                points,
                spacing,
            } => AxisSpec::new(min, max, points, spacing),
        }
    }
}

impl AxisSpec {
    pub fn new(min: f64, max: f64, points: usize, spacing: Spacing) -> Result<Self, String> {
        if !(min.is_finite() && max.is_finite()) {
            return Err(format!("axis bounds must be finite, got {min}:{max}"));
        }
        if points == 0 {
            return Err("axis needs at least one point".into());
        }
        if min > max {
            return Err(format!("axis min {min} exceeds max {max}"));
        }
        if spacing == Spacing::Log && min <= 0.0 {
            return Err(format!("log axis needs min > 0, got {min}"));
        }
        Ok(Self {
            min,
            max,
            points,
            spacing,
        })
    }

    pub fn single(v: f64) -> Self {
        Self {
            min: v,
            max: v,
            points: 1,
            spacing: Spacing::Linear,
        }
    }

    pub fn values(&self) -> Vec<f64> {
        let n = self.points;
        if n == 1 {
            return vec![self.min];
        }
        (0..n)
            .map(|i| {
                if i == n - 1 {
                    return self.max;
                }
                let t = i as f64 / (n - 1) as f64;
                match self.spacing {
                    Spacing::Linear => self.min + (self.max - self.min) * t,
                    Spacing::Log => self.min * (self.max / self.min).powf(t),
                }
            })
            .collect()
    }
}

impl FromStr for AxisSpec {
    type Err = String;

    /// Accepts `value` or `min:max:points[:log|:linear]`.
    fn from_str(s: &str) -> Result<Self, String> {
        let num = |p: &str| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| format!("bad number `{p}` in axis `{s}`"))
        };
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [v] => {
                let v = num(v)?;
                AxisSpec::new(v, v, 1, Spacing::Linear)
            }
            [lo, hi, n, rest @ ..] if rest.len() <= 1 => {
                let points = n
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| format!("bad point count `{n}` in axis `{s}`"))?;
                let spacing = match rest.first().map(|r| r.trim()) {
                    None | Some("linear") | Some("lin") => Spacing::Linear,
                    Some("log") => Spacing::Log,
                    Some(other) => return Err(format!("unknown spacing `{other}` in axis `{s}`")),
                };
                AxisSpec::new(num(lo)?, num(hi)?, points, spacing)
            }
            _ => Err(format!(
                "axis `{s}` is not of the form min:max:points[:log]"
            )),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    pub path: Option<PathBuf>,
    pub format: Option<Format>,
}

/// Mirror of the `scan` flags; flags given on the command line win.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanConfig {
    pub temperature: Option<AxisSpec>,
    /// `λ³/ν`, an alternative to `temperature`.
    pub degeneracy: Option<AxisSpec>,
    pub specific_volume: Option<AxisSpec>,
    pub sigma_tilde: Option<AxisSpec>,
    /// Fixes `z` instead of solving for it.
    pub fugacity: Option<AxisSpec>,
    pub statistics: Option<Statistics>,
    pub thresholds: Option<Thresholds>,
    pub unit_system: Option<UnitSystem>,
    pub mass: Option<f64>,
    pub output: Option<OutputSpec>,
}

impl ScanConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }
}
