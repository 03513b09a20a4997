use thiserror::Error;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {what} (got {value})")]
    Domain { what: &'static str, value: f64 },

    #[error("Bose occupation is singular: z^-1 e^(beta eps) - 1 = {denominator}")]
    Singularity { denominator: f64 },

    #[error("Bose condensation: degeneracy {degeneracy} exceeds zeta(3/2) = {critical}")]
    Condensation { degeneracy: f64, critical: f64 },

    #[error("Bose occupation of the ground level diverges at z = {fugacity} (need z < 1)")]
    Condensate { fugacity: f64 },

    #[error(
        "fugacity solver did not converge after {iterations} iterations \
         (ln z bracket [{lo}, {hi}], residual {residual:e})"
    )]
    Convergence {
        iterations: usize,
        lo: f64,
        hi: f64,
        residual: f64,
    },

    #[error("quadrature did not converge: value {value}, error estimate {estimate:e} after {intervals} subintervals")]
    Quadrature {
        value: f64,
        estimate: f64,
        intervals: usize,
    },

    #[error("resource limit: {requested} levels requested, at most {limit} allowed")]
    Resource { requested: u64, limit: u64 },

    #[error("truncation bound {bound:e} exceeds tolerance {tolerance:e}")]
    Truncation { bound: f64, tolerance: f64 },

    #[error("invalid thresholds: {0}")]
    Thresholds(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Returns `value` if it is finite and strictly positive.
pub(crate) fn positive(what: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::Domain { what, value })
    }
}
