//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A distribution or configuration parameter is outside its valid range.
    #[error("invalid parameter {name}: {reason} (got {value})")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// An operation argument violates its domain (support, probability range, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Tail is stretched-exponential; no Pareto exponent exists.
    #[error("tail is stretched-exponential, no Pareto exponent")]
    NoParetoTail,

    /// Requested moment order is at or beyond the divergence boundary.
    #[error("moment does not exist: order {order} >= tail exponent {tail_exponent}")]
    MomentDiverges { order: f64, tail_exponent: f64 },

    /// The distribution has no finite mean, so Lorenz/Gini are undefined.
    #[error("mean does not exist")]
    MeanDiverges,

    /// Sample data failed validation.
    #[error("invalid data: {0}")]
    InvalidData(String),

    /// Adaptive quadrature failed to reach the requested tolerance.
    #[error("quadrature did not converge (error estimate {error_estimate:e} after {evaluations} evaluations)")]
    QuadratureFailed {
        error_estimate: f64,
        evaluations: usize,
    },

    /// Too many bootstrap replicates failed to converge.
    #[error("bootstrap unstable: {failed} of {total} replicates did not converge")]
    BootstrapUnstable { failed: usize, total: usize },
}
