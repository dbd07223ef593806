//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("tolerance must be positive, got {0}")]
    NonPositiveTolerance(f64),
    #[error("expected a finite value, got {0}")]
    NonFinite(f64),
    #[error("gamma shape must be finite and nonnegative, got {0}")]
    InvalidGammaShape(f64),
    #[error("matrix size must be at least 1")]
    EmptyMatrix,
    #[error("interval bounds out of order: {0} > {1}")]
    IntervalOutOfOrder(f64, f64),
    #[error("invalid ensemble parameters: {0}")]
    InvalidParams(String),
    #[error("moment order must be even, got {0}")]
    OddMomentOrder(usize),
    #[error("moment order {0} exceeds the supported maximum {1}")]
    MomentOrderTooLarge(usize, usize),
    #[error("alpha must be positive and finite, got {0}")]
    InvalidAlpha(f64),
    #[error("beta must be nonnegative and finite, got {0}")]
    InvalidBeta(f64),
    #[error("k={0} out of range for n={1}")]
    RatioOutOfRange(usize, usize),
    #[error("point must lie in the open upper half-plane, got imaginary part {0}")]
    NotUpperHalfPlane(f64),
    #[error("energy must lie in the open bulk (-2, 2), got {0}")]
    EnergyOutsideBulk(f64),
    #[error("quadrature did not converge: requested {requested:.3e}, achieved {achieved:.3e}")]
    QuadratureNoConvergence { requested: f64, achieved: f64 },
    #[error("window half-width must be positive, got {0}")]
    NonPositiveWindow(f64),
    #[error("subwindow [{0}, {1}] not contained in the process window")]
    SubwindowOutsideWindow(f64, f64),
    #[error("bulk trim must lie in [0, 0.5), got {0}")]
    InvalidBulkTrim(f64),
    #[error("need at least {needed} values, got {got}")]
    NotEnoughData { needed: usize, got: usize },
    #[error("empty input")]
    EmptyInput,
    #[error("replica parameter mismatch: {0}")]
    MixedParams(String),
    #[error("correlation order {0} not supported (max {1})")]
    CorrelationOrderTooLarge(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
