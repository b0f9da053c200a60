//! Two-stage CDF-based beta regression.
//!
//! The estimator transforms a continuous response through a smoothed
//! empirical CDF, fits a mean–precision beta regression to the transformed
//! values, and maps fitted percentiles back to the original scale through a
//! Harrell–Davis quantile function. Around that pipeline the crate provides
//! nonparametric bootstrap inference, classical least-squares baselines with
//! heteroscedasticity diagnostics, distributional accuracy metrics, and a
//! seeded Monte Carlo study harness.

pub mod baselines;
pub mod betareg;
pub mod bootstrap;
pub mod empdist;
pub mod error;
mod linalg;
pub mod metrics;
pub mod model;
pub mod rng;
pub mod sim;
pub mod special;

pub use error::{Error, Result};
