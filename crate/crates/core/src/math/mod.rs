//! The function family, its critical constants, classification of the root
//! count and the analytic root brackets.

mod base;
mod bounds;
mod classify;
mod constants;

pub use base::{f_derivative, f_value, x_star, BaseParameter};
pub use bounds::{
    bounds_x1, bounds_x2_initial, bounds_x2_refined, x2_initial_limits, BracketSource, RootBracket,
};
pub use classify::{
    classify, SolutionClassification, SolutionTag, DEFAULT_TANGENCY_EPS, UNIT_BASE_LOG_TOL,
};
pub use constants::{compute_q, critical_interval, CriticalConstants};

/// Evaluators on a bare `ln a`, for solvers that have already validated the base.
pub(crate) mod base_eval {
    pub(crate) use super::base::{eval_df, eval_f};
}

use thiserror::Error;

/// Inputs outside the domain of an operation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DomainError {
    #[error("base must be a finite number >= 0, got {0}")]
    InvalidBase(f64),
    #[error("f is undefined for a = 0")]
    ZeroBase,
    #[error("a = 1 has no finite minimizer (f is affine)")]
    UnitBase,
    #[error("x1 = {x1} lies outside ({lo}, {hi})")]
    X1OutOfRange { x1: f64, lo: f64, hi: f64 },
    #[error("bracket ({lo}, {hi}) is empty or inverted")]
    InvertedBracket { lo: f64, hi: f64 },
    #[error("tolerance must be finite and > 0, got {0}")]
    InvalidTolerance(f64),
    #[error("Lambert W principal branch is undefined for z = {0} < -1/e")]
    LambertDomain(f64),
    #[error("a^x = x has no real solution on the principal branch for a = {0}")]
    NoFixedPoint(f64),
    #[error("invalid scan: range ({lo}, {hi}) with {grid_size} points")]
    InvalidScan { lo: f64, hi: f64, grid_size: usize },
}
