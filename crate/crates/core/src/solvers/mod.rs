//! Bracketed root solvers, the regime dispatcher, and the Lambert W baseline
//! for `a^x = x`.

mod bracketed;
mod dispatch;
mod lambert;

pub use bracketed::{bisect, newton_refine};
pub use dispatch::{solve_all, SolveReport, SolvedRoot};
pub use lambert::{lambert_w_principal, solve_exp_fixed_point};

use thiserror::Error;

use crate::math::{DomainError, RootBracket, DEFAULT_TANGENCY_EPS};

/// Stopping rules shared by every solver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Residual target `|f(x)|`.
    pub abs_tol: f64,
    /// Bracket-width target, relative to `max(1, |x|)`.
    pub x_tol: f64,
    pub max_iter: usize,
    /// Relative exponent-space tolerance used by classification.
    pub tangency_eps: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            x_tol: 1e-12,
            max_iter: 200,
            tangency_eps: DEFAULT_TANGENCY_EPS,
        }
    }
}

impl SolverConfig {
    /// Default config with a custom residual target.
    pub fn with_abs_tol(abs_tol: f64) -> Result<Self, DomainError> {
        Self {
            abs_tol,
            ..Self::default()
        }
        .validated()
    }

    pub fn validated(self) -> Result<Self, DomainError> {
        for tol in [self.abs_tol, self.x_tol, self.tangency_eps] {
            if !(tol.is_finite() && tol > 0.0) {
                return Err(DomainError::InvalidTolerance(tol));
            }
        }
        if self.max_iter == 0 {
            return Err(DomainError::InvalidTolerance(0.0));
        }
        Ok(self)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error("no sign change on [{}, {}]: f = {f_lo:e}, {f_hi:e}", bracket.lo(), bracket.hi())]
    NoSignChange {
        bracket: RootBracket,
        f_lo: f64,
        f_hi: f64,
    },
    #[error(
        "no sign change on [{}, {}], but min f = {f_min:e} at x = {x}: tangent root suspected",
        bracket.lo(), bracket.hi()
    )]
    TangentSuspected {
        bracket: RootBracket,
        x: f64,
        f_min: f64,
    },
    #[error(
        "no convergence after {iterations} iterations: best x = {best}, residual {residual:e}"
    )]
    MaxIterations {
        bracket: Option<RootBracket>,
        best: f64,
        residual: f64,
        iterations: usize,
    },
}

impl SolveError {
    /// The bracket the failing solve was working on, when there was one.
    pub fn bracket(&self) -> Option<&RootBracket> {
        match self {
            Self::Domain(_) => None,
            Self::NoSignChange { bracket, .. } | Self::TangentSuspected { bracket, .. } => {
                Some(bracket)
            }
            Self::MaxIterations { bracket, .. } => bracket.as_ref(),
        }
    }
}
