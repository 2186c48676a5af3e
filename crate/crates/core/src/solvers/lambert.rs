use std::f64::consts::E;

use super::{SolveError, SolverConfig};
use crate::math::{BaseParameter, DomainError};

const BRANCH_POINT: f64 = -1.0 / E;

/// How far below `-1/e` an argument may sit and still be treated as the
/// branch point (covers rounding in `ln a` for `a = e^(1/e)`).
const BRANCH_POINT_SLACK: f64 = 1e-15;

fn initial_guess(z: f64) -> f64 {
    if z < -0.25 {
        // Expansion in p = sqrt(2 (e z + 1)) around the branch point.
        let p = (2.0 * (E * z + 1.0)).max(0.0).sqrt();
        -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
    } else if z.abs() <= 0.25 {
        z * (1.0 - z + 1.5 * z * z)
    } else if z <= E {
        z.ln_1p()
    } else {
        let l1 = z.ln();
        let l2 = l1.ln();
        l1 - l2 + l2 / l1
    }
}

/// Principal branch `W0(z)`, the solution `w >= -1` of `w e^w = z`.
///
/// Halley iteration from a region-dependent starting point.
pub fn lambert_w_principal(z: f64, config: &SolverConfig) -> Result<f64, SolveError> {
    if z.is_nan() || z < BRANCH_POINT - BRANCH_POINT_SLACK {
        return Err(DomainError::LambertDomain(z).into());
    }
    if z == f64::INFINITY {
        return Ok(f64::INFINITY);
    }
    if z <= BRANCH_POINT {
        return Ok(-1.0);
    }
    if z == 0.0 {
        return Ok(0.0);
    }

    let mut w = initial_guess(z);
    let mut best = (w, f64::INFINITY);
    for _ in 0..config.max_iter {
        let ew = w.exp();
        let r = w * ew - z;
        if r == 0.0 {
            return Ok(w);
        }
        if r.abs() >= best.1 {
            // Cycling between neighbouring doubles: the residual floor is reached.
            return Ok(best.0);
        }
        best = (w, r.abs());
        let wp1 = w + 1.0;
        let denom = ew * wp1 - (w + 2.0) * r / (2.0 * wp1);
        let step = r / denom;
        if !step.is_finite() {
            return Ok(w);
        }
        let next = (w - step).max(-1.0);
        if (next - w).abs() <= 4.0 * f64::EPSILON * (1.0 + next.abs()) {
            return Ok(next);
        }
        w = next;
    }
    Err(SolveError::MaxIterations {
        bracket: None,
        best: best.0,
        residual: best.1,
        iterations: config.max_iter,
    })
}

/// Solves `a^x = x` as `x = -W0(-ln a) / ln a`.
///
/// Defined for `0 < a <= e^(1/e)`, `a != 1`. Only the principal-branch root
/// is returned, which is the smaller one when two exist.
pub fn solve_exp_fixed_point(
    base: &BaseParameter,
    config: &SolverConfig,
) -> Result<f64, SolveError> {
    let ln_a = base.positive_ln()?;
    if ln_a == 0.0 {
        return Err(DomainError::UnitBase.into());
    }
    let z = -ln_a;
    if z < BRANCH_POINT - BRANCH_POINT_SLACK {
        return Err(DomainError::NoFixedPoint(base.a()).into());
    }
    let w = lambert_w_principal(z, config)?;
    Ok(-w / ln_a)
}
