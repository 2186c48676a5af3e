//! Brute-force grid scan used to check classification and brackets.
//!
//! Evaluates `a^x + a^(-x) - x` directly through `powf`, and bisects every
//! sign change with its own loop. Nothing here touches the analytic bounds or
//! the regime classification.

use crate::math::{BaseParameter, DomainError};
use crate::solvers::SolverConfig;

#[derive(Debug, Clone, PartialEq)]
pub struct ScanResult {
    /// Grid cells `(lo, hi)` with `f(lo) * f(hi) < 0`.
    pub sign_change_intervals: Vec<(f64, f64)>,
    /// One bisected root per interval, ascending.
    pub refined_roots: Vec<f64>,
    pub grid_size: usize,
    pub scan_range: (f64, f64),
}

fn direct_f(a: f64, x: f64) -> f64 {
    a.powf(x) + a.powf(-x) - x
}

fn grid_point(lo: f64, hi: f64, grid_size: usize, i: usize) -> f64 {
    if i + 1 == grid_size {
        hi
    } else {
        lo + (hi - lo) * (i as f64) / ((grid_size - 1) as f64)
    }
}

fn check_scan(
    base: &BaseParameter,
    lo: f64,
    hi: f64,
    grid_size: usize,
) -> Result<f64, DomainError> {
    if base.is_zero() {
        return Err(DomainError::ZeroBase);
    }
    if !lo.is_finite() || !hi.is_finite() || lo >= hi || grid_size < 2 {
        return Err(DomainError::InvalidScan { lo, hi, grid_size });
    }
    Ok(base.a())
}

fn bisect_cell(a: f64, mut lo: f64, mut hi: f64, config: &SolverConfig) -> f64 {
    let lo_negative = direct_f(a, lo) < 0.0;
    for _ in 0..config.max_iter.max(200) {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = direct_f(a, mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= config.x_tol * mid.abs().max(1.0) {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Samples `f` at `grid_size` evenly spaced points on `[x_lo, x_hi]` and
/// bisects every sign change. Exact zeros on the grid are stepped over, so
/// a simple root landing on a grid point still shows up as one interval.
///
/// Double roots produce no sign change and are invisible here; use
/// [`min_scan`] for those.
pub fn scan_roots(
    base: &BaseParameter,
    x_lo: f64,
    x_hi: f64,
    grid_size: usize,
    config: &SolverConfig,
) -> Result<ScanResult, DomainError> {
    let a = check_scan(base, x_lo, x_hi, grid_size)?;
    let mut intervals = Vec::new();
    let mut last_nonzero: Option<(f64, f64)> = None;
    for i in 0..grid_size {
        let x = grid_point(x_lo, x_hi, grid_size, i);
        let fx = direct_f(a, x);
        if fx == 0.0 || fx.is_nan() {
            continue;
        }
        if let Some((px, pf)) = last_nonzero {
            if (pf < 0.0) != (fx < 0.0) {
                intervals.push((px, x));
            }
        }
        last_nonzero = Some((x, fx));
    }
    let refined_roots = intervals
        .iter()
        .map(|&(lo, hi)| bisect_cell(a, lo, hi, config))
        .collect();
    Ok(ScanResult {
        sign_change_intervals: intervals,
        refined_roots,
        grid_size,
        scan_range: (x_lo, x_hi),
    })
}

/// Grid point with the smallest `f`, as `(x_at_min, f_min)`.
pub fn min_scan(
    base: &BaseParameter,
    x_lo: f64,
    x_hi: f64,
    grid_size: usize,
) -> Result<(f64, f64), DomainError> {
    let a = check_scan(base, x_lo, x_hi, grid_size)?;
    let mut best = (x_lo, f64::INFINITY);
    for i in 0..grid_size {
        let x = grid_point(x_lo, x_hi, grid_size, i);
        let fx = direct_f(a, x);
        if fx < best.1 {
            best = (x, fx);
        }
    }
    Ok(best)
}
