use super::{SolveError, SolverConfig};
use crate::math::base_eval::{eval_df, eval_f};
use crate::math::{BaseParameter, RootBracket};

/// Below this `|f'|` a Newton step is replaced by bisection.
const MIN_DERIVATIVE: f64 = 1e-300;

fn width_target(config: &SolverConfig, x: f64) -> f64 {
    config.x_tol * x.abs().max(1.0)
}

/// Classifies a bracket without a sign change. `f` is convex, so a ternary
/// search finds its minimum on the bracket; a minimum within
/// `sqrt(abs_tol)` of zero points to a double root.
fn missing_sign_change(
    ln_a: f64,
    bracket: &RootBracket,
    f_lo: f64,
    f_hi: f64,
    config: &SolverConfig,
) -> SolveError {
    let (mut lo, mut hi) = (bracket.lo(), bracket.hi());
    for _ in 0..200 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if eval_f(ln_a, m1) < eval_f(ln_a, m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    let x = 0.5 * (lo + hi);
    let f_min = eval_f(ln_a, x);
    if f_min.abs() <= config.abs_tol.sqrt() {
        SolveError::TangentSuspected {
            bracket: *bracket,
            x,
            f_min,
        }
    } else {
        SolveError::NoSignChange {
            bracket: *bracket,
            f_lo,
            f_hi,
        }
    }
}

/// One extra Newton step once the residual target is met, kept only if it
/// lowers `|f|`.
fn polish(ln_a: f64, x: f64, fx: f64) -> f64 {
    let candidate = x - fx / eval_df(ln_a, x);
    if candidate.is_finite() && eval_f(ln_a, candidate).abs() < fx.abs() {
        candidate
    } else {
        x
    }
}

/// Plain bisection. Returns `(x, iterations)` once the bracket is narrower
/// than `x_tol * max(1, |x|)`.
pub fn bisect(
    base: &BaseParameter,
    bracket: &RootBracket,
    config: &SolverConfig,
) -> Result<(f64, usize), SolveError> {
    let ln_a = base.positive_ln()?;
    let (mut lo, mut hi) = (bracket.lo(), bracket.hi());
    let (f_lo, f_hi) = (eval_f(ln_a, lo), eval_f(ln_a, hi));
    if f_lo == 0.0 {
        return Ok((lo, 0));
    }
    if f_hi == 0.0 {
        return Ok((hi, 0));
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(missing_sign_change(ln_a, bracket, f_lo, f_hi, config));
    }
    let lo_negative = f_lo < 0.0;

    for iteration in 1..=config.max_iter {
        let mid = 0.5 * (lo + hi);
        let f_mid = eval_f(ln_a, mid);
        if f_mid == 0.0 || mid <= lo || mid >= hi {
            return Ok((mid, iteration));
        }
        if (f_mid < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= width_target(config, mid) {
            return Ok((0.5 * (lo + hi), iteration));
        }
    }
    let best = 0.5 * (lo + hi);
    Err(SolveError::MaxIterations {
        bracket: Some(*bracket),
        best,
        residual: eval_f(ln_a, best).abs(),
        iterations: config.max_iter,
    })
}

/// Safeguarded Newton iteration inside a maintained sign-change bracket.
///
/// A step that leaves the bracket, or a derivative below `1e-300`, is
/// replaced by a bisection step. Converges when `|f| <= abs_tol`, or when the
/// bracket has shrunk to adjacent doubles (the residual is then at the
/// floating-point floor for this `x`).
pub fn newton_refine(
    base: &BaseParameter,
    seed: f64,
    bracket: &RootBracket,
    config: &SolverConfig,
) -> Result<(f64, usize), SolveError> {
    let ln_a = base.positive_ln()?;
    let (mut lo, mut hi) = (bracket.lo(), bracket.hi());
    let (f_lo, f_hi) = (eval_f(ln_a, lo), eval_f(ln_a, hi));
    if f_lo == 0.0 {
        return Ok((lo, 0));
    }
    if f_hi == 0.0 {
        return Ok((hi, 0));
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(missing_sign_change(ln_a, bracket, f_lo, f_hi, config));
    }
    let lo_negative = f_lo < 0.0;

    let mut x = if bracket.contains(seed) {
        seed
    } else {
        bracket.midpoint()
    };
    let mut best = (x, f64::INFINITY);

    for iteration in 1..=config.max_iter {
        let fx = eval_f(ln_a, x);
        if fx.abs() < best.1 {
            best = (x, fx.abs());
        }
        if fx.abs() <= config.abs_tol {
            return Ok((polish(ln_a, x, fx), iteration));
        }
        if (fx < 0.0) == lo_negative {
            lo = x;
        } else {
            hi = x;
        }

        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            // Bracket is down to adjacent doubles.
            return Ok((best.0, iteration));
        }
        let dfx = eval_df(ln_a, x);
        let newton = x - fx / dfx;
        let next = if dfx.abs() >= MIN_DERIVATIVE && lo < newton && newton < hi {
            newton
        } else {
            mid
        };
        if next == x {
            return Ok((best.0, iteration));
        }
        x = next;
    }
    Err(SolveError::MaxIterations {
        bracket: Some(*bracket),
        best: best.0,
        residual: best.1,
        iterations: config.max_iter,
    })
}
