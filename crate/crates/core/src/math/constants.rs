use std::sync::OnceLock;

use super::DomainError;

/// The constants that separate the three root regimes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalConstants {
    /// Positive root of `coth q = q`.
    pub q: f64,
    pub sinh_q: f64,
    /// `exp(-1 / (2 sinh q))`, the smallest base with a real root.
    pub a_min: f64,
    /// `exp(1 / (2 sinh q))`, the largest base with a real root.
    pub a_max: f64,
    /// `2 cosh q`, the double root at `a_min` and `a_max`.
    pub x_dagger: f64,
}

impl CriticalConstants {
    /// Computes the constants at full double precision.
    pub fn compute() -> Self {
        let q = compute_q(f64::EPSILON).expect("machine epsilon is a valid tolerance");
        let sinh_q = q.sinh();
        let exponent = 0.5 / sinh_q;
        Self {
            q,
            sinh_q,
            a_min: (-exponent).exp(),
            a_max: exponent.exp(),
            x_dagger: 2.0 * q.cosh(),
        }
    }

    /// Process-wide instance, computed on first use.
    pub fn get() -> &'static Self {
        static CONSTANTS: OnceLock<CriticalConstants> = OnceLock::new();
        CONSTANTS.get_or_init(Self::compute)
    }

    /// `1 / (2 sinh q)`: the value of `|ln a|` at tangency.
    pub fn critical_log(&self) -> f64 {
        0.5 / self.sinh_q
    }
}

fn coth_minus_identity(q: f64) -> f64 {
    q.tanh().recip() - q
}

/// Solves `coth q = q` for its positive root.
///
/// Bisection on `[1, 2]` (where `coth(1) > 1` and `coth(2) < 2`) followed by
/// Newton polishing. Tolerances below a few ulps of `|coth q - q|` are clamped
/// to what double precision can represent.
pub fn compute_q(tolerance: f64) -> Result<f64, DomainError> {
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(DomainError::InvalidTolerance(tolerance));
    }
    let target = tolerance.max(4.0 * f64::EPSILON);

    let (mut lo, mut hi) = (1.0_f64, 2.0_f64);
    // g is decreasing on [1, 2]: g(lo) > 0 > g(hi).
    for _ in 0..30 {
        let mid = 0.5 * (lo + hi);
        let g = coth_minus_identity(mid);
        if g == 0.0 {
            return Ok(mid);
        }
        if g > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    let mut q = 0.5 * (lo + hi);
    for _ in 0..50 {
        let g = coth_minus_identity(q);
        let s = q.sinh();
        let dg = -1.0 / (s * s) - 1.0;
        let step = g / dg;
        let next = q - step;
        if !(lo..=hi).contains(&next) {
            break;
        }
        q = next;
        if step.abs() <= f64::EPSILON * q && coth_minus_identity(q).abs() <= target {
            break;
        }
    }

    let residual = coth_minus_identity(q).abs();
    assert!(
        residual <= target,
        "internal defect: coth q - q = {residual:e} after polishing (q = {q})"
    );
    Ok(q)
}

/// `(a_min, a_max)`, the closed base interval with at least one root.
pub fn critical_interval(constants: &CriticalConstants) -> (f64, f64) {
    (constants.a_min, constants.a_max)
}
