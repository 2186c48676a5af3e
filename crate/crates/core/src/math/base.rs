use super::DomainError;

/// A validated base `a >= 0` with its natural logarithm cached.
///
/// `ln_a` is `None` exactly when `a = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaseParameter {
    a: f64,
    ln_a: Option<f64>,
}

impl BaseParameter {
    pub fn new(a: f64) -> Result<Self, DomainError> {
        if !a.is_finite() || a < 0.0 {
            return Err(DomainError::InvalidBase(a));
        }
        let ln_a = (a > 0.0).then(|| a.ln());
        Ok(Self { a, ln_a })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn ln_a(&self) -> Option<f64> {
        self.ln_a
    }

    pub fn is_zero(&self) -> bool {
        self.ln_a.is_none()
    }

    /// `ln a`, or [`DomainError::ZeroBase`] when `a = 0`.
    pub fn positive_ln(&self) -> Result<f64, DomainError> {
        self.ln_a.ok_or(DomainError::ZeroBase)
    }

    /// The base `1/a`, which shares every root with `a`.
    pub fn reciprocal(&self) -> Result<Self, DomainError> {
        let ln_a = self.positive_ln()?;
        Ok(Self {
            a: 1.0 / self.a,
            ln_a: Some(-ln_a),
        })
    }
}

/// `2 cosh(x ln a) - x` for a known, finite `ln a`.
///
/// `cosh` saturates to `+inf` once `|x ln a|` exceeds ~710, so the result is
/// `+inf` rather than NaN in that range.
#[inline]
pub(crate) fn eval_f(ln_a: f64, x: f64) -> f64 {
    2.0 * (x * ln_a).cosh() - x
}

#[inline]
pub(crate) fn eval_df(ln_a: f64, x: f64) -> f64 {
    2.0 * ln_a * (x * ln_a).sinh() - 1.0
}

pub(crate) fn eval_x_star(ln_a: f64) -> f64 {
    (0.5 / ln_a).asinh() / ln_a
}

/// `f(x) = a^x + a^(-x) - x = 2 cosh(x ln a) - x`.
pub fn f_value(base: &BaseParameter, x: f64) -> Result<f64, DomainError> {
    Ok(eval_f(base.positive_ln()?, x))
}

/// `f'(x) = 2 ln a sinh(x ln a) - 1`.
pub fn f_derivative(base: &BaseParameter, x: f64) -> Result<f64, DomainError> {
    Ok(eval_df(base.positive_ln()?, x))
}

/// The unique minimizer of `f`, `asinh(1 / (2 ln a)) / ln a`. Always positive.
pub fn x_star(base: &BaseParameter) -> Result<f64, DomainError> {
    let ln_a = base.positive_ln()?;
    if ln_a == 0.0 {
        return Err(DomainError::UnitBase);
    }
    Ok(eval_x_star(ln_a))
}
