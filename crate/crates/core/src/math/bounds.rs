use super::base::eval_x_star;
use super::{BaseParameter, CriticalConstants, DomainError};

/// Which argument produced a bracket.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BracketSource {
    /// `(2, 2 cosh q)` for `x1`: lower end from `f(x) >= 2 - x`, upper end
    /// from the tangent root.
    Lemma1LowerTangentUpper,
    /// `(x*, 2 x* - 2)` for `x2`.
    XStarBased,
    /// `(3/2 x* - x1/2, 2 x* - x1)` for `x2` once `x1` is known.
    RefinedGivenX1,
    /// A sign-change cell found by the grid scan.
    OracleScan,
}

impl BracketSource {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Lemma1LowerTangentUpper => "Lemma1LowerTangentUpper",
            Self::XStarBased => "XStarBased",
            Self::RefinedGivenX1 => "RefinedGivenX1",
            Self::OracleScan => "OracleScan",
        }
    }
}

/// Interval expected to hold exactly one root. Always `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootBracket {
    lo: f64,
    hi: f64,
    source: BracketSource,
}

impl RootBracket {
    pub fn new(lo: f64, hi: f64, source: BracketSource) -> Result<Self, DomainError> {
        if !lo.is_finite() || !hi.is_finite() || lo >= hi {
            return Err(DomainError::InvertedBracket { lo, hi });
        }
        Ok(Self { lo, hi, source })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn source(&self) -> BracketSource {
        self.source
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    /// Open-interval membership.
    pub fn contains(&self, x: f64) -> bool {
        self.lo < x && x < self.hi
    }

    pub fn contains_bracket(&self, other: &RootBracket) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Moves each end outward by `1e-12 * max(1, |end|)`, so that a root
    /// sitting on an open end still produces a sign change.
    pub fn widened(&self) -> Self {
        let margin = |v: f64| 1e-12 * v.abs().max(1.0);
        Self {
            lo: self.lo - margin(self.lo),
            hi: self.hi + margin(self.hi),
            source: self.source,
        }
    }
}

/// `(2, 2 cosh q)`; holds the smaller root for every base in the two-root regime.
pub fn bounds_x1(constants: &CriticalConstants) -> RootBracket {
    RootBracket {
        lo: 2.0,
        hi: constants.x_dagger,
        source: BracketSource::Lemma1LowerTangentUpper,
    }
}

/// The raw pair `(x*, 2 x* - 2)`, without checking its orientation.
///
/// Outside the two-root regime `x* < 2` and the pair comes out inverted,
/// which is how the no-root case shows up in tabulated bounds.
pub fn x2_initial_limits(base: &BaseParameter) -> Result<(f64, f64), DomainError> {
    let ln_a = base.positive_ln()?;
    if ln_a == 0.0 {
        return Err(DomainError::UnitBase);
    }
    let xs = eval_x_star(ln_a);
    Ok((xs, 2.0 * xs - 2.0))
}

/// Bracket `(x*, 2 x* - 2)` for the larger root.
pub fn bounds_x2_initial(base: &BaseParameter) -> Result<RootBracket, DomainError> {
    let (lo, hi) = x2_initial_limits(base)?;
    RootBracket::new(lo, hi, BracketSource::XStarBased)
}

/// Bracket `(3/2 x* - x1/2, 2 x* - x1)` for the larger root given the smaller one.
///
/// The upper end always holds. The lower end is only guaranteed away from
/// `a = 1`: for bases roughly within `(0.96, 1.045)` the true `x2` falls
/// below it, and callers must check the sign change before relying on it.
pub fn bounds_x2_refined(base: &BaseParameter, x1: f64) -> Result<RootBracket, DomainError> {
    let ln_a = base.positive_ln()?;
    if ln_a == 0.0 {
        return Err(DomainError::UnitBase);
    }
    let xs = eval_x_star(ln_a);
    if !(2.0 < x1 && x1 < xs) {
        return Err(DomainError::X1OutOfRange {
            x1,
            lo: 2.0,
            hi: xs,
        });
    }
    RootBracket::new(
        1.5 * xs - 0.5 * x1,
        2.0 * xs - x1,
        BracketSource::RefinedGivenX1,
    )
}
