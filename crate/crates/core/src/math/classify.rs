use std::fmt;

use super::bounds::{bounds_x1, bounds_x2_initial};
use super::{BaseParameter, CriticalConstants, RootBracket};

/// `|ln a|` at or below this is treated as `a = 1`; beyond it `x*` would
/// exceed ~1e12.
pub const UNIT_BASE_LOG_TOL: f64 = 1e-12;

/// Default relative tolerance on `|ln a| * 2 sinh q - 1` for tangency.
///
/// Wide enough that the 8-decimal values 0.71793825 and 1.39287744 count as
/// tangent (their relative offsets are 2.0e-8 and 4.6e-9).
pub const DEFAULT_TANGENCY_EPS: f64 = 5e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolutionTag {
    ZeroBase,
    UnitBase,
    NoRoot,
    TangentRoot,
    TwoRoots,
}

impl SolutionTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::ZeroBase => "ZeroBase",
            Self::UnitBase => "UnitBase",
            Self::NoRoot => "NoRoot",
            Self::TangentRoot => "TangentRoot",
            Self::TwoRoots => "TwoRoots",
        }
    }
}

impl fmt::Display for SolutionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How many real roots `a^x + a^(-x) = x` has, with the root or brackets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SolutionClassification {
    /// `a = 0`. The root `x = 0` is a convention: `f` itself is undefined
    /// there, and with `0^0 = 1` the left side would be 2.
    ZeroBase {
        root: f64,
    },
    /// `a = 1`: `f(x) = 2 - x`.
    UnitBase {
        root: f64,
    },
    NoRoot,
    /// `a = a_min` or `a = a_max`: a double root at `2 cosh q`.
    TangentRoot {
        root: f64,
    },
    TwoRoots {
        x1: RootBracket,
        x2: RootBracket,
    },
}

impl SolutionClassification {
    pub fn tag(&self) -> SolutionTag {
        match self {
            Self::ZeroBase { .. } => SolutionTag::ZeroBase,
            Self::UnitBase { .. } => SolutionTag::UnitBase,
            Self::NoRoot => SolutionTag::NoRoot,
            Self::TangentRoot { .. } => SolutionTag::TangentRoot,
            Self::TwoRoots { .. } => SolutionTag::TwoRoots,
        }
    }

    /// Number of distinct real roots.
    pub fn root_count(&self) -> usize {
        match self {
            Self::NoRoot => 0,
            Self::TwoRoots { .. } => 2,
            _ => 1,
        }
    }

    /// True when the reported root rests on convention rather than on `f = 0`.
    pub fn is_conventional(&self) -> bool {
        matches!(self, Self::ZeroBase { .. })
    }
}

/// Decides the root regime of `base`.
///
/// Comparison happens in exponent space, `|ln a| * 2 sinh q` against 1,
/// because a residual test at a double root is ill-conditioned.
pub fn classify(
    base: &BaseParameter,
    constants: &CriticalConstants,
    tangency_eps: f64,
) -> SolutionClassification {
    let Some(ln_a) = base.ln_a() else {
        return SolutionClassification::ZeroBase { root: 0.0 };
    };
    if ln_a.abs() <= UNIT_BASE_LOG_TOL {
        return SolutionClassification::UnitBase { root: 2.0 };
    }
    let offset = ln_a.abs() / constants.critical_log() - 1.0;
    if offset.abs() <= tangency_eps {
        SolutionClassification::TangentRoot {
            root: constants.x_dagger,
        }
    } else if offset > 0.0 {
        SolutionClassification::NoRoot
    } else {
        let x2 = bounds_x2_initial(base).expect("x* > 2 throughout the two-root regime");
        SolutionClassification::TwoRoots {
            x1: bounds_x1(constants),
            x2,
        }
    }
}
