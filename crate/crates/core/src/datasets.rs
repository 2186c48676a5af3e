//! Tabulated results and plot-ready samples: the reference table of roots
//! and bounds, `f(x)` curves, and the `(a, x1, x2)` solution-space sweep.

use crate::math::base_eval::eval_f;
use crate::math::{
    bounds_x1, bounds_x2_refined, x2_initial_limits, BaseParameter, CriticalConstants, DomainError,
    SolutionClassification, SolutionTag,
};
use crate::solvers::{solve_all, SolveError, SolveReport, SolverConfig};

/// Bases tabulated in the reference table.
pub const TABLE_BASES: [f64; 5] = [0.6, 0.75, 0.9, 1.08, 1.39];

/// Larger roots beyond this are reported as overflowed in sweeps.
pub const SWEEP_X2_LIMIT: f64 = 1e9;

/// One row of root and bracket data for a base.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootRow {
    pub a: f64,
    pub tag: SolutionTag,
    pub x1: Option<f64>,
    pub x2: Option<f64>,
    pub x1_bounds: Option<(f64, f64)>,
    /// `(x*, 2 x* - 2)`, only when it is a valid bracket.
    pub x2_initial: Option<(f64, f64)>,
    /// `(3/2 x* - x1/2, 2 x* - x1)`.
    pub x2_refined: Option<(f64, f64)>,
    /// `(x*, 2 x* - 2)` for a base without roots, where it comes out inverted.
    pub formal_bounds: Option<(f64, f64)>,
    pub residual_x1: Option<f64>,
    pub residual_x2: Option<f64>,
    pub conventional: bool,
}

impl RootRow {
    /// Assembles the row from a finished solve.
    pub fn from_report(base: &BaseParameter, report: &SolveReport) -> Self {
        let mut row = RootRow {
            a: base.a(),
            tag: report.classification.tag(),
            x1: None,
            x2: None,
            x1_bounds: None,
            x2_initial: None,
            x2_refined: None,
            formal_bounds: None,
            residual_x1: None,
            residual_x2: None,
            conventional: report.classification.is_conventional(),
        };
        match report.classification {
            SolutionClassification::TwoRoots { x1, x2 } => {
                let (first, second) = (report.roots[0], report.roots[1]);
                row.x1 = Some(first.x);
                row.x2 = Some(second.x);
                row.residual_x1 = first.residual;
                row.residual_x2 = second.residual;
                row.x1_bounds = Some((x1.lo(), x1.hi()));
                row.x2_initial = Some((x2.lo(), x2.hi()));
                row.x2_refined = bounds_x2_refined(base, first.x)
                    .ok()
                    .map(|r| (r.lo(), r.hi()));
            }
            SolutionClassification::NoRoot => {
                if let Ok(limits) = x2_initial_limits(base) {
                    row.formal_bounds = Some(limits);
                }
            }
            _ => {
                let root = report.roots[0];
                row.x1 = Some(root.x);
                row.residual_x1 = root.residual;
            }
        }
        row
    }
}

/// Solves every tabulated base.
pub fn reference_table(config: &SolverConfig) -> Result<Vec<RootRow>, SolveError> {
    TABLE_BASES
        .iter()
        .map(|&a| {
            let base = BaseParameter::new(a)?;
            let report = solve_all(&base, config)?;
            Ok(RootRow::from_report(&base, &report))
        })
        .collect()
}

/// Brackets for a base, with the refined `x2` bracket when `x1` is given.
pub fn bracket_row(
    base: &BaseParameter,
    x1: Option<f64>,
    config: &SolverConfig,
) -> Result<RootRow, DomainError> {
    let constants = CriticalConstants::get();
    let classification = crate::math::classify(base, constants, config.tangency_eps);
    let mut row = RootRow {
        a: base.a(),
        tag: classification.tag(),
        x1,
        x2: None,
        x1_bounds: None,
        x2_initial: None,
        x2_refined: None,
        formal_bounds: None,
        residual_x1: None,
        residual_x2: None,
        conventional: classification.is_conventional(),
    };
    if let SolutionClassification::TwoRoots { x2, .. } = classification {
        let b1 = bounds_x1(constants);
        row.x1_bounds = Some((b1.lo(), b1.hi()));
        row.x2_initial = Some((x2.lo(), x2.hi()));
        if let Some(x1) = x1 {
            let refined = bounds_x2_refined(base, x1)?;
            row.x2_refined = Some((refined.lo(), refined.hi()));
        }
    } else {
        row.x1 = None;
    }
    Ok(row)
}

/// Which function a curve samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveView {
    /// `f(x) = 2 cosh(x ln a) - x`.
    Residual,
    /// `2 coth(x ln a)`, to be read against the line `y = x`.
    Coth,
}

/// `steps` evenly spaced samples on `[x_lo, x_hi]`. Non-finite values
/// (the `coth` pole at `x = 0`, overflow) come back as `None`.
pub fn curve(
    base: &BaseParameter,
    x_lo: f64,
    x_hi: f64,
    steps: usize,
    view: CurveView,
) -> Result<Vec<(f64, Option<f64>)>, DomainError> {
    let ln_a = base.positive_ln()?;
    if steps < 2 || !x_lo.is_finite() || !x_hi.is_finite() || x_lo >= x_hi {
        return Err(DomainError::InvalidScan {
            lo: x_lo,
            hi: x_hi,
            grid_size: steps,
        });
    }
    let points = linspace(x_lo, x_hi, steps)
        .map(|x| {
            let y = match view {
                CurveView::Residual => eval_f(ln_a, x),
                CurveView::Coth => 2.0 / (x * ln_a).tanh(),
            };
            (x, y.is_finite().then_some(y))
        })
        .collect();
    Ok(points)
}

fn linspace(lo: f64, hi: f64, steps: usize) -> impl Iterator<Item = f64> {
    (0..steps).map(move |i| {
        if i + 1 == steps {
            hi
        } else {
            lo + (hi - lo) * (i as f64) / ((steps - 1) as f64)
        }
    })
}

/// One base of a solution-space sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub a: f64,
    pub tag: SolutionTag,
    pub x1: Option<f64>,
    pub x2: Option<f64>,
    /// The larger root exceeded [`SWEEP_X2_LIMIT`] and was dropped.
    pub x2_overflow: bool,
}

/// Classifies and solves `steps` evenly spaced bases on `[a_lo, a_hi]`.
///
/// A tangent base reports its double root as both `x1` and `x2`, so the two
/// branches of the solution curve meet.
pub fn sweep(
    a_lo: f64,
    a_hi: f64,
    steps: usize,
    config: &SolverConfig,
) -> Result<Vec<SweepRow>, SolveError> {
    if !(0.0 < a_lo && a_lo < a_hi && a_hi.is_finite()) || steps < 2 {
        return Err(DomainError::InvalidScan {
            lo: a_lo,
            hi: a_hi,
            grid_size: steps,
        }
        .into());
    }
    linspace(a_lo, a_hi, steps)
        .map(|a| {
            let base = BaseParameter::new(a)?;
            let report = solve_all(&base, config)?;
            let roots: Vec<f64> = report.roots.iter().map(|r| r.x).collect();
            let (x1, x2) = match report.classification.tag() {
                SolutionTag::TwoRoots => (Some(roots[0]), Some(roots[1])),
                SolutionTag::TangentRoot => (Some(roots[0]), Some(roots[0])),
                SolutionTag::NoRoot => (None, None),
                _ => (Some(roots[0]), None),
            };
            let x2_overflow = x2.is_some_and(|x| x > SWEEP_X2_LIMIT);
            Ok(SweepRow {
                a,
                tag: report.classification.tag(),
                x1,
                x2: x2.filter(|_| !x2_overflow),
                x2_overflow,
            })
        })
        .collect()
}
