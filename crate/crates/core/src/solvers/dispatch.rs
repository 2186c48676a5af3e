use super::bracketed::newton_refine;
use super::{SolveError, SolverConfig};
use crate::math::base_eval::eval_f;
use crate::math::{
    bounds_x2_initial, bounds_x2_refined, classify, BaseParameter, CriticalConstants, RootBracket,
    SolutionClassification,
};

/// One located root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolvedRoot {
    pub x: f64,
    /// `|f(x)|`; `None` for the `a = 0` convention where `f` is undefined.
    pub residual: Option<f64>,
    /// Zero for roots taken from a closed form.
    pub iterations: usize,
    /// The bracket the root was solved on; `None` for closed-form roots.
    pub bracket: Option<RootBracket>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub classification: SolutionClassification,
    /// Ascending.
    pub roots: Vec<SolvedRoot>,
    pub constants_used: CriticalConstants,
}

fn closed_form(x: f64, residual: Option<f64>) -> SolvedRoot {
    SolvedRoot {
        x,
        residual,
        iterations: 0,
        bracket: None,
    }
}

fn solve_on(
    base: &BaseParameter,
    ln_a: f64,
    bracket: RootBracket,
    config: &SolverConfig,
) -> Result<SolvedRoot, SolveError> {
    let (x, iterations) = newton_refine(base, bracket.midpoint(), &bracket, config)?;
    Ok(SolvedRoot {
        x,
        residual: Some(eval_f(ln_a, x).abs()),
        iterations,
        bracket: Some(bracket),
    })
}

/// Classifies `base` and computes every real root.
///
/// In the two-root regime the smaller root is solved on `(2, 2 cosh q)` and
/// the larger on the bracket refined by `x1`. Where the refined lower end
/// fails to bracket (bases near 1), the `(x*, 2 x* - 2)` bracket is used
/// instead. Tangent bases return `2 cosh q` without iterating.
pub fn solve_all(base: &BaseParameter, config: &SolverConfig) -> Result<SolveReport, SolveError> {
    let constants = *CriticalConstants::get();
    let classification = classify(base, &constants, config.tangency_eps);

    let roots = match classification {
        SolutionClassification::NoRoot => Vec::new(),
        SolutionClassification::ZeroBase { root } => vec![closed_form(root, None)],
        SolutionClassification::UnitBase { root }
        | SolutionClassification::TangentRoot { root } => {
            let ln_a = base.positive_ln()?;
            vec![closed_form(root, Some(eval_f(ln_a, root).abs()))]
        }
        SolutionClassification::TwoRoots { x1, .. } => {
            let ln_a = base.positive_ln()?;
            let first = solve_on(base, ln_a, x1.widened(), config)?;

            // x1 rounds to exactly 2 once |ln a| drops below ~1e-8.
            let x2_bracket = match bounds_x2_refined(base, first.x) {
                Ok(refined) if eval_f(ln_a, refined.widened().lo()) < 0.0 => refined.widened(),
                _ => bounds_x2_initial(base)?.widened(),
            };
            let second = solve_on(base, ln_a, x2_bracket, config)?;
            vec![first, second]
        }
    };

    Ok(SolveReport {
        classification,
        roots,
        constants_used: constants,
    })
}
