//! Root classification, analytic brackets and numerical solvers for the
//! transcendental family `a^x + a^(-x) = x`, written as
//! `f(x) = 2 cosh(x ln a) - x`.
//!
//! The equation has no root, a tangent (double) root, or two roots
//! depending on where `ln a` sits relative to `1 / (2 sinh q)`, where `q`
//! is the positive solution of `coth q = q` (the Laplace limit constant).
//!
//! ```
//! use coshroot::{solve_all, BaseParameter, SolverConfig};
//!
//! let base = BaseParameter::new(0.75).unwrap();
//! let report = solve_all(&base, &SolverConfig::default()).unwrap();
//! let roots: Vec<f64> = report.roots.iter().map(|r| r.x).collect();
//! assert!((roots[0] - 2.5737).abs() < 1e-3);
//! assert!((roots[1] - 6.3162).abs() < 1e-3);
//! ```

pub mod cli;
pub mod datasets;
pub mod math;
pub mod oracle;
pub mod solvers;

pub use math::{
    bounds_x1, bounds_x2_initial, bounds_x2_refined, classify, compute_q, critical_interval,
    f_derivative, f_value, x_star, BaseParameter, BracketSource, CriticalConstants, DomainError,
    RootBracket, SolutionClassification, SolutionTag,
};
pub use oracle::{min_scan, scan_roots, ScanResult};
pub use solvers::{
    bisect, lambert_w_principal, newton_refine, solve_all, solve_exp_fixed_point, SolveError,
    SolveReport, SolvedRoot, SolverConfig,
};
