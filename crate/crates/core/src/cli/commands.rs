use super::render::{render, Cell, Precision, Record};
use super::{Args, CliError, Command};
use crate::datasets::{self, CurveView, RootRow};
use crate::math::{x_star, BaseParameter, CriticalConstants, SolutionTag};
use crate::oracle::{min_scan, scan_roots};
use crate::solvers::{solve_all, SolveReport, SolverConfig};

/// Grid used by `solve --verify`.
const VERIFY_GRID: usize = 1_000_000;
/// Root agreement required between the solver and the scan.
const VERIFY_TOL: f64 = 1e-6;

pub(crate) fn execute(args: &Args) -> Result<String, CliError> {
    let config = solver_config(args)?;
    let precision = if args.full_precision {
        Precision::RoundTrip
    } else {
        Precision::Significant(6)
    };
    let records = match args.command {
        Command::Constants => {
            let precision = if args.full_precision {
                Precision::RoundTrip
            } else {
                Precision::Significant(15)
            };
            return Ok(render(&[constants_record()], args.format(), precision));
        }
        Command::Classify => vec![classify_record(&base_arg(args)?, &config)?],
        Command::Solve => vec![solve_record(&base_arg(args)?, &config, args.verify)?],
        Command::Bounds => {
            let row = datasets::bracket_row(&base_arg(args)?, args.x1, &config)?;
            vec![bounds_record(&row)]
        }
        Command::Table => datasets::reference_table(&config)?
            .iter()
            .map(table_record)
            .collect(),
        Command::Curve => curve_records(args)?,
        Command::Sweep => {
            let (lo, hi) = (require(args.a_lo, "--a-lo")?, require(args.a_hi, "--a-hi")?);
            let steps = steps_arg(args)?;
            if !(0.0 < lo && lo < hi) {
                return Err(CliError::Usage(format!(
                    "sweep needs 0 < a-lo < a-hi, got {lo}, {hi}"
                )));
            }
            datasets::sweep(lo, hi, steps, &config)?
                .iter()
                .map(|row| {
                    Record::new()
                        .with("a", row.a)
                        .with("classification", row.tag.as_str())
                        .with("x1", row.x1)
                        .with("x2", row.x2)
                        .with("x2_overflow", row.x2_overflow)
                })
                .collect()
        }
    };
    Ok(render(&records, args.format(), precision))
}

fn require<T>(value: Option<T>, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("missing required flag {flag}")))
}

fn base_arg(args: &Args) -> Result<BaseParameter, CliError> {
    let a = require(args.a, "--a")?;
    BaseParameter::new(a)
        .map_err(|_| CliError::Usage(format!("--a must be a finite number >= 0, got {a}")))
}

fn steps_arg(args: &Args) -> Result<usize, CliError> {
    match args.steps {
        Some(n) if n >= 2 => Ok(n),
        Some(n) => Err(CliError::Usage(format!("--steps must be >= 2, got {n}"))),
        None => Ok(101),
    }
}

fn solver_config(args: &Args) -> Result<SolverConfig, CliError> {
    match args.tol {
        None => Ok(SolverConfig::default()),
        Some(tol) => SolverConfig::with_abs_tol(tol)
            .map_err(|_| CliError::Usage(format!("--tol must be finite and > 0, got {tol}"))),
    }
}

fn constants_record() -> Record {
    let c = CriticalConstants::get();
    Record::new()
        .with("q", c.q)
        .with("sinh_q", c.sinh_q)
        .with("a_min", c.a_min)
        .with("a_max", c.a_max)
        .with("x_dagger", c.x_dagger)
}

fn pair(record: Record, lo: &'static str, hi: &'static str, value: Option<(f64, f64)>) -> Record {
    record
        .with(lo, value.map(|v| v.0))
        .with(hi, value.map(|v| v.1))
}

fn classify_record(base: &BaseParameter, config: &SolverConfig) -> Result<Record, CliError> {
    let row = datasets::bracket_row(base, None, config)?;
    let root = match row.tag {
        SolutionTag::ZeroBase => Some(0.0),
        SolutionTag::UnitBase => Some(2.0),
        SolutionTag::TangentRoot => Some(CriticalConstants::get().x_dagger),
        _ => None,
    };
    let record = Record::new()
        .with("a", row.a)
        .with("classification", row.tag.as_str())
        .with("root_count", Cell::Int(root_count(row.tag)))
        .with("root", root);
    let record = pair(record, "x1_lo", "x1_hi", row.x1_bounds);
    Ok(pair(record, "x2_lo", "x2_hi", row.x2_initial).with("conventional", row.conventional))
}

fn root_count(tag: SolutionTag) -> u64 {
    match tag {
        SolutionTag::NoRoot => 0,
        SolutionTag::TwoRoots => 2,
        _ => 1,
    }
}

/// The six bracket columns shared by `solve` and `bounds`.
fn bracket_columns(record: Record, row: &RootRow) -> Record {
    let record = pair(record, "x1_lo", "x1_hi", row.x1_bounds);
    let record = pair(record, "x2_lo1", "x2_hi1", row.x2_initial);
    pair(record, "x2_lo2", "x2_hi2", row.x2_refined)
}

fn solve_record(
    base: &BaseParameter,
    config: &SolverConfig,
    verify: bool,
) -> Result<Record, CliError> {
    let report = solve_all(base, config)?;
    let row = RootRow::from_report(base, &report);
    let record = Record::new()
        .with("a", row.a)
        .with("classification", row.tag.as_str())
        .with("x1", row.x1)
        .with("x2", row.x2);
    let record = bracket_columns(record, &row)
        .with("residual_x1", row.residual_x1)
        .with("residual_x2", row.residual_x2)
        .with(
            "x2_bracket",
            report
                .roots
                .get(1)
                .and_then(|r| r.bracket)
                .map_or(Cell::Null, |b| Cell::Text(b.source().as_str().to_owned())),
        )
        .with("conventional", row.conventional);
    if !verify {
        return Ok(record);
    }
    let verified = verify_report(base, &report, config)?;
    Ok(record.with("verified", verified.map_or(Cell::Null, Cell::Bool)))
}

/// Cross-checks a report against the grid scan. `Ok(None)` when the scan
/// does not apply (`a = 0`); a disagreement is an error.
fn verify_report(
    base: &BaseParameter,
    report: &SolveReport,
    config: &SolverConfig,
) -> Result<Option<bool>, CliError> {
    if base.is_zero() {
        return Ok(None);
    }
    let upper = x_star(base).map_or(10.0, |xs| (3.0 * xs).max(10.0));
    let expected: Vec<f64> = report.roots.iter().map(|r| r.x).collect();
    if report.classification.tag() == SolutionTag::TangentRoot {
        let (x, f_min) = min_scan(base, -10.0, upper, VERIFY_GRID)?;
        if f_min.abs() > VERIFY_TOL {
            return Err(CliError::Verify(format!(
                "scan minimum {f_min:e} at x = {x} is not a tangent root"
            )));
        }
        return Ok(Some(true));
    }
    let scan = scan_roots(base, -10.0, upper, VERIFY_GRID, config)?;
    let agrees = scan.refined_roots.len() == expected.len()
        && scan
            .refined_roots
            .iter()
            .zip(&expected)
            .all(|(s, e)| (s - e).abs() <= VERIFY_TOL);
    if !agrees {
        return Err(CliError::Verify(format!(
            "solver roots {expected:?} vs scan roots {:?}",
            scan.refined_roots
        )));
    }
    Ok(Some(true))
}

fn bounds_record(row: &RootRow) -> Record {
    let record = Record::new()
        .with("a", row.a)
        .with("classification", row.tag.as_str())
        .with("x1", row.x1);
    bracket_columns(record, row)
}

fn table_record(row: &RootRow) -> Record {
    let record = Record::new()
        .with("a", row.a)
        .with("x1", row.x1)
        .with("x2", row.x2);
    let record = pair(record, "x2_lo1", "x2_hi1", row.x2_initial);
    let record =
        pair(record, "x2_lo2", "x2_hi2", row.x2_refined).with("classification", row.tag.as_str());
    let formal = match row.formal_bounds {
        Some((lo, hi)) => Cell::Group(vec![
            ("lo", Cell::Num(lo)),
            ("hi", Cell::Num(hi)),
            ("inverted", Cell::Bool(lo > hi)),
        ]),
        None => Cell::Group(vec![
            ("lo", Cell::Null),
            ("hi", Cell::Null),
            ("inverted", Cell::Null),
        ]),
    };
    record.with("formal_bounds", formal)
}

fn curve_records(args: &Args) -> Result<Vec<Record>, CliError> {
    let base = base_arg(args)?;
    let (lo, hi) = (require(args.x_lo, "--x-lo")?, require(args.x_hi, "--x-hi")?);
    if lo.is_nan() || hi.is_nan() || lo >= hi {
        return Err(CliError::Usage(format!(
            "curve needs x-lo < x-hi, got {lo}, {hi}"
        )));
    }
    let steps = steps_arg(args)?;
    let (view, column) = if args.coth_view {
        (CurveView::Coth, "two_coth")
    } else {
        (CurveView::Residual, "f")
    };
    let points = datasets::curve(&base, lo, hi, steps, view)?;
    Ok(points
        .into_iter()
        .map(|(x, y)| Record::new().with("x", x).with(column, y))
        .collect())
}
