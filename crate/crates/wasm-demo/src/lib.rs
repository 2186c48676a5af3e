//! WebAssembly bindings behind `www/index.html`: pick a base, see its root
//! regime and roots, plot `f(x)`, and trace the solution space over a range
//! of bases.
//!
//! Each export wraps a plain Rust function returning `Result<_, String>` so
//! the logic is testable off the browser.

use coshroot::datasets::{self, CurveView};
use coshroot::{solve_all, BaseParameter, CriticalConstants, SolverConfig};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn finite(v: f64) -> Value {
    if v.is_finite() {
        json!(v)
    } else {
        Value::Null
    }
}

pub fn constants_value() -> Value {
    let c = CriticalConstants::get();
    json!({
        "q": c.q,
        "sinh_q": c.sinh_q,
        "a_min": c.a_min,
        "a_max": c.a_max,
        "x_dagger": c.x_dagger,
    })
}

/// Classification, roots, residuals and brackets for one base.
pub fn solve_value(a: f64) -> Result<Value, String> {
    let base = BaseParameter::new(a).map_err(|e| e.to_string())?;
    let report = solve_all(&base, &SolverConfig::default()).map_err(|e| e.to_string())?;
    let roots: Vec<Value> = report
        .roots
        .iter()
        .map(|r| {
            json!({
                "x": r.x,
                "residual": r.residual.map(finite),
                "iterations": r.iterations,
                "bracket": r.bracket.map(|b| json!({
                    "lo": b.lo(),
                    "hi": b.hi(),
                    "source": b.source().as_str(),
                })),
            })
        })
        .collect();
    let x_star = coshroot::x_star(&base).ok().map(finite);
    Ok(json!({
        "a": a,
        "classification": report.classification.tag().as_str(),
        "conventional": report.classification.is_conventional(),
        "x_star": x_star,
        "roots": roots,
    }))
}

/// Interleaved `[x0, y0, x1, y1, ...]`; gaps (poles, overflow) are NaN.
pub fn curve_points(
    a: f64,
    x_lo: f64,
    x_hi: f64,
    steps: usize,
    coth_view: bool,
) -> Result<Vec<f64>, String> {
    let base = BaseParameter::new(a).map_err(|e| e.to_string())?;
    let view = if coth_view {
        CurveView::Coth
    } else {
        CurveView::Residual
    };
    let points = datasets::curve(&base, x_lo, x_hi, steps, view).map_err(|e| e.to_string())?;
    Ok(points
        .into_iter()
        .flat_map(|(x, y)| [x, y.unwrap_or(f64::NAN)])
        .collect())
}

pub fn sweep_value(a_lo: f64, a_hi: f64, steps: usize) -> Result<Value, String> {
    let rows =
        datasets::sweep(a_lo, a_hi, steps, &SolverConfig::default()).map_err(|e| e.to_string())?;
    Ok(Value::Array(
        rows.iter()
            .map(|r| {
                json!({
                    "a": r.a,
                    "classification": r.tag.as_str(),
                    "x1": r.x1,
                    "x2": r.x2,
                    "x2_overflow": r.x2_overflow,
                })
            })
            .collect(),
    ))
}

#[wasm_bindgen]
pub fn constants() -> String {
    constants_value().to_string()
}

#[wasm_bindgen]
pub fn solve(a: f64) -> Result<String, JsError> {
    solve_value(a)
        .map(|v| v.to_string())
        .map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn curve(
    a: f64,
    x_lo: f64,
    x_hi: f64,
    steps: usize,
    coth_view: bool,
) -> Result<Vec<f64>, JsError> {
    curve_points(a, x_lo, x_hi, steps, coth_view).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn sweep(a_lo: f64, a_hi: f64, steps: usize) -> Result<String, JsError> {
    sweep_value(a_lo, a_hi, steps)
        .map(|v| v.to_string())
        .map_err(|e| JsError::new(&e))
}
