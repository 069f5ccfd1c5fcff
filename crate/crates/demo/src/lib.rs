//! wasm-bindgen bindings for the browser demo. Every export returns a JSON
//! string; the `*_json` functions hold the logic and are callable natively.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use radial_core::asymptotics::Branch;
use radial_core::groundstate::{evaluate_ground_state, ground_state_residual, solve_ground_state};
use radial_core::oracle::{shoot_ground_energy, RadialGrid};
use radial_core::series::{build_series, evaluate_solution, ode_residual, SeriesConfig};
use radial_core::{MultiTermPotential, PotentialMonomial};

const MAX_POINTS: usize = 20_000;

fn finite(v: f64) -> Value {
    if v.is_finite() {
        json!(v)
    } else {
        Value::Null
    }
}

fn grid(r_min: f64, r_max: f64, points: usize, log: bool) -> Result<RadialGrid, String> {
    if points > MAX_POINTS {
        return Err(format!("at most {MAX_POINTS} points, got {points}"));
    }
    let g = if log {
        RadialGrid::log(r_min, r_max, points)
    } else {
        RadialGrid::uniform(r_min, r_max, points)
    };
    g.map_err(|e| e.to_string())
}

/// Closed-form ground state of `A/r⁴ + B/r³ + C/r² + D/r` with `C` set to
/// the required value, sampled on a log grid and scaled to unit maximum.
pub fn ground_state_json(
    a: f64,
    b: f64,
    d: f64,
    r_min: f64,
    r_max: f64,
    points: usize,
) -> Result<String, String> {
    let sol = solve_ground_state(a, b, d).map_err(|e| e.to_string())?;
    let pot = sol.potential(a, b, d).map_err(|e| e.to_string())?;
    let nodes = grid(r_min, r_max, points, true)?.nodes();
    let y: Vec<f64> = nodes
        .iter()
        .map(|&r| evaluate_ground_state(&sol, r))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let peak = y.iter().cloned().fold(0.0, f64::max);
    let scale = if peak > 0.0 { 1.0 / peak } else { 1.0 };
    let residual = nodes
        .iter()
        .map(|&r| ground_state_residual(&sol, &pot, sol.energy, r).unwrap_or(f64::NAN))
        .fold(0.0, f64::max);
    Ok(json!({
        "E": finite(sol.energy),
        "mu": finite(sol.mu),
        "a": finite(sol.inverse_coeff),
        "b": finite(sol.linear_slope_b),
        "c": finite(sol.log_coeff),
        "required_C": finite(sol.required_c),
        "max_residual": finite(residual),
        "r": nodes,
        "y": y.iter().map(|v| finite(v * scale)).collect::<Vec<_>>(),
    })
    .to_string())
}

/// Series solution for even `β` on a uniform grid, with the pointwise
/// relative ODE residual.
#[allow(clippy::too_many_arguments)]
pub fn series_json(
    alpha: f64,
    beta: f64,
    kappa: f64,
    lambda: f64,
    epsilon: f64,
    s_max: i64,
    r_min: f64,
    r_max: f64,
    points: usize,
) -> Result<String, String> {
    let run = || -> radial_core::Result<(Vec<f64>, Vec<[f64; 3]>, f64)> {
        let pot = PotentialMonomial::new(alpha, beta)?;
        let cfg = SeriesConfig::new(pot, kappa, lambda, Branch::from_sign(epsilon)?)?
            .with_window(0, s_max)?;
        let sol = build_series(&cfg)?;
        let origin = sol.origin();
        let nodes = RadialGrid::uniform(r_min, r_max, points)?.nodes();
        let mut rows = Vec::with_capacity(nodes.len());
        for &r in &nodes {
            let y = evaluate_solution(&sol, &origin, r)?;
            rows.push([y.re, y.im, ode_residual(&sol, &origin, r)?]);
        }
        Ok((nodes, rows, sol.max_recurrence_residual()))
    };
    if points > MAX_POINTS {
        return Err(format!("at most {MAX_POINTS} points, got {points}"));
    }
    let (nodes, rows, recurrence) = run().map_err(|e| e.to_string())?;
    let column = |i: usize| rows.iter().map(|row| finite(row[i])).collect::<Vec<_>>();
    let worst = rows.iter().map(|row| row[2]).fold(0.0, f64::max);
    Ok(json!({
        "r": nodes,
        "re_y": column(0),
        "im_y": column(1),
        "residual": column(2),
        "max_residual": finite(worst),
        "max_recurrence_residual": finite(recurrence),
    })
    .to_string())
}

/// Ground-state energy from the shooting oracle, independent of the closed form.
pub fn shoot_json(a: f64, b: f64, c: f64, d: f64, e_lo: f64, e_hi: f64) -> Result<String, String> {
    let pot = MultiTermPotential::new(a, b, c, d)
        .map_err(|e| e.to_string())?
        .to_potential();
    let g = grid(0.02, 40.0, 4000, true)?;
    let res = shoot_ground_energy(&pot, 0.0, (e_lo, e_hi), &g, 1e-10).map_err(|e| e.to_string())?;
    Ok(json!({
        "energy": finite(res.energy),
        "converged": res.converged,
        "match_defect": finite(res.match_defect),
        "iterations": res.iterations,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn ground_state_curve(
    a: f64,
    b: f64,
    d: f64,
    r_min: f64,
    r_max: f64,
    points: usize,
) -> Result<String, JsError> {
    ground_state_json(a, b, d, r_min, r_max, points).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn series_curve(
    alpha: f64,
    beta: f64,
    kappa: f64,
    lambda: f64,
    epsilon: f64,
    s_max: i32,
    r_min: f64,
    r_max: f64,
    points: usize,
) -> Result<String, JsError> {
    series_json(
        alpha,
        beta,
        kappa,
        lambda,
        epsilon,
        s_max as i64,
        r_min,
        r_max,
        points,
    )
    .map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn shoot_energy(
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    e_lo: f64,
    e_hi: f64,
) -> Result<String, JsError> {
    shoot_json(a, b, c, d, e_lo, e_hi).map_err(|e| JsError::new(&e))
}
