//! Numerov integration of `y'' = (V(r) + (λ² − 1/4)/r² − κ) y`.
//!
//! On log grids the equation is rewritten with `r = eˣ`, `y = r^(1/2) u`,
//! giving `u'' = (r²(V − κ) + λ²) u`, which is again Numerov-ready on the
//! uniform `x` mesh.

use crate::error::{domain, Error, Result};
use crate::potential::Potential;

use super::grid::{RadialGrid, Spacing};

/// Magnitude above which a sweep is declared divergent.
const OVERFLOW: f64 = 1e280;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Seeds at nodes 0 and 1.
    Outward,
    /// Seeds at the last two nodes.
    Inward,
}

/// Numerov coefficient `g` at every node, in the grid's working variable.
pub(crate) fn numerov_g(pot: &Potential, kappa: f64, lambda: f64, grid: &RadialGrid) -> Vec<f64> {
    grid.nodes()
        .into_iter()
        .map(|r| match grid.spacing() {
            Spacing::Uniform => pot.eval(r) + (lambda * lambda - 0.25) / (r * r) - kappa,
            Spacing::Log => r * r * (pot.eval(r) - kappa) + lambda * lambda,
        })
        .collect()
}

/// `y → u` for the working variable (identity on uniform grids).
pub(crate) fn to_working(grid: &RadialGrid, r: f64, y: f64) -> f64 {
    match grid.spacing() {
        Spacing::Uniform => y,
        Spacing::Log => y / r.sqrt(),
    }
}

pub(crate) fn from_working(grid: &RadialGrid, r: f64, u: f64) -> f64 {
    match grid.spacing() {
        Spacing::Uniform => u,
        Spacing::Log => u * r.sqrt(),
    }
}

/// Runs the three-term Numerov recursion over `g` in slice order, filling
/// `u[..len]` from seeds `u[0]`, `u[1]`. On overflow returns the index of
/// the last finite value.
pub(crate) fn sweep(
    g: &[f64],
    h: f64,
    u0: f64,
    u1: f64,
    len: usize,
) -> std::result::Result<Vec<f64>, usize> {
    let h2 = h * h / 12.0;
    let mut u = Vec::with_capacity(len);
    u.push(u0);
    u.push(u1);
    for i in 1..len - 1 {
        let next = (2.0 * u[i] * (1.0 + 5.0 * h2 * g[i]) - u[i - 1] * (1.0 - h2 * g[i - 1]))
            / (1.0 - h2 * g[i + 1]);
        if !next.is_finite() || next.abs() > OVERFLOW {
            return Err(i);
        }
        u.push(next);
    }
    Ok(u)
}

/// Fourth-order solution on `grid` from two seed values of `y`.
pub fn integrate_radial(
    pot: &Potential,
    kappa: f64,
    lambda: f64,
    grid: &RadialGrid,
    direction: Direction,
    seeds: [f64; 2],
) -> Result<Vec<f64>> {
    if !seeds.iter().all(|s| s.is_finite()) || seeds.iter().all(|s| *s == 0.0) {
        return domain("seeds must be finite and not both zero");
    }
    let nodes = grid.nodes();
    let n = nodes.len();
    let mut g = numerov_g(pot, kappa, lambda, grid);
    let h = grid.step();

    match direction {
        Direction::Outward => {
            let u0 = to_working(grid, nodes[0], seeds[0]);
            let u1 = to_working(grid, nodes[1], seeds[1]);
            let u = sweep(&g, h, u0, u1, n).map_err(|i| Error::Diverged {
                last_valid: i,
                radius: nodes[i],
            })?;
            Ok(nodes
                .iter()
                .zip(u)
                .map(|(&r, v)| from_working(grid, r, v))
                .collect())
        }
        Direction::Inward => {
            g.reverse();
            let u0 = to_working(grid, nodes[n - 1], seeds[0]);
            let u1 = to_working(grid, nodes[n - 2], seeds[1]);
            let mut u = sweep(&g, h, u0, u1, n).map_err(|i| Error::Diverged {
                last_valid: n - 1 - i,
                radius: nodes[n - 1 - i],
            })?;
            u.reverse();
            Ok(nodes
                .iter()
                .zip(u)
                .map(|(&r, v)| from_working(grid, r, v))
                .collect())
        }
    }
}
