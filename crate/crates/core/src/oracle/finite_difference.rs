use num_complex::Complex64;
use std::ops::{Add, Mul, Sub};

use crate::error::{domain, Result};
use crate::potential::Potential;

use super::grid::{RadialGrid, Spacing};

/// Real or complex samples of `y`.
pub trait Sample: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {
    fn magnitude(self) -> f64;
}

impl Sample for f64 {
    fn magnitude(self) -> f64 {
        self.abs()
    }
}

impl Sample for Complex64 {
    fn magnitude(self) -> f64 {
        self.norm()
    }
}

/// Raw residual `y'' + (κ − V − (λ² − 1/4)/r²) y` at interior nodes
/// `1..n-1`, with `y''` from the central second difference.
pub fn finite_difference_residuals<T: Sample>(
    y: &[T],
    grid: &RadialGrid,
    pot: &Potential,
    kappa: f64,
    lambda: f64,
) -> Result<Vec<T>> {
    if grid.spacing() != Spacing::Uniform {
        return domain("finite-difference residual needs a uniform grid");
    }
    if grid.len() < 5 {
        return domain("finite-difference residual needs at least 5 nodes");
    }
    if y.len() != grid.len() {
        return domain(format!(
            "{} samples for a {}-node grid",
            y.len(),
            grid.len()
        ));
    }
    let h = grid.step();
    let inv_h2 = 1.0 / (h * h);
    let nodes = grid.nodes();
    Ok((1..y.len() - 1)
        .map(|i| {
            let r = nodes[i];
            let q = kappa - pot.eval(r) - (lambda * lambda - 0.25) / (r * r);
            (y[i + 1] - y[i] * 2.0 + y[i - 1]) * inv_h2 + y[i] * q
        })
        .collect())
}

/// `max |residual| / max(1, |y|)` over interior nodes.
pub fn finite_difference_residual<T: Sample>(
    y: &[T],
    grid: &RadialGrid,
    pot: &Potential,
    kappa: f64,
    lambda: f64,
) -> Result<f64> {
    let res = finite_difference_residuals(y, grid, pot, kappa, lambda)?;
    Ok(res
        .iter()
        .zip(&y[1..])
        .map(|(r, v)| r.magnitude() / v.magnitude().max(1.0))
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_function() {
        let grid = RadialGrid::uniform(0.1, 5.0, 50).unwrap();
        let pot = Potential::from_pairs(&[(1.0, 4.0)]);
        let y = vec![0.0; 50];
        assert_eq!(
            finite_difference_residual(&y, &grid, &pot, 1.0, 0.5).unwrap(),
            0.0
        );
    }

    #[test]
    fn requires_uniform_grid() {
        let grid = RadialGrid::log(0.1, 5.0, 50).unwrap();
        let y = vec![0.0; 50];
        assert!(finite_difference_residual(&y, &grid, &Potential::zero(), 1.0, 0.5).is_err());
    }

    #[test]
    fn second_order_for_sine() {
        let res = |n: usize| {
            let grid = RadialGrid::uniform(0.1, 3.0, n).unwrap();
            let y: Vec<f64> = grid.nodes().iter().map(|r| r.sin()).collect();
            finite_difference_residual(&y, &grid, &Potential::zero(), 1.0, 0.5).unwrap()
        };
        let ratio = res(51) / res(101);
        assert!((3.5..4.5).contains(&ratio), "{ratio}");
    }
}
