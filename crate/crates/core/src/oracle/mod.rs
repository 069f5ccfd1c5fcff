//! Numerical verification that never consumes analytic intermediates:
//! only potentials, grids and boundary samples go in.

mod finite_difference;
mod grid;
mod numerov;
mod shooting;

pub use finite_difference::{finite_difference_residual, finite_difference_residuals, Sample};
pub use grid::{RadialGrid, Spacing};
pub use numerov::{integrate_radial, Direction};
pub use shooting::{
    shoot_ground_energy, shoot_ground_energy_with, ShootingOptions, ShootingResult,
};

use crate::potential::Potential;

/// `V(r) + (λ² − 1/4)/r²`.
pub fn effective_potential(pot: &Potential, lambda: f64, r: f64) -> f64 {
    pot.eval(r) + (lambda * lambda - 0.25) / (r * r)
}
