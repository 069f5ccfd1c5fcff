//! Physical radial problem in `q` dimensions to the first-derivative-free
//! normal form `y'' + (κ − V(r) − (λ² − 1/4)/r²) y = 0`, and back.
//!
//! Wavefunctions are left unnormalized throughout.

use std::ops::Mul;

use crate::error::{domain, Result};
use crate::potential::Potential;

/// Physical parameters of a central-potential problem in `R^q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumSetup {
    pub mass: f64,
    pub hbar: f64,
    pub dimension: i32,
    pub angular_momentum: i32,
    pub energy: f64,
}

impl QuantumSetup {
    pub fn validate(&self) -> Result<()> {
        if !(self.mass > 0.0 && self.mass.is_finite()) {
            return domain(format!("mass must be positive, got {}", self.mass));
        }
        if !(self.hbar > 0.0 && self.hbar.is_finite()) {
            return domain(format!("hbar must be positive, got {}", self.hbar));
        }
        if self.dimension < 2 {
            return domain(format!("dimension q must be >= 2, got {}", self.dimension));
        }
        if self.angular_momentum < 0 {
            return domain(format!(
                "angular momentum l must be >= 0, got {}",
                self.angular_momentum
            ));
        }
        if !self.energy.is_finite() {
            return domain("energy must be finite");
        }
        Ok(())
    }

    /// `2m/ħ²`, the factor converting energies to inverse squared lengths.
    pub fn unit_factor(&self) -> f64 {
        2.0 * self.mass / (self.hbar * self.hbar)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReducedProblem {
    pub kappa: f64,
    pub lambda: f64,
    pub potential: Potential,
}

/// `λ = l + (q − 2)/2`.
pub fn lambda_of(dimension: i32, angular_momentum: i32) -> f64 {
    angular_momentum as f64 + 0.5 * (dimension as f64 - 2.0)
}

pub fn reduce(setup: &QuantumSetup, physical_terms: &[(f64, f64)]) -> Result<ReducedProblem> {
    setup.validate()?;
    if physical_terms
        .iter()
        .any(|(s, p)| !s.is_finite() || !p.is_finite())
    {
        return domain("potential strengths and powers must be finite");
    }
    let factor = setup.unit_factor();
    Ok(ReducedProblem {
        kappa: factor * setup.energy,
        lambda: lambda_of(setup.dimension, setup.angular_momentum),
        potential: Potential::from_pairs(physical_terms).scaled(factor),
    })
}

/// Converts reduced energies back to physical units, `E = κ ħ²/(2m)`.
pub fn physical_energy(setup: &QuantumSetup, kappa: f64) -> f64 {
    kappa / setup.unit_factor()
}

/// `ψ(r) = r^(−(q−1)/2) y(r)` pointwise.
pub fn to_full_wavefunction<T>(radii: &[f64], y: &[T], dimension: i32) -> Result<Vec<T>>
where
    T: Copy + Mul<f64, Output = T>,
{
    if radii.len() != y.len() {
        return domain(format!("{} radii but {} samples", radii.len(), y.len()));
    }
    if let Some(r) = radii.iter().find(|r| !(**r > 0.0)) {
        return domain(format!("sample radius must be positive, got {r}"));
    }
    let exponent = -0.5 * (dimension as f64 - 1.0);
    Ok(radii
        .iter()
        .zip(y)
        .map(|(&r, &v)| v * r.powf(exponent))
        .collect())
}
