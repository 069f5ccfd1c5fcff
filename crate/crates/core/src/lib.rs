//! Stationary radial Schrödinger equation with repulsive inverse-power
//! potentials in `q` dimensions.
//!
//! * [`reduction`]: physical problem to the normal form
//!   `y'' + (κ − V − (λ² − 1/4)/r²) y = 0`.
//! * [`asymptotics`]: near-origin factor and interpolating-equation coefficients.
//! * [`series`]: Laurent-series solutions for even `β`.
//! * [`groundstate`]: closed-form ground states of `A/r⁴ + B/r³ + C/r² + D/r`.
//! * [`oracle`]: independent numerical checks (Numerov, shooting, finite differences).

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymptotics;
pub mod error;
pub mod groundstate;
pub mod oracle;
pub mod potential;
pub mod reduction;
pub mod series;

pub use error::{Error, Result};
pub use potential::{MultiTermPotential, Potential, PotentialMonomial, PotentialTerm};
