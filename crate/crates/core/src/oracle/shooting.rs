//! Bound-state energy by matching outward and inward Numerov sweeps.
//!
//! Seeds use only generic decay forms derived from the potential: the
//! leading singular term near the origin and `exp(−√(V(∞) − E) r)` at the
//! outer edge.

use crate::error::{domain, Error, Result};
use crate::potential::Potential;

use super::effective_potential;
use super::grid::{RadialGrid, Spacing};
use super::numerov::{numerov_g, sweep, to_working};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingResult {
    pub energy: f64,
    /// Outward minus inward logarithmic derivative `y'/y` at the matching node.
    pub match_defect: f64,
    pub iterations: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingOptions {
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Matching radius; defaults to the minimum of the effective potential.
    pub matching_radius: Option<f64>,
}

impl Default for ShootingOptions {
    fn default() -> Self {
        Self {
            tolerance: 1e-10,
            max_iterations: 200,
            matching_radius: None,
        }
    }
}

/// Decay toward the origin: `exp(−2√s/(p−2) r^(1−p/2))` for the most
/// singular term `s r^(−p)` with `p > 2` and `s > 0`, else `r^(λ+1/2)`.
fn inner_seed(pot: &Potential, lambda: f64, r: f64) -> f64 {
    match pot.most_singular() {
        Some(t) if t.power > 2.0 && t.strength > 0.0 => {
            (-2.0 * t.strength.sqrt() / (t.power - 2.0) * r.powf(1.0 - 0.5 * t.power)).exp()
        }
        _ => r.powf(lambda + 0.5),
    }
}

fn matching_index(pot: &Potential, lambda: f64, grid: &RadialGrid, radius: Option<f64>) -> usize {
    let nodes = grid.nodes();
    let n = nodes.len();
    let interior = 2..n - 2;
    let idx = match radius {
        Some(rm) => nodes
            .iter()
            .enumerate()
            .min_by(|a, b| (a.1 - rm).abs().total_cmp(&(b.1 - rm).abs()))
            .map(|(i, _)| i)
            .unwrap(),
        None => interior
            .clone()
            .min_by(|&a, &b| {
                effective_potential(pot, lambda, nodes[a])
                    .total_cmp(&effective_potential(pot, lambda, nodes[b]))
            })
            .unwrap(),
    };
    idx.clamp(interior.start, interior.end - 1)
}

struct Matcher<'a> {
    pot: &'a Potential,
    lambda: f64,
    grid: &'a RadialGrid,
    nodes: Vec<f64>,
    m: usize,
}

impl Matcher<'_> {
    /// Returns `(angle, log_mismatch)`: the sine of the angle between the
    /// outward and inward `(y, y')` vectors at the matching node (continuous
    /// in `E`, zero exactly at eigenvalues) and the difference of
    /// logarithmic derivatives `y'/y` there.
    fn mismatch(&self, energy: f64) -> Result<(f64, f64)> {
        let n = self.nodes.len();
        let m = self.m;
        let h = self.grid.step();
        let decay_sq = self.pot.value_at_infinity() - energy;
        if !(decay_sq > 0.0) {
            return domain(format!(
                "energy {energy} is not below the asymptotic potential {}",
                self.pot.value_at_infinity()
            ));
        }
        let decay = decay_sq.sqrt();
        let g = numerov_g(self.pot, energy, self.lambda, self.grid);
        let nodes = &self.nodes;

        let seed_in = |i: usize| {
            to_working(
                self.grid,
                nodes[i],
                inner_seed(self.pot, self.lambda, nodes[i]),
            )
        };
        // offset by r_max keeps the outer seeds O(1)
        let seed_out = |i: usize| {
            to_working(
                self.grid,
                nodes[i],
                (-decay * (nodes[i] - nodes[n - 1])).exp(),
            )
        };

        let diverged = |i: usize| Error::Diverged {
            last_valid: i,
            radius: nodes[i],
        };
        let out = sweep(&g, h, seed_in(0), seed_in(1), m + 2).map_err(diverged)?;
        let g_rev: Vec<f64> = g.iter().rev().copied().collect();
        let inn = sweep(&g_rev, h, seed_out(n - 1), seed_out(n - 2), n - m + 1)
            .map_err(|i| diverged(n - 1 - i))?;

        // value and central derivative in the working variable
        let (v_out, d_out) = (out[m], (out[m + 1] - out[m - 1]) / (2.0 * h));
        let (v_in, d_in) = (inn[n - 1 - m], (inn[n - 2 - m] - inn[n - m]) / (2.0 * h));

        let angle = (d_out * v_in - d_in * v_out) / (v_out.hypot(d_out) * v_in.hypot(d_in));
        let log_mismatch = d_out / v_out - d_in / v_in;
        let log_mismatch = match self.grid.spacing() {
            Spacing::Uniform => log_mismatch,
            // d ln y/dr = (1/2 + d ln u/dx)/r
            Spacing::Log => log_mismatch / nodes[m],
        };
        if !angle.is_finite() {
            return Err(Error::NoConvergence(format!(
                "matching defect not finite at energy {energy}"
            )));
        }
        Ok((angle, log_mismatch))
    }
}

pub fn shoot_ground_energy(
    pot: &Potential,
    lambda: f64,
    bracket: (f64, f64),
    grid: &RadialGrid,
    tolerance: f64,
) -> Result<ShootingResult> {
    shoot_ground_energy_with(
        pot,
        lambda,
        bracket,
        grid,
        &ShootingOptions {
            tolerance,
            ..Default::default()
        },
    )
}

/// Bisection on the matching defect inside `bracket = (E_lo, E_hi)`.
pub fn shoot_ground_energy_with(
    pot: &Potential,
    lambda: f64,
    bracket: (f64, f64),
    grid: &RadialGrid,
    options: &ShootingOptions,
) -> Result<ShootingResult> {
    let (mut lo, mut hi) = bracket;
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return domain(format!("bracket [{lo}, {hi}] must satisfy E_lo < E_hi"));
    }
    if !(hi < pot.value_at_infinity()) {
        return domain(format!(
            "bracket top {hi} must lie below the asymptotic potential {}",
            pot.value_at_infinity()
        ));
    }
    if !(options.tolerance > 0.0) {
        return domain("tolerance must be positive");
    }

    let matcher = Matcher {
        pot,
        lambda,
        grid,
        nodes: grid.nodes(),
        m: matching_index(pot, lambda, grid, options.matching_radius),
    };

    let (mut f_lo, defect_lo) = matcher.mismatch(lo)?;
    let (f_hi, defect_hi) = matcher.mismatch(hi)?;
    if defect_lo.abs() <= options.tolerance {
        return Ok(ShootingResult {
            energy: lo,
            match_defect: defect_lo,
            iterations: 0,
            converged: true,
        });
    }
    if defect_hi.abs() <= options.tolerance {
        return Ok(ShootingResult {
            energy: hi,
            match_defect: defect_hi,
            iterations: 0,
            converged: true,
        });
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::Bracket {
            lo,
            hi,
            defect_lo,
            defect_hi,
        });
    }

    for iteration in 1..=options.max_iterations {
        let mid = 0.5 * (lo + hi);
        let (f_mid, defect) = matcher.mismatch(mid)?;
        if defect.abs() <= options.tolerance {
            return Ok(ShootingResult {
                energy: mid,
                match_defect: defect,
                iterations: iteration,
                converged: true,
            });
        }
        if mid <= lo || mid >= hi {
            return Err(Error::NoConvergence(format!(
                "bracket collapsed at E = {mid} with defect {defect:e}"
            )));
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::NoConvergence(format!(
        "no energy met tolerance {:e} within {} iterations",
        options.tolerance, options.max_iterations
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coulomb_like() -> Potential {
        Potential::from_pairs(&[(1.0, 4.0), (2.0, 3.0), (0.25, 2.0), (-4.0, 1.0)])
    }

    fn grid() -> RadialGrid {
        RadialGrid::log(0.02, 40.0, 4000).unwrap()
    }

    #[test]
    fn finds_closed_form_energy() {
        let res = shoot_ground_energy(&coulomb_like(), 0.0, (-2.0, -0.5), &grid(), 1e-10).unwrap();
        assert!(res.converged);
        assert!(res.match_defect.abs() <= 1e-10);
        assert!((res.energy + 1.0).abs() <= 1e-6, "{res:?}");
    }

    #[test]
    fn empty_bracket() {
        let err =
            shoot_ground_energy(&coulomb_like(), 0.0, (-0.2, -0.1), &grid(), 1e-10).unwrap_err();
        assert!(matches!(err, Error::Bracket { .. }), "{err:?}");
    }

    #[test]
    fn invalid_brackets() {
        let pot = coulomb_like();
        assert!(shoot_ground_energy(&pot, 0.0, (-0.5, -2.0), &grid(), 1e-10).is_err());
        assert!(shoot_ground_energy(&pot, 0.0, (-2.0, 0.5), &grid(), 1e-10).is_err());
    }

    #[test]
    fn iteration_cap() {
        let opts = ShootingOptions {
            tolerance: 1e-10,
            max_iterations: 3,
            matching_radius: None,
        };
        let err = shoot_ground_energy_with(&coulomb_like(), 0.0, (-2.0, -0.5), &grid(), &opts)
            .unwrap_err();
        assert!(matches!(err, Error::NoConvergence(_)));
    }

    #[test]
    fn shift_covariance() {
        let base = shoot_ground_energy(&coulomb_like(), 0.0, (-2.0, -0.5), &grid(), 1e-10).unwrap();
        let v0 = 0.7;
        let shifted = shoot_ground_energy(
            &coulomb_like().shifted(v0),
            0.0,
            (-2.0 + v0, -0.5 + v0),
            &grid(),
            1e-10,
        )
        .unwrap();
        assert!((shifted.energy - base.energy - v0).abs() <= 1e-8);
    }
}
