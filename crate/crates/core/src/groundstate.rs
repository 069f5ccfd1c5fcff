//! Closed-form ground states for `V = A/r⁴ + B/r³ + C/r² + D/r` in two
//! dimensions (`λ = l = 0`), from the ansatz `y = exp(a/r + b r + c ln r)`.
//!
//! Matching powers `r^-4 … r^0` gives five equations for the four unknowns
//! `(a, b, c, E)`, so one relation constrains the potential: `C` is not free.
//! [`solve_ground_state`] takes `(A, B, D)` and reports the `C` it requires.

use crate::error::{domain, Error, Result};
use crate::potential::MultiTermPotential;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroundStateSolution {
    /// `a = −√A`.
    pub inverse_coeff: f64,
    /// `b = D/(2c)`, negative for a normalizable state.
    pub linear_slope_b: f64,
    /// `c = 1 + μ`.
    pub log_coeff: f64,
    /// `E = −b²` (reduced units).
    pub energy: f64,
    /// `μ = B/(2√A)`.
    pub mu: f64,
    /// `C = 1/4 + μ(1 + μ) + D√A/(1 + μ)`.
    pub required_c: f64,
}

impl GroundStateSolution {
    /// `c < 0` (with `D > 0`): still square integrable because `a < 0`
    /// dominates at the origin, but the prefactor `r^c` diverges there.
    pub fn has_negative_log_coeff(&self) -> bool {
        self.log_coeff < 0.0
    }

    /// `C − required_C` for a user-supplied `C`.
    pub fn c_mismatch(&self, c: f64) -> f64 {
        c - self.required_c
    }

    /// The potential this solution belongs to, with `C = required_C`.
    pub fn potential(&self, a: f64, b: f64, d: f64) -> Result<MultiTermPotential> {
        MultiTermPotential::new(a, b, self.required_c, d)
    }
}

pub fn solve_ground_state(a: f64, b: f64, d: f64) -> Result<GroundStateSolution> {
    if ![a, b, d].iter().all(|v| v.is_finite()) {
        return domain("A, B and D must be finite");
    }
    if !(a > 0.0) {
        return domain(format!("A must be positive, got {a}"));
    }
    let sqrt_a = a.sqrt();
    let mu = b / (2.0 * sqrt_a);
    let c = 1.0 + mu;
    if c == 0.0 {
        return Err(Error::DegenerateC);
    }
    let slope = d / (2.0 * c);
    if !(slope < 0.0) {
        return Err(Error::NotNormalizable { slope });
    }
    Ok(GroundStateSolution {
        inverse_coeff: -sqrt_a,
        linear_slope_b: slope,
        log_coeff: c,
        energy: -slope * slope,
        mu,
        required_c: 0.25 + mu * (1.0 + mu) + d * sqrt_a / (1.0 + mu),
    })
}

/// `y(r) = r^c exp(a/r + b r)`, positive for all `r > 0`.
pub fn evaluate_ground_state(sol: &GroundStateSolution, r: f64) -> Result<f64> {
    if !(r > 0.0 && r.is_finite()) {
        return domain(format!("radius must be positive, got {r}"));
    }
    Ok((sol.inverse_coeff / r + sol.linear_slope_b * r + sol.log_coeff * r.ln()).exp())
}

/// `|k'' + k'² − (−E + V(r) − 1/(4r²))|` for `k = a/r + b r + c ln r`.
///
/// Both sides are Laurent polynomials in `r` of degree −4…0, so the
/// difference is evaluated as `Σ d_p r^p` from the [`coefficient_defects`]
/// (Horner in `1/r`). This avoids cancelling `O(A/r⁴)` terms near the origin.
pub fn ground_state_residual(
    sol: &GroundStateSolution,
    pot: &MultiTermPotential,
    energy: f64,
    r: f64,
) -> Result<f64> {
    if !(r > 0.0 && r.is_finite()) {
        return domain(format!("radius must be positive, got {r}"));
    }
    let d = coefficient_defects(sol, pot, energy);
    let u = 1.0 / r;
    Ok((d[4] + u * (d[3] + u * (d[2] + u * (d[1] + u * d[0])))).abs())
}

/// The same residual from explicit `k'`, `k''` and `V(r)` without grouping
/// by powers; useful as an independent cross-check away from the origin.
pub fn ground_state_residual_direct(
    sol: &GroundStateSolution,
    pot: &MultiTermPotential,
    energy: f64,
    r: f64,
) -> Result<f64> {
    if !(r > 0.0 && r.is_finite()) {
        return domain(format!("radius must be positive, got {r}"));
    }
    let (a, b, c) = (sol.inverse_coeff, sol.linear_slope_b, sol.log_coeff);
    let k1 = -a / (r * r) + b + c / r;
    let k2 = 2.0 * a / (r * r * r) - c / (r * r);
    let target = -energy + pot.eval(r) - 0.25 / (r * r);
    Ok((k2 + k1 * k1 - target).abs())
}

/// Defects of the five coefficient-matching relations, ordered by power
/// `r^-4 … r^0`: `a² − A`, `2a(1−c) − B`, `c(c−1) − 2ab − (C − 1/4)`,
/// `2bc − D`, `b² + E`.
pub fn coefficient_defects(
    sol: &GroundStateSolution,
    pot: &MultiTermPotential,
    energy: f64,
) -> [f64; 5] {
    let (a, b, c) = (sol.inverse_coeff, sol.linear_slope_b, sol.log_coeff);
    [
        a.mul_add(a, -pot.a),
        2.0 * a * (1.0 - c) - pot.b,
        c * (c - 1.0) - 2.0 * a * b - (pot.c - 0.25),
        2.0 * b * c - pot.d,
        b.mul_add(b, energy),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_family_point() {
        let s = solve_ground_state(1.0, 2.0, -4.0).unwrap();
        assert_eq!(s.inverse_coeff, -1.0);
        assert_eq!(s.log_coeff, 2.0);
        assert_eq!(s.linear_slope_b, -1.0);
        assert_eq!(s.energy, -1.0);
        assert_eq!(s.mu, 1.0);
        assert_eq!(s.required_c, 0.25);
    }

    #[test]
    fn second_family_point() {
        let s = solve_ground_state(4.0, 0.0, -2.0).unwrap();
        assert_eq!(
            (s.inverse_coeff, s.log_coeff, s.linear_slope_b),
            (-2.0, 1.0, -1.0)
        );
        assert_eq!(s.energy, -1.0);
        assert_eq!(s.mu, 0.0);
        assert_eq!(s.required_c, -15.0 / 4.0);
    }

    #[test]
    fn error_paths() {
        assert_eq!(solve_ground_state(1.0, -2.0, -3.0), Err(Error::DegenerateC));
        assert_eq!(solve_ground_state(1.0, -2.0, 5.0), Err(Error::DegenerateC));
        assert!(matches!(
            solve_ground_state(1.0, 2.0, 4.0),
            Err(Error::NotNormalizable { .. })
        ));
        assert!(matches!(
            solve_ground_state(1.0, 2.0, 0.0),
            Err(Error::NotNormalizable { .. })
        ));
        assert!(matches!(
            solve_ground_state(0.0, 2.0, -4.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            solve_ground_state(-1.0, 2.0, -4.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn negative_log_branch_accepted_and_flagged() {
        // μ = -2 → c = -1; D > 0 gives b < 0.
        let s = solve_ground_state(1.0, -4.0, 2.0).unwrap();
        assert_eq!(s.log_coeff, -1.0);
        assert_eq!(s.linear_slope_b, -1.0);
        assert!(s.has_negative_log_coeff());
    }

    #[test]
    fn evaluation() {
        let s = solve_ground_state(1.0, 2.0, -4.0).unwrap();
        assert!((evaluate_ground_state(&s, 1.0).unwrap() - (-2.0f64).exp()).abs() < 1e-16);
        assert!(evaluate_ground_state(&s, 1e-3).unwrap() < 1e-300);
        assert!(
            evaluate_ground_state(&s, 800.0).unwrap() == 0.0
                || evaluate_ground_state(&s, 800.0).unwrap() < 1e-300
        );
        assert!(evaluate_ground_state(&s, 0.0).is_err());
    }

    #[test]
    fn residual_detects_c_and_e_offsets() {
        let s = solve_ground_state(1.0, 2.0, -4.0).unwrap();
        let pot = MultiTermPotential::new(1.0, 2.0, 0.25, -4.0).unwrap();
        for r in [0.1, 1.0, 10.0] {
            assert!(ground_state_residual(&s, &pot, -1.0, r).unwrap() <= 1e-12);
        }
        let shifted_c = MultiTermPotential::new(1.0, 2.0, 0.75, -4.0).unwrap();
        assert!((ground_state_residual(&s, &shifted_c, -1.0, 1.0).unwrap() - 0.5).abs() < 1e-13);
        for r in [0.3, 2.0, 7.0] {
            let v = ground_state_residual(&s, &pot, -0.75, r).unwrap();
            assert!((v - 0.25).abs() < 1e-12);
        }
        assert!(ground_state_residual(&s, &pot, -1.0, 0.0).is_err());
        assert_eq!(s.c_mismatch(0.75), 0.5);
    }

    #[test]
    fn energy_forms_agree() {
        for (a, b, d) in [(1.0, 2.0, -4.0), (3.0, 0.5, -7.0), (9.5, 9.0, -0.1)] {
            let s = solve_ground_state(a, b, d).unwrap();
            let mu: f64 = b / (2.0 * f64::sqrt(a));
            let alt = -d * d / (4.0 * (1.0 + mu).powi(2));
            assert!((s.energy - alt).abs() <= 1e-13 * alt.abs());
        }
    }
}
