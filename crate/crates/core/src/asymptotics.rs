//! Near-origin behaviour `y ~ r^p exp(−γ r^(−δ))` of solutions for a
//! repulsive monomial, and the coefficient functions of the equation
//! `F'' + p(r) F' + q(r) F = 0` obeyed by the interpolating factor `F` in
//! `y = exp(−γ r^(−δ)) exp(iε r √κ) F(r)`.

use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::potential::PotentialMonomial;

/// Sign `ε = ±1` selecting the `exp(±i r √κ)` behaviour at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }

    pub fn from_sign(sign: f64) -> Result<Self> {
        if sign == 1.0 {
            Ok(Branch::Plus)
        } else if sign == -1.0 {
            Ok(Branch::Minus)
        } else {
            domain(format!("epsilon must be +1 or -1, got {sign}"))
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Branch::Plus => Branch::Minus,
            Branch::Minus => Branch::Plus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OriginAsymptotics {
    pub gamma: f64,
    pub delta: f64,
    /// Power prefactor exponent; set only by [`OriginAsymptotics::with_special_p`].
    pub p_exponent: Option<f64>,
}

impl OriginAsymptotics {
    /// Closes the free exponent by cancelling the `r^(−δ−2)` term, `p = β/4`.
    pub fn with_special_p(mut self, beta: f64) -> Result<Self> {
        self.p_exponent = Some(special_p(beta)?);
        Ok(self)
    }

    /// `exp(−γ r^(−δ))`.
    pub fn damping(&self, r: f64) -> f64 {
        (-self.gamma * r.powf(-self.delta)).exp()
    }
}

/// `δ = β/2 − 1`, `γ = 2√α/(β − 2)`; these make `γ²δ² = α` and `2δ + 2 = β`.
pub fn origin_params(pot: &PotentialMonomial) -> OriginAsymptotics {
    let beta = pot.beta();
    OriginAsymptotics {
        gamma: 2.0 * pot.alpha().sqrt() / (beta - 2.0),
        delta: 0.5 * beta - 1.0,
        p_exponent: None,
    }
}

pub fn special_p(beta: f64) -> Result<f64> {
    if !(beta > 2.0) {
        return domain(format!("beta must exceed 2, got {beta}"));
    }
    Ok(0.25 * beta)
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Form {
    /// Consistency conditions substituted; depends on `(α, β)` only.
    Reduced,
    /// Free `(γ, δ)`.
    General { gamma: f64, delta: f64 },
}

/// Coefficient functions `p(r)`, `q(r)` for the interpolating factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeCoefficients {
    pub alpha: f64,
    pub beta: f64,
    pub kappa: f64,
    pub lambda: f64,
    pub branch: Branch,
    form: Form,
}

pub fn ode_coefficients(
    pot: &PotentialMonomial,
    kappa: f64,
    lambda: f64,
    branch: Branch,
) -> Result<OdeCoefficients> {
    if !(kappa > 0.0) {
        return domain(format!("scattering branch requires kappa > 0, got {kappa}"));
    }
    if !(lambda >= 0.0) {
        return domain(format!("lambda must be >= 0, got {lambda}"));
    }
    Ok(OdeCoefficients {
        alpha: pot.alpha(),
        beta: pot.beta(),
        kappa,
        lambda,
        branch,
        form: Form::Reduced,
    })
}

/// Same coefficients without assuming `γ²δ² = α` or `2δ + 2 = β`.
pub fn general_ode_coefficients(
    pot: &PotentialMonomial,
    gamma: f64,
    delta: f64,
    kappa: f64,
    lambda: f64,
    branch: Branch,
) -> Result<OdeCoefficients> {
    if !(gamma > 0.0) {
        return domain(format!("gamma must be positive, got {gamma}"));
    }
    if !(delta > 0.0) {
        return domain(format!("delta must be positive, got {delta}"));
    }
    if !(kappa >= 0.0) {
        return domain(format!("kappa must be >= 0, got {kappa}"));
    }
    Ok(OdeCoefficients {
        alpha: pot.alpha(),
        beta: pot.beta(),
        kappa,
        lambda,
        branch,
        form: Form::General { gamma, delta },
    })
}

impl OdeCoefficients {
    fn centrifugal(&self) -> f64 {
        self.lambda * self.lambda - 0.25
    }

    pub fn p(&self, r: f64) -> Complex64 {
        let eps = self.branch.sign();
        let imag = 2.0 * eps * self.kappa.sqrt();
        let real = match self.form {
            Form::Reduced => 2.0 * self.alpha.sqrt() * r.powf(-0.5 * self.beta),
            Form::General { gamma, delta } => 2.0 * gamma * delta * r.powf(-delta - 1.0),
        };
        Complex64::new(real, imag)
    }

    pub fn q(&self, r: f64) -> Complex64 {
        let eps = self.branch.sign();
        let l2 = self.centrifugal() / (r * r);
        match self.form {
            Form::Reduced => {
                let sa = self.alpha.sqrt();
                let half = 0.5 * self.beta;
                let re = -half * sa * r.powf(-half - 1.0) - l2;
                let im = 2.0 * eps * (self.alpha * self.kappa).sqrt() * r.powf(-half);
                Complex64::new(re, im)
            }
            Form::General { gamma, delta } => {
                let gd = gamma * delta;
                let re = gd * gd * r.powf(-2.0 * delta - 2.0)
                    - gd * (delta + 1.0) * r.powf(-delta - 2.0)
                    - self.alpha * r.powf(-self.beta)
                    - l2;
                let im = 2.0 * eps * gd * self.kappa.sqrt() * r.powf(-delta - 1.0);
                Complex64::new(re, im)
            }
        }
    }
}
