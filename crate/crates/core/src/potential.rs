//! Central potentials written as finite sums of inverse powers,
//! `V(r) = Σ strength · r^(−power)`.

use crate::error::{domain, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialTerm {
    pub strength: f64,
    pub power: f64,
}

impl PotentialTerm {
    pub fn new(strength: f64, power: f64) -> Self {
        Self { strength, power }
    }

    #[inline]
    pub fn eval(&self, r: f64) -> f64 {
        if self.power == 0.0 {
            self.strength
        } else {
            self.strength * r.powf(-self.power)
        }
    }
}

/// A finite list of inverse-power monomials.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Potential {
    terms: Vec<PotentialTerm>,
}

impl Potential {
    pub fn new(terms: Vec<PotentialTerm>) -> Self {
        Self { terms }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: &[(f64, f64)]) -> Self {
        Self::new(
            pairs
                .iter()
                .map(|&(s, p)| PotentialTerm::new(s, p))
                .collect(),
        )
    }

    pub fn terms(&self) -> &[PotentialTerm] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, r: f64) -> f64 {
        self.terms.iter().map(|t| t.eval(r)).sum()
    }

    /// Adds a constant offset (a power-zero term).
    pub fn shifted(&self, offset: f64) -> Self {
        let mut terms = self.terms.clone();
        terms.push(PotentialTerm::new(offset, 0.0));
        Self { terms }
    }

    /// Limit of `V(r)` as `r → ∞` for potentials whose powers are all ≥ 0.
    pub fn value_at_infinity(&self) -> f64 {
        self.terms
            .iter()
            .filter(|t| t.power == 0.0)
            .map(|t| t.strength)
            .sum()
    }

    /// The term with the largest power, i.e. the one dominating as `r → 0`.
    pub fn most_singular(&self) -> Option<PotentialTerm> {
        self.terms
            .iter()
            .filter(|t| t.strength != 0.0)
            .copied()
            .max_by(|a, b| a.power.total_cmp(&b.power))
    }

    pub(crate) fn scaled(&self, factor: f64) -> Self {
        Self::new(
            self.terms
                .iter()
                .map(|t| PotentialTerm::new(t.strength * factor, t.power))
                .collect(),
        )
    }
}

/// The single repulsive monomial `V(r) = α r^(−β)` with `α > 0`, `β > 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialMonomial {
    alpha: f64,
    beta: f64,
}

impl PotentialMonomial {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !alpha.is_finite() || !beta.is_finite() {
            return domain("alpha and beta must be finite");
        }
        if beta <= 2.0 {
            return domain(format!("beta must exceed 2, got {beta}"));
        }
        if alpha <= 0.0 {
            return domain(format!(
                "alpha must be positive (repulsive potential), got {alpha}"
            ));
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn eval(&self, r: f64) -> f64 {
        self.alpha * r.powf(-self.beta)
    }

    pub fn to_potential(&self) -> Potential {
        Potential::new(vec![PotentialTerm::new(self.alpha, self.beta)])
    }
}

/// `V(r) = A/r⁴ + B/r³ + C/r² + D/r` in reduced units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultiTermPotential {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl MultiTermPotential {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        if ![a, b, c, d].iter().all(|v| v.is_finite()) {
            return domain("potential coefficients must be finite");
        }
        if a <= 0.0 {
            return domain(format!("A must be positive, got {a}"));
        }
        Ok(Self { a, b, c, d })
    }

    pub fn eval(&self, r: f64) -> f64 {
        let inv = 1.0 / r;
        inv * (self.d + inv * (self.c + inv * (self.b + inv * self.a)))
    }

    pub fn to_potential(&self) -> Potential {
        Potential::from_pairs(&[(self.a, 4.0), (self.b, 3.0), (self.c, 2.0), (self.d, 1.0)])
    }
}
