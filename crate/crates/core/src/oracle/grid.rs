use crate::error::{domain, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Uniform,
    /// Uniform in `ln r`.
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGrid {
    r_min: f64,
    r_max: f64,
    n_points: usize,
    spacing: Spacing,
}

impl RadialGrid {
    pub const MIN_POINTS: usize = 16;

    pub fn new(r_min: f64, r_max: f64, n_points: usize, spacing: Spacing) -> Result<Self> {
        if !(r_min > 0.0 && r_min.is_finite()) {
            return domain(format!("r_min must be positive, got {r_min}"));
        }
        if !(r_max > r_min && r_max.is_finite()) {
            return domain(format!("r_max must exceed r_min, got [{r_min}, {r_max}]"));
        }
        if n_points < Self::MIN_POINTS {
            return domain(format!(
                "grid needs at least {} points, got {n_points}",
                Self::MIN_POINTS
            ));
        }
        Ok(Self {
            r_min,
            r_max,
            n_points,
            spacing,
        })
    }

    pub fn uniform(r_min: f64, r_max: f64, n_points: usize) -> Result<Self> {
        Self::new(r_min, r_max, n_points, Spacing::Uniform)
    }

    pub fn log(r_min: f64, r_max: f64, n_points: usize) -> Result<Self> {
        Self::new(r_min, r_max, n_points, Spacing::Log)
    }

    pub fn r_min(&self) -> f64 {
        self.r_min
    }
    pub fn r_max(&self) -> f64 {
        self.r_max
    }
    pub fn len(&self) -> usize {
        self.n_points
    }
    pub fn is_empty(&self) -> bool {
        false
    }
    pub fn spacing(&self) -> Spacing {
        self.spacing
    }

    /// Step in `r` (uniform) or in `ln r` (log).
    pub fn step(&self) -> f64 {
        let intervals = (self.n_points - 1) as f64;
        match self.spacing {
            Spacing::Uniform => (self.r_max - self.r_min) / intervals,
            Spacing::Log => (self.r_max / self.r_min).ln() / intervals,
        }
    }

    pub fn node(&self, i: usize) -> f64 {
        if i == 0 {
            return self.r_min;
        }
        if i == self.n_points - 1 {
            return self.r_max;
        }
        match self.spacing {
            Spacing::Uniform => self.r_min + i as f64 * self.step(),
            Spacing::Log => (self.r_min.ln() + i as f64 * self.step()).exp(),
        }
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n_points).map(|i| self.node(i)).collect()
    }

    /// Same interval with twice as many intervals; every node of `self`
    /// is a node of the refined grid.
    pub fn refined(&self) -> Self {
        Self {
            n_points: 2 * self.n_points - 1,
            ..*self
        }
    }
}
