//! Laurent-series construction of the interpolating factor
//! `F(r) = r^ω σ(r)`, `σ(r) = Σ a_s r^s`, for even `β`.
//!
//! With `ω = β/4` and `b = β/2` the coefficients obey the four-term relation
//!
//! ```text
//! 2√α (s+b+1) a_{s+b+1} + 2iε√(ακ) a_{s+b}
//!   + [(s+2)(s+1) + β²/16 + β(s/2 + θ) − (λ² − 1/4)] a_{s+2}
//!   + iε√κ [2(s+1) + β/2] a_{s+1} = 0
//! ```
//!
//! where `θ = 3/4` ([`RecurrenceForm::Exact`]). The full solution is
//! `y(r) = exp(−γ r^(−δ)) exp(iε r √κ) r^ω σ(r)`.
//!
//! The one-sided series is asymptotic rather than convergent: its
//! coefficients grow factorially, so a truncated series is an accurate
//! solution only for small `r`. [`ode_residual`] measures how accurate.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::asymptotics::{origin_params, Branch, OriginAsymptotics};
use crate::error::{domain, Error, Result};
use crate::potential::PotentialMonomial;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Tolerance for the index-zero consistency constraint of the forward solve.
pub const CONSISTENCY_TOLERANCE: f64 = 1e-10;
/// Largest acceptable relative residual of a windowed null vector.
pub const WINDOWED_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// `a_s = 0` for `s < 0`, `a_0 = 1`, solved forward.
    OneSided,
    /// Minimal singular vector of the truncated banded system.
    Windowed,
}

impl Strategy {
    pub fn default_window(self) -> (i64, i64) {
        match self {
            Strategy::OneSided => (0, 40),
            Strategy::Windowed => (-10, 40),
        }
    }
}

/// Which `a_{s+2}` coefficient the recurrence uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RecurrenceForm {
    /// `β(s/2 + 3/4)`: obtained by substituting the series into the
    /// equation for `σ`. Truncated series built with it solve the radial
    /// equation up to the truncation tail.
    #[default]
    Exact,
    /// `β(s/2 − 1/4)`: the variant found in print. It differs from
    /// [`RecurrenceForm::Exact`] by `β a_{s+2}` and leaves an `O(β/r²)`
    /// relative residual in the radial equation; kept only to reproduce
    /// coefficient tables computed with it.
    Literature,
}

impl RecurrenceForm {
    fn shift(self) -> f64 {
        match self {
            RecurrenceForm::Exact => 0.75,
            RecurrenceForm::Literature => -0.25,
        }
    }
}

/// `ω = β/4` together with whether `r^ω` is multi-valued around the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Omega {
    pub value: f64,
    pub polydromic: bool,
}

pub fn omega_exponent(beta: f64) -> Result<Omega> {
    if !(beta > 2.0) {
        return domain(format!("beta must exceed 2, got {beta}"));
    }
    let value = 0.25 * beta;
    Ok(Omega {
        value,
        polydromic: value.fract() != 0.0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    pot: PotentialMonomial,
    kappa: f64,
    lambda: f64,
    branch: Branch,
    s_min: i64,
    s_max: i64,
    strategy: Strategy,
    form: RecurrenceForm,
}

impl SeriesConfig {
    /// One-sided strategy on the default window `[0, 40]`.
    pub fn new(pot: PotentialMonomial, kappa: f64, lambda: f64, branch: Branch) -> Result<Self> {
        let beta = pot.beta();
        if beta.fract() != 0.0 {
            return Err(Error::Configuration(format!(
                "beta = {beta} is not an integer: the substitution does not produce a power \
                 series, so no coefficient recurrence exists (even integer beta only)"
            )));
        }
        if beta as i64 % 2 != 0 {
            return Err(Error::Configuration(format!(
                "beta = {beta} is odd: the substitution does not produce a power series, \
                 so no coefficient recurrence exists (even integer beta only)"
            )));
        }
        if !(kappa > 0.0 && kappa.is_finite()) {
            return domain(format!("series solutions need kappa > 0, got {kappa}"));
        }
        if !(lambda >= 0.0 && lambda.is_finite()) {
            return domain(format!("lambda must be >= 0, got {lambda}"));
        }
        let (s_min, s_max) = Strategy::OneSided.default_window();
        Ok(Self {
            pot,
            kappa,
            lambda,
            branch,
            s_min,
            s_max,
            strategy: Strategy::OneSided,
            form: RecurrenceForm::Exact,
        })
    }

    /// Switches strategy and resets the window to that strategy's default.
    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        (self.s_min, self.s_max) = strategy.default_window();
        self
    }

    pub fn with_window(mut self, s_min: i64, s_max: i64) -> Result<Self> {
        if s_min > 0 || s_max < 0 {
            return domain(format!("window [{s_min}, {s_max}] must contain index 0"));
        }
        self.s_min = s_min;
        self.s_max = s_max;
        Ok(self)
    }

    pub fn with_form(mut self, form: RecurrenceForm) -> Self {
        self.form = form;
        self
    }

    pub fn with_branch(mut self, branch: Branch) -> Self {
        self.branch = branch;
        self
    }

    pub fn potential(&self) -> &PotentialMonomial {
        &self.pot
    }
    pub fn kappa(&self) -> f64 {
        self.kappa
    }
    pub fn lambda(&self) -> f64 {
        self.lambda
    }
    pub fn branch(&self) -> Branch {
        self.branch
    }
    pub fn window(&self) -> (i64, i64) {
        (self.s_min, self.s_max)
    }
    pub fn strategy(&self) -> Strategy {
        self.strategy
    }
    pub fn form(&self) -> RecurrenceForm {
        self.form
    }

    /// `b = β/2`.
    pub fn half_beta(&self) -> i64 {
        (self.pot.beta() / 2.0) as i64
    }

    /// The four `(index, coefficient)` pairs of the relation at `s`, with
    /// the defining (highest) index first. For `β = 4` two indices coincide.
    pub fn recurrence_terms(&self, s: i64) -> [(i64, Complex64); 4] {
        let b = self.half_beta();
        let beta = self.pot.beta();
        let eps = self.branch.sign();
        let sa = self.pot.alpha().sqrt();
        let sk = self.kappa.sqrt();
        let sf = s as f64;
        let quad =
            (sf + 2.0) * (sf + 1.0) + beta * beta / 16.0 + beta * (0.5 * sf + self.form.shift())
                - (self.lambda * self.lambda - 0.25);
        [
            (
                s + b + 1,
                Complex64::new(2.0 * sa * (s + b + 1) as f64, 0.0),
            ),
            (s + b, I * (2.0 * eps * sa * sk)),
            (s + 2, Complex64::new(quad, 0.0)),
            (s + 1, I * (eps * sk * (2.0 * (sf + 1.0) + 0.5 * beta))),
        ]
    }
}

/// Coefficients `a_s` on a contiguous window; reads outside return zero.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentCoefficients {
    s_min: i64,
    values: Vec<Complex64>,
}

impl LaurentCoefficients {
    pub fn zeros(s_min: i64, s_max: i64) -> Self {
        assert!(s_max >= s_min);
        Self {
            s_min,
            values: vec![Complex64::new(0.0, 0.0); (s_max - s_min + 1) as usize],
        }
    }

    pub fn from_values(s_min: i64, values: Vec<Complex64>) -> Self {
        Self { s_min, values }
    }

    pub fn s_min(&self) -> i64 {
        self.s_min
    }

    pub fn s_max(&self) -> i64 {
        self.s_min + self.values.len() as i64 - 1
    }

    pub fn get(&self, s: i64) -> Complex64 {
        if s < self.s_min || s > self.s_max() {
            return Complex64::new(0.0, 0.0);
        }
        self.values[(s - self.s_min) as usize]
    }

    pub fn set(&mut self, s: i64, value: Complex64) {
        let i = (s - self.s_min) as usize;
        self.values[i] = value;
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(move |(i, v)| (self.s_min + i as i64, *v))
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn conj(&self) -> Self {
        Self {
            s_min: self.s_min,
            values: self.values.iter().map(|v| v.conj()).collect(),
        }
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            s_min: self.s_min,
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }
}

/// Left-hand side of the recurrence at `s`; zero when the relation holds.
pub fn recurrence_residual(
    coeffs: &LaurentCoefficients,
    s: i64,
    config: &SeriesConfig,
) -> Complex64 {
    config
        .recurrence_terms(s)
        .iter()
        .map(|&(idx, c)| c * coeffs.get(idx))
        .sum()
}

/// Residual at `s` divided by the largest participating term (0 if all vanish).
pub fn relative_recurrence_residual(
    coeffs: &LaurentCoefficients,
    s: i64,
    config: &SeriesConfig,
) -> f64 {
    let terms = config.recurrence_terms(s);
    let scale = terms
        .iter()
        .map(|&(idx, c)| (c * coeffs.get(idx)).norm())
        .fold(0.0, f64::max);
    if scale == 0.0 {
        return 0.0;
    }
    recurrence_residual(coeffs, s, config).norm() / scale
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSolution {
    pub omega: f64,
    pub coefficients: LaurentCoefficients,
    pub config: SeriesConfig,
    /// Index whose coefficient is fixed to 1.
    pub normalization_index: i64,
}

impl SeriesSolution {
    /// Wraps externally supplied coefficients, e.g. a hand-truncated series.
    pub fn from_coefficients(config: SeriesConfig, coefficients: LaurentCoefficients) -> Self {
        let normalization_index = coefficients
            .iter()
            .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
            .map(|(s, _)| s)
            .unwrap_or(0);
        Self {
            omega: 0.25 * config.pot.beta(),
            coefficients,
            config,
            normalization_index,
        }
    }

    pub fn origin(&self) -> OriginAsymptotics {
        origin_params(&self.config.pot)
    }

    /// Indices `s` whose defining index `s + b + 1` lies in the window.
    pub fn defining_indices(&self) -> impl Iterator<Item = i64> {
        let b = self.config.half_beta();
        (self.coefficients.s_min() - b - 1)..=(self.coefficients.s_max() - b - 1)
    }

    /// Largest relative recurrence residual over all defining indices.
    pub fn max_recurrence_residual(&self) -> f64 {
        self.defining_indices()
            .map(|s| relative_recurrence_residual(&self.coefficients, s, &self.config))
            .fold(0.0, f64::max)
    }
}

pub fn build_series(config: &SeriesConfig) -> Result<SeriesSolution> {
    let b = config.half_beta();
    let (s_min, s_max) = config.window();
    if config.strategy == Strategy::Windowed && s_max - s_min < b + 1 {
        return domain(format!(
            "window [{s_min}, {s_max}] too narrow: need s_max - s_min >= b + 1 = {}",
            b + 1
        ));
    }
    match config.strategy {
        Strategy::OneSided => build_one_sided(config),
        Strategy::Windowed => build_windowed(config),
    }
}

fn build_one_sided(config: &SeriesConfig) -> Result<SeriesSolution> {
    let b = config.half_beta();
    let (s_min, s_max) = config.window();
    let lead = 2.0 * config.pot.alpha().sqrt();
    let mut coeffs = LaurentCoefficients::zeros(s_min, s_max);
    coeffs.set(0, Complex64::new(1.0, 0.0));

    for n in 0..=s_max {
        let s = n - b - 1;
        let terms = config.recurrence_terms(s);
        let rest: Complex64 = terms[1..].iter().map(|&(i, c)| c * coeffs.get(i)).sum();
        if n == 0 {
            // leading coefficient 2√α·n vanishes: the relation is a constraint
            let scale = terms[1..]
                .iter()
                .map(|&(i, c)| (c * coeffs.get(i)).norm())
                .fold(0.0, f64::max);
            if scale > 0.0 && rest.norm() > CONSISTENCY_TOLERANCE * scale {
                return Err(Error::ConsistencyViolation {
                    index: s,
                    residual: rest.norm() / scale,
                });
            }
            continue;
        }
        coeffs.set(n, -rest / (lead * n as f64));
    }

    Ok(SeriesSolution {
        omega: 0.25 * config.pot.beta(),
        coefficients: coeffs,
        config: *config,
        normalization_index: 0,
    })
}

// Rows: every s whose defining index s+b+1 lies in the window; entries
// falling outside the window are dropped (read as zero).
fn windowed_matrix(config: &SeriesConfig) -> DMatrix<Complex64> {
    let b = config.half_beta();
    let (s_min, s_max) = config.window();
    let n = (s_max - s_min + 1) as usize;
    let mut m = DMatrix::<Complex64>::zeros(n, n);
    for (row, top) in (s_min..=s_max).enumerate() {
        for (idx, c) in config.recurrence_terms(top - b - 1) {
            if (s_min..=s_max).contains(&idx) {
                m[(row, (idx - s_min) as usize)] += c;
            }
        }
    }
    m
}

fn build_windowed(config: &SeriesConfig) -> Result<SeriesSolution> {
    let (s_min, _) = config.window();
    let m = windowed_matrix(config);
    let svd = m.clone().svd(false, true);
    let v_t = svd
        .v_t
        .ok_or_else(|| Error::NoConvergence("SVD did not produce right singular vectors".into()))?;
    let k = svd
        .singular_values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .expect("non-empty window");
    let v: Vec<Complex64> = v_t.row(k).iter().map(|z| z.conj()).collect();

    let mv = &m * nalgebra::DVector::from_column_slice(&v);
    let norm_v = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let rel = mv.norm() / (m.norm() * norm_v);
    if !(rel <= WINDOWED_TOLERANCE) {
        return Err(Error::NoConvergence(format!(
            "windowed null vector has relative residual {rel:e} > {WINDOWED_TOLERANCE:e}"
        )));
    }

    let (imax, vmax) = v
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
        .map(|(i, z)| (i, *z))
        .expect("non-empty window");
    let values = v.iter().map(|z| z / vmax).collect();
    Ok(SeriesSolution {
        omega: 0.25 * config.pot.beta(),
        coefficients: LaurentCoefficients::from_values(s_min, values),
        config: *config,
        normalization_index: s_min + imax as i64,
    })
}

/// `y`, `y'` and `y''` of the full solution at `r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolutionJet {
    pub value: Complex64,
    pub first: Complex64,
    pub second: Complex64,
}

fn check_origin(sol: &SeriesSolution, origin: &OriginAsymptotics) -> Result<()> {
    let expected = sol.origin();
    let close = |a: f64, b: f64| (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0);
    if !close(expected.gamma, origin.gamma) || !close(expected.delta, origin.delta) {
        return domain("origin asymptotics do not belong to the series' potential");
    }
    Ok(())
}

/// Analytic value and derivatives of `y = exp(φ) r^ω σ(r)`.
pub fn evaluate_jet(
    sol: &SeriesSolution,
    origin: &OriginAsymptotics,
    r: f64,
) -> Result<SolutionJet> {
    if !(r > 0.0 && r.is_finite()) {
        return domain(format!("radius must be positive, got {r}"));
    }
    check_origin(sol, origin)?;
    let cfg = &sol.config;
    let eps = cfg.branch.sign();
    let sk = cfg.kappa.sqrt();
    let (gamma, delta) = (origin.gamma, origin.delta);

    // σ = r^{s_min} P(r); Horner for P, P', P''.
    let zero = Complex64::new(0.0, 0.0);
    let (mut p0, mut p1, mut p2) = (zero, zero, zero);
    for &c in sol.coefficients.values().iter().rev() {
        p2 = p2 * r + p1 * 2.0;
        p1 = p1 * r + p0;
        p0 = p0 * r + c;
    }

    // G = r^e P with e = ω + s_min.
    let e = sol.omega + sol.coefficients.s_min() as f64;
    let re = r.powf(e);
    let g0 = p0 * re;
    let g1 = (p1 + p0 * (e / r)) * re;
    let g2 = (p2 + p1 * (2.0 * e / r) + p0 * (e * (e - 1.0) / (r * r))) * re;

    let rd = r.powf(-delta);
    let phase = Complex64::from_polar(1.0, eps * sk * r);
    let factor = phase * (-gamma * rd).exp();
    let phi1 = Complex64::new(gamma * delta * rd / r, eps * sk);
    let phi2 = Complex64::new(-gamma * delta * (delta + 1.0) * rd / (r * r), 0.0);

    Ok(SolutionJet {
        value: factor * g0,
        first: factor * (g1 + phi1 * g0),
        second: factor * (g2 + phi1 * g1 * 2.0 + (phi2 + phi1 * phi1) * g0),
    })
}

/// `y(r) = exp(−γ r^(−δ)) exp(iε r √κ) r^ω σ(r)`.
pub fn evaluate_solution(
    sol: &SeriesSolution,
    origin: &OriginAsymptotics,
    r: f64,
) -> Result<Complex64> {
    Ok(evaluate_jet(sol, origin, r)?.value)
}

/// `y'' + (κ − α r^(−β) − (λ² − 1/4)/r²) y` with analytic `y''`.
pub fn operator_residual(
    sol: &SeriesSolution,
    origin: &OriginAsymptotics,
    r: f64,
) -> Result<Complex64> {
    let jet = evaluate_jet(sol, origin, r)?;
    let cfg = &sol.config;
    let q = cfg.kappa - cfg.pot.eval(r) - (cfg.lambda * cfg.lambda - 0.25) / (r * r);
    Ok(jet.second + jet.value * q)
}

/// Local magnitude of the equation's coefficient,
/// `max(|κ|, α r^(−β), |λ² − 1/4|/r²)`.
pub fn equation_scale(cfg: &SeriesConfig, r: f64) -> f64 {
    let centrifugal = (cfg.lambda * cfg.lambda - 0.25).abs() / (r * r);
    cfg.kappa.abs().max(cfg.pot.eval(r)).max(centrifugal)
}

/// `|y'' + Q y| / max(1, |y| · scale)` with `scale` from [`equation_scale`].
pub fn ode_residual(sol: &SeriesSolution, origin: &OriginAsymptotics, r: f64) -> Result<f64> {
    let jet = evaluate_jet(sol, origin, r)?;
    let cfg = &sol.config;
    let q = cfg.kappa - cfg.pot.eval(r) - (cfg.lambda * cfg.lambda - 0.25) / (r * r);
    let res = (jet.second + jet.value * q).norm();
    Ok(res / (jet.value.norm() * equation_scale(cfg, r)).max(1.0))
}
