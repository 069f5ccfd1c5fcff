use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A precondition on an input value was violated.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested configuration is not supported by the construction.
    #[error("configuration error: {0}")]
    Configuration(String),

    /// The forward recurrence hit an index whose leading coefficient vanishes
    /// and the remaining terms do not cancel.
    #[error("recurrence consistency violated at s = {index}: relative residual {residual:e}")]
    ConsistencyViolation { index: i64, residual: f64 },

    #[error("no convergence: {0}")]
    NoConvergence(String),

    /// `1 + B/(2√A) = 0`, so the slope `b = D/(2c)` is undefined.
    #[error("degenerate log coefficient: c = 1 + B/(2√A) vanishes (mu = -1)")]
    DegenerateC,

    /// The closed-form slope is non-negative, so `y` does not decay at infinity.
    #[error("not normalizable: linear slope b = {slope} must be negative")]
    NotNormalizable { slope: f64 },

    #[error("bracket [{lo}, {hi}] does not contain a sign change of the matching defect ({defect_lo:e}, {defect_hi:e})")]
    Bracket {
        lo: f64,
        hi: f64,
        defect_lo: f64,
        defect_hi: f64,
    },

    /// Integration overflowed; `last_valid` is the last node holding a finite value.
    #[error("integration diverged after node {last_valid} (r = {radius})")]
    Diverged { last_valid: usize, radius: f64 },
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
