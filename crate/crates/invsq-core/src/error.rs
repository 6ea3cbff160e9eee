use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("coupling a = {a} is below the critical value {floor}")]
    Subcritical { a: f64, floor: f64 },
    #[error("order {order} outside the validity window ({lo}, {hi})")]
    OrderOutOfWindow { order: f64, lo: f64, hi: f64 },
    #[error("resonant order: {0}")]
    Resonance(String),
    #[error("series budget exceeded after {terms} terms (partial sum {partial}, tail estimate {tail})")]
    BudgetExceeded { terms: usize, partial: f64, tail: f64 },
    #[error("no convergence: {0}")]
    Nonconvergence(String),
    #[error("grid: {0}")]
    Grid(String),
    #[error("under-resolved: {0}")]
    UnderResolved(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub(crate) fn pole(msg: impl Into<String>) -> Self {
        Error::Pole(msg.into())
    }
    pub(crate) fn nonconv(msg: impl Into<String>) -> Self {
        Error::Nonconvergence(msg.into())
    }
    pub(crate) fn grid(msg: impl Into<String>) -> Self {
        Error::Grid(msg.into())
    }

    /// True for errors caused by numerical non-convergence rather than bad input.
    pub fn is_nonconvergence(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. } | Error::Nonconvergence(_))
    }
}
