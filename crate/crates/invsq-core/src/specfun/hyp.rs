//! Gauss hypergeometric series on [0, 1).

use super::gamma::{gamma, rgamma};
use crate::{Error, Result};
use libm::{fabs, floor, pow};

/// Term budget and tolerances for truncated series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesBudget {
    pub max_terms: usize,
    pub abs_tol: f64,
    pub rel_tol: f64,
}

impl Default for SeriesBudget {
    fn default() -> Self {
        SeriesBudget { max_terms: 200_000, abs_tol: 1e-300, rel_tol: 1e-16 }
    }
}

impl SeriesBudget {
    pub fn new(max_terms: usize, abs_tol: f64, rel_tol: f64) -> Result<Self> {
        if max_terms == 0 || !(abs_tol > 0.0) || !(rel_tol > 0.0) {
            return Err(Error::domain("series budget needs max_terms ≥ 1 and positive tolerances"));
        }
        Ok(SeriesBudget { max_terms, abs_tol, rel_tol })
    }
}

/// ₂F₁(a, b; c; x) by the Gauss series, 0 ≤ x < 1.
pub fn hyp2f1(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    hyp2f1_with(a, b, c, x, SeriesBudget::default())
}

pub fn hyp2f1_with(a: f64, b: f64, c: f64, x: f64, budget: SeriesBudget) -> Result<f64> {
    if c <= 0.0 && c == floor(c) {
        return Err(Error::pole("₂F₁ with c a non-positive integer"));
    }
    if !(0.0..1.0).contains(&x) {
        return Err(Error::domain("₂F₁ series is evaluated on 0 ≤ x < 1"));
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    if x == 0.0 {
        return Ok(1.0);
    }
    for n in 0..budget.max_terms {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * x;
        sum += term;
        if term == 0.0 {
            return Ok(sum);
        }
        // tail bound once the term ratio has settled below one
        let ratio = fabs((a + nf + 1.0) * (b + nf + 1.0) / ((c + nf + 1.0) * (nf + 2.0)) * x);
        if ratio < 1.0 {
            let tail = fabs(term) * ratio / (1.0 - ratio);
            if tail <= budget.abs_tol.max(budget.rel_tol * fabs(sum)) {
                return Ok(sum);
            }
        }
    }
    let nf = budget.max_terms as f64;
    let ratio = fabs((a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * x).min(1.0 - 1e-16);
    Err(Error::BudgetExceeded {
        terms: budget.max_terms,
        partial: sum,
        tail: fabs(term) * ratio / (1.0 - ratio),
    })
}

/// Limit value Γ(c)Γ(a+b−c)/(Γ(a)Γ(b)) of (1−x)^{a+b−c}·₂F₁ as x → 1⁻ (needs c−a−b < 0).
pub fn hyp2f1_near_one_limit(a: f64, b: f64, c: f64) -> Result<f64> {
    if c - a - b >= 0.0 {
        return Err(Error::domain("near-one law needs c − a − b < 0"));
    }
    Ok(gamma(c)? * gamma(a + b - c)? * rgamma(a) * rgamma(b))
}

/// Residual of (1−x)^{a+b−c}₂F₁(a,b;c;x) against the two-term connection
/// formula at 1−x, whose leading term is the near-one law.
///
/// Requires c−a−b < 0 and non-integer c−a−b.
pub fn hyp2f1_near_one_residual(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    let s = c - a - b;
    if s >= 0.0 || s == floor(s) {
        return Err(Error::domain("connection check needs non-integer c − a − b < 0"));
    }
    let y = 1.0 - x;
    let lhs = pow(y, -s) * hyp2f1(a, b, c, x)?;
    let lead = hyp2f1_near_one_limit(a, b, c)? * hyp2f1(c - a, c - b, 1.0 + s, y)?;
    let sub = gamma(c)? * gamma(s)? * rgamma(c - a) * rgamma(c - b) * pow(y, -s) * hyp2f1(a, b, 1.0 - s, y)?;
    Ok(fabs(lhs - lead - sub))
}
