//! Scalar indices of the problem and admissible Lebesgue exponents.

use crate::{Error, Result};
use libm::sqrt;

/// Dimension, coupling and the derived spectral indices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralParams {
    pub d: u32,
    pub a: f64,
    /// (d−2)/2 − ν₀
    pub sigma: f64,
    /// √(((d−2)/2)² + a)
    pub nu0: f64,
    /// (d−2)/2
    pub lambda0: f64,
    /// d/σ, or +∞ when σ ≤ 0
    pub p0: f64,
}

impl SpectralParams {
    pub fn new(d: u32, a: f64) -> Result<Self> {
        make_params(d, a)
    }

    /// Lowest admissible coupling −(d−2)²/4.
    pub fn coupling_floor(d: u32) -> f64 {
        let h = (d as f64 - 2.0) / 2.0;
        -h * h
    }

    pub fn mode(&self, k: u32) -> ModeIndices {
        mode_indices(self, k)
    }

    /// Order N = ⌊(d−1)/2⌋ + 1 used by the multiplier conditions.
    pub fn bc_order(&self) -> u32 {
        (self.d - 1) / 2 + 1
    }
}

/// Builds [`SpectralParams`]; fails below the critical coupling.
pub fn make_params(d: u32, a: f64) -> Result<SpectralParams> {
    if d < 2 {
        return Err(Error::domain("dimension must be at least 2"));
    }
    if !a.is_finite() {
        return Err(Error::domain("coupling must be finite"));
    }
    let floor = SpectralParams::coupling_floor(d);
    if a < floor {
        return Err(Error::Subcritical { a, floor });
    }
    let lambda0 = (d as f64 - 2.0) / 2.0;
    let nu0 = sqrt(lambda0 * lambda0 + a);
    let sigma = lambda0 - nu0;
    let p0 = if sigma > 0.0 { d as f64 / sigma } else { f64::INFINITY };
    Ok(SpectralParams { d, a, sigma, nu0, lambda0, p0 })
}

/// Per-degree indices μ_k, ν_k, a_k = (μ_k+ν_k)/2, b_k = (μ_k−ν_k)/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeIndices {
    pub k: u32,
    pub mu: f64,
    pub nu: f64,
    pub a_k: f64,
    pub b_k: f64,
}

pub fn mode_indices(params: &SpectralParams, k: u32) -> ModeIndices {
    let mu = params.lambda0 + k as f64;
    let nu = sqrt(mu * mu + params.a);
    // b_k = (μ−ν)/2 = −a/(2(μ+ν)) without cancellation
    let b_k = if params.a == 0.0 { 0.0 } else { -params.a / (2.0 * (mu + nu)) };
    ModeIndices { k, mu, nu, a_k: 0.5 * (mu + nu), b_k }
}

/// Open interval (lo, hi) of admissible 1/p values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndexInterval {
    pub lo: f64,
    pub hi: f64,
}

impl IndexInterval {
    pub fn is_empty(&self) -> bool {
        !(self.lo < self.hi)
    }

    /// Strict membership.
    pub fn contains(&self, x: f64) -> bool {
        self.lo < x && x < self.hi
    }

    /// The same interval expressed in p: (1/hi, 1/lo).
    pub fn p_range(&self) -> (f64, f64) {
        (1.0 / self.hi, if self.lo > 0.0 { 1.0 / self.lo } else { f64::INFINITY })
    }
}

/// Operators whose L^p range is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorTag {
    /// W on L^p
    W,
    /// W* on L^p
    WStar,
    /// W on the Sobolev space of order α
    WSobolev,
    /// W* on the Sobolev space of order β
    WStarSobolev,
    /// R^α = (−Δ)^{α/2} L_a^{−α/2}
    Riesz,
    /// R^{−β} = L_a^{β/2} (−Δ)^{−β/2}
    InverseRiesz,
}

impl OperatorTag {
    pub const ALL: [OperatorTag; 6] = [
        OperatorTag::W,
        OperatorTag::WStar,
        OperatorTag::WSobolev,
        OperatorTag::WStarSobolev,
        OperatorTag::Riesz,
        OperatorTag::InverseRiesz,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            OperatorTag::W => "W",
            OperatorTag::WStar => "W*",
            OperatorTag::WSobolev => "W on W^{alpha,p}",
            OperatorTag::WStarSobolev => "W* on W^{beta,p}",
            OperatorTag::Riesz => "R^alpha",
            OperatorTag::InverseRiesz => "R^{-beta}",
        }
    }

    /// Open window of the order parameter, or `None` when the order is ignored.
    pub fn order_window(&self, params: &SpectralParams) -> Option<(f64, f64)> {
        let d = params.d as f64;
        match self {
            OperatorTag::W | OperatorTag::WStar => None,
            OperatorTag::WSobolev | OperatorTag::Riesz => Some((-d, 2.0 + 2.0 * params.nu0)),
            OperatorTag::WStarSobolev | OperatorTag::InverseRiesz => Some((-2.0 * params.nu0 - 2.0, d)),
        }
    }
}

/// Open interval of 1/p for which the tagged operator is bounded on L^p.
pub fn admissible_p(params: &SpectralParams, tag: OperatorTag, order: f64) -> Result<IndexInterval> {
    if let Some((lo, hi)) = tag.order_window(params) {
        if !(lo < order && order < hi) {
            return Err(Error::OrderOutOfWindow { order, lo, hi });
        }
    }
    let d = params.d as f64;
    let s = params.sigma;
    let max3 = |a: f64, b: f64, c: f64| a.max(b).max(c);
    let min3 = |a: f64, b: f64, c: f64| a.min(b).min(c);
    let (lo, hi) = match tag {
        OperatorTag::W | OperatorTag::WStar => ((s / d).max(0.0), ((d - s) / d).min(1.0)),
        OperatorTag::WSobolev => (max3(0.0, s / d, (s + order) / d), min3(1.0, (d - s) / d, (d + order) / d)),
        OperatorTag::WStarSobolev => (max3(0.0, s / d, order / d), min3(1.0, (d - s) / d, (d - s + order) / d)),
        OperatorTag::Riesz => ((0.0f64).max((s + order) / d), min3(1.0, (d - s) / d, (d + order) / d)),
        OperatorTag::InverseRiesz => (max3(0.0, order / d, s / d), (1.0f64).min((d - s + order) / d)),
    };
    Ok(IndexInterval { lo, hi })
}

/// θ_{p,d} = (d+1)/p − (d+3)/2.
pub fn theta_pd(p: f64, d: u32) -> Result<f64> {
    if !(p > 1.0) {
        return Err(Error::domain("θ_{p,d} needs p > 1"));
    }
    Ok((d as f64 + 1.0) / p - (d as f64 + 3.0) / 2.0)
}
