//! Forward differences of mode sequences and the Bonami–Clerc quantities
//!
//! ```text
//! (BCi)  sup_k |C_k|
//! (BCii) 2^{j(N−1)} Σ_{k=2^j}^{2^{j+1}} |Δ^N C_k|   per dyadic block j
//! ```
//!
//! together with the sequences the kernel estimates feed into them and the
//! lattice sup of k^N (n+1) |Δ_k^N E_{k,n}| for both coefficient families.

use crate::params::SpectralParams;
use crate::riesz::{c_coefficient, riesz_coeffs, Direction};
use crate::waveop::{coeff_table, Branch};
use crate::{Error, Result};
use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;
use libm::{exp, fabs, log, pow};

use crate::specfun::sin_pi;

/// Values C_0, …, C_K.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceSample {
    pub values: Vec<f64>,
}

impl SequenceSample {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::domain("empty sequence"));
        }
        if let Some(k) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::domain(format!("sequence value at k = {k} is not finite")));
        }
        Ok(SequenceSample { values })
    }

    pub fn from_fn(k_max: usize, f: impl FnMut(usize) -> f64) -> Result<Self> {
        Self::new((0..=k_max).map(f).collect())
    }

    /// Largest index K.
    pub fn k_max(&self) -> usize {
        self.values.len() - 1
    }
}

/// Δ^N C_k for k = 0..K−N.
pub fn finite_diff(seq: &SequenceSample, order: usize) -> Result<SequenceSample> {
    if order == 0 {
        return Ok(seq.clone());
    }
    if order > seq.k_max() {
        return Err(Error::domain(format!("window too short: order {order} needs K >= {order}, have {}", seq.k_max())));
    }
    let mut v = seq.values.clone();
    for _ in 0..order {
        for k in 0..v.len() - 1 {
            v[k] = v[k + 1] - v[k];
        }
        v.pop();
    }
    Ok(SequenceSample { values: v })
}

/// (BCi) and (BCii) quantities at one order.
#[derive(Debug, Clone, PartialEq)]
pub struct BcReport {
    pub order: usize,
    pub sup: f64,
    /// indexed by j = 0..=j_max
    pub dyadic: Vec<f64>,
}

impl BcReport {
    pub fn dyadic_sup(&self) -> f64 {
        self.dyadic.iter().copied().fold(0.0, f64::max)
    }

    /// The block at j_hi is at most `factor` times the block at j_lo.
    pub fn no_growth(&self, j_lo: usize, j_hi: usize, factor: f64) -> bool {
        match (self.dyadic.get(j_lo), self.dyadic.get(j_hi)) {
            (Some(lo), Some(hi)) => *hi <= factor * *lo,
            _ => false,
        }
    }
}

pub fn bc_report(seq: &SequenceSample, order: usize, j_max: usize) -> Result<BcReport> {
    let need = (1usize << (j_max + 1)) + order;
    if seq.k_max() < need {
        return Err(Error::domain(format!("insufficient sample: K = {} < 2^(j_max+1) + N = {need}", seq.k_max())));
    }
    let sup = seq.values.iter().fold(0.0f64, |m, v| m.max(fabs(*v)));
    let diff = finite_diff(seq, order)?;
    let dyadic = (0..=j_max)
        .map(|j| {
            let block: f64 = diff.values[1 << j..=1 << (j + 1)].iter().map(|v| fabs(*v)).sum();
            pow(2.0, (j as f64) * (order as f64 - 1.0)) * block
        })
        .collect();
    Ok(BcReport { order, sup, dyadic })
}

/// Reports at every order 1..=N.
pub fn bc_reports_all_orders(seq: &SequenceSample, order: usize, j_max: usize) -> Result<Vec<BcReport>> {
    (1..=order).map(|m| bc_report(seq, m, j_max)).collect()
}

/// sup_{1≤k≤K−N} k^w |Δ^N C_k| and where it is attained.
pub fn scaled_difference_sup(seq: &SequenceSample, order: usize, weight: f64) -> Result<(f64, usize)> {
    let diff = finite_diff(seq, order)?;
    let mut best = (0.0, 0);
    for (k, v) in diff.values.iter().enumerate().skip(1) {
        let s = pow(k as f64, weight) * fabs(*v);
        if s > best.0 {
            best = (s, k);
        }
    }
    Ok(best)
}

/// Difference and derivative sides of the smooth sufficiency condition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmoothReport {
    pub order: usize,
    /// sup_{1≤k≤K} k^N |Δ^N f(k)|
    pub difference_sup: f64,
    /// sup_{1≤k≤K} k^N |f^{(N)}(k)|, derivative from a central difference of step 1/16
    pub derivative_sup: f64,
}

pub fn smooth_sufficiency_check(f: impl Fn(f64) -> f64, order: usize, k_max: usize) -> SmoothReport {
    let h = 1.0 / 16.0;
    let binom = |n: usize, m: usize| (0..m).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64);
    let mut diff_sup: f64 = 0.0;
    let mut der_sup: f64 = 0.0;
    for k in 1..=k_max {
        let kf = k as f64;
        let mut fd = 0.0;
        let mut cd = 0.0;
        for m in 0..=order {
            let sign = if (order - m) % 2 == 0 { 1.0 } else { -1.0 };
            let c = sign * binom(order, m);
            fd += c * f(kf + m as f64);
            cd += c * f(kf + (m as f64 - 0.5 * order as f64) * h);
        }
        let w = pow(kf, order as f64);
        diff_sup = diff_sup.max(w * fabs(fd));
        der_sup = der_sup.max(w * fabs(cd) / pow(h, order as f64));
    }
    SmoothReport { order, difference_sup: diff_sup, derivative_sup: der_sup }
}

/// Leibniz residual and the product's BC quantities.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductReport {
    /// max_k |Δ^N(FG)_k − Σ_m binom(N,m) Δ^{N−m}F_k Δ^m G_{k+N−m}|
    pub leibniz_residual: f64,
    pub product: BcReport,
}

pub fn product_rule_check(f: &SequenceSample, g: &SequenceSample, order: usize) -> Result<ProductReport> {
    if f.values.len() != g.values.len() {
        return Err(Error::domain("sequences must have a common length"));
    }
    let fg = SequenceSample::new(f.values.iter().zip(&g.values).map(|(a, b)| a * b).collect())?;
    let lhs = finite_diff(&fg, order)?;
    let df: Vec<SequenceSample> = (0..=order).map(|m| finite_diff(f, m)).collect::<Result<_>>()?;
    let dg: Vec<SequenceSample> = (0..=order).map(|m| finite_diff(g, m)).collect::<Result<_>>()?;
    let mut residual: f64 = 0.0;
    for (k, l) in lhs.values.iter().enumerate() {
        let mut binom = 1.0;
        let mut rhs = 0.0;
        for m in 0..=order {
            rhs += binom * df[order - m].values[k] * dg[m].values[k + order - m];
            binom = binom * (order - m) as f64 / (m + 1) as f64;
        }
        residual = residual.max(fabs(l - rhs));
    }
    let mut j_max = 0;
    while (1usize << (j_max + 2)) + order <= fg.k_max() {
        j_max += 1;
    }
    Ok(ProductReport { leibniz_residual: residual, product: bc_report(&fg, order, j_max)? })
}

/// sin(π b_k), k = 0..=K.
pub fn sin_pi_b_sequence(params: &SpectralParams, k_max: usize) -> Result<SequenceSample> {
    SequenceSample::from_fn(k_max, |k| sin_pi(params.mode(k as u32).b_k))
}

/// C_k^α, k = 0..=K.
pub fn riesz_c_sequence(params: &SpectralParams, alpha: f64, dir: Direction, k_max: usize) -> Result<SequenceSample> {
    let values = (0..=k_max).map(|k| c_coefficient(params, k as u32, alpha, dir)).collect::<Result<Vec<_>>>()?;
    SequenceSample::new(values)
}

/// Which side-of-diagonal sequence from the wave-operator estimates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelSequence {
    /// (s/r)^{μ_k}
    TPlus,
    /// sin(−πb_k)/π · [(s/r)^{μ_k−μ₀} − 1]/(1 − (s/r)²)
    TTildePlus,
    /// (r/s)^{ν_k}
    TMinus,
    /// sin(πb_k)/π · [(r/s)^{ν_k−ν₀} − 1]/(1 − (r/s)²)
    TTildeMinus,
}

impl KernelSequence {
    pub const ALL: [KernelSequence; 4] =
        [KernelSequence::TPlus, KernelSequence::TTildePlus, KernelSequence::TMinus, KernelSequence::TTildeMinus];

    pub fn name(self) -> &'static str {
        match self {
            KernelSequence::TPlus => "T+",
            KernelSequence::TTildePlus => "T~+",
            KernelSequence::TMinus => "T-",
            KernelSequence::TTildeMinus => "T~-",
        }
    }
}

/// The sequence at a fixed ratio x = min(s/r, r/s) < 1.
pub fn kernel_sequence(params: &SpectralParams, which: KernelSequence, x: f64, k_max: usize) -> Result<SequenceSample> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::domain("ratio must lie in (0, 1)"));
    }
    let lx = log(x);
    let m0 = params.mode(0);
    let denom = 1.0 - x * x;
    SequenceSample::from_fn(k_max, |k| {
        let m = params.mode(k as u32);
        match which {
            KernelSequence::TPlus => exp(m.mu * lx),
            KernelSequence::TTildePlus => sin_pi(-m.b_k) / PI * libm::expm1((m.mu - m0.mu) * lx) / denom,
            KernelSequence::TMinus => exp(m.nu * lx),
            KernelSequence::TTildeMinus => sin_pi(m.b_k) / PI * libm::expm1((m.nu - m0.nu) * lx) / denom,
        }
    })
}

/// 2 sin(∓πb_k)/π · x^{e_k} Σ_n E±_{k,n} x^{2n} at fixed x = min(s/r, r/s) and p.
pub fn remainder_sequence(params: &SpectralParams, branch: Branch, x: f64, p: f64, k_max: usize) -> Result<SequenceSample> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::domain("ratio must lie in (0, 1)"));
    }
    let d = params.d as f64;
    let lx = log(x);
    let x2 = x * x;
    let mut values = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let m = params.mode(k as u32);
        let (e, sign) = match branch {
            Branch::Plus => (0.5 * d - d / p + 1.0 + m.mu, -1.0),
            Branch::Minus => (d / p - 0.5 * d + 1.0 + m.nu, 1.0),
        };
        let pre = 2.0 * sin_pi(sign * m.b_k) / PI * exp(e * lx);
        if pre == 0.0 || fabs(pre) < 1e-300 {
            values.push(0.0);
            continue;
        }
        // terms fall like x^{2n}; stop once below rounding of the partial sum
        let n_cap = ((log(1e-18) / log(x2)) as usize).max(8);
        let table = coeff_table(params, k as u32, branch, n_cap)?;
        let mut sum = 0.0;
        let mut xn = pow(x2, table.n_start as f64);
        for r in &table.residuals {
            sum += r * xn;
            xn *= x2;
        }
        values.push(pre * sum);
    }
    SequenceSample::new(values)
}

/// Lattice sup of k^N (n+1) |Δ_k^N E_{k,n}|.
#[derive(Debug, Clone, PartialEq)]
pub struct AppendixReport {
    pub order: usize,
    pub sup: f64,
    pub argmax_k: usize,
    pub argmax_n: usize,
    /// One entry per coefficient family: E⁺, E⁻ or E1, E2.
    pub family_sups: Vec<f64>,
}

/// With `alpha = None` the wave-operator residuals E±; otherwise the Riesz E1, E2.
/// k runs over 1..=k_max, n over 0..=n_max.
pub fn appendix_bound_check(
    params: &SpectralParams,
    alpha: Option<f64>,
    order: usize,
    k_max: usize,
    n_max: usize,
) -> Result<AppendixReport> {
    if order == 0 {
        return Err(Error::domain("order must be at least 1"));
    }
    let ks = 1..=k_max + order;
    // rows[family][k − 1][n]
    let mut rows: Vec<Vec<Vec<f64>>> = alloc::vec![Vec::new(), Vec::new()];
    let mut n_start = 0;
    for k in ks {
        match alpha {
            None => {
                for (f, branch) in [Branch::Plus, Branch::Minus].into_iter().enumerate() {
                    let t = coeff_table(params, k as u32, branch, n_max)?;
                    n_start = n_start.max(t.n_start);
                    let mut row = alloc::vec![0.0; t.n_start];
                    row.extend_from_slice(&t.residuals);
                    rows[f].push(row);
                }
            }
            Some(al) => {
                let c = riesz_coeffs(params, k as u32, al, Direction::Forward, n_max)?;
                rows[0].push(c.e1);
                rows[1].push(c.e2);
            }
        }
    }
    let mut report = AppendixReport { order, sup: 0.0, argmax_k: 0, argmax_n: 0, family_sups: Vec::new() };
    for fam in &rows {
        let mut fam_sup: f64 = 0.0;
        for n in n_start..=n_max {
            let column = SequenceSample { values: fam.iter().map(|row| row[n]).collect() };
            let diff = finite_diff(&column, order)?;
            for (i, v) in diff.values.iter().enumerate().take(k_max) {
                let k = i + 1;
                let s = pow(k as f64, order as f64) * (n as f64 + 1.0) * fabs(*v);
                fam_sup = fam_sup.max(s);
                if s > report.sup {
                    report.sup = s;
                    report.argmax_k = k;
                    report.argmax_n = n;
                }
            }
        }
        report.family_sups.push(fam_sup);
    }
    Ok(report)
}
