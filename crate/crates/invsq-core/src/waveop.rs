//! Kernels of the wave operators `W_k = H_{ν_k} B_{μ_k}`.
//!
//! With x = s/r, `K̃_k(r,s) = (s/r)^{−d/p} K_k(r,s)` is, below the diagonal,
//!
//! ```text
//! 2 x^{d/2−d/p+1+μ} · sin(−πb)/π · Σ A⁺ₙ x^{2n},
//! A⁺ₙ = Γ(a+n+1)Γ(b+n+1) / (Γ(a+b+n+1) n!)
//! ```
//!
//! and above it the same with y = r/s, exponent d/p−d/2+1+ν and b → −b.
//! Here a = a_k, b = b_k. Away from the diagonal the series is summed with
//! coefficients `sin(∓πb)/π·A±ₙ` written through 1/Γ, which stays finite
//! (and terminates) when b is an integer. Near the diagonal the series is
//! split as `1/(1−X) ± (a/4)(−ln(1−X))/X + Σ E±ₙ Xⁿ`.

use crate::params::{admissible_p, OperatorTag, SpectralParams};
use crate::specfun::identities::{damped_product_integral, default_eps_ladder};
use crate::specfun::{gamma_ratio, rgamma, sin_pi, LnGammaRatio};
use crate::{Error, Result};
use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;
use libm::{exp, expm1, fabs, floor, log, log1p, pow};

/// Which side of the diagonal, equivalently which coefficient family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// s < r, series in (s/r)², coefficients A⁺
    Plus,
    /// s > r, series in (r/s)², coefficients A⁻
    Minus,
}

impl Branch {
    fn shift(self, b: f64) -> f64 {
        match self {
            Branch::Plus => b,
            Branch::Minus => -b,
        }
    }
    fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

/// Point evaluation request.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelQuery {
    pub params: SpectralParams,
    pub k: u32,
    pub p: f64,
    pub r: f64,
    pub s: f64,
}

impl KernelQuery {
    pub fn new(params: SpectralParams, k: u32, p: f64, r: f64, s: f64) -> Self {
        KernelQuery { params, k, p, r, s }
    }

    fn check(&self) -> Result<()> {
        if !(self.p > 1.0) || self.p.is_nan() {
            return Err(Error::domain(format!("kernel needs p > 1, got {}", self.p)));
        }
        if !(self.r > 0.0 && self.s > 0.0 && self.r.is_finite() && self.s.is_finite()) {
            return Err(Error::domain("kernel needs finite r, s > 0"));
        }
        if self.r == self.s {
            return Err(Error::domain("kernel is singular on r = s; use diagonal_limit"));
        }
        Ok(())
    }
}

/// Series controls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelOptions {
    pub n_max: usize,
    /// |s/r − 1| (or |r/s − 1|) below which the split form is used
    pub delta_diag: f64,
    /// Relative tolerance on the estimated series tail.
    pub tol: f64,
    /// Multiplies every A⁺ coefficient; 1 except in verification self-tests.
    pub a_plus_scale: f64,
}

impl Default for KernelOptions {
    fn default() -> Self {
        KernelOptions { n_max: 20_000, delta_diag: 1e-3, tol: 1e-14, a_plus_scale: 1.0 }
    }
}

/// A±_{k,n} in log-Gamma form.
pub fn coeff_a(branch: Branch, k: u32, n: usize, params: &SpectralParams) -> Result<f64> {
    let m = params.mode(k);
    let (l, s) = ln_coeff_a(m.a_k, branch.shift(m.b_k), n)?;
    Ok(s * exp(l))
}

fn ln_coeff_a(a: f64, b: f64, n: usize) -> Result<(f64, f64)> {
    CoeffFamily::new(a, b).ln_a(n)
}

/// A-coefficients of one (a, b) pair, for evaluation at many n.
struct CoeffFamily {
    a: f64,
    up: LnGammaRatio,
    down: LnGammaRatio,
}

impl CoeffFamily {
    fn new(a: f64, b: f64) -> Self {
        CoeffFamily { a, up: LnGammaRatio::new(0.0, b), down: LnGammaRatio::new(b, 0.0) }
    }

    fn ln_a(&self, n: usize) -> Result<(f64, f64)> {
        let z = n as f64 + 1.0;
        // Γ(z+a)/Γ(z+a+b) · Γ(z+b)/Γ(z): both ratios shift by b only
        let (l1, s1) = self.up.eval(z + self.a)?;
        let (l2, s2) = self.down.eval(z)?;
        Ok((l1 + l2, s1 * s2))
    }

    fn residual(&self, coupling: f64, sign: f64, n: usize) -> Result<f64> {
        let (l, s) = self.ln_a(n)?;
        let am1 = if s > 0.0 { expm1(l) } else { -exp(l) - 1.0 };
        Ok(am1 - sign * coupling / (4.0 * (n as f64 + 1.0)))
    }
}

/// E±ₙ = A±ₙ − 1 ∓ a/(4(n+1)), formed without cancellation against 1.
pub fn coeff_e(branch: Branch, k: u32, n: usize, params: &SpectralParams) -> Result<f64> {
    let m = params.mode(k);
    residual(m.a_k, branch.shift(m.b_k), params.a, branch.sign(), n)
}

fn residual(a: f64, b: f64, coupling: f64, sign: f64, n: usize) -> Result<f64> {
    CoeffFamily::new(a, b).residual(coupling, sign, n)
}

/// Coefficients A±_{k,n} and residuals E±_{k,n} for n_start ≤ n ≤ n_max.
///
/// `n_start` is the first index with b+n+1 > 0; below it A± sits on a pole
/// of Γ(b+n+1) when b is a negative integer.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTable {
    pub k: u32,
    pub branch: Branch,
    pub n_start: usize,
    pub n_max: usize,
    pub values: Vec<f64>,
    pub residuals: Vec<f64>,
}

impl CoeffTable {
    /// sup over the table of (n+1)²|E±ₙ|, restricted to n ≤ n_cap.
    pub fn scaled_residual_sup(&self, n_cap: usize) -> f64 {
        let mut sup: f64 = 0.0;
        for (i, e) in self.residuals.iter().enumerate() {
            let n = self.n_start + i;
            if n > n_cap {
                break;
            }
            let z = n as f64 + 1.0;
            sup = sup.max(z * z * fabs(*e));
        }
        sup
    }
}

pub fn coeff_table(params: &SpectralParams, k: u32, branch: Branch, n_max: usize) -> Result<CoeffTable> {
    let m = params.mode(k);
    let b = branch.shift(m.b_k);
    let n_start = if b + 1.0 > 0.0 { 0 } else { floor(-b) as usize };
    let mut values = Vec::with_capacity(n_max + 1 - n_start.min(n_max + 1));
    let mut residuals = Vec::with_capacity(values.capacity());
    let fam = CoeffFamily::new(m.a_k, b);
    for n in n_start..=n_max {
        let (l, s) = fam.ln_a(n)?;
        values.push(s * exp(l));
        residuals.push(fam.residual(params.a, branch.sign(), n)?);
    }
    Ok(CoeffTable { k, branch, n_start, n_max, values, residuals })
}

/// Exponents (d/2 − d/p + 1 + μ_k, d/p − d/2 + 1 + ν_k) of the two branch prefactors.
pub fn branch_exponents(params: &SpectralParams, k: u32, p: f64) -> (f64, f64) {
    let m = params.mode(k);
    let d = params.d as f64;
    (0.5 * d - d / p + 1.0 + m.mu, d / p - 0.5 * d + 1.0 + m.nu)
}

/// True when the branch exponents of W and of W* (μ ↔ ν) are all positive.
///
/// μ_k and ν_k increase with k, so k = 0 decides.
pub fn exponents_admissible(params: &SpectralParams, p: f64) -> bool {
    let (below, above) = branch_exponents(params, 0, p);
    let d = params.d as f64;
    let m = params.mode(0);
    let below_adj = 0.5 * d - d / p + 1.0 + m.nu;
    let above_adj = d / p - 0.5 * d + 1.0 + m.mu;
    below > 0.0 && above > 0.0 && below_adj > 0.0 && above_adj > 0.0
}

/// Agreement of [`exponents_admissible`] with the W interval on 1/p = (i+½)/n_grid.
pub fn count_predicate_disagreements(params: &SpectralParams, n_grid: usize) -> Result<usize> {
    let iv = admissible_p(params, OperatorTag::W, 0.0)?;
    let mut bad = 0;
    for i in 0..n_grid {
        let inv_p = (i as f64 + 0.5) / n_grid as f64;
        if exponents_admissible(params, 1.0 / inv_p) != iv.contains(inv_p) {
            bad += 1;
        }
    }
    Ok(bad)
}

/// Modified kernel K̃_k(r, s) with default options.
pub fn kernel_ktilde(q: &KernelQuery) -> Result<f64> {
    kernel_ktilde_with(q, &KernelOptions::default())
}

pub fn kernel_ktilde_with(q: &KernelQuery, opts: &KernelOptions) -> Result<f64> {
    q.check()?;
    let m = q.params.mode(q.k);
    if q.params.a == 0.0 {
        return Ok(0.0);
    }
    let (e_below, e_above) = branch_exponents(&q.params, q.k, q.p);
    let lx = log(q.s) - log(q.r);
    let (branch, t, expo) = if lx < 0.0 { (Branch::Plus, lx, e_below) } else { (Branch::Minus, -lx, e_above) };
    let b = branch.shift(m.b_k);
    let pre = 2.0 * exp(expo * t);
    let x2 = exp(2.0 * t);
    let integer_b = b == floor(b);
    if integer_b || fabs(expm1(t)) > opts.delta_diag {
        Ok(pre * plain_series(m.a_k, b, x2, branch, opts)?)
    } else {
        Ok(pre * split_series(m.a_k, b, q.params.a, x2, -expm1(2.0 * t), branch, opts)?)
    }
}

/// Σ cₙ Xⁿ with cₙ = sin(−πb)/π · A⁺ₙ = (−1)ⁿ Γ(a+n+1) / (Γ(a+b+n+1) n! Γ(−b−n)).
fn plain_series(a: f64, b: f64, x2: f64, branch: Branch, opts: &KernelOptions) -> Result<f64> {
    let scale = if branch == Branch::Plus { opts.a_plus_scale } else { 1.0 };
    let mut c = gamma_ratio(a + 1.0, 0.0, b)? * rgamma(-b) * scale;
    let mut sum = 0.0;
    let mut xn = 1.0;
    for n in 0..opts.n_max {
        let term = c * xn;
        sum += term;
        let nf = n as f64;
        c *= (a + nf + 1.0) * (b + nf + 1.0) / ((a + b + nf + 1.0) * (nf + 1.0));
        xn *= x2;
        if c == 0.0 {
            return Ok(sum);
        }
        // terms are bounded multiples of Xⁿ
        let tail = fabs(c * xn) / (1.0 - x2);
        if tail <= opts.tol * fabs(sum) || xn < 1e-300 {
            return Ok(sum);
        }
    }
    let tail = fabs(c * xn) / (1.0 - x2);
    Err(Error::BudgetExceeded { terms: opts.n_max, partial: sum, tail })
}

/// Second-order residual law E±ₙ ≈ e₂/((n+1)(n+2)).
fn residual_second_order(a: f64, b: f64) -> f64 {
    // ln A±ₙ = L₁/z + L₂/z² + …, z = n+1
    let l1 = -a * b;
    let l2 = -a * b * (1.0 - a - b) / 2.0;
    l2 + 0.5 * l1 * l1
}

/// Σ Xⁿ/((n+1)(n+2)) = ((1−X)ln(1−X) + X)/X², given δ = 1 − X.
fn second_order_sum(x2: f64, delta: f64) -> f64 {
    if x2 < 1e-4 {
        return 0.5 + x2 / 6.0 + x2 * x2 / 12.0;
    }
    (delta * log(delta) + x2) / (x2 * x2)
}

/// sin(∓πb)/π · [1/(1−X) ± (a/4)(−ln(1−X))/X + Σ E±ₙ Xⁿ]; δ = 1 − X.
fn split_series(a: f64, b: f64, coupling: f64, x2: f64, delta: f64, branch: Branch, opts: &KernelOptions) -> Result<f64> {
    let sign = branch.sign();
    let singular = 1.0 / delta;
    let logarithmic = sign * 0.25 * coupling * (-log1p(-x2)) / x2;
    let e2 = residual_second_order(a, b);
    let mut rest = 0.0;
    let mut xn = 1.0;
    let scale = if branch == Branch::Plus { opts.a_plus_scale } else { 1.0 };
    let mut tail = f64::INFINITY;
    let fam = CoeffFamily::new(a, b);
    for n in 0..opts.n_max {
        let z = n as f64 + 1.0;
        let e = if scale == 1.0 {
            fam.residual(coupling, sign, n)?
        } else {
            let (l, s) = fam.ln_a(n)?;
            scale * s * exp(l) - 1.0 - sign * coupling / (4.0 * z)
        };
        let term = (e - e2 / (z * (z + 1.0))) * xn;
        rest += term;
        xn *= x2;
        // remainder terms are O(n⁻³): the rest of the sum is about term·n/2
        tail = fabs(term) * z / 2.0;
        if n > 8 && tail <= opts.tol * singular {
            break;
        }
    }
    if tail > 1e-10 * singular {
        return Err(Error::BudgetExceeded { terms: opts.n_max, partial: rest, tail });
    }
    let body = singular + logarithmic + e2 * second_order_sum(x2, delta) + rest;
    Ok(sin_pi(-b) / PI * body)
}

/// Damped-quadrature value with its extrapolation spread.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleValue {
    pub value: f64,
    pub spread: f64,
}

/// K̃ from the Bessel-product integral, damped by e^{−ελ²} and extrapolated to ε = 0.
///
/// Fails with a non-convergence error when the extrapolations with and
/// without the smallest ε differ by more than `1e−6|value| + 1e−12`.
pub fn kernel_quadrature_oracle(q: &KernelQuery, eps_list: Option<&[f64]>) -> Result<OracleValue> {
    q.check()?;
    let m = q.params.mode(q.k);
    let d = q.params.d as f64;
    let x = q.s / q.r;
    let ladder;
    let eps = match eps_list {
        Some(e) => e,
        None => {
            ladder = default_eps_ladder(x, 1.0);
            &ladder
        }
    };
    // ∫ λ J_μ(sλ)J_ν(rλ)dλ = r^{−2} I(x, 1), K = x^{d/2+1} I, K̃ = x^{−d/p} K
    let inner = damped_product_integral(m.mu, m.nu, x, 1.0, eps)?;
    let pre = pow(x, 0.5 * d + 1.0 - d / q.p);
    let value = pre * inner.value;
    let spread = pre * inner.spread;
    if spread > 1e-6 * fabs(value) + 1e-12 {
        return Err(Error::nonconv(format!("damped extrapolation unstable: value {value:e}, spread {spread:e}")));
    }
    Ok(OracleValue { value, spread })
}

/// Limit of (1 − min(s/r, r/s)²)·K̃/(branch prefactor) as s/r → 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagonalLimit {
    pub closed_form: f64,
    pub extrapolated: f64,
    pub gap: f64,
}

/// ±(2/π) sin(π(ν_k − μ_k)/2) against a fit of samples at s/r = 1 ∓ 2^{−j}, j = 4..12.
pub fn diagonal_limit(params: &SpectralParams, k: u32, side: Branch) -> Result<DiagonalLimit> {
    let m = params.mode(k);
    let closed = side.sign() * 2.0 / PI * sin_pi(0.5 * (m.nu - m.mu));
    let p = 2.0;
    let (e_below, e_above) = branch_exponents(params, k, p);
    let mut deltas = Vec::new();
    let mut values = Vec::new();
    for j in 4..=12 {
        let h = pow(2.0, -(j as f64));
        let (s, expo) = match side {
            Branch::Plus => (1.0 - h, e_below),
            Branch::Minus => (1.0 / (1.0 - h), e_above),
        };
        let x = 1.0 - h;
        let kt = kernel_ktilde(&KernelQuery::new(*params, k, p, 1.0, s))?;
        let delta = 1.0 - x * x;
        deltas.push(delta);
        values.push(delta * kt / pow(x, expo));
    }
    let extrapolated = fit_at_zero(&deltas, &values)?;
    Ok(DiagonalLimit { closed_form: closed, extrapolated, gap: fabs(extrapolated - closed) })
}

/// Least-squares value at δ = 0 of a fit in {1, δ ln δ, δ, δ² ln δ, δ²}.
pub(crate) fn fit_at_zero(deltas: &[f64], values: &[f64]) -> Result<f64> {
    const M: usize = 5;
    let basis = |t: f64| [1.0, t * log(t), t, t * t * log(t), t * t];
    let mut ata = [[0.0f64; M]; M];
    let mut atb = [0.0f64; M];
    for (&t, &v) in deltas.iter().zip(values) {
        let row = basis(t);
        for i in 0..M {
            atb[i] += row[i] * v;
            for j in 0..M {
                ata[i][j] += row[i] * row[j];
            }
        }
    }
    // symmetric scaling keeps the normal equations well conditioned
    let scale: Vec<f64> = (0..M).map(|i| 1.0 / libm::sqrt(ata[i][i])).collect();
    for i in 0..M {
        atb[i] *= scale[i];
        for j in 0..M {
            ata[i][j] *= scale[i] * scale[j];
        }
    }
    let sol = solve(ata, atb).ok_or_else(|| Error::nonconv("singular diagonal fit"))?;
    Ok(sol[0] * scale[0])
}

fn solve<const M: usize>(mut a: [[f64; M]; M], mut b: [f64; M]) -> Option<[f64; M]> {
    for col in 0..M {
        let piv = (col..M).max_by(|&i, &j| fabs(a[i][col]).total_cmp(&fabs(a[j][col])))?;
        if a[piv][col] == 0.0 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..M {
            let f = a[row][col] / a[col][col];
            for c in col..M {
                a[row][c] -= f * a[col][c];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = [0.0; M];
    for row in (0..M).rev() {
        let mut acc = b[row];
        for c in row + 1..M {
            acc -= a[row][c] * x[c];
        }
        x[row] = acc / a[row][row];
    }
    Some(x)
}
