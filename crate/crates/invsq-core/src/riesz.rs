//! Kernels of `R^α = (−Δ)^{α/2} L_a^{−α/2}` and `R^{−β} = L_a^{β/2} (−Δ)^{−β/2}`
//! on the k-th harmonic subspace, acting against ds/s.
//!
//! The Mellin symbol is the eight-Γ ratio of an H^{2,2}_{4,4} instance whose
//! exponents are all ½. Closing the contour gives, with x = s/r < 1,
//!
//! ```text
//! K = C Σ A1ₙ x^{ν+λ₀+2+2n} − C Σ A2ₙ x^{μ+λ₀+α+2+2n}
//! ```
//!
//! and with y = r/s < 1 the same coefficients on y^{ν−λ₀−α+2n} and
//! y^{μ−λ₀+2n}. Both A-families tend to 1 like 1/n², so the two power sums
//! share the pole 1/(1−x²) and cancel it: the kernel is bounded and
//! continuous across r = s. R^{−β} is the same code with μ and ν exchanged.

use crate::params::{OperatorTag, SpectralParams};
use crate::specfun::quad::gauss_legendre;
use crate::specfun::{
    bernoulli_poly, gamma, gamma_pole_distance, ln_gamma_complex, pochhammer, rgamma, sin_pi, LnGammaRatio,
};
use crate::waveop::fit_at_zero;
use crate::{Complex64, Error, Result};
use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;
use libm::{exp, expm1, fabs, floor, log, pow, round};

/// R^α or R^{−β}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    /// μ_k and ν_k exchanged
    Inverse,
}

impl Direction {
    pub fn tag(self) -> OperatorTag {
        match self {
            Direction::Forward => OperatorTag::Riesz,
            Direction::Inverse => OperatorTag::InverseRiesz,
        }
    }
}

/// Side of the diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// s < r
    Below,
    /// s > r
    Above,
}

/// Indices after the direction swap.
#[derive(Debug, Clone, Copy)]
struct Roles {
    mu: f64,
    nu: f64,
    alpha: f64,
    lambda0: f64,
}

impl Roles {
    fn unchecked(params: &SpectralParams, k: u32, alpha: f64, dir: Direction) -> Self {
        let m = params.mode(k);
        let (mu, nu) = match dir {
            Direction::Forward => (m.mu, m.nu),
            Direction::Inverse => (m.nu, m.mu),
        };
        Roles { mu, nu, alpha, lambda0: params.lambda0 }
    }

    fn new(params: &SpectralParams, k: u32, alpha: f64, dir: Direction) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(Error::domain("order must be finite"));
        }
        if let Some((lo, hi)) = dir.tag().order_window(params) {
            if !(lo < alpha && alpha < hi) {
                return Err(Error::OrderOutOfWindow { order: alpha, lo, hi });
            }
        }
        Ok(Self::unchecked(params, k, alpha, dir))
    }

    /// (μ−ν)/2
    fn u(&self) -> f64 {
        0.5 * (self.mu - self.nu)
    }

    /// (μ−ν+α)/2
    fn v(&self) -> f64 {
        0.5 * (self.mu - self.nu + self.alpha)
    }

    /// Exponents of the A1 and A2 power sums on the given side.
    fn exponents(&self, side: Side) -> (f64, f64) {
        let (mu, nu, al, l0) = (self.mu, self.nu, self.alpha, self.lambda0);
        match side {
            Side::Below => (nu + l0 + 2.0, mu + l0 + al + 2.0),
            Side::Above => (nu - l0 - al, mu - l0),
        }
    }

    fn check_generic(&self) -> Result<()> {
        let v = self.v();
        if fabs(v - round(v)) < 1e-10 {
            return Err(Error::Resonance(format!("(mu - nu + alpha)/2 = {v} is an integer")));
        }
        let u = self.u();
        if fabs(u) >= 1.0 - 1e-12 && fabs(u - round(u)) < 1e-12 {
            return Err(Error::pole(format!("(mu - nu)/2 = {u} is a non-zero integer; the C·A split degenerates")));
        }
        Ok(())
    }
}

fn even_order(alpha: f64) -> Option<i32> {
    let h = 0.5 * alpha;
    if h == floor(h) && fabs(h) < 1e6 {
        Some(h as i32)
    } else {
        None
    }
}

/// Parameter pairs of the H^{2,2}_{4,4} instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FoxHInstance {
    /// (a_i, α_i); i = 1, 2 enter as Γ(1 − a_i − α_i z), i = 3, 4 as 1/Γ(a_i + α_i z)
    pub upper: [(f64, f64); 4],
    /// (b_j, β_j); j = 1, 2 enter as Γ(b_j + β_j z), j = 3, 4 as 1/Γ(1 − b_j − β_j z)
    pub lower: [(f64, f64); 4],
}

impl FoxHInstance {
    /// Instance for any real order; the order window is not enforced here.
    pub fn new(params: &SpectralParams, k: u32, alpha: f64, dir: Direction) -> Self {
        Self::from_roles(&Roles::unchecked(params, k, alpha, dir))
    }

    fn from_roles(r: &Roles) -> Self {
        let (mu, nu, al, l0) = (r.mu, r.nu, r.alpha, r.lambda0);
        FoxHInstance {
            upper: [
                (-0.5 * (nu + l0), 0.5),
                (-0.5 * (mu + l0 + al), 0.5),
                (0.5 * (nu - l0), 0.5),
                (0.5 * (mu - l0 - al), 0.5),
            ],
            lower: [
                (0.5 * (mu - l0), 0.5),
                (0.5 * (nu - l0 - al), 0.5),
                (-0.5 * (mu + l0), 0.5),
                (-0.5 * (nu + l0 + al), 0.5),
            ],
        }
    }

    pub fn a_star(&self) -> f64 {
        let u = &self.upper;
        let l = &self.lower;
        u[0].1 + u[1].1 - u[2].1 - u[3].1 + l[0].1 + l[1].1 - l[2].1 - l[3].1
    }

    pub fn lambda(&self) -> f64 {
        self.lower.iter().map(|p| p.1).sum::<f64>() - self.upper.iter().map(|p| p.1).sum::<f64>()
    }

    pub fn varrho(&self) -> f64 {
        self.lower.iter().map(|p| p.0).sum::<f64>() - self.upper.iter().map(|p| p.0).sum::<f64>()
    }

    pub fn delta(&self) -> f64 {
        let up: f64 = self.upper.iter().map(|p| pow(p.1, -p.1)).product();
        let lo: f64 = self.lower.iter().map(|p| pow(p.1, p.1)).product();
        up * lo
    }

    /// Rightmost pole of Γ(b_j + β_j z), j = 1, 2.
    pub fn lower_pole_max(&self) -> f64 {
        (-self.lower[0].0 / self.lower[0].1).max(-self.lower[1].0 / self.lower[1].1)
    }

    /// Leftmost pole of Γ(1 − a_i − α_i z), i = 1, 2.
    pub fn upper_pole_min(&self) -> f64 {
        ((1.0 - self.upper[0].0) / self.upper[0].1).min((1.0 - self.upper[1].0) / self.upper[1].1)
    }

    pub fn strip(&self) -> (f64, f64) {
        (self.lower_pole_max(), self.upper_pole_min())
    }

    pub fn poles_separated(&self) -> bool {
        self.lower_pole_max() < self.upper_pole_min()
    }

    fn numerator_args(&self, z: Complex64) -> [Complex64; 4] {
        let (u, l) = (&self.upper, &self.lower);
        [l[0].0 + z * l[0].1, l[1].0 + z * l[1].1, 1.0 - u[0].0 - z * u[0].1, 1.0 - u[1].0 - z * u[1].1]
    }

    fn denominator_args(&self, z: Complex64) -> [Complex64; 4] {
        let (u, l) = (&self.upper, &self.lower);
        [1.0 - l[2].0 - z * l[2].1, 1.0 - l[3].0 - z * l[3].1, u[2].0 + z * u[2].1, u[3].0 + z * u[3].1]
    }

    /// The Γ-ratio at z; errors within 1e−8 of a numerator pole.
    pub fn symbol(&self, z: Complex64) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for w in self.numerator_args(z) {
            if gamma_pole_distance(w) < 1e-8 {
                return Err(Error::pole(format!("symbol evaluated {:e} from a pole", gamma_pole_distance(w))));
            }
            acc += ln_gamma_complex(w)?;
        }
        for w in self.denominator_args(z) {
            if gamma_pole_distance(w) == 0.0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            acc -= ln_gamma_complex(w)?;
        }
        Ok(acc.exp())
    }

    fn real_product(&self, z: f64, skip_numerator: usize) -> Result<f64> {
        let zc = Complex64::new(z, 0.0);
        let mut prod = 1.0;
        for (i, w) in self.numerator_args(zc).iter().enumerate() {
            if i != skip_numerator {
                prod *= gamma(w.re).map_err(|_| Error::Resonance("colliding poles".into()))?;
            }
        }
        for w in self.denominator_args(zc) {
            prod *= rgamma(w.re);
        }
        Ok(prod)
    }

    /// −Res of the symbol at the l-th pole of Γ(1 − a_i − α_i z), i ∈ {0, 1}:
    /// the coefficient of (s/r)^{(1−a_i+l)/α_i}.
    pub fn residue_upper(&self, i: usize, l: usize) -> Result<f64> {
        let (a, al) = self.upper[i];
        let z = (1.0 - a + l as f64) / al;
        let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
        Ok(sign * rgamma(l as f64 + 1.0) / al * self.real_product(z, 2 + i)?)
    }

    /// Res of the symbol at the l-th pole of Γ(b_j + β_j z), j ∈ {0, 1}:
    /// the coefficient of (r/s)^{(b_j+l)/β_j}.
    pub fn residue_lower(&self, j: usize, l: usize) -> Result<f64> {
        let (b, be) = self.lower[j];
        let z = -(b + l as f64) / be;
        let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
        Ok(sign * rgamma(l as f64 + 1.0) / be * self.real_product(z, j)?)
    }
}

/// Pole separation for every k ≤ k_max.
pub fn poles_separated_up_to(params: &SpectralParams, alpha: f64, dir: Direction, k_max: u32) -> bool {
    (0..=k_max).all(|k| FoxHInstance::new(params, k, alpha, dir).poles_separated())
}

/// Symbol of R^α on the k-th subspace.
pub fn mellin_symbol(params: &SpectralParams, k: u32, alpha: f64, z: Complex64) -> Result<Complex64> {
    let r = Roles::new(params, k, alpha, Direction::Forward)?;
    FoxHInstance::from_roles(&r).symbol(z)
}

/// One A-family: ln A = Σ ±ln[Γ(z + cᵢ + α/2)/Γ(z + cᵢ)], z = n + 1.
struct AFamily {
    shifts: [f64; 4],
    signs: [f64; 4],
    h: f64,
    ratio: LnGammaRatio,
}

impl AFamily {
    fn new(shifts: [f64; 4], h: f64) -> Self {
        AFamily { shifts, signs: [1.0, -1.0, 1.0, -1.0], h, ratio: LnGammaRatio::new(h, 0.0) }
    }

    fn first(r: &Roles) -> Self {
        let (mu, nu, al) = (r.mu, r.nu, r.alpha);
        Self::new([0.5 * (mu + nu - al), nu - 0.5 * al, 0.5 * (nu - mu - al), -0.5 * al], 0.5 * al)
    }

    fn second(r: &Roles) -> Self {
        let (mu, nu) = (r.mu, r.nu);
        Self::new([mu, 0.5 * (nu + mu), 0.0, 0.5 * (mu - nu)], 0.5 * r.alpha)
    }

    /// (ln|A|, sign), or None when a denominator Γ sits on a pole (A = 0).
    fn ln_a(&self, n: usize) -> Result<Option<(f64, f64)>> {
        let z = n as f64 + 1.0;
        let mut l = 0.0;
        let mut s = 1.0;
        for (c, sg) in self.shifts.iter().zip(self.signs) {
            let w = z + c;
            let (num, den) = if sg > 0.0 { (w + self.h, w) } else { (w, w + self.h) };
            if den <= 0.0 && den == floor(den) {
                return Ok(None);
            }
            if num <= 0.0 && num == floor(num) {
                return Err(Error::pole("A-coefficient numerator at a Gamma pole"));
            }
            let (lr, sr) = self.ratio.eval(w)?;
            l += sg * lr;
            s *= sr;
        }
        Ok(Some((l, s)))
    }

    fn value(&self, n: usize) -> Result<f64> {
        Ok(self.ln_a(n)?.map_or(0.0, |(l, s)| s * exp(l)))
    }

    /// A − 1 without cancellation.
    fn residual(&self, n: usize) -> Result<f64> {
        Ok(match self.ln_a(n)? {
            None => -1.0,
            Some((l, s)) if s > 0.0 => expm1(l),
            Some((l, _)) => -exp(l) - 1.0,
        })
    }

    /// (g₂, g₃) in A − 1 = g₂/z² + g₃/z³ + O(z⁻⁴); the 1/z terms cancel.
    fn asymptotic(&self) -> (f64, f64) {
        let lk = |k: usize, c: f64| {
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            sign * (bernoulli_poly(k + 1, c + self.h) - bernoulli_poly(k + 1, c)) / ((k * (k + 1)) as f64)
        };
        let mut big = [0.0; 4];
        for (c, sg) in self.shifts.iter().zip(self.signs) {
            for (k, slot) in big.iter_mut().enumerate().skip(1) {
                *slot += sg * lk(k, *c);
            }
        }
        let (l1, l2, l3) = (big[1], big[2], big[3]);
        (l2 + 0.5 * l1 * l1, l3 + l1 * l2 + l1 * l1 * l1 / 6.0)
    }
}

fn c_from_roles(r: &Roles) -> f64 {
    2.0 * sin_pi(0.5 * r.alpha) * sin_pi(r.u()) / (PI * sin_pi(r.v()))
}

/// C_k^α = 2 sin(πα/2) sin(π(μ−ν)/2) / (π sin(π(μ−ν+α)/2)).
pub fn c_coefficient(params: &SpectralParams, k: u32, alpha: f64, dir: Direction) -> Result<f64> {
    let r = Roles::new(params, k, alpha, dir)?;
    let v = r.v();
    if fabs(v - round(v)) < 1e-10 {
        return Err(Error::Resonance(format!("(mu - nu + alpha)/2 = {v} is an integer")));
    }
    Ok(c_from_roles(&r))
}

/// Residue-series coefficients for n ≤ n_max; h1ₙ = C·A1ₙ, h2ₙ = −C·A2ₙ.
#[derive(Debug, Clone, PartialEq)]
pub struct RieszCoeffs {
    pub k: u32,
    pub alpha: f64,
    pub direction: Direction,
    pub c: f64,
    pub a1: Vec<f64>,
    pub a2: Vec<f64>,
    pub e1: Vec<f64>,
    pub e2: Vec<f64>,
}

impl RieszCoeffs {
    pub fn h1(&self, n: usize) -> f64 {
        self.c * self.a1[n]
    }
    pub fn h2(&self, n: usize) -> f64 {
        -self.c * self.a2[n]
    }
}

pub fn riesz_coeffs(params: &SpectralParams, k: u32, alpha: f64, dir: Direction, n_max: usize) -> Result<RieszCoeffs> {
    let r = Roles::new(params, k, alpha, dir)?;
    if even_order(alpha).is_some() {
        return Err(Error::domain("even orders have finite kernels; use kernel_even"));
    }
    r.check_generic()?;
    let (f1, f2) = (AFamily::first(&r), AFamily::second(&r));
    let mut out = RieszCoeffs {
        k,
        alpha,
        direction: dir,
        c: c_from_roles(&r),
        a1: Vec::with_capacity(n_max + 1),
        a2: Vec::with_capacity(n_max + 1),
        e1: Vec::with_capacity(n_max + 1),
        e2: Vec::with_capacity(n_max + 1),
    };
    for n in 0..=n_max {
        out.a1.push(f1.value(n)?);
        out.a2.push(f2.value(n)?);
        out.e1.push(f1.residual(n)?);
        out.e2.push(f2.residual(n)?);
    }
    Ok(out)
}

/// Series controls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RieszOptions {
    pub n_max: usize,
    /// |x − 1| below which the main/remainder split is used
    pub delta_diag: f64,
    pub tol: f64,
}

impl Default for RieszOptions {
    fn default() -> Self {
        RieszOptions { n_max: 20_000, delta_diag: 0.05, tol: 1e-14 }
    }
}

pub fn kernel_riesz(params: &SpectralParams, k: u32, alpha: f64, r: f64, s: f64, dir: Direction) -> Result<f64> {
    kernel_riesz_with(params, k, alpha, r, s, dir, &RieszOptions::default())
}

pub fn kernel_riesz_with(
    params: &SpectralParams,
    k: u32,
    alpha: f64,
    r: f64,
    s: f64,
    dir: Direction,
    opts: &RieszOptions,
) -> Result<f64> {
    if !(r > 0.0 && s > 0.0 && r.is_finite() && s.is_finite()) {
        return Err(Error::domain("kernel needs finite r, s > 0"));
    }
    if r == s {
        return Err(Error::domain("r = s; use riesz_diagonal_limit"));
    }
    let ro = Roles::new(params, k, alpha, dir)?;
    if alpha == 0.0 || params.a == 0.0 {
        return Ok(0.0);
    }
    if let Some(m) = even_order(alpha) {
        return kernel_even(params, k, m, r, s, dir);
    }
    ro.check_generic()?;
    let lx = log(s) - log(r);
    let (side, t) = if lx < 0.0 { (Side::Below, lx) } else { (Side::Above, -lx) };
    if fabs(expm1(t)) > opts.delta_diag {
        plain_series(&ro, side, t, opts)
    } else {
        split_series(&ro, side, t, opts)
    }
}

/// C Σ (A1ₙ x^{e1+2n} − A2ₙ x^{e2+2n}), x = e^t < 1.
fn plain_series(ro: &Roles, side: Side, t: f64, opts: &RieszOptions) -> Result<f64> {
    let (e1, e2) = ro.exponents(side);
    let (f1, f2) = (AFamily::first(ro), AFamily::second(ro));
    let x2 = exp(2.0 * t);
    let (mut p1, mut p2) = (exp(e1 * t), exp(e2 * t));
    let mut sum = 0.0;
    let mut peak: f64 = 0.0;
    let mut tail = f64::INFINITY;
    for n in 0..opts.n_max {
        let (u1, u2) = (f1.value(n)? * p1, f2.value(n)? * p2);
        sum += u1 - u2;
        peak = peak.max(fabs(u1)).max(fabs(u2));
        p1 *= x2;
        p2 *= x2;
        // |A| settles to 1, so the rest is bounded by the next terms over (1 − x²)
        tail = (fabs(u1) + fabs(u2)) * x2 / (1.0 - x2);
        if tail <= opts.tol * fabs(sum).max(peak) || (p1 < 1e-300 && p2 < 1e-300) {
            return Ok(c_from_roles(ro) * sum);
        }
    }
    Err(Error::BudgetExceeded { terms: opts.n_max, partial: c_from_roles(ro) * sum, tail })
}

/// Σ Xⁿ/((n+1)(n+2)), δ = 1 − X.
fn sum2(x2: f64, delta: f64) -> f64 {
    if x2 < 0.5 {
        return power_sum(x2, |z| 1.0 / (z * (z + 1.0)));
    }
    let dl = if delta > 0.0 { delta * log(delta) } else { 0.0 };
    (dl + x2) / (x2 * x2)
}

/// Σ Xⁿ/((n+1)(n+2)(n+3)), δ = 1 − X.
fn sum3(x2: f64, delta: f64) -> f64 {
    if x2 < 0.5 {
        return power_sum(x2, |z| 1.0 / (z * (z + 1.0) * (z + 2.0)));
    }
    let dl = if delta > 0.0 { -delta * delta * log(delta) } else { 0.0 };
    0.5 * (dl / (x2 * x2 * x2) + 1.5 / x2 - 1.0 / (x2 * x2))
}

fn power_sum(x2: f64, coef: impl Fn(f64) -> f64) -> f64 {
    let mut acc = 0.0;
    let mut xn = 1.0;
    for n in 0..200 {
        acc += coef(n as f64 + 1.0) * xn;
        xn *= x2;
        if xn < 1e-18 {
            break;
        }
    }
    acc
}

/// Σ (Aₙ − 1) Xⁿ with the O(n⁻²) and O(n⁻³) laws summed in closed form.
fn residual_sum(fam: &AFamily, x2: f64, delta: f64, opts: &RieszOptions) -> Result<f64> {
    let (g2, g3) = fam.asymptotic();
    let scale = 1.0 + fabs(g2);
    let mut rest = 0.0;
    let mut xn = 1.0;
    let mut tail = f64::INFINITY;
    for n in 0..opts.n_max {
        let z = n as f64 + 1.0;
        let model = g2 / (z * (z + 1.0)) + (g2 + g3) / (z * (z + 1.0) * (z + 2.0));
        let term = (fam.residual(n)? - model) * xn;
        rest += term;
        xn *= x2;
        // what is left is O(n⁻⁴): about term·n/3 in total
        tail = fabs(term) * z / 3.0;
        if n > 8 && tail <= opts.tol * scale {
            break;
        }
    }
    if tail > 1e-10 * scale {
        return Err(Error::BudgetExceeded { terms: opts.n_max, partial: rest, tail });
    }
    Ok(rest + g2 * sum2(x2, delta) + (g2 + g3) * sum3(x2, delta))
}

/// C[(x^{e1} − x^{e2})/(1 − x²) + x^{e1} Σ E1ₙ x^{2n} − x^{e2} Σ E2ₙ x^{2n}], t = ln x ≤ 0.
fn split_series(ro: &Roles, side: Side, t: f64, opts: &RieszOptions) -> Result<f64> {
    let (e1, e2) = ro.exponents(side);
    let x2 = exp(2.0 * t);
    let delta = -expm1(2.0 * t);
    let main = if t == 0.0 { 0.5 * (e2 - e1) } else { exp(e1 * t) * (-expm1((e2 - e1) * t)) / delta };
    let r1 = residual_sum(&AFamily::first(ro), x2, delta, opts)?;
    let r2 = residual_sum(&AFamily::second(ro), x2, delta, opts)?;
    Ok(c_from_roles(ro) * (main + exp(e1 * t) * r1 - exp(e2 * t) * r2))
}

/// Nonzero coefficients of the even-order kernel, α = 2m (n < |m|).
///
/// For m > 0 they multiply the A1 powers, for m < 0 the A2 powers.
pub fn even_coeffs(params: &SpectralParams, k: u32, m: i32, dir: Direction) -> Result<Vec<f64>> {
    let r = Roles::new(params, k, 2.0 * m as f64, dir)?;
    let u = r.u();
    let q = 0.5 * (r.mu + r.nu);
    let big = m.unsigned_abs();
    let mut out = Vec::with_capacity(big as usize);
    for n in 0..big {
        let nf = n as f64;
        let sign = if n % 2 == 0 { 2.0 } else { -2.0 };
        let fact = rgamma(nf + 1.0) * rgamma((big - n) as f64);
        let h = if m > 0 {
            sign * pochhammer(u - nf, big) * pochhammer(q + nf + 1.0 - big as f64, big)
                / pochhammer(r.nu + nf + 1.0 - big as f64, big)
        } else {
            sign * pochhammer(-u - nf, big) * pochhammer(q + nf + 1.0 - big as f64, big)
                / pochhammer(r.mu + nf + 1.0 - big as f64, big)
        };
        out.push(h * fact);
    }
    Ok(out)
}

/// Finite kernel at α = 2m, m ≠ 0.
pub fn kernel_even(params: &SpectralParams, k: u32, m: i32, r: f64, s: f64, dir: Direction) -> Result<f64> {
    if m == 0 {
        return Err(Error::domain("kernel_even needs m != 0"));
    }
    if !(r > 0.0 && s > 0.0 && r.is_finite() && s.is_finite()) {
        return Err(Error::domain("kernel needs finite r, s > 0"));
    }
    let ro = Roles::new(params, k, 2.0 * m as f64, dir)?;
    let h = even_coeffs(params, k, m, dir)?;
    let lx = log(s) - log(r);
    let (side, t) = if lx < 0.0 { (Side::Below, lx) } else { (Side::Above, -lx) };
    let (e1, e2) = ro.exponents(side);
    let e = if m > 0 { e1 } else { e2 };
    Ok(h.iter().enumerate().map(|(n, c)| c * exp((e + 2.0 * n as f64) * t)).sum())
}

/// Contour quadrature controls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleBudget {
    /// Upper end of the y-integration; the rest is a tail correction.
    pub y_max: f64,
    /// Panel width away from the real axis.
    pub panel: f64,
    /// Gauss–Legendre order per panel.
    pub order: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { y_max: 2000.0, panel: 0.5, order: 20 }
    }
}

/// Symbol minus one on a vertical contour, tabulated once for many ratios.
#[derive(Debug, Clone)]
pub struct MellinContour {
    c: f64,
    y_max: f64,
    panel: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    g: Vec<Complex64>,
    g_end: Complex64,
}

impl MellinContour {
    pub fn new(inst: &FoxHInstance, contour_re: Option<f64>, budget: &OracleBudget) -> Result<Self> {
        let (lo, hi) = inst.strip();
        if !(lo < hi) {
            return Err(Error::domain(format!("pole families overlap: strip ({lo}, {hi})")));
        }
        let c = contour_re.unwrap_or(0.5 * (lo + hi));
        if !(lo < c && c < hi) {
            return Err(Error::domain(format!("contour Re z = {c} outside the strip ({lo}, {hi})")));
        }
        if !(budget.y_max > 10.0 && budget.panel > 0.0 && budget.order >= 4) {
            return Err(Error::domain("oracle budget out of range"));
        }
        // panels grow geometrically from the scale set by the nearest pole
        let dist = (c - lo).min(hi - c);
        let mut breaks = alloc::vec![0.0];
        let mut w = (0.25 * dist).min(budget.panel);
        let mut y = 0.0;
        while y < budget.y_max {
            y = (y + w).min(budget.y_max);
            breaks.push(y);
            w = (1.5 * w).min(budget.panel);
        }
        let (gx, gw) = gauss_legendre(budget.order);
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        for pair in breaks.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            for (x, wt) in gx.iter().zip(&gw) {
                nodes.push(0.5 * (a + b) + 0.5 * (b - a) * x);
                weights.push(0.5 * (b - a) * wt);
            }
        }
        let mut g = Vec::with_capacity(nodes.len());
        for &y in &nodes {
            g.push(inst.symbol(Complex64::new(c, y))? - 1.0);
        }
        let g_end = inst.symbol(Complex64::new(c, budget.y_max))? - 1.0;
        let g_half = inst.symbol(Complex64::new(c, 0.5 * budget.y_max))? - 1.0;
        // the symbol approaches 1 like z⁻²; below 1e−10 the tail is noise
        let order = log(g_half.norm() / g_end.norm()) / log(2.0);
        if g_end.norm() > 1e-3 || (g_end.norm() > 1e-10 && !(order > 1.8 && order < 2.2)) {
            return Err(Error::nonconv(format!(
                "symbol has not reached its z^-2 tail at y = {} (|H-1| = {:e}, decay order {order})",
                budget.y_max,
                g_end.norm()
            )));
        }
        Ok(MellinContour { c, y_max: budget.y_max, panel: budget.panel, nodes, weights, g, g_end })
    }

    pub fn contour_re(&self) -> f64 {
        self.c
    }

    /// (1/π) ∫₀^∞ Re[ratio^{−(c+iy)} (H(c+iy) − 1)] dy.
    pub fn eval(&self, ratio: f64) -> Result<f64> {
        if !(ratio > 0.0 && ratio.is_finite()) {
            return Err(Error::domain("ratio must be positive"));
        }
        let l = log(ratio);
        if fabs(l) * self.panel > 10.0 {
            return Err(Error::nonconv("ratio oscillates faster than the panels resolve"));
        }
        let big_y = self.y_max;
        if l != 0.0 && fabs(l) * big_y < 30.0 {
            return Err(Error::nonconv("ratio too close to 1 for the contour length"));
        }
        let mut acc = 0.0;
        for ((y, w), g) in self.nodes.iter().zip(&self.weights).zip(&self.g) {
            acc += w * (Complex64::new(0.0, -y * l).exp() * g).re;
        }
        let damp = exp(-self.c * l);
        let tail = if l == 0.0 {
            self.g_end.re * big_y
        } else {
            // repeated integration by parts with g ≈ κ y⁻²
            let il = Complex64::new(0.0, l);
            let g0 = self.g_end;
            let g1 = -2.0 * g0 / big_y;
            let g2 = 6.0 * g0 / (big_y * big_y);
            let series = g0 / il + g1 / (il * il) + g2 / (il * il * il);
            (Complex64::new(0.0, -l * big_y).exp() * series).re
        };
        Ok(damp * (acc + tail) / PI)
    }
}

/// Kernel at ratio = r/s by direct contour integration of the symbol.
pub fn inverse_mellin_oracle(
    params: &SpectralParams,
    k: u32,
    alpha: f64,
    dir: Direction,
    ratio: f64,
    contour_re: Option<f64>,
    budget: &OracleBudget,
) -> Result<f64> {
    let r = Roles::new(params, k, alpha, dir)?;
    MellinContour::new(&FoxHInstance::from_roles(&r), contour_re, budget)?.eval(ratio)
}

/// Value of the kernel at r = s: series sum against a one-sided fit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RieszDiagonal {
    pub closed_form: f64,
    pub extrapolated: f64,
    pub gap: f64,
}

/// C[(μ−ν+α)/2 + Σ (E1ₙ − E2ₙ)] against a fit of samples at x = 1 − 2^{−j}, j = 4..12.
pub fn riesz_diagonal_limit(
    params: &SpectralParams,
    k: u32,
    alpha: f64,
    dir: Direction,
    side: Side,
) -> Result<RieszDiagonal> {
    let ro = Roles::new(params, k, alpha, dir)?;
    let closed = if params.a == 0.0 || alpha == 0.0 {
        0.0
    } else if let Some(m) = even_order(alpha) {
        even_coeffs(params, k, m, dir)?.iter().sum()
    } else {
        ro.check_generic()?;
        split_series(&ro, side, 0.0, &RieszOptions::default())?
    };
    let mut deltas = Vec::new();
    let mut values = Vec::new();
    for j in 4..=12 {
        let h = pow(2.0, -(j as f64));
        let s = match side {
            Side::Below => 1.0 - h,
            Side::Above => 1.0 / (1.0 - h),
        };
        let x = 1.0 - h;
        deltas.push(1.0 - x * x);
        values.push(kernel_riesz(params, k, alpha, 1.0, s, dir)?);
    }
    let extrapolated = fit_at_zero(&deltas, &values)?;
    Ok(RieszDiagonal { closed_form: closed, extrapolated, gap: fabs(extrapolated - closed) })
}
