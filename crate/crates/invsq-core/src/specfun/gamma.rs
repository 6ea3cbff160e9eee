//! Gamma-family functions on the real line and complex plane.

use crate::{Error, Result};
use core::f64::consts::{LN_2, PI};
use libm::{exp, fabs, floor, log, log1p, sin, cos};
use num_complex::Complex64;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Taylor coefficients of 1/Γ(z) about 0, starting at z¹.
pub(crate) const RGAMMA_TAYLOR: [f64; 29] = [
    1.0,
    0.577_215_664_901_532_860_61,
    -0.655_878_071_520_253_881_08,
    -0.042_002_635_034_095_235_529,
    0.166_538_611_382_291_489_5,
    -0.042_197_734_555_544_336_748,
    -0.009_621_971_527_876_973_562_1,
    0.007_218_943_246_663_099_542_4,
    -0.001_165_167_591_859_065_112_1,
    -0.000_215_241_674_114_950_972_82,
    0.000_128_050_282_388_116_186_15,
    -0.000_020_134_854_780_788_238_656,
    -1.250_493_482_142_670_657_3e-6,
    1.133_027_231_981_695_882_4e-6,
    -2.056_338_416_977_607_103_5e-7,
    6.116_095_104_481_415_817_9e-9,
    5.002_007_644_469_222_930_1e-9,
    -1.181_274_570_487_020_144_6e-9,
    1.043_426_711_691_100_510_5e-10,
    7.782_263_439_905_071_254e-12,
    -3.696_805_618_642_205_708_2e-12,
    5.100_370_287_454_475_979e-13,
    -2.058_326_053_566_506_783_2e-14,
    -5.348_122_539_423_017_982_4e-15,
    1.226_778_628_238_260_790_2e-15,
    -1.181_259_301_697_458_769_5e-16,
    1.186_692_254_751_600_332_6e-18,
    1.412_380_655_318_031_781_6e-18,
    -2.298_745_684_435_370_206_6e-19,
];

/// B₂, B₄, …, B₃₀.
pub(crate) const BERNOULLI_EVEN: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

/// Bernoulli number Bₙ with the convention B₁ = +1/2.
pub(crate) fn bernoulli(n: usize) -> f64 {
    match n {
        0 => 1.0,
        1 => 0.5,
        _ if n % 2 == 1 => 0.0,
        _ => BERNOULLI_EVEN[n / 2 - 1],
    }
}

/// Bernoulli polynomial Bₙ(x) (standard convention, B₁(x) = x − 1/2).
pub(crate) fn bernoulli_poly(n: usize, x: f64) -> f64 {
    let mut binom = 1.0;
    let mut xp = 1.0;
    let mut acc = 0.0;
    // Bₙ(x) = Σ_j C(n,j) B_j x^{n−j}, accumulated from j = n downwards.
    let mut coeffs = [0.0f64; 40];
    for j in 0..=n {
        coeffs[j] = binom;
        binom = binom * (n - j) as f64 / (j + 1) as f64;
    }
    for j in (0..=n).rev() {
        let bj = if j == 1 { -0.5 } else { bernoulli(j) };
        acc += coeffs[j] * bj * xp;
        xp *= x;
    }
    acc
}

/// 1/Γ(1+ε) for |ε| ≤ 1/2 from the Taylor table.
fn rgamma1p_small(eps: f64) -> f64 {
    let mut acc = 0.0;
    for &c in RGAMMA_TAYLOR.iter().rev() {
        acc = acc * eps + c;
    }
    acc
}

/// ln Γ(1+ε) for |ε| ≤ 1/2, accurate relative to the (small) result.
fn ln_gamma1p_small(eps: f64) -> f64 {
    // 1/Γ(1+ε) = 1 + ε·(γ + …); log1p keeps the relative accuracy near ε = 0.
    let mut acc = 0.0;
    for &c in RGAMMA_TAYLOR[1..].iter().rev() {
        acc = acc * eps + c;
    }
    -log1p(acc * eps)
}

fn stirling_tail(x: f64) -> f64 {
    let xi = 1.0 / x;
    let xi2 = xi * xi;
    let mut acc = 0.0;
    for k in (1..=9).rev() {
        let b = BERNOULLI_EVEN[k - 1];
        acc = acc * xi2 + b / ((2 * k) as f64 * (2 * k - 1) as f64);
    }
    acc * xi
}

/// ln Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain("ln_gamma requires a finite positive argument"));
    }
    Ok(ln_gamma_pos(x))
}

pub(crate) fn ln_gamma_pos(x: f64) -> f64 {
    if fabs(x - 1.0) <= 0.3 {
        return ln_gamma1p_small(x - 1.0);
    }
    if fabs(x - 2.0) <= 0.3 {
        let e = x - 2.0;
        return log1p(e) + ln_gamma1p_small(e);
    }
    if x >= 15.0 {
        return (x - 0.5) * log(x) - x + LN_SQRT_2PI + stirling_tail(x);
    }
    let mut prod = 1.0;
    let mut y = x;
    while y < 15.0 {
        prod *= y;
        y += 1.0;
    }
    (y - 0.5) * log(y) - y + LN_SQRT_2PI + stirling_tail(y) - log(prod)
}

/// sin(πx) with exact argument reduction.
pub fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let n = floor(x + 0.5);
    let r = x - n; // |r| ≤ 1/2, exact
    let s = sin(PI * r);
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// cos(πx) with exact argument reduction.
pub fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

/// ln|Γ(x)| and the sign of Γ(x) for any real x off the poles.
pub fn ln_gamma_signed(x: f64) -> Result<(f64, f64)> {
    if !x.is_finite() {
        return Err(Error::domain("non-finite Gamma argument"));
    }
    if x > 0.0 {
        return Ok((ln_gamma_pos(x), 1.0));
    }
    if x == floor(x) {
        return Err(Error::pole("Gamma at a non-positive integer"));
    }
    let s = sin_pi(x);
    let lg = log(PI) - log(fabs(s)) - ln_gamma_pos(1.0 - x);
    Ok((lg, if s > 0.0 { 1.0 } else { -1.0 }))
}

/// Γ(x) for real x off the poles.
pub fn gamma(x: f64) -> Result<f64> {
    if x > 0.5 && x <= 30.0 {
        // reduce to [1/2, 3/2) and multiply back up
        let mut y = x;
        let mut prod = 1.0;
        while y >= 1.5 {
            y -= 1.0;
            prod *= y;
        }
        return Ok(prod / rgamma1p_small(y - 1.0));
    }
    let (l, s) = ln_gamma_signed(x)?;
    Ok(s * exp(l))
}

/// 1/Γ(x), an entire function (zero at the non-positive integers).
pub fn rgamma(x: f64) -> f64 {
    if x <= 0.0 && x == floor(x) {
        return 0.0;
    }
    if fabs(x - 1.0) <= 0.5 {
        return rgamma1p_small(x - 1.0);
    }
    if fabs(x) <= 0.5 {
        // 1/Γ(x) = x/Γ(1+x)
        return x * rgamma1p_small(x);
    }
    if x > 0.5 && x <= 30.0 {
        return gamma(x).map(|g| 1.0 / g).unwrap_or(0.0);
    }
    match ln_gamma_signed(x) {
        Ok((l, s)) => s * exp(-l),
        Err(_) => 0.0,
    }
}

/// Γ(z+b)/Γ(z+c).
///
/// Large z uses the asymptotic expansion z^{b−c}[1 + C₁/z + C₂/z² + …] in
/// logarithmic form; otherwise the ratio of signed log-Gammas.
pub fn gamma_ratio(z: f64, b: f64, c: f64) -> Result<f64> {
    let (l, s) = ln_gamma_ratio_signed(z, b, c)?;
    Ok(s * exp(l))
}

/// Threshold above which [`gamma_ratio`] switches to the asymptotic series.
pub fn gamma_ratio_switch(b: f64, c: f64) -> f64 {
    let m = fabs(b).max(fabs(c));
    25.0 + 2.0 * m * m
}

/// ln|Γ(z+b)/Γ(z+c)| and its sign.
pub fn ln_gamma_ratio_signed(z: f64, b: f64, c: f64) -> Result<(f64, f64)> {
    for w in [z + b, z + c] {
        if w <= 0.0 && w == floor(w) {
            return Err(Error::pole("gamma_ratio argument at a non-positive integer"));
        }
    }
    if b == c {
        return Ok((0.0, 1.0));
    }
    if z >= gamma_ratio_switch(b, c) {
        return Ok((ln_gamma_ratio_asymptotic(z, b, c, 20), 1.0));
    }
    let (lb, sb) = ln_gamma_signed(z + b)?;
    let (lc, sc) = ln_gamma_signed(z + c)?;
    Ok((lb - lc, sb * sc))
}

/// (b−c)·ln z + Σ_{k≥1} (−1)^{k+1} [B_{k+1}(b) − B_{k+1}(c)] / (k(k+1) z^k).
pub fn ln_gamma_ratio_asymptotic(z: f64, b: f64, c: f64, terms: usize) -> f64 {
    let mut acc = (b - c) * log(z);
    let zi = 1.0 / z;
    let mut zp = zi;
    for k in 1..=terms.min(28) {
        let num = bernoulli_poly(k + 1, b) - bernoulli_poly(k + 1, c);
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        acc += sign * num / ((k * (k + 1)) as f64) * zp;
        zp *= zi;
    }
    acc
}

/// ln|Γ(z+b)/Γ(z+c)| for many z with the same shifts; the coefficients of
/// the asymptotic series are formed once.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LnGammaRatio {
    b: f64,
    c: f64,
    switch: f64,
    coeffs: [f64; 20],
}

impl LnGammaRatio {
    pub fn new(b: f64, c: f64) -> Self {
        let mut coeffs = [0.0; 20];
        for (i, slot) in coeffs.iter_mut().enumerate() {
            let k = i + 1;
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            *slot = sign * (bernoulli_poly(k + 1, b) - bernoulli_poly(k + 1, c)) / ((k * (k + 1)) as f64);
        }
        LnGammaRatio { b, c, switch: gamma_ratio_switch(b, c), coeffs }
    }

    /// Same value and sign convention as [`ln_gamma_ratio_signed`].
    pub fn eval(&self, z: f64) -> Result<(f64, f64)> {
        if z < self.switch || self.b == self.c {
            return ln_gamma_ratio_signed(z, self.b, self.c);
        }
        let zi = 1.0 / z;
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = (acc + c) * zi;
        }
        Ok(((self.b - self.c) * log(z) + acc, 1.0))
    }
}

/// First two coefficients of the quotient expansion Γ(z+b)/Γ(z+c) ≈ z^{b−c}(1 + C₁/z + C₂/z²).
pub fn gamma_ratio_coeffs(b: f64, c: f64) -> (f64, f64) {
    let d = b - c;
    let c1 = d * (b + c - 1.0) / 2.0;
    let binom = d * (d - 1.0) / 2.0;
    let c2 = binom * (3.0 * (b + c - 1.0) * (b + c - 1.0) - (d + 1.0)) / 12.0;
    (c1, c2)
}

/// Pochhammer symbol (z)ₙ = z(z+1)…(z+n−1).
pub fn pochhammer(z: f64, n: u32) -> f64 {
    let mut p = 1.0;
    for i in 0..n {
        p *= z + i as f64;
    }
    p
}

/// Polygamma ψ⁽ᵐ⁾(x) for x > 0.
pub fn polygamma(m: u32, x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain("polygamma requires a finite positive argument"));
    }
    let mf = m as f64;
    let mut fact_m = 1.0; // m!
    for i in 1..=m {
        fact_m *= i as f64;
    }
    let sign_m = if m % 2 == 0 { 1.0 } else { -1.0 };
    // ψ⁽ᵐ⁾(x) = ψ⁽ᵐ⁾(x+1) − (−1)^m m! / x^{m+1}
    let threshold = 20.0 + 2.0 * mf;
    let mut y = x;
    let mut shift = 0.0;
    while y < threshold {
        shift -= sign_m * fact_m / libm::pow(y, mf + 1.0);
        y += 1.0;
    }
    let yi = 1.0 / y;
    let asym = if m == 0 {
        let yi2 = yi * yi;
        let mut s = 0.0;
        let mut yp = yi2;
        for k in 1..=10 {
            s += BERNOULLI_EVEN[k - 1] / (2 * k) as f64 * yp;
            yp *= yi2;
        }
        log(y) - 0.5 * yi - s
    } else {
        // (−1)^{m+1} Σ_k (k+m−1)! B_k / (k! y^{k+m}), with B₁ = +1/2
        let mut fact_m1 = 1.0; // (m−1)!
        for i in 1..m {
            fact_m1 *= i as f64;
        }
        let ym = libm::pow(yi, mf);
        let mut s = fact_m1 * ym + fact_m * 0.5 * ym * yi;
        // ratio (2k+m−1)!/(2k)! built incrementally
        let mut ratio = fact_m1; // k = 0: (m−1)!/0!
        let mut yp = ym;
        for k in 1..=12usize {
            let kk = 2 * k;
            // multiply ratio by (kk+m−1)(kk+m−2)/(kk(kk−1))
            ratio *= ((kk + m as usize - 1) * (kk + m as usize - 2)) as f64 / ((kk * (kk - 1)) as f64);
            yp *= yi * yi;
            s += ratio * BERNOULLI_EVEN[k - 1] * yp;
        }
        -sign_m * s
    };
    Ok(asym + shift)
}

/// ln Γ(z) for complex z off the poles (principal branch not guaranteed; only
/// `exp` of the result is meaningful across the reflection).
pub fn ln_gamma_complex(z: Complex64) -> Result<Complex64> {
    if z.re <= 0.0 && z.im == 0.0 && z.re == floor(z.re) {
        return Err(Error::pole("complex Gamma at a non-positive integer"));
    }
    if z.re < 0.5 {
        // Γ(z)Γ(1−z) = π / sin(πz)
        let rhs = ln_gamma_complex(Complex64::new(1.0 - z.re, -z.im))?;
        return Ok(Complex64::new(log(PI), 0.0) - ln_sin_pi_complex(z) - rhs);
    }
    let mut w = z;
    let mut acc = Complex64::new(0.0, 0.0);
    while w.norm() < 15.0 {
        acc += w.ln();
        w += 1.0;
    }
    let wi = w.inv();
    let wi2 = wi * wi;
    let mut tail = Complex64::new(0.0, 0.0);
    for k in (1..=9).rev() {
        let b = BERNOULLI_EVEN[k - 1];
        tail = tail * wi2 + b / ((2 * k) as f64 * (2 * k - 1) as f64);
    }
    tail *= wi;
    Ok((w - 0.5) * w.ln() - w + LN_SQRT_2PI + tail - acc)
}

/// ln sin(πz) up to a multiple of 2πi; stays finite for large |Im z|.
fn ln_sin_pi_complex(z: Complex64) -> Complex64 {
    let y = PI * z.im;
    if fabs(y) < 20.0 {
        return sin_pi_complex(z).ln();
    }
    // sin(πz) = e^{∓iπz}(1 − e^{±2iπz})/(±2i), the first factor dominant
    let w = Complex64::new(-PI * z.im, PI * z.re);
    if y > 0.0 {
        let small = (2.0 * w).exp();
        -w + (1.0 - small).ln() + Complex64::new(-LN_2, 0.5 * PI)
    } else {
        let small = (-2.0 * w).exp();
        w + (1.0 - small).ln() - Complex64::new(LN_2, 0.5 * PI)
    }
}

/// sin(πz) for complex z with exact reduction of the real part.
pub fn sin_pi_complex(z: Complex64) -> Complex64 {
    let n = floor(z.re + 0.5);
    let r = z.re - n;
    let y = PI * z.im;
    let s = Complex64::new(sin(PI * r) * libm::cosh(y), cos(PI * r) * libm::sinh(y));
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// Distance from x to the nearest pole of Γ (∞ when Re x > 0 and the point is off the real axis).
pub fn gamma_pole_distance(z: Complex64) -> f64 {
    if z.re > 0.5 {
        return f64::INFINITY;
    }
    let n = floor(z.re + 0.5).min(0.0);
    let dr = z.re - n;
    libm::hypot(dr, z.im)
}
