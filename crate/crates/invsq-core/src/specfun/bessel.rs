//! Bessel functions of real order and real argument.
//!
//! `J_ν` uses the power series for `x ≤ SERIES_SWITCH`; above it, Steed's
//! continued-fraction method (Temme's series for the normalisation when
//! `x < 2`), and Hankel's large-argument expansion once `x` dominates `ν²`.
//! `Y_ν` shares the continued-fraction path, which treats integer and
//! non-integer orders alike.

use super::gamma::{ln_gamma_pos, rgamma, sin_pi, cos_pi, RGAMMA_TAYLOR};
use crate::{Error, Result};
use core::f64::consts::PI;
use libm::{cos, cosh, exp, fabs, log, sin, sinh, sqrt};
use num_complex::Complex64;

/// Below this argument `J_ν` is summed from its power series.
pub const SERIES_SWITCH: f64 = 12.0;

const EPS: f64 = 1e-16;
const FPMIN: f64 = 1e-300;
const MAXIT: usize = 200_000;

fn check_order(nu: f64) -> Result<()> {
    if !nu.is_finite() || nu < -0.5 {
        return Err(Error::domain("Bessel order must be finite and ≥ −1/2"));
    }
    Ok(())
}

/// Argument above which Hankel's asymptotic expansion is used.
pub fn hankel_switch(nu: f64) -> f64 {
    30.0f64.max(1.5 * nu * nu)
}

/// J_ν(x) for ν ≥ −1/2, x ≥ 0.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    check_order(nu)?;
    if !x.is_finite() || x < 0.0 {
        return Err(Error::domain("bessel_j requires finite x ≥ 0"));
    }
    if x <= SERIES_SWITCH {
        return Ok(bessel_j_series(nu, x));
    }
    Ok(bessel_j_large(nu, x))
}

/// Large-argument branch of [`bessel_j`] (continued fractions or Hankel expansion).
pub fn bessel_j_large(nu: f64, x: f64) -> f64 {
    if x >= hankel_switch(nu) {
        return hankel_asymptotic(nu, x).0;
    }
    jy_any(nu, x).0
}

/// Y_ν(x) for ν ≥ −1/2, x > 0.
pub fn bessel_y(nu: f64, x: f64) -> Result<f64> {
    Ok(bessel_jy(nu, x)?.1)
}

/// (J_ν(x), Y_ν(x)) evaluated together.
pub fn bessel_jy(nu: f64, x: f64) -> Result<(f64, f64)> {
    check_order(nu)?;
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain("bessel_y requires finite x > 0"));
    }
    if x >= hankel_switch(nu) {
        return Ok(hankel_asymptotic(nu, x));
    }
    let (j, y) = jy_any(nu, x);
    let j = if x <= SERIES_SWITCH { bessel_j_series(nu, x) } else { j };
    Ok((j, y))
}

/// Hankel function of the first kind H⁽¹⁾_ν(x) = J_ν(x) + iY_ν(x).
pub fn hankel1(nu: f64, x: f64) -> Result<Complex64> {
    let (j, y) = bessel_jy(nu, x)?;
    Ok(Complex64::new(j, y))
}

/// Power series (x/2)^ν Σ (−1)^k (x²/4)^k / (k! Γ(ν+k+1)), for ν > −1.
pub fn bessel_j_series(nu: f64, x: f64) -> f64 {
    if x == 0.0 {
        return if nu == 0.0 { 1.0 } else { 0.0 };
    }
    let lead = if nu + 1.0 > 0.0 {
        exp(nu * log(0.5 * x) - ln_gamma_pos(nu + 1.0))
    } else {
        libm::pow(0.5 * x, nu) * rgamma(nu + 1.0)
    };
    let q = -0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..500 {
        let kf = k as f64;
        term *= q / (kf * (nu + kf));
        sum += term;
        if fabs(term) < 1e-17 * fabs(sum) && kf * (nu + kf) > fabs(q) {
            break;
        }
    }
    lead * sum
}

/// Hankel's expansion; returns (J, Y).
fn hankel_asymptotic(nu: f64, x: f64) -> (f64, f64) {
    let mu4 = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut last = f64::INFINITY;
    let ex = 8.0 * x;
    for k in 1..200 {
        let kf = k as f64;
        let odd = (2 * k - 1) as f64;
        term *= (mu4 - odd * odd) / (kf * ex);
        if fabs(term) > last {
            break;
        }
        last = fabs(term);
        // a_k with sign pattern: P = a₀ − a₂ + a₄ …, Q = a₁ − a₃ + …
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if fabs(term) < EPS * 1e-2 {
            break;
        }
    }
    // χ = x − (ν/2 + 1/4)π
    let phase = 0.5 * nu + 0.25;
    let (cx, sx) = (cos(x), sin(x));
    let (cp, sp) = (cos_pi(phase), sin_pi(phase));
    let cchi = cx * cp + sx * sp;
    let schi = sx * cp - cx * sp;
    let amp = sqrt(2.0 / (PI * x));
    (amp * (p * cchi - q * schi), amp * (p * schi + q * cchi))
}

/// (J_ν, Y_ν) for any ν ≥ −1/2 through the non-negative-order routine.
fn jy_any(nu: f64, x: f64) -> (f64, f64) {
    if nu >= 0.0 {
        return steed(nu, x);
    }
    // J_{−m} = cos(mπ)J_m − sin(mπ)Y_m ; Y_{−m} = sin(mπ)J_m + cos(mπ)Y_m
    let m = -nu;
    let (j, y) = steed(m, x);
    let (c, s) = (cos_pi(m), sin_pi(m));
    (c * j - s * y, s * j + c * y)
}

/// Temme's auxiliary quantities Γ₁(μ), Γ₂(μ), 1/Γ(1+μ), 1/Γ(1−μ) for |μ| ≤ 1/2.
fn temme_gammas(mu: f64) -> (f64, f64, f64, f64) {
    // 1/Γ(1+x) = Σ_k c_k x^{k−1}; split into even/odd parts in μ.
    let mut even = 0.0; // Σ_{k odd} c_k μ^{k−1}
    let mut odd = 0.0; // Σ_{k even} c_k μ^{k−2}
    let mu2 = mu * mu;
    let n = RGAMMA_TAYLOR.len();
    for idx in (0..n).rev() {
        let k = idx + 1;
        if k % 2 == 1 {
            even = even * mu2 + RGAMMA_TAYLOR[idx];
        } else {
            odd = odd * mu2 + RGAMMA_TAYLOR[idx];
        }
    }
    let gampl = even + mu * odd;
    let gammi = even - mu * odd;
    (-odd, even, gampl, gammi)
}

/// Steed / Temme evaluation of (J_ν, Y_ν) for ν ≥ 0, x > 0.
fn steed(nu: f64, x: f64) -> (f64, f64) {
    const XMIN: f64 = 2.0;
    let nl = if x < XMIN {
        (nu + 0.5) as usize
    } else {
        let v = nu - x + 1.5;
        if v > 0.0 {
            v as usize
        } else {
            0
        }
    };
    let xmu = nu - nl as f64;
    let xmu2 = xmu * xmu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let w = xi2 / PI;

    // CF1 for J'_ν/J_ν.
    let mut isign = 1.0;
    let mut h = nu * xi;
    if h < FPMIN {
        h = FPMIN;
    }
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    for _ in 0..MAXIT {
        b += xi2;
        d = b - d;
        if fabs(d) < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if fabs(c) < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if fabs(del - 1.0) < EPS {
            break;
        }
    }
    // Downward recurrence to order xmu.
    let mut rjl = isign * FPMIN;
    let mut rjpl = h * rjl;
    let rjl1 = rjl;
    let rjp1 = rjpl;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl;
    let (rjmu, mut rymu, mut ry1);
    if x < XMIN {
        let x2 = 0.5 * x;
        let pimu = PI * xmu;
        let fct = if fabs(pimu) < EPS { 1.0 } else { pimu / sin(pimu) };
        let dd = -log(x2);
        let e = xmu * dd;
        let fct2 = if fabs(e) < EPS { 1.0 } else { sinh(e) / e };
        let (gam1, gam2, gampl, gammi) = temme_gammas(xmu);
        let mut ff = 2.0 / PI * fct * (gam1 * cosh(e) + gam2 * fct2 * dd);
        let ee = exp(e);
        let mut p = ee / (gampl * PI);
        let mut q = 1.0 / (ee * PI * gammi);
        let pimu2 = 0.5 * pimu;
        let fct3 = if fabs(pimu2) < EPS { 1.0 } else { sin(pimu2) / pimu2 };
        let r = PI * pimu2 * fct3 * fct3;
        let mut cc = 1.0;
        let dq = -x2 * x2;
        let mut sum = ff + r * q;
        let mut sum1 = p;
        let mut i = 1.0;
        loop {
            ff = (i * ff + p + q) / (i * i - xmu2);
            cc *= dq / i;
            p /= i - xmu;
            q /= i + xmu;
            let del = cc * (ff + r * q);
            sum += del;
            let del1 = cc * p - i * del;
            sum1 += del1;
            if fabs(del) < (1.0 + fabs(sum)) * EPS || i > 1e4 {
                break;
            }
            i += 1.0;
        }
        rymu = -sum;
        ry1 = -sum1 * xi2;
        let rymup = xmu * xi * rymu - ry1;
        rjmu = w / (rymup - f * rymu);
    } else {
        // CF2 (Steed) for p + iq = (J' + iY')/(J + iY).
        let mut a = 0.25 - xmu2;
        let mut p = -0.5 * xi;
        let mut q = 1.0;
        let br = 2.0 * x;
        let mut bi = 2.0;
        let mut fct = a * xi / (p * p + q * q);
        let mut cr = br + q * fct;
        let mut ci = bi + p * fct;
        let mut den = br * br + bi * bi;
        let mut dr = br / den;
        let mut di = -bi / den;
        let mut dlr = cr * dr - ci * di;
        let mut dli = cr * di + ci * dr;
        let mut temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        for i in 2..MAXIT {
            a += 2.0 * (i as f64 - 1.0);
            bi += 2.0;
            dr = a * dr + br;
            di = a * di + bi;
            if fabs(dr) + fabs(di) < FPMIN {
                dr = FPMIN;
            }
            fct = a / (cr * cr + ci * ci);
            cr = br + cr * fct;
            ci = bi - ci * fct;
            if fabs(cr) + fabs(ci) < FPMIN {
                cr = FPMIN;
            }
            den = dr * dr + di * di;
            dr /= den;
            di = -di / den;
            dlr = cr * dr - ci * di;
            dli = cr * di + ci * dr;
            temp = p * dlr - q * dli;
            q = p * dli + q * dlr;
            p = temp;
            if fabs(dlr - 1.0) + fabs(dli) < EPS {
                break;
            }
        }
        let gam = (p - f) / q;
        let mut rj = sqrt(w / ((p - f) * gam + q));
        if rjl < 0.0 {
            rj = -rj;
        }
        rjmu = rj;
        rymu = rjmu * gam;
        let rymup = rymu * (p + q / gam);
        ry1 = xmu * xi * rymu - rymup;
    }
    let scale = rjmu / rjl;
    let rj = rjl1 * scale;
    let _rjp = rjp1 * scale;
    for i in 1..=nl {
        let rytemp = (xmu + i as f64) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = rytemp;
    }
    (rj, rymu)
}
