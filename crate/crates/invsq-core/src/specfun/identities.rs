//! Numerical checks of the Bessel integral identities.

use super::bessel::{bessel_j, bessel_jy};
use super::gamma::{gamma, rgamma};
use super::hyp::hyp2f1;
use super::quad::{gauss_legendre, integrate};
use crate::{Error, Result};
use alloc::vec::Vec;
use core::f64::consts::PI;
use libm::{exp, fabs, pow, sqrt};

/// Residual |J_{ν+1}Y_ν − J_νY_{ν+1} − 2/(πz)|.
pub fn wronskian_residual(nu: f64, z: f64) -> Result<f64> {
    let (j0, y0) = bessel_jy(nu, z)?;
    let (j1, y1) = bessel_jy(nu + 1.0, z)?;
    Ok(fabs(j1 * y0 - j0 * y1 - 2.0 / (PI * z)))
}

/// Closed-form antiderivative of C_μ(z)D_ν(z)/z for cylinder functions C, D:
/// −z(C_{μ+1}D_ν − C_μD_{ν+1})/(μ²−ν²) + C_μD_ν/(μ+ν).
pub fn product_antiderivative(mu: f64, nu: f64, c: (f64, f64), d: (f64, f64), z: f64) -> f64 {
    // c = (C_μ, C_{μ+1}), d = (D_ν, D_{ν+1})
    -z * (c.1 * d.0 - c.0 * d.1) / (mu * mu - nu * nu) + c.0 * d.0 / (mu + nu)
}

/// Residual of ∫₀^z J_μ(t)J_ν(t)dt/t against the closed form.
pub fn indefinite_integral_residual(mu: f64, nu: f64, z: f64) -> Result<f64> {
    if mu == nu {
        return Err(Error::domain("the product integral formula needs μ ≠ ν"));
    }
    if mu + nu <= 0.0 {
        return Err(Error::domain("∫₀ J_μJ_ν dt/t converges only for μ + ν > 0"));
    }
    let quad = integrate(
        |t| if t == 0.0 { 0.0 } else { bessel_j(mu, t).unwrap() * bessel_j(nu, t).unwrap() / t },
        0.0,
        z,
        1e-15,
        1e-14,
    )?;
    let c = (bessel_j(mu, z)?, bessel_j(mu + 1.0, z)?);
    let d = (bessel_j(nu, z)?, bessel_j(nu + 1.0, z)?);
    Ok(fabs(quad - product_antiderivative(mu, nu, c, d, z)))
}

/// Residual of ∫_{z₁}^{z₂} Y_μ J_ν dt/t against the closed form (mixed cylinder pair).
pub fn mixed_integral_residual(mu: f64, nu: f64, z1: f64, z2: f64) -> Result<f64> {
    if mu == nu {
        return Err(Error::domain("the product integral formula needs μ ≠ ν"));
    }
    let quad = integrate(
        |t| bessel_jy(mu, t).unwrap().1 * bessel_j(nu, t).unwrap() / t,
        z1,
        z2,
        1e-15,
        1e-14,
    )?;
    let f = |z: f64| -> Result<f64> {
        let c = (bessel_jy(mu, z)?.1, bessel_jy(mu + 1.0, z)?.1);
        let d = (bessel_j(nu, z)?, bessel_j(nu + 1.0, z)?);
        Ok(product_antiderivative(mu, nu, c, d, z))
    };
    Ok(fabs(quad - (f(z2)? - f(z1)?)))
}

/// Residual of the resolvent-function identity
/// ∫₀^s Y_μ(sλ)J_μ(ρλ)J_ν(ρλ)dρ/ρ + ∫_s^∞ J_μ(sλ)Y_μ(ρλ)J_ν(ρλ)dρ/ρ
///   = 2/((ν²−μ²)π)·[J_ν(sλ) − cos((ν−μ)π/2)·J_μ(sλ)].
///
/// The cosine factor is the limit at infinity of the Y_μJ_ν antiderivative;
/// it equals one only when ν − μ is an even integer.
///
/// The infinite range is cut at a multiple of the oscillation period; the
/// non-oscillatory 1/ρ² tail is added in closed form and the remaining
/// oscillatory tail is removed by Richardson extrapolation between two cuts.
pub fn resolvent_identity_residual(mu: f64, nu: f64, s: f64, lambda: f64) -> Result<f64> {
    if mu == nu {
        return Err(Error::domain("the resolvent identity needs μ ≠ ν"));
    }
    if mu + nu <= 0.0 {
        return Err(Error::domain("the resolvent identity needs μ + ν > 0"));
    }
    let z = s * lambda;
    let (jmu_s, ymu_s) = bessel_jy(mu, z)?;
    let jnu_s = bessel_j(nu, z)?;
    let inner = integrate(
        |t| {
            if t == 0.0 {
                return 0.0;
            }
            bessel_j(mu, t).unwrap() * bessel_j(nu, t).unwrap() / t
        },
        0.0,
        z,
        1e-15,
        1e-14,
    )?;
    // outer integral in the variable t = ρλ
    let rule = gauss_legendre(16);
    let cut = |t_end: f64| -> f64 {
        let panels = libm::ceil(t_end - z) as usize;
        super::quad::composite_gl(
            |t| {
                let (_, y) = bessel_jy(mu, t).unwrap();
                y * bessel_j(nu, t).unwrap() / t
            },
            z,
            t_end,
            panels.max(1),
            &rule,
        )
    };
    // the product Y_μJ_ν ~ (1/(πt))[sin((ν−μ)π/2) + oscillation in 2t]
    let smooth_coeff = super::gamma::sin_pi(0.5 * (nu - mu)) / PI;
    let t1 = z + 400.0 * PI;
    let t2 = z + 1600.0 * PI;
    let o1 = cut(t1) + smooth_coeff / t1;
    let o2 = cut(t2) + smooth_coeff / t2;
    // oscillatory remainder is O(1/t²) with the same phase at both cuts
    let ratio = (t2 / t1) * (t2 / t1);
    let outer = (ratio * o2 - o1) / (ratio - 1.0);
    let lhs = ymu_s * inner + jmu_s * outer;
    let rhs = 2.0 / ((nu * nu - mu * mu) * PI) * (jnu_s - super::gamma::cos_pi(0.5 * (nu - mu)) * jmu_s);
    Ok(fabs(lhs - rhs))
}

/// Weber–Sonin–Schafheitlin closed form of ∫₀^∞ t J_μ(at)J_ν(bt)dt for a ≠ b.
pub fn wss_closed_form(mu: f64, nu: f64, a: f64, b: f64) -> Result<f64> {
    if a == b {
        return Err(Error::domain("Weber–Sonin–Schafheitlin form needs a ≠ b"));
    }
    let h = 0.5 * (mu + nu);
    if b < a {
        let pre = 2.0 * pow(b, nu) * gamma(h + 1.0)? * rgamma(nu + 1.0) * rgamma(0.5 * (mu - nu)) / pow(a, nu + 2.0);
        Ok(pre * hyp2f1(h + 1.0, 0.5 * (nu - mu) + 1.0, nu + 1.0, (b / a) * (b / a))?)
    } else {
        let pre = 2.0 * pow(a, mu) * gamma(h + 1.0)? * rgamma(mu + 1.0) * rgamma(0.5 * (nu - mu)) / pow(b, mu + 2.0);
        Ok(pre * hyp2f1(h + 1.0, 0.5 * (mu - nu) + 1.0, mu + 1.0, (a / b) * (a / b))?)
    }
}

/// Result of a Gaussian-damped Bessel-product integral extrapolated to zero damping.
#[derive(Debug, Clone, PartialEq)]
pub struct DampedIntegral {
    pub value: f64,
    /// |extrapolation with all levels − extrapolation without the smallest ε|
    pub spread: f64,
    pub eps: Vec<f64>,
    pub raw: Vec<f64>,
}

/// ε-ladder used by [`damped_product_integral`] for given radii.
pub fn default_eps_ladder(a: f64, b: f64) -> Vec<f64> {
    // e^{−(a−b)²/(4ε)} must sit below double precision at the largest ε
    let e0 = (a - b) * (a - b) / 160.0;
    (0..5).map(|j| e0 * pow(0.5, j as f64)).collect()
}

/// ∫₀^∞ λ e^{−ελ²} J_μ(aλ) J_ν(bλ) dλ for each ε, Richardson-extrapolated to ε → 0.
pub fn damped_product_integral(mu: f64, nu: f64, a: f64, b: f64, eps: &[f64]) -> Result<DampedIntegral> {
    if a == b {
        return Err(Error::domain("damped product integral needs distinct radii"));
    }
    if eps.len() < 2 || eps.windows(2).any(|w| !(w[1] < w[0]) || !(w[1] > 0.0)) {
        return Err(Error::domain("ε ladder must be positive and strictly decreasing"));
    }
    let eps_min = eps[eps.len() - 1];
    let lam_max = sqrt(40.0 / eps_min);
    let period = 2.0 * PI / (a + b);
    let width = 0.5 * period;
    let panels = libm::ceil(lam_max / width) as usize;
    let rule = gauss_legendre(12);
    // first panel adaptively (non-analytic λ^{1+μ+ν} behaviour at the origin)
    let mut nodes: Vec<(f64, f64)> = Vec::with_capacity(panels * 12);
    let head_end = width;
    let head = |e: f64| -> Result<f64> {
        integrate(
            |l| l * exp(-e * l * l) * bessel_j(mu, a * l).unwrap() * bessel_j(nu, b * l).unwrap(),
            0.0,
            head_end,
            1e-16,
            1e-15,
        )
    };
    for p in 1..panels {
        let lo = p as f64 * width;
        let c = lo + 0.5 * width;
        for (x, w) in rule.0.iter().zip(rule.1.iter()) {
            let l = c + 0.5 * width * x;
            let v = l * bessel_j(mu, a * l)? * bessel_j(nu, b * l)?;
            nodes.push((l, 0.5 * width * w * v));
        }
    }
    let mut raw = Vec::with_capacity(eps.len());
    for &e in eps {
        let mut acc = head(e)?;
        for &(l, v) in &nodes {
            acc += v * exp(-e * l * l);
        }
        raw.push(acc);
    }
    let full = neville_at_zero(eps, &raw);
    let partial = neville_at_zero(&eps[..eps.len() - 1], &raw[..raw.len() - 1]);
    let spread = fabs(full - partial);
    Ok(DampedIntegral { value: full, spread, eps: eps.to_vec(), raw })
}

/// Polynomial extrapolation of (xᵢ, yᵢ) to x = 0.
pub fn neville_at_zero(x: &[f64], y: &[f64]) -> f64 {
    let mut p: Vec<f64> = y.to_vec();
    let n = x.len();
    for m in 1..n {
        for i in 0..n - m {
            p[i] = (x[i + m] * p[i] - x[i] * p[i + 1]) / (x[i + m] - x[i]);
        }
    }
    p[0]
}

/// Maximum residuals of the three integral identities.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub indefinite_integral: f64,
    pub resolvent: f64,
    pub weber_schafheitlin: f64,
}

/// Verifies the product-integral formula, the resolvent identity and the
/// Weber–Sonin–Schafheitlin closed form at the given sample points.
pub fn verify_bessel_identities(nu: f64, mu: f64, z_samples: &[f64]) -> Result<IdentityReport> {
    if mu == nu {
        return Err(Error::domain("identity checks need μ ≠ ν"));
    }
    let mut rep = IdentityReport { indefinite_integral: 0.0, resolvent: 0.0, weber_schafheitlin: 0.0 };
    for &z in z_samples {
        rep.indefinite_integral = rep.indefinite_integral.max(indefinite_integral_residual(mu, nu, z)?);
        rep.resolvent = rep.resolvent.max(resolvent_identity_residual(mu, nu, z, 1.0)?);
        let (a, b) = (1.0, z);
        if fabs(a - b) > 0.05 {
            let exact = wss_closed_form(mu, nu, a, b)?;
            let damped = damped_product_integral(mu, nu, a, b, &default_eps_ladder(a, b))?;
            rep.weber_schafheitlin = rep.weber_schafheitlin.max(fabs(exact - damped.value) / fabs(exact).max(1e-300));
        }
    }
    Ok(rep)
}
