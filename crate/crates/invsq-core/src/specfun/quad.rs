//! Gauss–Legendre rules and adaptive Gauss–Kronrod quadrature.

use crate::{Error, Result};
use alloc::vec::Vec;
use core::f64::consts::PI;
use libm::{cos, fabs};

/// Nodes and weights of the n-point Gauss–Legendre rule on [−1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = alloc::vec![0.0; n];
    let mut w = alloc::vec![0.0; n];
    let m = (n + 1) / 2;
    for i in 0..m {
        let mut z = cos(PI * (i as f64 + 0.75) / (n as f64 + 0.5));
        let legendre = |z: f64| {
            let mut p1 = 1.0;
            let mut p2 = 0.0;
            for j in 0..n {
                let p3 = p2;
                p2 = p1;
                p1 = ((2 * j + 1) as f64 * z * p2 - j as f64 * p3) / (j + 1) as f64;
            }
            (p1, n as f64 * (z * p1 - p2) / (z * z - 1.0))
        };
        for _ in 0..100 {
            let (p1, pp) = legendre(z);
            let dz = p1 / pp;
            z -= dz;
            if fabs(dz) < 1e-16 {
                break;
            }
        }
        let pp = legendre(z).1;
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

fn gk15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut rk = fc * WGK[7];
    let mut rg = fc * WG[3];
    for j in 0..7 {
        let dx = h * XGK[j];
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        rk += WGK[j] * (f1 + f2);
        if j % 2 == 1 {
            rg += WG[j / 2] * (f1 + f2);
        }
    }
    (rk * h, fabs((rk - rg) * h))
}

/// Adaptive Gauss–Kronrod (7/15) integration of `f` over `[a, b]`.
///
/// Returns the integral; fails with a non-convergence error carrying the
/// achieved error estimate when the interval budget is exhausted.
pub fn integrate<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, abs_tol: f64, rel_tol: f64) -> Result<f64> {
    integrate_with_budget(&mut f, a, b, abs_tol, rel_tol, 4000)
}

pub fn integrate_with_budget<F: FnMut(f64) -> f64>(
    f: &mut F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_intervals: usize,
) -> Result<f64> {
    let (v, e) = gk15(f, a, b);
    let mut segs: Vec<(f64, f64, f64, f64)> = alloc::vec![(a, b, v, e)];
    let mut total = v;
    let mut err = e;
    while err > abs_tol.max(rel_tol * fabs(total)) {
        if segs.len() >= max_intervals {
            return Err(Error::nonconv(alloc::format!(
                "adaptive quadrature on [{a}, {b}]: error estimate {err:e} after {max_intervals} intervals"
            )));
        }
        let (idx, _) = segs
            .iter()
            .enumerate()
            .fold((0, -1.0), |acc, (i, s)| if s.3 > acc.1 { (i, s.3) } else { acc });
        let (sa, sb, sv, se) = segs.swap_remove(idx);
        let mid = 0.5 * (sa + sb);
        let (v1, e1) = gk15(f, sa, mid);
        let (v2, e2) = gk15(f, mid, sb);
        total += v1 + v2 - sv;
        err += e1 + e2 - se;
        segs.push((sa, mid, v1, e1));
        segs.push((mid, sb, v2, e2));
    }
    // re-sum to shed accumulated rounding
    Ok(segs.iter().map(|s| s.2).sum())
}

/// Fixed composite Gauss–Legendre rule with `panels` equal panels.
pub fn composite_gl<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, panels: usize, rule: &(Vec<f64>, Vec<f64>)) -> f64 {
    let h = (b - a) / panels as f64;
    let mut acc = 0.0;
    for p in 0..panels {
        let lo = a + p as f64 * h;
        let c = lo + 0.5 * h;
        let mut s = 0.0;
        for (x, w) in rule.0.iter().zip(rule.1.iter()) {
            s += w * f(c + 0.5 * h * x);
        }
        acc += 0.5 * h * s;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gl_exact_for_polynomials() {
        let (x, w) = gauss_legendre(10);
        let s: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(18)).sum();
        assert_relative_eq!(s, 2.0 / 19.0, max_relative = 1e-14);
        assert_relative_eq!(w.iter().sum::<f64>(), 2.0, max_relative = 1e-15);
    }

    #[test]
    fn adaptive_handles_endpoint_sqrt() {
        let v = integrate(|x| x.sqrt(), 0.0, 1.0, 1e-13, 1e-13).unwrap();
        assert_relative_eq!(v, 2.0 / 3.0, max_relative = 1e-12);
    }
}
