//! Bessel and Hankel transforms on logarithmic radial grids.
//!
//! Both transforms share the kernel `(λr)^{−(d−2)/2} J_ρ(λr)` against the
//! measure `r^{d−1}dr`; they differ only in the order (μ_k for `B`, ν_k for
//! `H`). On two log grids with a common step the kernel matrix depends on
//! `i + j` only, so it is stored as one row of `n_in + n_out − 1` samples.
//!
//! The trapezoid in ln r integrates `J(λr)` accurately only while
//! `λ·r·h ≲ 0.3` over the support of the data. Profiles that decay like a
//! power of r (W f does, unless a = 0) are continued past the last node by a
//! fitted `c·r^{−p}`; the transforms and the norm both include that tail.

use crate::params::SpectralParams;
use crate::specfun::quad::gauss_legendre;
use crate::specfun::{bessel_j, cos_pi, sin_pi};
use crate::{Complex64, Error, Result};
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt::Debug;
use core::ops::{Add, AddAssign, Mul, Sub};
use libm::{cos, exp, fabs, log, pow, sin, sqrt};

/// Sample type of a radial profile: `f64` or `Complex64`.
pub trait Value:
    Copy + Default + Debug + PartialEq + Add<Output = Self> + Sub<Output = Self> + AddAssign + Mul<Output = Self> + Mul<f64, Output = Self>
{
    fn abs2(self) -> f64;
    fn finite(self) -> bool;
    fn from_real(x: f64) -> Self;
    fn to_complex(self) -> Complex64;
    fn from_complex(c: Complex64) -> Self;
}

impl Value for f64 {
    fn abs2(self) -> f64 {
        self * self
    }
    fn finite(self) -> bool {
        self.is_finite()
    }
    fn from_real(x: f64) -> Self {
        x
    }
    fn to_complex(self) -> Complex64 {
        Complex64::new(self, 0.0)
    }
    fn from_complex(c: Complex64) -> Self {
        c.re
    }
}

impl Value for Complex64 {
    fn abs2(self) -> f64 {
        self.norm_sqr()
    }
    fn finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
    fn from_real(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn to_complex(self) -> Complex64 {
        self
    }
    fn from_complex(c: Complex64) -> Self {
        c
    }
}

/// Uniform step in ln r.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogSpec {
    pub r_min: f64,
    pub h: f64,
    pub n: usize,
}

impl LogSpec {
    pub fn r_max(&self) -> f64 {
        exp(log(self.r_min) + (self.n - 1) as f64 * self.h)
    }
}

/// Radial nodes with weights for `∫₀^∞ g(r) r^{d−1} dr`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialGrid {
    d: u32,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    log: Option<LogSpec>,
}

impl RadialGrid {
    /// Arbitrary ascending nodes with caller-supplied weights.
    pub fn from_parts(d: u32, nodes: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        if nodes.len() != weights.len() || nodes.is_empty() {
            return Err(Error::grid("nodes and weights must be non-empty and of equal length"));
        }
        if nodes[0] <= 0.0 || nodes.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::grid("nodes must be positive and strictly increasing"));
        }
        if weights.iter().any(|w| !(w.is_finite() && *w > 0.0)) {
            return Err(Error::grid("weights must be positive"));
        }
        Ok(RadialGrid { d, nodes, weights, log: None })
    }

    /// `n` nodes `r_min·e^{ih}` with trapezoidal weights in ln r. The first
    /// weight also carries `∫₀^{r_min} r^{d−1}dr`, treating the integrand as
    /// constant below the grid.
    pub fn with_step(r_min: f64, h: f64, n: usize, d: u32) -> Result<Self> {
        if n < 16 {
            return Err(Error::grid(format!("log grid needs at least 16 nodes, got {n}")));
        }
        if !(r_min > 0.0 && r_min.is_finite() && h > 0.0 && h.is_finite()) {
            return Err(Error::grid("log grid needs r_min > 0 and a positive step"));
        }
        if d < 1 {
            return Err(Error::grid("dimension must be positive"));
        }
        let l0 = log(r_min);
        let nodes: Vec<f64> = (0..n).map(|i| exp(l0 + i as f64 * h)).collect();
        let mut weights: Vec<f64> = nodes.iter().map(|&r| h * pow(r, d as f64)).collect();
        weights[0] = 0.5 * weights[0] + pow(r_min, d as f64) / d as f64;
        weights[n - 1] *= 0.5;
        Ok(RadialGrid { d, nodes, weights, log: Some(LogSpec { r_min, h, n }) })
    }

    pub fn d(&self) -> u32 {
        self.d
    }
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
    pub fn len(&self) -> usize {
        self.nodes.len()
    }
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
    pub fn log_spec(&self) -> Option<LogSpec> {
        self.log
    }
    pub fn r_min(&self) -> f64 {
        self.nodes[0]
    }
    pub fn r_max(&self) -> f64 {
        self.nodes[self.nodes.len() - 1]
    }

    /// Log grid on `[1/r_max, 1/r_min]` with the same node count.
    pub fn reciprocal(&self) -> Result<Self> {
        match self.log {
            Some(s) => RadialGrid::with_step(1.0 / s.r_max(), s.h, s.n, self.d),
            None => Err(Error::grid("reciprocal grid is only defined for log grids")),
        }
    }

    /// Σ wᵢ gᵢ.
    pub fn integrate<T: Value>(&self, values: &[T]) -> T {
        let mut acc = T::default();
        for (w, v) in self.weights.iter().zip(values) {
            acc += *v * *w;
        }
        acc
    }

    fn same_step(&self, other: &RadialGrid) -> Option<(LogSpec, LogSpec)> {
        match (self.log, other.log) {
            (Some(a), Some(b)) if fabs(a.h - b.h) <= 1e-12 * a.h => Some((a, b)),
            _ => None,
        }
    }
}

/// Log grid on `[r_min, r_max]`.
pub fn make_log_grid(r_min: f64, r_max: f64, n: usize, d: u32) -> Result<RadialGrid> {
    if !(r_min > 0.0 && r_max > r_min && r_max.is_finite()) {
        return Err(Error::grid(format!("bad radial range [{r_min}, {r_max}]")));
    }
    if n < 16 {
        return Err(Error::grid(format!("log grid needs at least 16 nodes, got {n}")));
    }
    let h = (log(r_max) - log(r_min)) / (n - 1) as f64;
    RadialGrid::with_step(r_min, h, n, d)
}

/// Space grid on `[r_min, r_max]` and spectral grid on `[l_min, l_max]`
/// sharing the log step `h`, so transforms between them use the Hankel table.
///
/// Output of W carries an algebraic tail in r while the spectral side of
/// Gaussian data decays fast, so the space band is usually the wider one.
pub fn make_split_grids(r_min: f64, r_max: f64, l_min: f64, l_max: f64, h: f64, d: u32) -> Result<(RadialGrid, RadialGrid)> {
    if !(r_max > r_min && l_max > l_min && l_min > 0.0 && r_max.is_finite() && l_max.is_finite() && h > 0.0 && h.is_finite()) {
        return Err(Error::grid(format!("bad split bands [{r_min}, {r_max}] / [{l_min}, {l_max}]")));
    }
    let count = |lo: f64, hi: f64| libm::ceil((log(hi) - log(lo)) / h) as usize + 1;
    Ok((RadialGrid::with_step(r_min, h, count(r_min, r_max), d)?, RadialGrid::with_step(l_min, h, count(l_min, l_max), d)?))
}

/// Samples of a radial profile on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialFunction<T = f64> {
    grid: Arc<RadialGrid>,
    values: Vec<T>,
}

impl<T: Value> RadialFunction<T> {
    pub fn new(grid: Arc<RadialGrid>, values: Vec<T>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::grid(format!("{} values for {} nodes", values.len(), grid.len())));
        }
        if values.iter().any(|v| !v.finite()) {
            return Err(Error::domain("radial profile has non-finite samples"));
        }
        Ok(RadialFunction { grid, values })
    }

    pub fn from_fn(grid: Arc<RadialGrid>, f: impl Fn(f64) -> T) -> Self {
        let values = grid.nodes().iter().map(|&r| f(r)).collect();
        RadialFunction { grid, values }
    }

    pub fn zeros(grid: Arc<RadialGrid>) -> Self {
        let n = grid.len();
        RadialFunction { grid, values: alloc::vec![T::default(); n] }
    }

    pub fn grid(&self) -> &Arc<RadialGrid> {
        &self.grid
    }
    pub fn values(&self) -> &[T] {
        &self.values
    }
    pub fn values_mut(&mut self) -> &mut [T] {
        &mut self.values
    }
    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    /// Weighted L² norm.
    pub fn norm(&self) -> f64 {
        libm::sqrt(self.norm_sqr())
    }

    /// Squared norm, including the extrapolated algebraic tail beyond the
    /// last node when one is detected (the transforms use the same tail).
    pub fn norm_sqr(&self) -> f64 {
        energy(&self.values, &self.grid)
    }

    /// ‖self − other‖ on a shared grid.
    pub fn distance(&self, other: &Self) -> Result<f64> {
        if self.grid.len() != other.grid.len() || self.grid.nodes() != other.grid.nodes() {
            return Err(Error::grid("profiles live on different grids"));
        }
        let diff: Vec<T> = self.values.iter().zip(&other.values).map(|(a, b)| *a - *b).collect();
        Ok(libm::sqrt(energy(&diff, &self.grid)))
    }

    pub fn scaled(&self, c: f64) -> Self {
        RadialFunction { grid: self.grid.clone(), values: self.values.iter().map(|v| *v * c).collect() }
    }

    /// Pointwise sum; grids must coincide.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.grid.nodes() != other.grid.nodes() {
            return Err(Error::grid("profiles live on different grids"));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| *a + *b).collect();
        Ok(RadialFunction { grid: self.grid.clone(), values })
    }

    pub fn sup_abs(&self) -> f64 {
        libm::sqrt(self.values.iter().map(|v| v.abs2()).fold(0.0, f64::max))
    }
}

impl RadialFunction<f64> {
    pub fn to_complex(&self) -> RadialFunction<Complex64> {
        RadialFunction { grid: self.grid.clone(), values: self.values.iter().map(|&v| Complex64::new(v, 0.0)).collect() }
    }
}

impl RadialFunction<Complex64> {
    pub fn re(&self) -> RadialFunction<f64> {
        RadialFunction { grid: self.grid.clone(), values: self.values.iter().map(|v| v.re).collect() }
    }
}

/// `t^{−λ₀} J_ρ(t)`.
fn kernel_sample(order: f64, lambda0: f64, t: f64) -> Result<f64> {
    let j = bessel_j(order, t)?;
    Ok(if lambda0 == 0.0 { j } else { j * pow(t, -lambda0) })
}

/// Algebraic tail `f(r) ≈ f(R)(R/r)^p` beyond the last node.
#[derive(Debug, Clone, Copy)]
struct Tail<T> {
    p: f64,
    at_end: T,
}

/// Detects a power-law tail from the last samples; `None` when the data has
/// already decayed or does not look algebraic.
fn detect_tail<T: Value>(values: &[T], grid: &RadialGrid) -> Option<Tail<T>> {
    let spec = grid.log_spec()?;
    let n = values.len();
    let m = (n / 64).max(4);
    if n < 4 * m {
        return None;
    }
    let norm: f64 = grid.weights().iter().zip(values).map(|(w, v)| w * v.abs2()).sum();
    let end = values[n - 1];
    let r_end = grid.r_max();
    let slope = |i: usize, j: usize| 0.5 * log(values[i].abs2() / values[j].abs2()) / ((j - i) as f64 * spec.h);
    if end.abs2() == 0.0 || values[n - 1 - m].abs2() == 0.0 || values[n - 1 - 2 * m].abs2() == 0.0 {
        return None;
    }
    // a power law keeps its phase; an oscillating profile (e^{−itλ²} data) does not
    let turns = |i: usize, j: usize| {
        let q = values[j].to_complex() / values[i].to_complex();
        fabs(libm::atan2(q.im, q.re)) > 0.05
    };
    if turns(n - 1 - m, n - 1) || turns(n - 1 - 2 * m, n - 1 - m) {
        return None;
    }
    let p1 = slope(n - 1 - m, n - 1);
    let p2 = slope(n - 1 - 2 * m, n - 1 - m);
    let d = grid.d() as f64;
    if !(p1 > 0.5 * d + 0.05) || fabs(p1 - p2) > 0.05 * p1 {
        return None;
    }
    // squared tail mass relative to the bulk
    let tail = end.abs2() * pow(r_end, d) / (2.0 * p1 - d);
    if !(tail > 1e-26 * norm) {
        return None;
    }
    Some(Tail { p: p1, at_end: end })
}

fn energy<T: Value>(values: &[T], grid: &RadialGrid) -> f64 {
    let bulk: f64 = grid.weights().iter().zip(values).map(|(w, v)| w * v.abs2()).sum();
    match detect_tail(values, grid) {
        Some(t) => bulk + t.at_end.abs2() * pow(grid.r_max(), grid.d() as f64) / (2.0 * t.p - grid.d() as f64),
        None => bulk,
    }
}

/// `G(x) = ∫_x^∞ t^q J_ρ(t) dt` at ascending `xs`, for q < 1/2.
fn tail_integrals(rho: f64, q: f64, xs: &[f64]) -> Result<Vec<f64>> {
    let rule = gauss_legendre(10);
    let f = |t: f64| -> Result<f64> { Ok(pow(t, q) * bessel_j(rho, t)?) };
    let panel = |a: f64, b: f64| -> Result<f64> {
        let pieces = libm::ceil((b - a) / 2.0).max(1.0) as usize;
        let w = (b - a) / pieces as f64;
        let mut acc = 0.0;
        for p in 0..pieces {
            let c = a + (p as f64 + 0.5) * w;
            for (x, wt) in rule.0.iter().zip(&rule.1) {
                acc += 0.5 * w * wt * f(c + 0.5 * w * x)?;
            }
        }
        Ok(acc)
    };
    let n = xs.len();
    let top = xs[n - 1].max(200.0);
    // J_ρ(t) ≈ √(2/(πt)) cos(t − φ); two integrations by parts
    let phi = 0.5 * rho + 0.25;
    let (s, c) = (sin(top) * cos_pi(phi) - cos(top) * sin_pi(phi), cos(top) * cos_pi(phi) + sin(top) * sin_pi(phi));
    let e = q - 0.5;
    let mut g = sqrt(2.0 / core::f64::consts::PI) * (-pow(top, e) * s - e * pow(top, e - 1.0) * c);
    g += panel(xs[n - 1], top)?;
    let mut out = alloc::vec![0.0; n];
    out[n - 1] = g;
    for j in (0..n - 1).rev() {
        g += panel(xs[j], xs[j + 1])?;
        out[j] = g;
    }
    Ok(out)
}

#[derive(Debug, Clone)]
enum Repr {
    /// kernel at `a_0 b_0 e^{mh}`, m = i + j
    Hankel(Vec<f64>),
    /// row-major `[j][i]`, j over the output grid
    Dense(Vec<f64>),
}

/// Discretised transform kernel between two radial grids.
///
/// The same kernel maps `from → to` ([`TransformKernel::forward`]) and
/// `to → from` ([`TransformKernel::backward`]); the transforms are self-inverse.
#[derive(Debug, Clone)]
pub struct TransformKernel {
    order: f64,
    from: Arc<RadialGrid>,
    to: Arc<RadialGrid>,
    repr: Repr,
    #[cfg(feature = "std")]
    fft: std::sync::OnceLock<Arc<fft::Correlator>>,
}

/// Correlation with the Hankel-structured table through rustfft.
#[cfg(feature = "std")]
mod fft {
    use super::{Complex64, Value};
    use alloc::sync::Arc;
    use alloc::vec::Vec;
    use rustfft::{Fft, FftPlanner};

    /// Below this many multiply-adds the direct sum is faster.
    pub(super) const MIN_WORK: usize = 1 << 18;

    pub(super) struct Correlator {
        n: usize,
        table_hat: Vec<Complex64>,
        fwd: Arc<dyn Fft<f64>>,
        inv: Arc<dyn Fft<f64>>,
    }

    impl core::fmt::Debug for Correlator {
        fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
            f.debug_struct("Correlator").field("n", &self.n).finish()
        }
    }

    impl Correlator {
        pub(super) fn new(table: &[f64]) -> Self {
            let n = table.len().next_power_of_two();
            let mut planner = FftPlanner::new();
            let fwd = planner.plan_fft_forward(n);
            let inv = planner.plan_fft_inverse(n);
            let mut table_hat: Vec<Complex64> = table.iter().map(|t| Complex64::new(*t, 0.0)).collect();
            table_hat.resize(n, Complex64::new(0.0, 0.0));
            fwd.process(&mut table_hat);
            Correlator { n, table_hat, fwd, inv }
        }

        /// out[j] = Σ_i table[i + j] wf[i], j < n_out.
        ///
        /// With g the reversal of wf this is the circular convolution
        /// (table ⊛ g) at j + n_in − 1, which does not wrap once n ≥ table.len().
        pub(super) fn apply<T: Value>(&self, wf: &[T], n_out: usize) -> Vec<T> {
            let n_in = wf.len();
            let mut buf: Vec<Complex64> = wf.iter().rev().map(|v| v.to_complex()).collect();
            buf.resize(self.n, Complex64::new(0.0, 0.0));
            self.fwd.process(&mut buf);
            for (b, t) in buf.iter_mut().zip(&self.table_hat) {
                *b *= *t;
            }
            self.inv.process(&mut buf);
            let scale = 1.0 / self.n as f64;
            (0..n_out).map(|j| T::from_complex(buf[j + n_in - 1] * scale)).collect()
        }
    }
}

impl TransformKernel {
    pub fn new(order: f64, from: Arc<RadialGrid>, to: Arc<RadialGrid>) -> Result<Self> {
        if !(order >= -0.5) || !order.is_finite() {
            return Err(Error::domain(format!("transform order {order} below −1/2")));
        }
        if from.d() != to.d() {
            return Err(Error::grid(format!("dimension mismatch: {} vs {}", from.d(), to.d())));
        }
        let lambda0 = (from.d() as f64 - 2.0) / 2.0;
        let repr = match from.same_step(&to) {
            Some((a, b)) => {
                let base = log(a.r_min) + log(b.r_min);
                let m = a.n + b.n - 1;
                let mut table = Vec::with_capacity(m);
                for i in 0..m {
                    table.push(kernel_sample(order, lambda0, exp(base + i as f64 * a.h))?);
                }
                Repr::Hankel(table)
            }
            None => {
                let mut mat = Vec::with_capacity(from.len() * to.len());
                for &l in to.nodes() {
                    for &r in from.nodes() {
                        mat.push(kernel_sample(order, lambda0, l * r)?);
                    }
                }
                Repr::Dense(mat)
            }
        };
        Ok(TransformKernel {
            order,
            from,
            to,
            repr,
            #[cfg(feature = "std")]
            fft: std::sync::OnceLock::new(),
        })
    }

    pub fn order(&self) -> f64 {
        self.order
    }
    pub fn from_grid(&self) -> &Arc<RadialGrid> {
        &self.from
    }
    pub fn to_grid(&self) -> &Arc<RadialGrid> {
        &self.to
    }

    pub fn forward<T: Value>(&self, f: &RadialFunction<T>) -> Result<RadialFunction<T>> {
        self.check(f, &self.from)?;
        Ok(RadialFunction { grid: self.to.clone(), values: self.apply(f.values(), false)? })
    }

    pub fn backward<T: Value>(&self, f: &RadialFunction<T>) -> Result<RadialFunction<T>> {
        self.check(f, &self.to)?;
        Ok(RadialFunction { grid: self.from.clone(), values: self.apply(f.values(), true)? })
    }

    fn check<T>(&self, f: &RadialFunction<T>, g: &RadialGrid) -> Result<()> {
        if f.grid.d() != g.d() {
            return Err(Error::grid(format!("profile in d = {} fed to a d = {} transform", f.grid.d(), g.d())));
        }
        if f.grid.len() != g.len() || f.grid.nodes() != g.nodes() {
            return Err(Error::grid("profile grid does not match the transform grid"));
        }
        Ok(())
    }

    fn apply<T: Value>(&self, f: &[T], back: bool) -> Result<Vec<T>> {
        let (src, dst) = if back { (&self.to, &self.from) } else { (&self.from, &self.to) };
        let mut out = self.apply_truncated(f, back, src, dst);
        if let Some(tail) = detect_tail(f, src) {
            let d = src.d() as f64;
            let lambda0 = (d - 2.0) / 2.0;
            let big_r = src.r_max();
            let q = d - 1.0 - tail.p - lambda0;
            let xs: Vec<f64> = dst.nodes().iter().map(|l| l * big_r).collect();
            let g = tail_integrals(self.order, q, &xs)?;
            for ((o, l), gj) in out.iter_mut().zip(dst.nodes()).zip(g) {
                *o += tail.at_end * (pow(big_r * l, tail.p) / pow(*l, d) * gj);
            }
        }
        Ok(out)
    }

    fn apply_truncated<T: Value>(&self, f: &[T], back: bool, src: &RadialGrid, dst: &RadialGrid) -> Vec<T> {
        let wf: Vec<T> = f.iter().zip(src.weights()).map(|(v, w)| *v * *w).collect();
        let mut out = alloc::vec![T::default(); dst.len()];
        match &self.repr {
            Repr::Hankel(table) => {
                #[cfg(feature = "std")]
                if wf.len() * dst.len() >= fft::MIN_WORK {
                    return self.fft.get_or_init(|| Arc::new(fft::Correlator::new(table))).apply(&wf, dst.len());
                }
                for (j, o) in out.iter_mut().enumerate() {
                    let row = &table[j..j + wf.len()];
                    let mut acc = T::default();
                    for (k, v) in row.iter().zip(&wf) {
                        acc += *v * *k;
                    }
                    *o = acc;
                }
            }
            Repr::Dense(mat) => {
                let ni = self.from.len();
                if back {
                    for (j, v) in wf.iter().enumerate() {
                        let row = &mat[j * ni..(j + 1) * ni];
                        for (o, k) in out.iter_mut().zip(row) {
                            *o += *v * *k;
                        }
                    }
                } else {
                    for (j, o) in out.iter_mut().enumerate() {
                        let row = &mat[j * ni..(j + 1) * ni];
                        let mut acc = T::default();
                        for (k, v) in row.iter().zip(&wf) {
                            acc += *v * *k;
                        }
                        *o = acc;
                    }
                }
            }
        }
        out
    }
}

/// `(B_μ f)(λ) = ∫ f(r) (λr)^{−(d−2)/2} J_μ(λr) r^{d−1} dr` on `out_grid`.
pub fn bessel_transform<T: Value>(order: f64, f: &RadialFunction<T>, out_grid: &Arc<RadialGrid>) -> Result<RadialFunction<T>> {
    TransformKernel::new(order, f.grid().clone(), out_grid.clone())?.forward(f)
}

/// Hankel transform of order ν ≥ 0; same quadrature as [`bessel_transform`].
pub fn hankel_transform<T: Value>(order: f64, f: &RadialFunction<T>, out_grid: &Arc<RadialGrid>) -> Result<RadialFunction<T>> {
    if !(order >= 0.0) {
        return Err(Error::domain(format!("Hankel order {order} must be non-negative")));
    }
    bessel_transform(order, f, out_grid)
}

/// Which functional calculus a multiplier is applied in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Calculus {
    /// `H_ν m H_ν`, i.e. `m(√L_a)` on the mode
    La,
    /// `B_μ m B_μ`, i.e. `m(√−Δ)` on the mode
    Laplacian,
}

/// Spectral mass of `m·Tf` sitting near the ends of the λ grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandWarning {
    pub edge_fraction: f64,
}

/// Output of a spectral multiplier with the band diagnostic.
#[derive(Debug, Clone)]
pub struct Multiplied<T> {
    pub value: RadialFunction<T>,
    pub warning: Option<BandWarning>,
}

/// Relative edge mass above which a multiplier is reported as unresolved.
pub const BAND_EDGE_TOL: f64 = 1e-12;

fn edge_fraction<T: Value>(g: &RadialFunction<T>) -> f64 {
    let n = g.values.len();
    let e = (n / 50).max(4).min(n / 2);
    let w = g.grid.weights();
    let total: f64 = g.values.iter().zip(w).map(|(v, w)| w * v.abs2()).sum();
    if total == 0.0 {
        return 0.0;
    }
    let edge: f64 = (0..e).chain(n - e..n).map(|i| w[i] * g.values[i].abs2()).sum();
    edge / total
}

/// The two transforms of one harmonic degree, precomputed between a space
/// grid and a spectral grid.
#[derive(Debug, Clone)]
pub struct ModePlan {
    pub k: u32,
    pub mu: f64,
    pub nu: f64,
    bessel: TransformKernel,
    hankel: Option<TransformKernel>,
}

impl ModePlan {
    pub fn new(params: &SpectralParams, k: u32, space: Arc<RadialGrid>, spectral: Arc<RadialGrid>) -> Result<Self> {
        if space.d() != params.d || spectral.d() != params.d {
            return Err(Error::grid("grid dimension differs from the problem dimension"));
        }
        let m = params.mode(k);
        let bessel = TransformKernel::new(m.mu, space.clone(), spectral.clone())?;
        let hankel = if m.nu == m.mu { None } else { Some(TransformKernel::new(m.nu, space, spectral)?) };
        Ok(ModePlan { k, mu: m.mu, nu: m.nu, bessel, hankel })
    }

    /// Plan with the spectral grid reciprocal to the space grid.
    pub fn reciprocal(params: &SpectralParams, k: u32, space: Arc<RadialGrid>) -> Result<Self> {
        let spectral = Arc::new(space.reciprocal()?);
        ModePlan::new(params, k, space, spectral)
    }

    pub fn space(&self) -> &Arc<RadialGrid> {
        self.bessel.from_grid()
    }
    pub fn spectral(&self) -> &Arc<RadialGrid> {
        self.bessel.to_grid()
    }
    pub fn bessel(&self) -> &TransformKernel {
        &self.bessel
    }
    pub fn hankel(&self) -> &TransformKernel {
        self.hankel.as_ref().unwrap_or(&self.bessel)
    }

    /// `W_k f = H_ν B_μ f`, or `W_k* f = B_μ H_ν f`.
    pub fn waveop<T: Value>(&self, f: &RadialFunction<T>, adjoint: bool) -> Result<RadialFunction<T>> {
        let (first, second) = if adjoint { (self.hankel(), &self.bessel) } else { (&self.bessel, self.hankel()) };
        let g = first.forward(f)?;
        second.backward(&g)
    }

    /// `T[m(λ)·T f]` with `T = H_ν` or `T = B_μ`.
    pub fn multiplier<T: Value>(&self, m: &dyn Fn(f64) -> T, f: &RadialFunction<T>, calculus: Calculus) -> Result<Multiplied<T>> {
        let t = match calculus {
            Calculus::La => self.hankel(),
            Calculus::Laplacian => &self.bessel,
        };
        let mut g = t.forward(f)?;
        let nodes = g.grid.nodes().to_vec();
        for (v, l) in g.values.iter_mut().zip(nodes) {
            *v = m(l) * *v;
        }
        let frac = edge_fraction(&g);
        let warning = if frac > BAND_EDGE_TOL { Some(BandWarning { edge_fraction: frac }) } else { None };
        Ok(Multiplied { value: t.backward(&g)?, warning })
    }
}

/// `W_k f` (or `W_k* f`) through the reciprocal spectral grid.
pub fn apply_mode_waveop<T: Value>(params: &SpectralParams, k: u32, f: &RadialFunction<T>, adjoint: bool) -> Result<RadialFunction<T>> {
    ModePlan::reciprocal(params, k, f.grid().clone())?.waveop(f, adjoint)
}

/// `H_ν[m·H_ν f]` or `B_μ[m·B_μ f]` through the reciprocal spectral grid.
pub fn spectral_multiplier<T: Value>(
    params: &SpectralParams,
    k: u32,
    m: &dyn Fn(f64) -> T,
    f: &RadialFunction<T>,
    calculus: Calculus,
) -> Result<Multiplied<T>> {
    ModePlan::reciprocal(params, k, f.grid().clone())?.multiplier(m, f, calculus)
}
