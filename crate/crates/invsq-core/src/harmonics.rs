//! Real spherical harmonics on 𝕊¹ and 𝕊², and the full operators assembled
//! mode by mode.
//!
//! A [`Field`] is sampled on angular nodes × radial nodes. [`analyze`] projects
//! it onto the real orthonormal basis, the operators act on each radial
//! profile, and [`synthesize`] puts the field back together. Modes whose
//! profile carries less than `prune` of the field's energy are skipped by the
//! operators, since every transform of a profile costs O(n_r · n_λ).

use crate::params::SpectralParams;
use crate::specfun::quad::gauss_legendre;
use crate::transforms::{BandWarning, Calculus, ModePlan, RadialFunction, RadialGrid, Value};
use crate::{Complex64, Error, Result};
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::f64::consts::PI;
use libm::{acos, cos, sin, sqrt};

/// Quadrature on 𝕊^{d−1}, d ∈ {2, 3}.
#[derive(Debug, Clone, PartialEq)]
pub struct AngularGrid {
    d: u32,
    /// colatitudes (d = 3); empty for d = 2
    theta: Vec<f64>,
    /// polar angle (d = 2) or azimuth (d = 3)
    phi: Vec<f64>,
    weights: Vec<f64>,
}

impl AngularGrid {
    /// `m` equispaced angles on the circle.
    pub fn circle(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::grid("circle needs at least one angle"));
        }
        let phi = (0..m).map(|j| 2.0 * PI * j as f64 / m as f64).collect();
        Ok(AngularGrid { d: 2, theta: Vec::new(), phi, weights: alloc::vec![2.0 * PI / m as f64; m] })
    }

    /// Gauss–Legendre colatitudes × equispaced azimuths; nodes are ordered
    /// colatitude-major.
    pub fn sphere(n_theta: usize, n_phi: usize) -> Result<Self> {
        if n_theta == 0 || n_phi == 0 {
            return Err(Error::grid("sphere needs at least one colatitude and one azimuth"));
        }
        let (x, w) = gauss_legendre(n_theta);
        let theta = x.iter().map(|c| acos(*c)).collect();
        let phi = (0..n_phi).map(|j| 2.0 * PI * j as f64 / n_phi as f64).collect();
        let dphi = 2.0 * PI / n_phi as f64;
        let weights = w.iter().flat_map(|wt| core::iter::repeat(wt * dphi).take(n_phi)).collect();
        Ok(AngularGrid { d: 3, theta, phi, weights })
    }

    /// Smallest grid that resolves degree `k_max`.
    pub fn for_degree(d: u32, k_max: u32) -> Result<Self> {
        match d {
            2 => Self::circle(2 * k_max as usize + 2),
            3 => Self::sphere(k_max as usize + 1, 2 * k_max as usize + 1),
            _ => Err(Error::domain(format!("angular synthesis only for d = 2, 3 (got {d})"))),
        }
    }

    pub fn d(&self) -> u32 {
        self.d
    }
    pub fn len(&self) -> usize {
        self.weights.len()
    }
    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Node `q` as an angle (d = 2) or `(θ, φ)` (d = 3).
    pub fn angles(&self, q: usize) -> (f64, f64) {
        if self.d == 2 {
            (self.phi[q], 0.0)
        } else {
            let n = self.phi.len();
            (self.theta[q / n], self.phi[q % n])
        }
    }

    /// Unit vector of node `q`.
    pub fn point(&self, q: usize) -> [f64; 3] {
        let (a, b) = self.angles(q);
        if self.d == 2 {
            [cos(a), sin(a), 0.0]
        } else {
            [sin(a) * cos(b), sin(a) * sin(b), cos(a)]
        }
    }

    pub fn surface_area(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// Largest degree whose products the rule integrates exactly.
    pub fn max_degree(&self) -> u32 {
        if self.d == 2 {
            (self.phi.len().saturating_sub(2) / 2) as u32
        } else {
            (self.theta.len().saturating_sub(1)).min(self.phi.len().saturating_sub(1) / 2) as u32
        }
    }

    fn check_degree(&self, k_max: u32) -> Result<()> {
        if k_max > self.max_degree() {
            let need = if self.d == 2 {
                format!("{} angles", 2 * k_max + 2)
            } else {
                format!("{} colatitudes and {} azimuths", k_max + 1, 2 * k_max + 1)
            };
            return Err(Error::UnderResolved(format!("degree {k_max} needs {need}")));
        }
        Ok(())
    }
}

/// Dimension of the degree-k harmonics.
pub fn harmonic_dim(d: u32, k: u32) -> usize {
    match d {
        2 => if k == 0 { 1 } else { 2 },
        _ => 2 * k as usize + 1,
    }
}

/// (k, l) pairs up to `k_max`, l = 1..=d_k.
pub fn mode_list(d: u32, k_max: u32) -> Vec<(u32, usize)> {
    (0..=k_max).flat_map(|k| (1..=harmonic_dim(d, k)).map(move |l| (k, l))).collect()
}

/// Orthonormal associated Legendre values P̄_k^m(x) for 0 ≤ m ≤ k ≤ k_max,
/// indexed `[k][m]`, without the Condon–Shortley phase.
fn legendre_table(k_max: usize, x: f64) -> Vec<Vec<f64>> {
    let s = sqrt((1.0 - x * x).max(0.0));
    let mut p: Vec<Vec<f64>> = (0..=k_max).map(|k| alloc::vec![0.0; k + 1]).collect();
    let mut pmm = 1.0 / sqrt(4.0 * PI);
    for m in 0..=k_max {
        if m > 0 {
            pmm *= sqrt((2 * m + 1) as f64 / (2 * m) as f64) * s;
        }
        p[m][m] = pmm;
        if m < k_max {
            p[m + 1][m] = sqrt((2 * m + 3) as f64) * x * pmm;
        }
        for k in m + 2..=k_max {
            let (kf, mf) = (k as f64, m as f64);
            let a = sqrt((4.0 * kf * kf - 1.0) / (kf * kf - mf * mf));
            let b = sqrt(((kf - 1.0) * (kf - 1.0) - mf * mf) / (4.0 * (kf - 1.0) * (kf - 1.0) - 1.0));
            p[k][m] = a * (x * p[k - 1][m] - b * p[k - 2][m]);
        }
    }
    p
}

/// Y_{k,l} at every node, indexed like [`mode_list`].
///
/// d = 2: 1/√(2π), cos kφ/√π, sin kφ/√π. d = 3: l = 1..2k+1 maps to order
/// m = l − 1 − k, with cos for m > 0 and sin for m < 0.
pub fn harmonic_table(grid: &AngularGrid, k_max: u32) -> Vec<Vec<f64>> {
    let modes = mode_list(grid.d, k_max);
    let mut table = alloc::vec![alloc::vec![0.0; grid.len()]; modes.len()];
    if grid.d == 2 {
        for q in 0..grid.len() {
            let (phi, _) = grid.angles(q);
            for (i, (k, l)) in modes.iter().enumerate() {
                let kf = *k as f64;
                table[i][q] = match (k, l) {
                    (0, _) => 1.0 / sqrt(2.0 * PI),
                    (_, 1) => cos(kf * phi) / sqrt(PI),
                    _ => sin(kf * phi) / sqrt(PI),
                };
            }
        }
    } else {
        let n_phi = grid.phi.len();
        for (it, th) in grid.theta.iter().enumerate() {
            let p = legendre_table(k_max as usize, cos(*th));
            for (ip, phi) in grid.phi.iter().enumerate() {
                let q = it * n_phi + ip;
                for (i, (k, l)) in modes.iter().enumerate() {
                    let m = *l as i64 - 1 - *k as i64;
                    let pk = p[*k as usize][m.unsigned_abs() as usize];
                    table[i][q] = match m {
                        0 => pk,
                        m if m > 0 => core::f64::consts::SQRT_2 * pk * cos(m as f64 * phi),
                        m => core::f64::consts::SQRT_2 * pk * sin((-m) as f64 * phi),
                    };
                }
            }
        }
    }
    table
}

/// Samples f(r_i, ω_q), stored angular-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Field<T = f64> {
    pub angular: Arc<AngularGrid>,
    pub radial: Arc<RadialGrid>,
    values: Vec<T>,
}

impl<T: Value> Field<T> {
    pub fn new(angular: Arc<AngularGrid>, radial: Arc<RadialGrid>, values: Vec<T>) -> Result<Self> {
        if angular.d() != radial.d() {
            return Err(Error::grid("angular and radial grids disagree on d"));
        }
        if values.len() != angular.len() * radial.len() {
            return Err(Error::grid(format!("{} samples for a {}×{} grid", values.len(), angular.len(), radial.len())));
        }
        if values.iter().any(|v| !v.finite()) {
            return Err(Error::domain("field has non-finite samples"));
        }
        Ok(Field { angular, radial, values })
    }

    /// Samples `f(r, ω)` with ω a unit vector (third entry 0 for d = 2).
    pub fn from_fn(angular: Arc<AngularGrid>, radial: Arc<RadialGrid>, f: impl Fn(f64, [f64; 3]) -> T) -> Result<Self> {
        let mut values = Vec::with_capacity(angular.len() * radial.len());
        for q in 0..angular.len() {
            let w = angular.point(q);
            values.extend(radial.nodes().iter().map(|r| f(*r, w)));
        }
        Self::new(angular, radial, values)
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// Profile along the ray through angular node `q`.
    pub fn ray(&self, q: usize) -> &[T] {
        let n = self.radial.len();
        &self.values[q * n..(q + 1) * n]
    }

    /// L² norm against r^{d−1} dr dω, radial tails included.
    pub fn norm(&self) -> f64 {
        let mut s = 0.0;
        for (q, w) in self.angular.weights().iter().enumerate() {
            let prof = RadialFunction::new(self.radial.clone(), self.ray(q).to_vec()).expect("field rays are finite");
            s += w * prof.norm_sqr();
        }
        sqrt(s)
    }

    pub fn distance(&self, other: &Self) -> Result<f64> {
        if self.values.len() != other.values.len() || self.angular != other.angular || self.radial.nodes() != other.radial.nodes() {
            return Err(Error::grid("fields live on different grids"));
        }
        let diff = self.values.iter().zip(&other.values).map(|(a, b)| *a - *b).collect();
        Ok(Field { angular: self.angular.clone(), radial: self.radial.clone(), values: diff }.norm())
    }

    pub fn sup_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(sqrt(v.abs2())))
    }
}

impl Field<f64> {
    pub fn to_complex(&self) -> Field<Complex64> {
        Field {
            angular: self.angular.clone(),
            radial: self.radial.clone(),
            values: self.values.iter().map(|v| Complex64::new(*v, 0.0)).collect(),
        }
    }
}

/// Radial profile of one harmonic component.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeEntry<T = f64> {
    pub k: u32,
    pub l: usize,
    pub profile: RadialFunction<T>,
}

/// Profiles f_{k,l}(r) for k ≤ k_max, ordered like [`mode_list`].
#[derive(Debug, Clone, PartialEq)]
pub struct ModeExpansion<T = f64> {
    pub angular: Arc<AngularGrid>,
    pub k_max: u32,
    pub modes: Vec<ModeEntry<T>>,
}

impl<T: Value> ModeExpansion<T> {
    pub fn get(&self, k: u32, l: usize) -> Option<&ModeEntry<T>> {
        self.modes.iter().find(|m| m.k == k && m.l == l)
    }

    /// Σ ‖f_{k,l}‖².
    pub fn energy(&self) -> f64 {
        self.modes.iter().map(|m| m.profile.norm_sqr()).sum()
    }

    /// Expansion with every profile replaced by `op(k, profile)`.
    pub fn map<U: Value>(&self, mut op: impl FnMut(u32, &RadialFunction<T>) -> Result<RadialFunction<U>>) -> Result<ModeExpansion<U>> {
        let modes = self
            .modes
            .iter()
            .map(|m| Ok(ModeEntry { k: m.k, l: m.l, profile: op(m.k, &m.profile)? }))
            .collect::<Result<_>>()?;
        Ok(ModeExpansion { angular: self.angular.clone(), k_max: self.k_max, modes })
    }
}

pub fn analyze<T: Value>(field: &Field<T>, k_max: u32) -> Result<ModeExpansion<T>> {
    field.angular.check_degree(k_max)?;
    let table = harmonic_table(&field.angular, k_max);
    let n = field.radial.len();
    let w = field.angular.weights();
    let modes = mode_list(field.angular.d(), k_max)
        .into_iter()
        .zip(&table)
        .map(|((k, l), y)| {
            let mut acc = alloc::vec![T::default(); n];
            for q in 0..field.angular.len() {
                let c = w[q] * y[q];
                for (a, v) in acc.iter_mut().zip(field.ray(q)) {
                    *a += *v * c;
                }
            }
            Ok(ModeEntry { k, l, profile: RadialFunction::new(field.radial.clone(), acc)? })
        })
        .collect::<Result<_>>()?;
    Ok(ModeExpansion { angular: field.angular.clone(), k_max, modes })
}

pub fn synthesize<T: Value>(expansion: &ModeExpansion<T>) -> Result<Field<T>> {
    let grid = &expansion.angular;
    grid.check_degree(expansion.k_max)?;
    let radial = match expansion.modes.first() {
        Some(m) => m.profile.grid().clone(),
        None => return Err(Error::domain("empty expansion")),
    };
    let table = harmonic_table(grid, expansion.k_max);
    let index = mode_list(grid.d(), expansion.k_max);
    let n = radial.len();
    let mut values = alloc::vec![T::default(); grid.len() * n];
    for m in &expansion.modes {
        let i = index.iter().position(|p| *p == (m.k, m.l)).ok_or_else(|| Error::domain("mode outside k_max"))?;
        for q in 0..grid.len() {
            let y = table[i][q];
            for (o, v) in values[q * n..(q + 1) * n].iter_mut().zip(m.profile.values()) {
                *o += *v * y;
            }
        }
    }
    Field::new(grid.clone(), radial, values)
}

/// Which route [`HarmonicPlan::apply_function_of_la`] takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Path {
    /// H_ν m H_ν on each mode
    Direct,
    /// W (B_μ m B_μ) W* on each mode
    Conjugated,
}

/// Relative mode energy below which operators skip a profile.
pub const DEFAULT_PRUNE: f64 = 1e-24;

/// Per-degree transform plans between a space grid and a spectral grid.
#[derive(Debug, Clone)]
pub struct HarmonicPlan {
    pub params: SpectralParams,
    pub k_max: u32,
    pub prune: f64,
    space: Arc<RadialGrid>,
    spectral: Arc<RadialGrid>,
    plans: Vec<Option<ModePlan>>,
}

/// Output of a functional-calculus application.
#[derive(Debug, Clone)]
pub struct Applied<T> {
    pub field: Field<T>,
    /// (k, l, warning) for profiles whose spectrum reaches the band edge
    pub band_warnings: Vec<(u32, usize, BandWarning)>,
}

impl HarmonicPlan {
    pub fn new(params: &SpectralParams, k_max: u32, space: Arc<RadialGrid>, spectral: Arc<RadialGrid>) -> Result<Self> {
        if space.d() != params.d || spectral.d() != params.d {
            return Err(Error::grid("grid dimension differs from the problem dimension"));
        }
        Ok(HarmonicPlan {
            params: *params,
            k_max,
            prune: DEFAULT_PRUNE,
            space,
            spectral,
            plans: alloc::vec![None; k_max as usize + 1],
        })
    }

    /// Spectral band [r_min, 10] on the space grid's step.
    pub fn with_default_band(params: &SpectralParams, k_max: u32, space: Arc<RadialGrid>) -> Result<Self> {
        let spec = space.log_spec().ok_or_else(|| Error::grid("space grid must be logarithmic"))?;
        let n = libm::ceil(libm::log(10.0 / spec.r_min) / spec.h) as usize + 1;
        let spectral = Arc::new(RadialGrid::with_step(spec.r_min, spec.h, n, params.d)?);
        Self::new(params, k_max, space, spectral)
    }

    pub fn space(&self) -> &Arc<RadialGrid> {
        &self.space
    }
    pub fn spectral(&self) -> &Arc<RadialGrid> {
        &self.spectral
    }

    /// Plan for degree k, built on first use.
    pub fn mode(&mut self, k: u32) -> Result<&ModePlan> {
        if k > self.k_max {
            return Err(Error::domain(format!("degree {k} above the plan's k_max {}", self.k_max)));
        }
        let slot = &mut self.plans[k as usize];
        if slot.is_none() {
            *slot = Some(ModePlan::new(&self.params, k, self.space.clone(), self.spectral.clone())?);
        }
        Ok(slot.as_ref().unwrap())
    }

    fn check_field<T>(&self, field: &Field<T>) -> Result<()> {
        if field.radial.nodes() != self.space.nodes() {
            return Err(Error::grid("field is not sampled on the plan's space grid"));
        }
        Ok(())
    }

    /// Profiles worth transforming: relative energy above `prune`.
    fn live<T: Value>(&self, e: &ModeExpansion<T>) -> Vec<bool> {
        let total = e.energy();
        e.modes.iter().map(|m| total > 0.0 && m.profile.norm_sqr() > self.prune * total).collect()
    }

    fn per_mode<T: Value>(
        &mut self,
        field: &Field<T>,
        mut op: impl FnMut(&ModePlan, u32, usize, &RadialFunction<T>) -> Result<RadialFunction<T>>,
    ) -> Result<Field<T>> {
        self.check_field(field)?;
        let e = analyze(field, self.k_max)?;
        let live = self.live(&e);
        let mut modes = Vec::with_capacity(e.modes.len());
        for (m, keep) in e.modes.iter().zip(live) {
            let profile = if keep {
                let plan = self.mode(m.k)?;
                op(plan, m.k, m.l, &m.profile)?
            } else {
                RadialFunction::zeros(self.space.clone())
            };
            modes.push(ModeEntry { k: m.k, l: m.l, profile });
        }
        synthesize(&ModeExpansion { angular: e.angular, k_max: e.k_max, modes })
    }

    /// W f, or W* f with `adjoint`.
    pub fn apply_w<T: Value>(&mut self, field: &Field<T>, adjoint: bool) -> Result<Field<T>> {
        self.per_mode(field, |plan, _, _, f| plan.waveop(f, adjoint))
    }

    /// m(√L_a) f through either path.
    pub fn apply_function_of_la<T: Value>(&mut self, m: &dyn Fn(f64) -> T, field: &Field<T>, path: Path) -> Result<Applied<T>> {
        let mut warnings = Vec::new();
        let out = self.per_mode(field, |plan, k, l, f| {
            let res = match path {
                Path::Direct => plan.multiplier(m, f, Calculus::La)?,
                Path::Conjugated => {
                    let inner = plan.multiplier(m, &plan.waveop(f, true)?, Calculus::Laplacian)?;
                    crate::transforms::Multiplied { value: plan.waveop(&inner.value, false)?, warning: inner.warning }
                }
            };
            if let Some(w) = res.warning {
                warnings.push((k, l, w));
            }
            Ok(res.value)
        })?;
        Ok(Applied { field: out, band_warnings: warnings })
    }

    /// ‖λ^s B_μ f‖ / ‖λ^s H_ν f‖ summed over modes, i.e. ‖(−Δ)^{s/2} f‖ / ‖L_a^{s/2} f‖.
    pub fn sobolev_ratio<T: Value>(&mut self, field: &Field<T>, s: f64) -> Result<f64> {
        self.check_field(field)?;
        let e = analyze(field, self.k_max)?;
        let live = self.live(&e);
        let (mut num, mut den) = (0.0, 0.0);
        for (m, keep) in e.modes.iter().zip(live) {
            if !keep {
                continue;
            }
            let plan = self.mode(m.k)?;
            let weighted = |g: RadialFunction<T>| {
                let nodes = g.grid().nodes().to_vec();
                let vals = g.values().iter().zip(nodes).map(|(v, l)| *v * libm::pow(l, s)).collect();
                RadialFunction::new(g.grid().clone(), vals).map(|f| f.norm_sqr())
            };
            num += weighted(plan.bessel().forward(&m.profile)?)?;
            den += weighted(plan.hankel().forward(&m.profile)?)?;
        }
        if den == 0.0 {
            return Err(Error::domain("field has no spectral mass"));
        }
        Ok(sqrt(num / den))
    }
}

/// W f through a plan with the default spectral band.
#[allow(non_snake_case)]
pub fn apply_W<T: Value>(params: &SpectralParams, field: &Field<T>, adjoint: bool, k_max: u32) -> Result<Field<T>> {
    HarmonicPlan::with_default_band(params, k_max, field.radial.clone())?.apply_w(field, adjoint)
}

/// m(√L_a) f through a plan with the default spectral band.
pub fn apply_function_of_la<T: Value>(
    params: &SpectralParams,
    m: &dyn Fn(f64) -> T,
    field: &Field<T>,
    path: Path,
    k_max: u32,
) -> Result<Applied<T>> {
    HarmonicPlan::with_default_band(params, k_max, field.radial.clone())?.apply_function_of_la(m, field, path)
}

/// One row of the dispersive table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispersiveRow {
    pub t: f64,
    pub sup: f64,
    /// t^{d/2} · sup
    pub scaled: f64,
}

/// Spectral mass where the phase e^{−itλ²} turns faster than the λ grid samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AliasWarning {
    pub t: f64,
    pub unresolved_fraction: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DispersiveTable {
    pub rows: Vec<DispersiveRow>,
    pub aliasing: Vec<AliasWarning>,
}

/// Relative spectral mass above which the phase counts as aliased.
pub const ALIAS_TOL: f64 = 1e-10;

/// sup |e^{−itL_a} f| over the grid for each t, via the direct path.
pub fn dispersive_experiment(plan: &mut HarmonicPlan, f: &Field<f64>, t_list: &[f64]) -> Result<DispersiveTable> {
    plan.check_field(f)?;
    let h = plan.spectral.log_spec().ok_or_else(|| Error::grid("spectral grid must be logarithmic"))?.h;
    let e = analyze(&f.to_complex(), plan.k_max)?;
    let live = plan.live(&e);
    // H_ν f once per live mode
    let mut spectra = Vec::new();
    for (m, keep) in e.modes.iter().zip(&live) {
        if *keep {
            spectra.push((m.k, m.l, plan.mode(m.k)?.hankel().forward(&m.profile)?));
        }
    }
    let lambdas = plan.spectral.nodes().to_vec();
    let w = plan.spectral.weights().to_vec();
    let total: f64 = spectra.iter().map(|(_, _, g)| g.values().iter().zip(&w).map(|(v, w)| w * v.abs2()).sum::<f64>()).sum();
    let d = plan.params.d as f64;
    let mut rows = Vec::with_capacity(t_list.len());
    let mut aliasing = Vec::new();
    for &t in t_list {
        if !(t >= 0.0) || !t.is_finite() {
            return Err(Error::domain(format!("time {t} must be finite and non-negative")));
        }
        let mut bad = 0.0;
        for (_, _, g) in &spectra {
            for ((v, l), wt) in g.values().iter().zip(&lambdas).zip(&w) {
                if 2.0 * t * l * l * h >= PI {
                    bad += wt * v.abs2();
                }
            }
        }
        if total > 0.0 && bad > ALIAS_TOL * total {
            aliasing.push(AliasWarning { t, unresolved_fraction: bad / total });
        }
        let mut modes = Vec::with_capacity(e.modes.len());
        let mut it = spectra.iter();
        for (m, keep) in e.modes.iter().zip(&live) {
            let profile = if *keep {
                let (_, _, g) = it.next().unwrap();
                let vals = g.values().iter().zip(&lambdas).map(|(v, l)| *v * Complex64::new(0.0, -t * l * l).exp()).collect();
                let g = RadialFunction::new(g.grid().clone(), vals)?;
                plan.mode(m.k)?.hankel().backward(&g)?
            } else {
                RadialFunction::zeros(plan.space.clone())
            };
            modes.push(ModeEntry { k: m.k, l: m.l, profile });
        }
        let u = synthesize(&ModeExpansion { angular: e.angular.clone(), k_max: e.k_max, modes })?;
        let sup = u.sup_abs();
        rows.push(DispersiveRow { t, sup, scaled: libm::pow(t, 0.5 * d) * sup });
    }
    Ok(DispersiveTable { rows, aliasing })
}
