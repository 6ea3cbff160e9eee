//! Subcommand bodies. Each returns its output as a string so the front end
//! only deals with destinations and exit codes.

use crate::checks::{run_suites, Suite, SuiteReport};
use crate::output::{canonical_json, fmt_num, Table};
use crate::tolerances::{Hooks, Tolerances};
use crate::{CliError, CliResult};
use invsq_core::harmonics::{dispersive_experiment, AliasWarning, AngularGrid, Field, HarmonicPlan};
use invsq_core::params::{admissible_p, make_params, IndexInterval, OperatorTag};
use invsq_core::riesz::{inverse_mellin_oracle, kernel_riesz, Direction, OracleBudget};
use invsq_core::transforms::{make_log_grid, make_split_grids, ModePlan, RadialFunction};
use invsq_core::waveop::{kernel_ktilde_with, kernel_quadrature_oracle, KernelOptions, KernelQuery};
use invsq_core::{Error, SpectralParams};
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Output format of table commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Table {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

/// Maps `f` over `items` on all cores, keeping input order.
fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync) -> Vec<U> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(items.len().max(1));
    let chunk = items.len().div_ceil(workers).max(1);
    std::thread::scope(|scope| {
        let handles: Vec<_> = items.chunks(chunk).map(|c| scope.spawn(|| c.iter().map(&f).collect::<Vec<U>>())).collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

// ----------------------------------------------------------------- params

#[derive(Debug, Serialize)]
struct Interval {
    inv_p_lo: f64,
    inv_p_hi: f64,
    p_lo: f64,
    p_hi: f64,
    empty: bool,
}

impl From<IndexInterval> for Interval {
    fn from(iv: IndexInterval) -> Self {
        let (p_lo, p_hi) = iv.p_range();
        Interval { inv_p_lo: iv.lo, inv_p_hi: iv.hi, p_lo, p_hi, empty: iv.is_empty() }
    }
}

#[derive(Debug, Serialize)]
struct ModeRow {
    k: u32,
    mu: f64,
    nu: f64,
    b: f64,
}

#[derive(Debug, Serialize)]
struct SweepRow {
    order: f64,
    intervals: BTreeMap<&'static str, Interval>,
}

#[derive(Debug, Serialize)]
struct ParamsReport {
    d: u32,
    a: f64,
    lambda0: f64,
    nu0: f64,
    sigma: f64,
    p0: Option<f64>,
    bc_order: u32,
    modes: Vec<ModeRow>,
    intervals: BTreeMap<&'static str, Interval>,
    /// order windows (open) of the order-dependent operators
    order_windows: BTreeMap<&'static str, (f64, f64)>,
    alpha_sweep: Vec<SweepRow>,
    beta_sweep: Vec<SweepRow>,
}

/// Interior points of the window, or the requested orders.
fn sweep(params: &SpectralParams, tags: [OperatorTag; 2], orders: &[f64], points: usize) -> CliResult<Vec<SweepRow>> {
    let (lo, hi) = tags[0].order_window(params).expect("order-dependent tag");
    let grid: Vec<f64> = if orders.is_empty() {
        (1..=points).map(|i| lo + (hi - lo) * i as f64 / (points + 1) as f64).collect()
    } else {
        orders.to_vec()
    };
    grid.into_iter()
        .map(|order| {
            let intervals = tags
                .iter()
                .map(|t| Ok((t.name(), admissible_p(params, *t, order)?.into())))
                .collect::<Result<_, Error>>()?;
            Ok(SweepRow { order, intervals })
        })
        .collect()
}

/// SpectralParams, mode indices up to `k_max` and admissible intervals.
pub fn cmd_params(d: u32, a: f64, k_max: u32, alphas: &[f64], betas: &[f64]) -> CliResult<String> {
    let p = make_params(d, a)?;
    let modes = (0..=k_max).map(|k| p.mode(k)).map(|m| ModeRow { k: m.k, mu: m.mu, nu: m.nu, b: m.b_k }).collect();
    let mut intervals = BTreeMap::new();
    let mut order_windows = BTreeMap::new();
    for tag in OperatorTag::ALL {
        match tag.order_window(&p) {
            None => {
                intervals.insert(tag.name(), admissible_p(&p, tag, 0.0)?.into());
            }
            Some(w) => {
                order_windows.insert(tag.name(), w);
            }
        }
    }
    let report = ParamsReport {
        d,
        a,
        lambda0: p.lambda0,
        nu0: p.nu0,
        sigma: p.sigma,
        p0: p.p0.is_finite().then_some(p.p0),
        bc_order: p.bc_order(),
        modes,
        intervals,
        order_windows,
        alpha_sweep: sweep(&p, [OperatorTag::WSobolev, OperatorTag::Riesz], alphas, 9)?,
        beta_sweep: sweep(&p, [OperatorTag::WStarSobolev, OperatorTag::InverseRiesz], betas, 9)?,
    };
    Ok(canonical_json(&report))
}

// ---------------------------------------------------------------- kernels

/// Shared row layout of `kernel` and `riesz`.
#[derive(Debug, Clone)]
pub struct KernelConfig {
    pub params: SpectralParams,
    pub ks: Vec<u32>,
    pub r: f64,
    pub s: Vec<f64>,
    pub oracle: bool,
}

impl KernelConfig {
    /// (k, s) pairs in output order.
    fn rows(&self) -> Vec<(u32, f64)> {
        let mut ks = self.ks.clone();
        ks.sort_unstable();
        ks.dedup();
        let mut s = self.s.clone();
        s.sort_by(f64::total_cmp);
        s.dedup();
        ks.iter().flat_map(|k| s.iter().map(move |s| (*k, *s))).collect()
    }
}

/// Oracle columns and the row status.
fn compare(value: f64, oracle: Option<Result<f64, Error>>) -> CliResult<(String, String, &'static str)> {
    match oracle {
        None => Ok((String::new(), String::new(), "ok")),
        Some(Ok(o)) => {
            let gap = if o == 0.0 { (value - o).abs() } else { ((value - o) / o).abs() };
            Ok((fmt_num(o), fmt_num(gap), "ok"))
        }
        Some(Err(e)) if e.is_nonconvergence() => Ok((String::new(), String::new(), "oracle_diverged")),
        Some(Err(e)) => Err(e.into()),
    }
}

/// CSV of K̃_k(r, s) for the modified wave-operator kernel.
pub fn cmd_kernel(cfg: &KernelConfig, p: f64, opts: &KernelOptions) -> CliResult<Table> {
    let mut t = Table::new(&["k", "r", "s", "ktilde", "oracle", "relgap", "status"]);
    let rows = cfg.rows();
    let d = cfg.params.d as f64;
    let results = par_map(&rows, |(k, s)| -> CliResult<Vec<String>> {
        let q = KernelQuery::new(cfg.params, *k, p, cfg.r, *s);
        let value = kernel_ktilde_with(&q, opts)?;
        let oracle = cfg.oracle.then(|| {
            // the damped integral is computed at p = 2 and moved to p by (s/r)^{d/2 − d/p}
            kernel_quadrature_oracle(&KernelQuery::new(cfg.params, *k, 2.0, cfg.r, *s), None)
                .map(|o| o.value * (s / cfg.r).powf(d / 2.0 - d / p))
        });
        let (o, gap, status) = compare(value, oracle)?;
        Ok(vec![k.to_string(), fmt_num(cfg.r), fmt_num(*s), fmt_num(value), o, gap, status.into()])
    });
    for r in results {
        t.push(r?);
    }
    Ok(t)
}

/// CSV of the R^α (or R^{−β}) kernel in its scale-free form, a function of r/s;
/// resonant rows carry no numbers.
pub fn cmd_riesz(cfg: &KernelConfig, alpha: f64, dir: Direction) -> CliResult<Table> {
    let mut t = Table::new(&["k", "alpha", "r", "s", "series", "oracle", "relgap", "status"]);
    let rows = cfg.rows();
    let budget = OracleBudget::default();
    let results = par_map(&rows, |(k, s)| -> CliResult<Vec<String>> {
        let head = vec![k.to_string(), fmt_num(alpha), fmt_num(cfg.r), fmt_num(*s)];
        let value = match kernel_riesz(&cfg.params, *k, alpha, cfg.r, *s, dir) {
            Ok(v) => v,
            Err(Error::Resonance(_)) => return Ok([head, vec![String::new(), String::new(), String::new(), "resonant".into()]].concat()),
            Err(e) => return Err(e.into()),
        };
        let oracle = cfg.oracle.then(|| inverse_mellin_oracle(&cfg.params, *k, alpha, dir, cfg.r / s, None, &budget));
        let (o, gap, status) = compare(value, oracle)?;
        Ok([head, vec![fmt_num(value), o, gap, status.into()]].concat())
    });
    for r in results {
        t.push(r?);
    }
    Ok(t)
}

// -------------------------------------------------------------- transform

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformKind {
    /// B_μ
    Bessel,
    /// H_ν
    Hankel,
    W,
    WStar,
}

/// Built-in radial profiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    /// e^{−r²/2}
    Gaussian,
    /// r^k e^{−r²/2}
    Bump,
    /// r^{ν_k−λ₀} e^{−r²/2}, whose H_ν transform is itself
    Adapted,
}

#[derive(Debug, Clone)]
pub enum Input {
    Profile(Profile),
    /// (r, value) samples, linear in log r, zero outside their range
    Samples(Vec<(f64, f64)>),
}

/// Reads `r,value` rows; a non-numeric first row is taken as a header.
pub fn read_samples(text: &str) -> CliResult<Vec<(f64, f64)>> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(false).trim(csv::Trim::All).from_reader(text.as_bytes());
    let mut out: Vec<(f64, f64)> = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let parse = |j: usize| rec.get(j).and_then(|c| c.parse::<f64>().ok());
        match (parse(0), parse(1)) {
            (Some(r), Some(v)) if r > 0.0 && v.is_finite() => out.push((r, v)),
            _ if i == 0 => continue,
            _ => return Err(CliError::Usage(format!("input row {}: expected positive r and finite value", i + 1))),
        }
    }
    if out.len() < 2 {
        return Err(CliError::Usage("input needs at least two samples".into()));
    }
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(out)
}

fn interpolate(samples: &[(f64, f64)], r: f64) -> f64 {
    let i = samples.partition_point(|(x, _)| *x <= r);
    if i == 0 || i == samples.len() {
        return if i > 0 && r == samples[i - 1].0 { samples[i - 1].1 } else { 0.0 };
    }
    let ((x0, y0), (x1, y1)) = (samples[i - 1], samples[i]);
    let w = (r.ln() - x0.ln()) / (x1.ln() - x0.ln());
    y0 + w * (y1 - y0)
}

pub struct GridSpec {
    pub r_min: f64,
    pub r_max: f64,
    pub n: usize,
}

/// Transform of one degree-k profile. The spectral variable is sampled on the
/// same log grid as r: the reciprocal grid reaches λ ~ 1/r_min, where the
/// log step no longer resolves the oscillation of J(λr).
pub fn cmd_transform(params: &SpectralParams, k: u32, kind: TransformKind, grid: &GridSpec, input: &Input) -> CliResult<Table> {
    let g = Arc::new(make_log_grid(grid.r_min, grid.r_max, grid.n, params.d)?);
    let plan = ModePlan::new(params, k, g.clone(), g.clone())?;
    let m = params.mode(k);
    let f = match input {
        Input::Profile(Profile::Gaussian) => RadialFunction::from_fn(g.clone(), |r| (-r * r / 2.0).exp()),
        Input::Profile(Profile::Bump) => RadialFunction::from_fn(g.clone(), |r| r.powi(k as i32) * (-r * r / 2.0).exp()),
        Input::Profile(Profile::Adapted) => RadialFunction::from_fn(g.clone(), |r| r.powf(m.nu - params.lambda0) * (-r * r / 2.0).exp()),
        Input::Samples(s) => RadialFunction::from_fn(g.clone(), |r| interpolate(s, r)),
    };
    let out = match kind {
        TransformKind::Bessel => plan.bessel().forward(&f)?,
        TransformKind::Hankel => plan.hankel().forward(&f)?,
        TransformKind::W => plan.waveop(&f, false)?,
        TransformKind::WStar => plan.waveop(&f, true)?,
    };
    let mut t = Table::new(&["x", "value"]);
    for (x, v) in out.grid().nodes().iter().zip(out.values()) {
        t.push(vec![fmt_num(*x), fmt_num(*v)]);
    }
    Ok(t)
}

// ------------------------------------------------------------- dispersive

/// Radial bands of the dispersive run; the spectral band is [r_min, l_max].
pub struct DispersiveGrid {
    pub r_min: f64,
    pub r_max: f64,
    pub l_max: f64,
    pub h: f64,
}

impl Default for DispersiveGrid {
    fn default() -> Self {
        DispersiveGrid { r_min: 1e-3, r_max: 400.0, l_max: 8.0, h: 7e-4 }
    }
}

/// sup |e^{−itL_a} f| for a radial Gaussian; aliasing warnings are returned
/// separately so the caller can route them to stderr.
pub fn cmd_dispersive(params: &SpectralParams, t_list: &[f64], grid: &DispersiveGrid) -> CliResult<(Table, Vec<AliasWarning>)> {
    if t_list.iter().any(|t| !t.is_finite()) {
        return Err(CliError::Usage("times must be finite".into()));
    }
    let (s, l) = make_split_grids(grid.r_min, grid.r_max, grid.r_min, grid.l_max, grid.h, params.d)?;
    let mut plan = HarmonicPlan::new(params, 0, Arc::new(s), Arc::new(l))?;
    let angular = Arc::new(AngularGrid::for_degree(params.d, 0)?);
    let f = Field::from_fn(angular, plan.space().clone(), |r, _| (-r * r / 2.0).exp())?;
    let table = dispersive_experiment(&mut plan, &f, t_list)?;
    let mut t = Table::new(&["t", "sup", "scaled"]);
    for row in &table.rows {
        t.push(vec![fmt_num(row.t), fmt_num(row.sup), fmt_num(row.scaled)]);
    }
    Ok((t, table.aliasing))
}

/// Log grid spacing used when `--n` is given instead of a step.
pub fn step_from_count(r_min: f64, r_max: f64, n: usize) -> CliResult<f64> {
    if n < 16 || !(r_max > r_min && r_min > 0.0) {
        return Err(CliError::Usage("need r_min > 0, r_max > r_min and n >= 16".into()));
    }
    Ok((r_max / r_min).ln() / (n - 1) as f64)
}

// ----------------------------------------------------------------- verify

#[derive(Debug, Serialize)]
struct VerifyReport<'a> {
    suites: Vec<&'static str>,
    passed: bool,
    failures: Vec<&'static str>,
    tolerances: &'a Tolerances,
    #[serde(flatten)]
    report: &'a SuiteReport,
}

/// JSON report of the suites; the error carries the failing check names.
pub fn cmd_verify(suites: &[Suite], tol: &Tolerances, hooks: &Hooks) -> (String, SuiteReport) {
    let report = run_suites(suites, tol, hooks);
    let json = canonical_json(&VerifyReport {
        suites: suites.iter().map(|s| s.name()).collect(),
        passed: report.passed(),
        failures: report.failures(),
        tolerances: tol,
        report: &report,
    });
    (json, report)
}
