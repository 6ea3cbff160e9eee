//! Named invariants, grouped into suites.
//!
//! Every check reports a measured value against a threshold; it passes when
//! the value is finite and not above the threshold. The acceptance criteria
//! are unions of these checks.

use crate::tolerances::{Hooks, Tolerances};
use invsq_core::harmonics::{
    analyze, dispersive_experiment, mode_list, synthesize, AngularGrid, Field, HarmonicPlan, ModeEntry, ModeExpansion, Path,
};
use invsq_core::multiplier::{
    appendix_bound_check, bc_report, kernel_sequence, remainder_sequence, riesz_c_sequence, sin_pi_b_sequence, KernelSequence,
    SequenceSample,
};
use invsq_core::params::make_params;
use invsq_core::riesz::{
    even_coeffs, kernel_even, kernel_riesz, riesz_coeffs, riesz_diagonal_limit, Direction, FoxHInstance, MellinContour,
    OracleBudget, Side,
};
use invsq_core::specfun::identities::indefinite_integral_residual;
use invsq_core::specfun::{hyp2f1_near_one_limit, hyp2f1_near_one_residual, wronskian_residual};
use invsq_core::transforms::{make_log_grid, make_split_grids, ModePlan, RadialFunction, RadialGrid, TransformKernel};
use invsq_core::waveop::{
    coeff_table, count_predicate_disagreements, diagonal_limit, exponents_admissible, kernel_ktilde, kernel_ktilde_with,
    kernel_quadrature_oracle, Branch, KernelOptions, KernelQuery,
};
use invsq_core::{Complex64, Result, SpectralParams};
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Coupled dimensions the kernel checks sweep.
pub const SUITE_PARAMS: [(u32, f64); 4] = [(3, 1.0), (3, -0.2), (4, -1.0), (2, 4.0)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Specfun,
    Transforms,
    Kernels,
    Riesz,
    Multiplier,
    Harmonics,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Specfun, Suite::Transforms, Suite::Kernels, Suite::Riesz, Suite::Multiplier, Suite::Harmonics];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Specfun => "specfun",
            Suite::Transforms => "transforms",
            Suite::Kernels => "kernels",
            Suite::Riesz => "riesz",
            Suite::Multiplier => "multiplier",
            Suite::Harmonics => "harmonics",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: &'static str,
    pub value: f64,
    pub threshold: f64,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(suite: Suite, name: &'static str, value: f64, threshold: f64, detail: impl Into<String>) -> Self {
        Check { suite, name, value, threshold, pass: value.is_finite() && value <= threshold, detail: detail.into() }
    }

    /// A check that could not be evaluated.
    fn failed(suite: Suite, name: &'static str, threshold: f64, err: impl std::fmt::Display) -> Self {
        Check { suite, name, value: f64::NAN, threshold, pass: false, detail: format!("error: {err}") }
    }

    fn from_result(suite: Suite, name: &'static str, threshold: f64, r: Result<(f64, String)>) -> Self {
        match r {
            Ok((v, d)) => Check::new(suite, name, v, threshold, d),
            Err(e) => Check::failed(suite, name, threshold, e),
        }
    }
}

/// BC quantities of one named sequence, as `verify multiplier` reports them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SequenceRecord {
    pub sequence: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub sup: f64,
    pub dyadic: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Default)]
pub struct SuiteReport {
    pub checks: Vec<Check>,
    pub sequences: Vec<SequenceRecord>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
    pub fn failures(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.name).collect()
    }
    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub fn run_suite(suite: Suite, tol: &Tolerances, hooks: &Hooks) -> SuiteReport {
    match suite {
        Suite::Specfun => SuiteReport { checks: vec![wronskian_lattice(tol), product_integral_identity(tol), hyp2f1_near_one(tol)], sequences: vec![] },
        Suite::Transforms => SuiteReport {
            checks: {
                let (pl, inv) = plancherel_and_involution(tol);
                vec![pl, inv, free_wave_operator(tol), mode_unitarity(tol)]
            },
            sequences: vec![],
        },
        Suite::Kernels => SuiteReport {
            checks: vec![
                free_kernels_vanish(tol),
                kernel_oracle_agreement(tol, hooks),
                waveop_diagonal_limit(tol),
                waveop_coefficient_tail(tol),
                predicate_agreement(),
            ],
            sequences: vec![],
        },
        Suite::Riesz => SuiteReport {
            checks: vec![
                riesz_oracle_agreement(tol),
                riesz_diagonal(tol),
                riesz_coefficient_tail(tol),
                even_alpha_continuity(tol),
                riesz_inversion_symmetry(tol),
            ],
            sequences: vec![],
        },
        Suite::Multiplier => multiplier_suite(tol),
        Suite::Harmonics => SuiteReport {
            checks: vec![
                parseval(tol),
                field_unitarity(tol),
                field_intertwining(tol),
                dispersive_free(tol),
                dispersive_potential(tol),
                sobolev_band(tol),
            ],
            sequences: vec![],
        },
    }
}

/// Runs the given suites in order and concatenates their reports.
pub fn run_suites(suites: &[Suite], tol: &Tolerances, hooks: &Hooks) -> SuiteReport {
    let mut out = SuiteReport::default();
    for s in suites {
        let r = run_suite(*s, tol, hooks);
        out.checks.extend(r.checks);
        out.sequences.extend(r.sequences);
    }
    out
}

fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        ((a - b) / b).abs()
    }
}

// ---------------------------------------------------------------- specfun

pub fn wronskian_lattice(tol: &Tolerances) -> Check {
    let r = (|| {
        let mut worst: f64 = 0.0;
        for nu in [0.3, 1.0, 2.7] {
            for z in [0.5, 1.0, 2.0, 10.0] {
                worst = worst.max(wronskian_residual(nu, z)?);
            }
        }
        Ok((worst, "12-point (nu, z) lattice".to_string()))
    })();
    Check::from_result(Suite::Specfun, "wronskian_lattice", tol.wronskian, r)
}

pub fn product_integral_identity(tol: &Tolerances) -> Check {
    let r = (|| {
        let mut worst: f64 = 0.0;
        for (mu, nu, z) in [(0.5, 1.5, 2.0), (0.3, 1.2, 5.0), (1.118_033_988_749_895, 0.5, 0.7), (2.5, 0.5, 8.0)] {
            worst = worst.max(indefinite_integral_residual(mu, nu, z)?);
        }
        Ok((worst, "int_0^z J_mu J_nu dt/t against its closed antiderivative, 4 points".to_string()))
    })();
    Check::from_result(Suite::Specfun, "product_integral_identity", tol.integral, r)
}

pub fn hyp2f1_near_one(tol: &Tolerances) -> Check {
    let r = (|| {
        let mut worst: f64 = 0.0;
        for (a, b, c) in [(1.6, 0.9, 2.1), (0.7, 1.8, 1.9)] {
            let limit = hyp2f1_near_one_limit(a, b, c)?;
            for x in [0.9, 0.99, 0.999] {
                worst = worst.max(hyp2f1_near_one_residual(a, b, c, x)? / limit.abs());
            }
        }
        Ok((worst, "relative residual of the x -> 1 law, x in {0.9, 0.99, 0.999}".to_string()))
    })();
    Check::from_result(Suite::Specfun, "hyp2f1_near_one", tol.hyp_near_one, r)
}

// ------------------------------------------------------------- transforms

/// r^{ρ−λ₀} e^{−r²/2}: its transform of order ρ is itself.
fn natural(grid: &Arc<RadialGrid>, order: f64) -> RadialFunction {
    let l0 = (grid.d() as f64 - 2.0) / 2.0;
    RadialFunction::from_fn(grid.clone(), |r| r.powf(order - l0) * (-r * r / 2.0).exp())
}

fn bump(grid: &Arc<RadialGrid>, k: u32) -> RadialFunction {
    RadialFunction::from_fn(grid.clone(), |r| r.powi(k as i32) * (-r * r / 2.0).exp())
}

fn split_grids(d: u32) -> Result<(Arc<RadialGrid>, Arc<RadialGrid>)> {
    let (s, l) = make_split_grids(1e-3, 60.0, 1e-3, 10.0, 7e-4, d)?;
    Ok((Arc::new(s), Arc::new(l)))
}

/// Plancherel and involution gaps of B_μ and H_ν, d ∈ {2,3,4}, k ≤ 8.
pub fn plancherel_and_involution(tol: &Tolerances) -> (Check, Check) {
    let r = (|| {
        let (mut pl, mut inv) = (0.0f64, 0.0f64);
        for d in [2u32, 3, 4] {
            let g = Arc::new(make_log_grid(1e-5, 40.0, 4096, d)?);
            for a in [0.0, 1.0] {
                let p = make_params(d, a)?;
                for k in 0..=8u32 {
                    let m = p.mode(k);
                    for order in [m.mu, m.nu] {
                        let f = natural(&g, order);
                        let t = TransformKernel::new(order, g.clone(), g.clone())?;
                        let tf = t.forward(&f)?;
                        pl = pl.max((tf.norm_sqr() - f.norm_sqr()).abs() / f.norm_sqr());
                        inv = inv.max(t.backward(&tf)?.distance(&f)? / f.norm());
                    }
                }
            }
        }
        Ok::<_, invsq_core::Error>((pl, inv))
    })();
    let detail = "d in {2,3,4}, a in {0,1}, k <= 8, orders mu_k and nu_k, resolved Gaussians";
    match r {
        Ok((pl, inv)) => (
            Check::new(Suite::Transforms, "plancherel", pl, tol.plancherel, detail),
            Check::new(Suite::Transforms, "involution", inv, tol.involution, detail),
        ),
        Err(e) => (
            Check::failed(Suite::Transforms, "plancherel", tol.plancherel, &e),
            Check::failed(Suite::Transforms, "involution", tol.involution, &e),
        ),
    }
}

pub fn free_wave_operator(tol: &Tolerances) -> Check {
    let r = (|| {
        let mut worst: f64 = 0.0;
        for d in [2u32, 3, 4] {
            let p = make_params(d, 0.0)?;
            let (g, l) = split_grids(d)?;
            for k in [0u32, 1, 3] {
                let plan = ModePlan::new(&p, k, g.clone(), l.clone())?;
                let f = bump(&g, k);
                worst = worst.max(plan.waveop(&f, false)?.distance(&f)? / f.norm());
            }
        }
        Ok((worst, "a = 0: |W f - f| / |f|, d in {2,3,4}, k in {0,1,3}".to_string()))
    })();
    Check::from_result(Suite::Transforms, "free_wave_operator", tol.free_identity, r)
}

pub fn mode_unitarity(tol: &Tolerances) -> Check {
    let r = (|| {
        let mut worst: f64 = 0.0;
        for (d, a) in SUITE_PARAMS {
            let p = make_params(d, a)?;
            let (g, l) = split_grids(d)?;
            for k in [0u32, 1, 3] {
                let plan = ModePlan::new(&p, k, g.clone(), l.clone())?;
                let f = bump(&g, k);
                let w = plan.waveop(&f, false)?;
                worst = worst.max((w.norm() - f.norm()).abs() / f.norm());
                worst = worst.max(plan.waveop(&w, true)?.distance(&f)? / f.norm());
            }
        }
        Ok((worst, "max of | |W_k f| - |f| | and |W_k* W_k f - f|, relative".to_string()))
    })();
    Check::from_result(Suite::Transforms, "mode_unitarity", tol.unitarity, r)
}

// ---------------------------------------------------------------- kernels

/// Wave-operator and Riesz kernels at a = 0, off the diagonal.
pub fn free_kernels_vanish(tol: &Tolerances) -> Check {
    let r = (|| {
        let mut worst: f64 = 0.0;
        let mut count = 0;
        for d in [2u32, 3, 4] {
            let p = make_params(d, 0.0)?;
            for k in 0..=5 {
                for s in [0.3, 0.7, 1.5, 3.0] {
                    worst = worst.max(kernel_ktilde(&KernelQuery::new(p, k, 2.0, 1.0, s))?.abs());
                    count += 1;
                    for dir in [Direction::Forward, Direction::Inverse] {
                        for alpha in [0.5, 1.3, 1.9, -1.0] {
                            worst = worst.max(kernel_riesz(&p, k, alpha, 1.0, s, dir)?.abs());
                            count += 1;
                        }
                    }
                }
            }
        }
        Ok((worst, format!("max |K| over {count} free kernel evaluations")))
    })();
    Check::from_result(Suite::Kernels, "free_kernels_vanish", tol.free_kernel, r)
}

/// Series against the damped-quadrature oracle; diverged oracle rows are
/// reported, not counted.
pub fn kernel_oracle_agreement(tol: &Tolerances, hooks: &Hooks) -> Check {
    let opts = KernelOptions { a_plus_scale: hooks.a_plus_scale, ..KernelOptions::default() };
    let r = (|| {
        let (mut worst, mut compared, mut diverged) = (0.0f64, 0usize, 0usize);
        for (d, a) in SUITE_PARAMS {
            let p = make_params(d, a)?;
            let df = d as f64;
            for k in 0..=5 {
                for x in [0.3, 0.7, 1.5, 3.0] {
                    // the oracle integral does not depend on p; evaluate once at p = 2
                    let base = kernel_quadrature_oracle(&KernelQuery::new(p, k, 2.0, 1.0, x), None);
                    for pp in [1.5, 2.0, 4.0] {
                        if !exponents_admissible(&p, pp) {
                            continue;
                        }
                        let Ok(o) = &base else {
                            diverged += 1;
                            continue;
                        };
                        let oracle = o.value * x.powf(df / 2.0 - df / pp);
                        let series = kernel_ktilde_with(&KernelQuery::new(p, k, pp, 1.0, x), &opts)?;
                        let gap = if oracle.abs() < 1e-10 { (series - oracle).abs() } else { rel(series, oracle) };
                        worst = worst.max(gap);
                        compared += 1;
                    }
                }
            }
        }
        if compared == 0 {
            return Ok((f64::NAN, "no rows compared".to_string()));
        }
        Ok((worst, format!("{compared} rows compared, {diverged} oracle rows diverged (not counted)")))
    })();
    Check::from_result(Suite::Kernels, "kernel_oracle_agreement", tol.kernel, r)
}

pub fn waveop_diagonal_limit(tol: &Tolerances) -> Check {
    let r = (|| {
        let mut worst: f64 = 0.0;
        for (d, a) in SUITE_PARAMS {
            let p = make_params(d, a)?;
            for k in 0..=5 {
                for side in [Branch::Plus, Branch::Minus] {
                    worst = worst.max(diagonal_limit(&p, k, side)?.gap);
                }
            }
        }
        Ok((worst, "extrapolated (1 - x^2) K~ against (2/pi) sin(pi(nu - mu)/2), both sides, k <= 5".to_string()))
    })();
    Check::from_result(Suite::Kernels, "waveop_diagonal_limit", tol.diagonal, r)
}

/// sup_{n≤10⁴} (n+1)²|E±| over its n ≤ 10³ value, k ≤ 64.
pub fn waveop_coefficient_tail(tol: &Tolerances) -> Check {
    let r = (|| {
        let mut worst: f64 = 0.0;
        let mut at = String::new();
        for (d, a) in SUITE_PARAMS {
            let p = make_params(d, a)?;
            for k in 0..=64 {
                for branch in [Branch::Plus, Branch::Minus] {
                    let t = coeff_table(&p, k, branch, 10_000)?;
                    let ratio = t.scaled_residual_sup(10_000) / t.scaled_residual_sup(1_000);
                    if !(ratio <= worst) {
                        worst = ratio;
                        at = format!("({d},{a}) k={k} {branch:?}");
                    }
                }
            }
        }
        Ok((worst, format!("largest growth at {at}")))
    })();
    Check::from_result(Suite::Kernels, "waveop_coefficient_tail", tol.growth, r)
}

pub fn predicate_agreement() -> Check {
    let r = (|| {
        let mut total = 0usize;
        let list: Vec<(u32, f64)> = SUITE_PARAMS.iter().copied().chain([(3, 0.0), (5, -2.0), (2, 0.5), (6, 3.0)]).collect();
        for (d, a) in &list {
            total += count_predicate_disagreements(&make_params(*d, *a)?, 100)?;
        }
        Ok((total as f64, format!("100-point p grid for {} (d, a) pairs", list.len())))
    })();
    Check::from_result(Suite::Kernels, "predicate_agreement", 0.0, r)
}

// ------------------------------------------------------------------ riesz

const RIESZ_ALPHAS: [f64; 3] = [0.5, 0.7, 1.3];

pub fn riesz_oracle_agreement(tol: &Tolerances) -> Check {
    let r = (|| {
        let p = make_params(3, 1.0)?;
        let budget = OracleBudget::default();
        let (mut worst, mut n) = (0.0f64, 0);
        for dir in [Direction::Forward, Direction::Inverse] {
            for alpha in RIESZ_ALPHAS {
                for k in 0..=3 {
                    let contour = MellinContour::new(&FoxHInstance::new(&p, k, alpha, dir), None, &budget)?;
                    for ratio in [0.4, 2.5] {
                        worst = worst.max(rel(kernel_riesz(&p, k, alpha, ratio, 1.0, dir)?, contour.eval(ratio)?));
                        n += 1;
                    }
                }
            }
        }
        Ok((worst, format!("(3,1), {n} (direction, alpha, k, ratio) rows against the inverse-Mellin contour")))
    })();
    Check::from_result(Suite::Riesz, "riesz_oracle_agreement", tol.riesz, r)
}

pub fn riesz_diagonal(tol: &Tolerances) -> Check {
    let r = (|| {
        let p = make_params(3, 1.0)?;
        let mut worst: f64 = 0.0;
        for alpha in [0.5, 0.7, 1.0, 1.3] {
            for k in 0..=3 {
                for side in [Side::Below, Side::Above] {
                    worst = worst.max(riesz_diagonal_limit(&p, k, alpha, Direction::Forward, side)?.gap);
                }
            }
        }
        Ok((worst, "one-sided fit at r = s against the closed diagonal value, k <= 3".to_string()))
    })();
    Check::from_result(Suite::Riesz, "riesz_diagonal_limit", tol.diagonal, r)
}

/// (n+1)²-scaled residuals of A1, A2 do not grow between n ≤ 10³ and n ≤ 10⁴.
pub fn riesz_coefficient_tail(tol: &Tolerances) -> Check {
    let r = (|| {
        let p = make_params(3, 1.0)?;
        let mut worst: f64 = 0.0;
        let mut at = String::new();
        let scaled_sup = |e: &[f64], n_max: usize| {
            e.iter().take(n_max + 1).enumerate().fold(0.0f64, |m, (n, v)| m.max((n as f64 + 1.0).powi(2) * v.abs()))
        };
        for alpha in RIESZ_ALPHAS {
            for k in 0..=64 {
                let c = riesz_coeffs(&p, k, alpha, Direction::Forward, 10_000)?;
                for (name, e) in [("A1", &c.e1), ("A2", &c.e2)] {
                    let ratio = scaled_sup(e, 10_000) / scaled_sup(e, 1_000);
                    if !(ratio <= worst) {
                        worst = ratio;
                        at = format!("alpha={alpha} k={k} {name}");
                    }
                }
            }
        }
        Ok((worst, format!("(3,1), k <= 64; largest growth at {at}")))
    })();
    Check::from_result(Suite::Riesz, "riesz_coefficient_tail", tol.growth, r)
}

/// Kernel at α = ±(2 − 10⁻⁴) against the finite even-order sum.
pub fn even_alpha_continuity(tol: &Tolerances) -> Check {
    let r = (|| {
        let p = make_params(3, 1.0)?;
        let mut worst: f64 = 0.0;
        for k in 0..=3 {
            for (m, alpha) in [(1, 2.0 - 1e-4), (-1, -2.0 + 1e-4)] {
                let _ = even_coeffs(&p, k, m, Direction::Forward)?;
                for (r, s) in [(1.0, 0.5), (0.5, 1.0)] {
                    let even = kernel_even(&p, k, m, r, s, Direction::Forward)?;
                    worst = worst.max(rel(kernel_riesz(&p, k, alpha, r, s, Direction::Forward)?, even));
                }
            }
        }
        Ok((worst, "alpha = 2 - 1e-4 and -2 + 1e-4 against the even-order closed form".to_string()))
    })();
    Check::from_result(Suite::Riesz, "even_alpha_continuity", tol.even_continuity, r)
}

/// K(ρ) = ρ^{−(d+α)} K(1/ρ): the μ↔ν swap exchanges the two branches.
pub fn riesz_inversion_symmetry(tol: &Tolerances) -> Check {
    let r = (|| {
        let p = make_params(3, 1.0)?;
        let budget = OracleBudget::default();
        let mut worst: f64 = 0.0;
        for (k, alpha) in [(0, 0.7), (2, 1.3)] {
            let contour = MellinContour::new(&FoxHInstance::new(&p, k, alpha, Direction::Forward), None, &budget)?;
            for ratio in [0.4f64, 2.5] {
                let rhs = ratio.powf(-(3.0 + alpha)) * contour.eval(1.0 / ratio)?;
                worst = worst.max(rel(contour.eval(ratio)?, rhs));
            }
        }
        Ok((worst, "contour oracle at rho against rho^{-(d+alpha)} times its value at 1/rho".to_string()))
    })();
    Check::from_result(Suite::Riesz, "riesz_inversion_symmetry", tol.riesz, r)
}

// ------------------------------------------------------------- multiplier

const BC_J_MAX: usize = 12;

/// j = 12 dyadic block over the j = 6 block; 0 when both vanish.
fn growth(dyadic: &[f64]) -> f64 {
    let (lo, hi) = (dyadic[6], dyadic[BC_J_MAX]);
    if hi == 0.0 {
        0.0
    } else {
        hi / lo
    }
}

fn bc_family(
    name: &'static str,
    tol: &Tolerances,
    records: &mut Vec<SequenceRecord>,
    build: impl Fn(&SpectralParams, usize) -> Result<Vec<(String, SequenceSample)>>,
) -> Check {
    let r = (|| {
        let (mut worst, mut cap) = (0.0f64, 0.0f64);
        for (d, a) in SUITE_PARAMS {
            let p = make_params(d, a)?;
            let n = p.bc_order() as usize;
            for (label, seq) in build(&p, (1 << (BC_J_MAX + 1)) + n)? {
                let rep = bc_report(&seq, n, BC_J_MAX)?;
                worst = worst.max(growth(&rep.dyadic));
                cap = cap.max(rep.sup).max(rep.dyadic_sup());
                records.push(SequenceRecord { sequence: format!("{label} ({d},{a})"), n, sup: rep.sup, dyadic: rep.dyadic });
            }
        }
        Ok((worst, format!("j=12 block over j=6 block, N = floor((d-1)/2)+1; largest sup or dyadic value {cap:.3e}")))
    })();
    Check::from_result(Suite::Multiplier, name, tol.growth, r)
}

fn multiplier_suite(tol: &Tolerances) -> SuiteReport {
    let mut records = Vec::new();
    let mut checks = vec![bc_family("bc_sin_pi_b", tol, &mut records, |p, k| Ok(vec![("sin(pi b_k)".into(), sin_pi_b_sequence(p, k)?)]))];
    checks.push(bc_family("bc_riesz_coefficient", tol, &mut records, |p, k| {
        RIESZ_ALPHAS
            .iter()
            .filter(|al| riesz_c_sequence(p, **al, Direction::Forward, 1).is_ok())
            .map(|al| Ok((format!("C_k^alpha alpha={al}"), riesz_c_sequence(p, *al, Direction::Forward, k)?)))
            .collect()
    }));
    for (name, which) in [
        ("bc_t_plus", KernelSequence::TPlus),
        ("bc_t_tilde_plus", KernelSequence::TTildePlus),
        ("bc_t_minus", KernelSequence::TMinus),
        ("bc_t_tilde_minus", KernelSequence::TTildeMinus),
    ] {
        checks.push(bc_family(name, tol, &mut records, move |p, k| {
            [0.9, 0.95].iter().map(|x| Ok((format!("{} x={x}", which.name()), kernel_sequence(p, which, *x, k)?))).collect()
        }));
    }
    checks.push(bc_family("bc_remainder", tol, &mut records, |p, k| {
        let mut v = Vec::new();
        for (branch, label) in [(Branch::Plus, "E+"), (Branch::Minus, "E-")] {
            if exponents_admissible(p, 2.0) {
                v.push((format!("{label} x=0.9 p=2"), remainder_sequence(p, branch, 0.9, 2.0, k)?));
            }
        }
        Ok(v)
    }));
    checks.push(appendix_lattice(tol, None));
    checks.push(appendix_lattice(tol, Some(0.5)));
    SuiteReport { checks, sequences: records }
}

/// sup k^N (n+1)|Δ_k^N E_{k,n}| over k ≤ 2¹⁰, n ≤ 10³, N ≤ 3 on (3,1).
pub fn appendix_lattice(tol: &Tolerances, alpha: Option<f64>) -> Check {
    let name = if alpha.is_some() { "appendix_riesz" } else { "appendix_waveop" };
    let r = (|| {
        let p = make_params(3, 1.0)?;
        let mut worst: f64 = 0.0;
        let mut parts = Vec::new();
        for n in 1..=3 {
            let rep = appendix_bound_check(&p, alpha, n, 1 << 10, 1000)?;
            parts.push(format!("N={n}: {:.3e} at (k={}, n={})", rep.sup, rep.argmax_k, rep.argmax_n));
            worst = worst.max(rep.sup);
        }
        Ok((worst, format!("(3,1){}: {}", alpha.map(|a| format!(" alpha={a}")).unwrap_or_default(), parts.join("; "))))
    })();
    Check::from_result(Suite::Multiplier, name, tol.appendix_cap, r)
}

// -------------------------------------------------------------- harmonics

pub fn parseval(tol: &Tolerances) -> Check {
    let r = (|| {
        let mut worst: f64 = 0.0;
        for d in [2u32, 3] {
            let k_max = 6;
            let radial = Arc::new(make_log_grid(1e-2, 10.0, 64, d)?);
            let angular = Arc::new(AngularGrid::for_degree(d, k_max)?);
            let modes = mode_list(d, k_max)
                .into_iter()
                .enumerate()
                .map(|(i, (k, l))| {
                    let c = ((i as f64) * 0.618_033_988_749_895).fract() - 0.5;
                    let s = 0.4 + 0.1 * (i % 7) as f64;
                    ModeEntry { k, l, profile: RadialFunction::from_fn(radial.clone(), |r| c * (-s * r * r).exp()) }
                })
                .collect();
            let e = ModeExpansion { angular, k_max, modes };
            let f = synthesize(&e)?;
            let back = analyze(&f, k_max)?;
            worst = worst.max((e.energy() - f.norm().powi(2)).abs() / e.energy());
            for (a, b) in e.modes.iter().zip(&back.modes) {
                worst = worst.max(a.profile.distance(&b.profile)? / e.energy().sqrt());
            }
        }
        Ok((worst, "band-limited fields, k_max = 6, d in {2,3}: Parseval and round-trip gaps".to_string()))
    })();
    Check::from_result(Suite::Harmonics, "parseval", tol.parseval, r)
}

/// (1 + x₃ + x₁x₂) e^{−r²/2} in d = 3, or with x₁ in place of x₃ in d = 2.
fn poly_gaussian(angular: &Arc<AngularGrid>, radial: &Arc<RadialGrid>) -> Result<Field> {
    let d = angular.d();
    Field::from_fn(angular.clone(), radial.clone(), |r, w| {
        let lin = if d == 3 { w[2] } else { w[0] };
        (1.0 + r * lin + r * r * w[0] * w[1]) * (-r * r / 2.0).exp()
    })
}

pub fn field_unitarity(tol: &Tolerances) -> Check {
    let r = (|| {
        let mut worst: f64 = 0.0;
        for (d, a) in SUITE_PARAMS {
            let p = make_params(d, a)?;
            let (g, l) = split_grids(d)?;
            if d == 4 {
                // no angular synthesis in d = 4: the zonal mode only
                let plan = ModePlan::new(&p, 0, g.clone(), l)?;
                let f = bump(&g, 0);
                let w = plan.waveop(&f, false)?;
                worst = worst.max((w.norm() - f.norm()).abs() / f.norm());
                worst = worst.max(plan.waveop(&w, true)?.distance(&f)? / f.norm());
                continue;
            }
            let mut plan = HarmonicPlan::new(&p, 2, g.clone(), l)?;
            let f = poly_gaussian(&Arc::new(AngularGrid::for_degree(d, 2)?), &g)?;
            let w = plan.apply_w(&f, false)?;
            worst = worst.max((w.norm() - f.norm()).abs() / f.norm());
            worst = worst.max(plan.apply_w(&w, true)?.distance(&f)? / f.norm());
        }
        Ok((worst, "polynomial-Gaussian fields (d = 4 zonal), |Wf| vs |f| and W*W f vs f".to_string()))
    })();
    Check::from_result(Suite::Harmonics, "field_unitarity", tol.unitarity, r)
}

/// Σ_{k,l} c_{kl} r^{ν_k−λ₀} e^{−r²/2} Y_{k,l}: every profile has a Gaussian H_ν image.
pub fn adapted_gaussian_field(params: &SpectralParams, radial: &Arc<RadialGrid>, k_max: u32) -> Result<Field<Complex64>> {
    let angular = Arc::new(AngularGrid::for_degree(params.d, k_max)?);
    let modes = mode_list(params.d, k_max)
        .into_iter()
        .map(|(k, l)| {
            let e = params.mode(k).nu - params.lambda0;
            let c = 1.0 / (1.0 + k as f64 + 0.5 * l as f64);
            ModeEntry { k, l, profile: RadialFunction::from_fn(radial.clone(), |r| Complex64::new(c * r.powf(e) * (-r * r / 2.0).exp(), 0.0)) }
        })
        .collect();
    synthesize(&ModeExpansion { angular, k_max, modes })
}

/// Direct against conjugated functional calculus, (3,1), k_max = 8.
pub fn field_intertwining(tol: &Tolerances) -> Check {
    let r = (|| {
        let p = make_params(3, 1.0)?;
        let (g, l) = split_grids(3)?;
        let mut plan = HarmonicPlan::new(&p, 8, g.clone(), l)?;
        let f = adapted_gaussian_field(&p, &g, 8)?;
        let heat = |l: f64| Complex64::new((-l * l).exp(), 0.0);
        let bump = |l: f64| Complex64::new(l * l * (-l * l).exp(), 0.0);
        let phase = |l: f64| Complex64::new(0.0, -l * l).exp();
        let ms: [(&str, &dyn Fn(f64) -> Complex64); 3] = [("exp(-l^2)", &heat), ("l^2 exp(-l^2)", &bump), ("exp(-i l^2)", &phase)];
        let mut worst: f64 = 0.0;
        let mut parts = Vec::new();
        for (name, m) in ms {
            let direct = plan.apply_function_of_la(m, &f, Path::Direct)?;
            let conj = plan.apply_function_of_la(m, &f, Path::Conjugated)?;
            let gap = direct.field.distance(&conj.field)? / f.norm();
            parts.push(format!("{name}: {gap:.2e}"));
            worst = worst.max(gap);
        }
        Ok((worst, format!("(3,1), 81 modes k <= 8, mode-adapted Gaussians; {}", parts.join(", "))))
    })();
    Check::from_result(Suite::Harmonics, "field_intertwining", tol.intertwining, r)
}

/// t values of the dispersive window [1, 50].
pub const DISPERSIVE_TIMES: [f64; 8] = [1.0, 2.0, 3.0, 5.0, 10.0, 20.0, 35.0, 50.0];

/// Plan on the grids the dispersive runs use: space out to 400, λ up to 8.
pub fn dispersive_plan(params: &SpectralParams) -> Result<HarmonicPlan> {
    let (s, l) = make_split_grids(1e-3, 400.0, 1e-3, 8.0, 7e-4, params.d)?;
    HarmonicPlan::new(params, 0, Arc::new(s), Arc::new(l))
}

fn radial_gaussian(plan: &HarmonicPlan) -> Result<Field> {
    let angular = Arc::new(AngularGrid::for_degree(plan.params.d, 0)?);
    Field::from_fn(angular, plan.space().clone(), |r, _| (-r * r / 2.0).exp())
}

/// Free d = 3 Gaussian against the closed form (1 + 4t²)^{−3/4}.
pub fn dispersive_free(tol: &Tolerances) -> Check {
    let r = (|| {
        let p = make_params(3, 0.0)?;
        let mut plan = dispersive_plan(&p)?;
        let f = radial_gaussian(&plan)?;
        let table = dispersive_experiment(&mut plan, &f, &DISPERSIVE_TIMES)?;
        let (mut worst, mut literal) = (0.0f64, 0.0f64);
        for row in &table.rows {
            worst = worst.max(rel(row.sup, (1.0 + 4.0 * row.t * row.t).powf(-0.75)));
            literal = literal.max(rel(row.sup, (1.0 + row.t * row.t).powf(-0.75)));
        }
        Ok((
            worst,
            format!(
                "t in [1, 50], against (1+4t^2)^(-3/4); the (1+t^2)^(-3/4) form is off by {literal:.3}; {} aliasing warnings",
                table.aliasing.len()
            ),
        ))
    })();
    Check::from_result(Suite::Harmonics, "dispersive_free", tol.dispersive_free, r)
}

/// a = 1: spread of t^{3/2} sup|u| over t ∈ [1, 50].
pub fn dispersive_potential(tol: &Tolerances) -> Check {
    let r = (|| {
        let p = make_params(3, 1.0)?;
        let mut plan = dispersive_plan(&p)?;
        let f = radial_gaussian(&plan)?;
        let table = dispersive_experiment(&mut plan, &f, &DISPERSIVE_TIMES)?;
        let (lo, hi) = table.rows.iter().fold((f64::MAX, 0.0f64), |(a, b), r| (a.min(r.scaled), b.max(r.scaled)));
        let warn: Vec<String> = table.aliasing.iter().map(|w| format!("t={} ({:.1e})", w.t, w.unresolved_fraction)).collect();
        Ok((
            hi / lo,
            format!(
                "(3,1) Gaussian, t^(3/2) sup in [{lo:.4}, {hi:.4}]; aliasing warnings: {}",
                if warn.is_empty() { "none".to_string() } else { warn.join(", ") }
            ),
        ))
    })();
    Check::from_result(Suite::Harmonics, "dispersive_potential", tol.dispersive_band, r)
}

/// |(−Δ)^{1/2} f| / |L_a^{1/2} f| over a 20-member Gaussian-bump family.
pub fn sobolev_band(tol: &Tolerances) -> Check {
    let r = (|| {
        let p = make_params(3, 1.0)?;
        let (s, l) = make_split_grids(1e-3, 30.0, 1e-3, 20.0, 2e-3, 3)?;
        let mut plan = HarmonicPlan::new(&p, 1, Arc::new(s), Arc::new(l))?;
        let angular = Arc::new(AngularGrid::for_degree(3, 1)?);
        let (mut lo, mut hi) = (f64::MAX, 0.0f64);
        for i in 0..20 {
            let c = 0.15 * i as f64;
            let w = 0.5 + 0.075 * i as f64;
            let tilt = if i % 2 == 0 { 0.0 } else { 0.8 };
            let f = Field::from_fn(angular.clone(), plan.space().clone(), |r, om| {
                (1.0 + tilt * r * om[2]) * (-(r - c) * (r - c) / (w * w)).exp()
            })?;
            let ratio = plan.sobolev_ratio(&f, 1.0)?;
            lo = lo.min(ratio);
            hi = hi.max(ratio);
        }
        Ok((hi.max(1.0 / lo), format!("(3,1), 20 bumps: ratio in [{lo:.4}, {hi:.4}]")))
    })();
    Check::from_result(Suite::Harmonics, "sobolev_band", tol.sobolev_band, r)
}

/// Check names per suite, in report order.
pub fn check_names() -> BTreeMap<&'static str, Vec<&'static str>> {
    BTreeMap::from([
        ("specfun", vec!["wronskian_lattice", "product_integral_identity", "hyp2f1_near_one"]),
        ("transforms", vec!["plancherel", "involution", "free_wave_operator", "mode_unitarity"]),
        (
            "kernels",
            vec!["free_kernels_vanish", "kernel_oracle_agreement", "waveop_diagonal_limit", "waveop_coefficient_tail", "predicate_agreement"],
        ),
        (
            "riesz",
            vec!["riesz_oracle_agreement", "riesz_diagonal_limit", "riesz_coefficient_tail", "even_alpha_continuity", "riesz_inversion_symmetry"],
        ),
        (
            "multiplier",
            vec![
                "bc_sin_pi_b",
                "bc_riesz_coefficient",
                "bc_t_plus",
                "bc_t_tilde_plus",
                "bc_t_minus",
                "bc_t_tilde_minus",
                "bc_remainder",
                "appendix_waveop",
                "appendix_riesz",
            ],
        ),
        (
            "harmonics",
            vec!["parseval", "field_unitarity", "field_intertwining", "dispersive_free", "dispersive_potential", "sobolev_band"],
        ),
    ])
}
