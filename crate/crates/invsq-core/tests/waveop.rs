use invsq_core::params::make_params;
use invsq_core::specfun::{gamma, rgamma};
use invsq_core::waveop::*;
use proptest::prelude::*;
use std::collections::HashMap;

const SUITE: [(u32, f64); 4] = [(3, 1.0), (3, -0.2), (4, -1.0), (2, 4.0)];

#[test]
fn coefficient_examples() {
    let free = make_params(3, 0.0).unwrap();
    for k in [0, 3, 10] {
        for n in [0, 1, 50] {
            assert_eq!(coeff_a(Branch::Plus, k, n, &free).unwrap(), 1.0);
        }
    }
    // Γ(a₀+1)Γ(b₀+1)/Γ(μ₀+1) at 30 digits
    let p = make_params(3, 1.0).unwrap();
    let v0 = coeff_a(Branch::Plus, 0, 0, &p).unwrap();
    assert!((v0 - 1.383_037_580_858_151_6).abs() < 1e-14, "{v0}");
    for n in [1_000usize, 10_000] {
        let scaled = (n as f64 + 1.0) * (coeff_a(Branch::Plus, 0, n, &p).unwrap() - 1.0);
        assert!((scaled - 0.25).abs() < 1.0 / n as f64, "n={n}: {scaled}");
        let minus = (n as f64 + 1.0) * (coeff_a(Branch::Minus, 0, n, &p).unwrap() - 1.0);
        assert!((minus + 0.25).abs() < 1.0 / n as f64, "n={n}: {minus}");
    }
}

#[test]
fn residual_tail_law() {
    for (d, a) in SUITE {
        let p = make_params(d, a).unwrap();
        for k in 0..=64 {
            for branch in [Branch::Plus, Branch::Minus] {
                let t = coeff_table(&p, k, branch, 10_000).unwrap();
                let early = t.scaled_residual_sup(1_000);
                let full = t.scaled_residual_sup(10_000);
                assert!(full.is_finite() && full <= 4.0 * early.max(1e-300), "({d},{a}) k={k} {branch:?}: {full} vs {early}");
                for (i, e) in t.residuals.iter().enumerate().step_by(997) {
                    let n = t.n_start + i;
                    let direct = t.values[i] - 1.0 - if branch == Branch::Plus { a } else { -a } / (4.0 * (n as f64 + 1.0));
                    assert!((e - direct).abs() <= 1e-13, "E mismatch at n={n}");
                }
            }
        }
    }
}

#[test]
fn frozen_kernel_values() {
    let p = make_params(3, 1.0).unwrap();
    // Weber–Sonin–Schafheitlin hypergeometric form at 30 digits
    let v1 = kernel_ktilde(&KernelQuery::new(p, 0, 2.0, 1.0, 0.3)).unwrap();
    assert!((v1 / 0.129_201_905_673_521_58 - 1.0).abs() < 1e-12, "{v1}");
    let v3 = kernel_ktilde(&KernelQuery::new(p, 3, 2.0, 1.0, 2.5)).unwrap();
    assert!((v3 / -0.002_075_751_824_725_436_2 - 1.0).abs() < 1e-12, "{v3}");
    let o1 = kernel_quadrature_oracle(&KernelQuery::new(p, 0, 2.0, 1.0, 0.3), None);
    if let Ok(o) = o1 {
        assert!((o.value / v1 - 1.0).abs() < 1e-5);
    }
}

#[test]
fn free_kernels_vanish() {
    for d in [2u32, 3, 4] {
        let p = make_params(d, 0.0).unwrap();
        for k in 0..4 {
            for s in [0.2, 0.999_5, 1.000_5, 4.0] {
                assert_eq!(kernel_ktilde(&KernelQuery::new(p, k, 2.0, 1.0, s)).unwrap(), 0.0);
            }
            let o = kernel_quadrature_oracle(&KernelQuery::new(p, k, 2.0, 1.0, 0.5), None).unwrap();
            assert!(o.value.abs() <= 1e-6);
            for side in [Branch::Plus, Branch::Minus] {
                assert_eq!(diagonal_limit(&p, k, side).unwrap().closed_form.abs(), 0.0);
            }
        }
    }
}

#[test]
fn small_ratio_asymptotics() {
    let p = make_params(3, 1.0).unwrap();
    for k in 0..4 {
        let m = p.mode(k);
        let (e, _) = branch_exponents(&p, k, 2.0);
        let x: f64 = 1e-4;
        let kt = kernel_ktilde(&KernelQuery::new(p, k, 2.0, 1.0, x)).unwrap();
        let lead = 2.0 * gamma(m.a_k + 1.0).unwrap() * rgamma(m.mu + 1.0) * rgamma(-m.b_k);
        assert!((kt / x.powf(e) / lead - 1.0).abs() < 1e-7, "k={k}");
    }
}

#[test]
fn series_matches_damped_oracle() {
    let mut cache: HashMap<(usize, u32, u64), Result<f64, String>> = HashMap::new();
    let (mut compared, mut worst) = (0, 0.0f64);
    for (i, (d, a)) in SUITE.iter().enumerate() {
        let p = make_params(*d, *a).unwrap();
        for k in 0..=5 {
            for x in [0.3, 0.7, 1.5, 3.0] {
                for pp in [1.5, 2.0, 4.0] {
                    if !exponents_admissible(&p, pp) {
                        continue;
                    }
                    let series = kernel_ktilde(&KernelQuery::new(p, k, pp, 1.0, x)).unwrap();
                    // the oracle integral does not depend on p
                    let base = cache
                        .entry((i, k, f64::to_bits(x)))
                        .or_insert_with(|| {
                            kernel_quadrature_oracle(&KernelQuery::new(p, k, 2.0, 1.0, x), None)
                                .map(|o| o.value / x.powf(*d as f64 / 2.0 + 1.0 - *d as f64 / 2.0))
                                .map_err(|e| e.to_string())
                        })
                        .clone();
                    let Ok(base) = base else { continue };
                    let oracle = base * x.powf(*d as f64 / 2.0 + 1.0 - *d as f64 / pp);
                    let gap = if oracle.abs() < 1e-10 { (series - oracle).abs() } else { ((series - oracle) / oracle).abs() };
                    worst = worst.max(gap);
                    compared += 1;
                    assert!(gap <= 1e-5, "({d},{a}) k={k} x={x} p={pp}: {series} vs {oracle}");
                }
            }
        }
    }
    assert!(compared >= 150, "only {compared} rows compared");
    assert!(worst <= 1e-5);
}

#[test]
fn split_form_agrees_with_plain_series() {
    let wide = KernelOptions { delta_diag: 0.2, ..KernelOptions::default() };
    for (d, a) in SUITE {
        let p = make_params(d, a).unwrap();
        for k in [0, 1, 4] {
            for s in [0.95, 1.0 / 0.95] {
                let q = KernelQuery::new(p, k, 2.0, 1.0, s);
                let plain = kernel_ktilde(&q).unwrap();
                let split = kernel_ktilde_with(&q, &wide).unwrap();
                assert!((plain - split).abs() <= 1e-9 * plain.abs().max(1e-12), "({d},{a}) k={k} s={s}: {plain} vs {split}");
            }
        }
    }
}

#[test]
fn diagonal_limits_match_closed_form() {
    for (d, a) in SUITE {
        let p = make_params(d, a).unwrap();
        for k in 0..=5 {
            let below = diagonal_limit(&p, k, Branch::Plus).unwrap();
            let above = diagonal_limit(&p, k, Branch::Minus).unwrap();
            assert!(below.gap <= 1e-4 && above.gap <= 1e-4, "({d},{a}) k={k}: {below:?} {above:?}");
            assert_eq!(below.closed_form, -above.closed_form);
        }
    }
}

#[test]
fn perturbed_coefficients_are_detected() {
    let p = make_params(3, 1.0).unwrap();
    let q = KernelQuery::new(p, 1, 2.0, 1.0, 0.7);
    let oracle = kernel_quadrature_oracle(&q, None).unwrap().value;
    let bad = kernel_ktilde_with(&q, &KernelOptions { a_plus_scale: 1.01, ..KernelOptions::default() }).unwrap();
    assert!(((bad - oracle) / oracle).abs() > 1e-3);
}

#[test]
fn exponent_predicate_matches_intervals() {
    for (d, a) in SUITE.iter().copied().chain([(3, 0.0), (5, -2.0), (2, 0.5)]) {
        let p = make_params(d, a).unwrap();
        assert_eq!(count_predicate_disagreements(&p, 100).unwrap(), 0, "({d},{a})");
    }
}

#[test]
fn domain_errors() {
    let p = make_params(3, 1.0).unwrap();
    assert!(kernel_ktilde(&KernelQuery::new(p, 0, 2.0, 1.0, 1.0)).is_err());
    assert!(kernel_ktilde(&KernelQuery::new(p, 0, 1.0, 1.0, 0.5)).is_err());
    assert!(kernel_ktilde(&KernelQuery::new(p, 0, 2.0, -1.0, 0.5)).is_err());
    let tight = KernelOptions { n_max: 10, ..KernelOptions::default() };
    let e = kernel_ktilde_with(&KernelQuery::new(p, 0, 2.0, 1.0, 0.99), &tight).unwrap_err();
    assert!(e.is_nonconvergence());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn kernel_depends_only_on_ratio(x in 0.05f64..0.95, scale in -3.0f64..3.0, k in 0u32..4, above in any::<bool>()) {
        let p = make_params(3, 1.0).unwrap();
        let x = if above { 1.0 / x } else { x };
        let lam = 10f64.powf(scale);
        let a = kernel_ktilde(&KernelQuery::new(p, k, 2.0, 1.0, x)).unwrap();
        let b = kernel_ktilde(&KernelQuery::new(p, k, 2.0, lam, lam * x)).unwrap();
        prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1e-300));
    }

    #[test]
    fn p_enters_through_the_power_only(x in 0.05f64..0.95, p1 in 1.2f64..6.0, p2 in 1.2f64..6.0) {
        let p = make_params(3, 1.0).unwrap();
        let a = kernel_ktilde(&KernelQuery::new(p, 0, p1, 1.0, x)).unwrap();
        let b = kernel_ktilde(&KernelQuery::new(p, 0, p2, 1.0, x)).unwrap();
        let expected = x.powf(3.0 / p2 - 3.0 / p1);
        prop_assert!((a / b / expected - 1.0).abs() <= 1e-12);
    }
}
