use invsq_core::harmonics::*;
use invsq_core::params::make_params;
use invsq_core::transforms::{make_log_grid, make_split_grids, RadialFunction, RadialGrid};
use invsq_core::Complex64;
use proptest::prelude::*;
use std::f64::consts::PI;
use std::sync::Arc;

fn small_radial(d: u32) -> Arc<RadialGrid> {
    Arc::new(make_log_grid(1e-2, 10.0, 64, d).unwrap())
}

fn plan(d: u32, a: f64, k_max: u32) -> HarmonicPlan {
    let p = make_params(d, a).unwrap();
    let (s, l) = make_split_grids(1e-3, 60.0, 1e-3, 10.0, 7e-4, d).unwrap();
    HarmonicPlan::new(&p, k_max, Arc::new(s), Arc::new(l)).unwrap()
}

// 1 + x₃ + x₁x₂ (d = 3) or 1 + x₁ + x₁x₂ (d = 2) times a Gaussian: profiles r^k e^{−r²/2}
fn poly_gaussian(angular: &Arc<AngularGrid>, radial: &Arc<RadialGrid>) -> Field {
    let d = angular.d();
    Field::from_fn(angular.clone(), radial.clone(), |r, w| {
        let lin = if d == 3 { w[2] } else { w[0] };
        (1.0 + r * lin + r * r * w[0] * w[1]) * (-r * r / 2.0).exp()
    })
    .unwrap()
}

#[test]
fn weights_sum_to_surface_area() {
    for m in [1, 4, 7, 30] {
        assert!((AngularGrid::circle(m).unwrap().surface_area() - 2.0 * PI).abs() < 1e-12);
    }
    for (nt, np) in [(1, 1), (3, 5), (9, 17), (20, 41)] {
        assert!((AngularGrid::sphere(nt, np).unwrap().surface_area() - 4.0 * PI).abs() < 1e-12);
    }
    assert!(AngularGrid::for_degree(4, 2).is_err());
}

#[test]
fn single_harmonics_land_in_one_mode() {
    let r = small_radial(2);
    let a2 = Arc::new(AngularGrid::for_degree(2, 4).unwrap());
    let f = Field::from_fn(a2, r, |_, w| {
        let th = w[1].atan2(w[0]);
        (2.0 * th).cos()
    })
    .unwrap();
    let e = analyze(&f, 4).unwrap();
    for m in &e.modes {
        let n = m.profile.values().iter().fold(0.0f64, |a, v| a.max(v.abs()));
        if (m.k, m.l) == (2, 1) {
            assert!((n - PI.sqrt()).abs() < 1e-12);
        } else {
            assert!(n < 1e-13, "({}, {}): {n}", m.k, m.l);
        }
    }

    let r = small_radial(3);
    let a3 = Arc::new(AngularGrid::for_degree(3, 4).unwrap());
    let f = Field::from_fn(a3, r, |_, w| w[2]).unwrap();
    let e = analyze(&f, 4).unwrap();
    for m in &e.modes {
        let n = m.profile.values().iter().fold(0.0f64, |a, v| a.max(v.abs()));
        // ω₃ = √(4π/3) Y_{1,0}; the zonal entry of degree 1 is l = 2
        if (m.k, m.l) == (1, 2) {
            assert!((n - (4.0 * PI / 3.0).sqrt()).abs() < 1e-12);
        } else {
            assert!(n < 1e-13, "({}, {}): {n}", m.k, m.l);
        }
    }
}

#[test]
fn mode_orthogonality() {
    for d in [2u32, 3] {
        let k_max = 5;
        let radial = small_radial(d);
        let angular = Arc::new(AngularGrid::for_degree(d, k_max).unwrap());
        let g = RadialFunction::from_fn(radial.clone(), |r| r * (-r).exp());
        for (k, l) in mode_list(d, k_max) {
            let modes = mode_list(d, k_max)
                .into_iter()
                .map(|(kk, ll)| ModeEntry {
                    k: kk,
                    l: ll,
                    profile: if (kk, ll) == (k, l) { g.clone() } else { RadialFunction::zeros(radial.clone()) },
                })
                .collect();
            let f = synthesize(&ModeExpansion { angular: angular.clone(), k_max, modes }).unwrap();
            let e = analyze(&f, k_max).unwrap();
            for m in &e.modes {
                let gap = if (m.k, m.l) == (k, l) { m.profile.distance(&g).unwrap() } else { m.profile.norm() };
                assert!(gap <= 1e-12 * g.norm(), "d={d} ({k},{l}) -> ({},{}): {gap:e}", m.k, m.l);
            }
        }
    }
}

#[test]
fn under_resolved_grids_are_rejected() {
    let r = small_radial(2);
    let a = Arc::new(AngularGrid::circle(7).unwrap());
    let f = Field::from_fn(a, r, |_, _| 1.0).unwrap();
    assert!(matches!(analyze(&f, 3), Err(invsq_core::Error::UnderResolved(_))));
    assert!(analyze(&f, 2).is_ok());
    let r = small_radial(3);
    let a = Arc::new(AngularGrid::sphere(3, 4).unwrap());
    let f = Field::from_fn(a, r, |_, _| 1.0).unwrap();
    assert!(matches!(analyze(&f, 2), Err(invsq_core::Error::UnderResolved(_))));
}

#[test]
fn operators_check_their_grids() {
    let mut p = plan(3, 1.0, 2);
    let r = small_radial(3);
    let a = Arc::new(AngularGrid::for_degree(3, 2).unwrap());
    let f = Field::from_fn(a, r, |_, _| 1.0).unwrap();
    assert!(matches!(p.apply_w(&f, false), Err(invsq_core::Error::Grid(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn round_trip_and_parseval(
        d in 2u32..4,
        k_max in 0u32..6,
        seed in prop::collection::vec(-1.0f64..1.0, 64),
    ) {
        let radial = small_radial(d);
        let angular = Arc::new(AngularGrid::for_degree(d, k_max).unwrap());
        let modes: Vec<ModeEntry> = mode_list(d, k_max)
            .into_iter()
            .enumerate()
            .map(|(i, (k, l))| {
                let c = seed[i % seed.len()];
                let s = 0.5 + 0.5 * seed[(3 * i + 1) % seed.len()].abs();
                ModeEntry { k, l, profile: RadialFunction::from_fn(radial.clone(), |r| c * (-s * r * r).exp()) }
            })
            .collect();
        let e = ModeExpansion { angular: angular.clone(), k_max, modes };
        let f = synthesize(&e).unwrap();
        let back = analyze(&f, k_max).unwrap();
        for (a, b) in e.modes.iter().zip(&back.modes) {
            prop_assert!(a.profile.distance(&b.profile).unwrap() <= 1e-10 * (1.0 + a.profile.norm()));
        }
        let f2 = synthesize(&back).unwrap();
        prop_assert!(f.distance(&f2).unwrap() <= 1e-10 * (1.0 + f.norm()));
        let gap = (e.energy() - f.norm() * f.norm()).abs();
        prop_assert!(gap <= 1e-10 * (1.0 + e.energy()), "Parseval gap {gap:e}");
    }
}

#[test]
fn wave_operator_on_fields() {
    for (d, a) in [(3u32, 0.0), (3, 1.0), (2, 4.0)] {
        let mut p = plan(d, a, 2);
        let angular = Arc::new(AngularGrid::for_degree(d, 2).unwrap());
        let f = poly_gaussian(&angular, p.space());
        let w = p.apply_w(&f, false).unwrap();
        let n = f.norm();
        if a == 0.0 {
            assert!(w.distance(&f).unwrap() / n <= 1e-5);
        }
        assert!((w.norm() - n).abs() / n <= 1e-5, "(d,a)=({d},{a}) norm {} vs {n}", w.norm());
        let back = p.apply_w(&w, true).unwrap();
        let gap = back.distance(&f).unwrap() / n;
        assert!(gap <= 1e-5, "(d,a)=({d},{a}) W*W gap {gap:e}");
    }
}

// sum of r^{ν_k−λ₀} e^{−r²/2} Y_{k,l}; each profile has a Gaussian H_ν image
fn adapted_field(p: &HarmonicPlan, k_max: u32) -> Field<Complex64> {
    let params = p.params;
    let radial = p.space().clone();
    let angular = Arc::new(AngularGrid::for_degree(params.d, k_max).unwrap());
    let modes = mode_list(params.d, k_max)
        .into_iter()
        .map(|(k, l)| {
            let e = params.mode(k).nu - params.lambda0;
            let c = 1.0 / (1.0 + (k as f64) + l as f64);
            let profile = RadialFunction::from_fn(radial.clone(), |r| Complex64::new(c * r.powf(e) * (-r * r / 2.0).exp(), 0.0));
            ModeEntry { k, l, profile }
        })
        .collect();
    synthesize(&ModeExpansion { angular, k_max, modes }).unwrap()
}

#[test]
fn intertwining_on_fields() {
    let mut p = plan(3, 1.0, 2);
    let f = adapted_field(&p, 2);
    let heat = |l: f64| Complex64::new((-l * l).exp(), 0.0);
    let bump = |l: f64| Complex64::new(l * l * (-l * l).exp(), 0.0);
    let phase = |l: f64| Complex64::new(0.0, -l * l).exp();
    let one = |_: f64| Complex64::new(1.0, 0.0);
    let ms: [(&str, &dyn Fn(f64) -> Complex64); 4] = [("heat", &heat), ("bump", &bump), ("phase", &phase), ("one", &one)];
    for (name, m) in ms {
        let d = p.apply_function_of_la(m, &f, Path::Direct).unwrap();
        let c = p.apply_function_of_la(m, &f, Path::Conjugated).unwrap();
        let gap = d.field.distance(&c.field).unwrap() / f.norm();
        assert!(gap <= 1e-5, "{name}: {gap:e}");
        if name == "one" {
            assert!(d.field.distance(&f).unwrap() / f.norm() <= 1e-5);
        }
    }
}

#[test]
fn free_field_with_default_band_is_identity() {
    let p = make_params(2, 0.0).unwrap();
    let (s, _) = make_split_grids(1e-3, 40.0, 1e-3, 10.0, 1e-3, 2).unwrap();
    let radial = Arc::new(s);
    let angular = Arc::new(AngularGrid::for_degree(2, 1).unwrap());
    let f = poly_gaussian(&angular, &radial);
    let w = apply_W(&p, &f, false, 1).unwrap();
    assert!(w.distance(&f).unwrap() / f.norm() <= 1e-5);
    let heat = apply_function_of_la(&p, &|l: f64| (-l * l).exp(), &f, Path::Direct, 1).unwrap();
    assert!(heat.field.norm() < f.norm());
}

fn dispersive_plan(a: f64, r_max: f64) -> HarmonicPlan {
    let p = make_params(3, a).unwrap();
    let (s, l) = make_split_grids(1e-3, r_max, 1e-3, 8.0, 7e-4, 3).unwrap();
    HarmonicPlan::new(&p, 0, Arc::new(s), Arc::new(l)).unwrap()
}

#[test]
fn free_dispersion_matches_closed_form() {
    let mut p = dispersive_plan(0.0, 100.0);
    let angular = Arc::new(AngularGrid::for_degree(3, 0).unwrap());
    let f = Field::from_fn(angular, p.space().clone(), |r, _| (-r * r / 2.0).exp()).unwrap();
    let ts = [0.0, 0.5, 1.0, 2.0, 5.0, 10.0];
    let table = dispersive_experiment(&mut p, &f, &ts).unwrap();
    assert!(table.aliasing.is_empty());
    assert!((table.rows[0].sup - f.sup_abs()).abs() < 1e-6);
    for row in &table.rows {
        // e^{itΔ} e^{−r²/2} peaks at the origin with height (1 + 4t²)^{−3/4}
        let exact = (1.0 + 4.0 * row.t * row.t).powf(-0.75);
        assert!((row.sup / exact - 1.0).abs() < 1e-3, "t={}: {} vs {exact}", row.t, row.sup);
    }
}

#[test]
fn aliasing_is_reported() {
    let mut p = dispersive_plan(0.0, 30.0);
    let angular = Arc::new(AngularGrid::for_degree(3, 0).unwrap());
    let f = Field::from_fn(angular, p.space().clone(), |r, _| (-r * r / 2.0).exp()).unwrap();
    let table = dispersive_experiment(&mut p, &f, &[1.0, 2000.0]).unwrap();
    assert_eq!(table.aliasing.len(), 1);
    assert_eq!(table.aliasing[0].t, 2000.0);
}

#[test]
fn sobolev_ratio_of_free_field_is_one() {
    let p = make_params(3, 0.0).unwrap();
    let (s, l) = make_split_grids(1e-3, 30.0, 1e-3, 20.0, 2e-3, 3).unwrap();
    let mut hp = HarmonicPlan::new(&p, 1, Arc::new(s), Arc::new(l)).unwrap();
    let angular = Arc::new(AngularGrid::for_degree(3, 1).unwrap());
    let f = Field::from_fn(angular, hp.space().clone(), |r, w| (1.0 + r * w[2]) * (-r * r / 2.0).exp()).unwrap();
    assert!((hp.sobolev_ratio(&f, 1.0).unwrap() - 1.0).abs() < 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]
    #[test]
    fn sobolev_ratio_stays_in_band(c in 0.0f64..3.0, w in 0.4f64..2.0, tilt in -1.0f64..1.0) {
        let p = make_params(3, 1.0).unwrap();
        let (s, l) = make_split_grids(1e-3, 30.0, 1e-3, 20.0, 2e-3, 3).unwrap();
        let mut hp = HarmonicPlan::new(&p, 1, Arc::new(s), Arc::new(l)).unwrap();
        let angular = Arc::new(AngularGrid::for_degree(3, 1).unwrap());
        let f = Field::from_fn(angular, hp.space().clone(), |r, om| {
            (1.0 + tilt * r * om[2]) * (-(r - c) * (r - c) / (w * w)).exp()
        })
        .unwrap();
        let ratio = hp.sobolev_ratio(&f, 1.0).unwrap();
        prop_assert!((0.1..=10.0).contains(&ratio), "ratio {ratio}");
    }
}

#[test]
fn potential_dispersion_decays_at_the_free_rate() {
    let mut p = dispersive_plan(1.0, 100.0);
    let angular = Arc::new(AngularGrid::for_degree(3, 0).unwrap());
    let f = Field::from_fn(angular, p.space().clone(), |r, _| (-r * r / 2.0).exp()).unwrap();
    let table = dispersive_experiment(&mut p, &f, &[1.0, 2.0, 5.0, 10.0]).unwrap();
    let scaled: Vec<f64> = table.rows.iter().map(|r| r.scaled).collect();
    let (lo, hi) = scaled.iter().fold((f64::MAX, 0.0f64), |(a, b), v| (a.min(*v), b.max(*v)));
    assert!(hi / lo < 2.0, "{scaled:?}");
    assert!(table.rows[3].sup < 0.1 * table.rows[0].sup);
}
