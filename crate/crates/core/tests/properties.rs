use std::f64::consts::PI;

use proptest::prelude::*;
use spheretopo::curves::{sinusoidal_curve, CustomCurve, SinusoidalCurve};
use spheretopo::metrics::{intramodular_distortion, Evaluator, MetricsOptions};
use spheretopo::projection::{AzimuthalProjector, SphericalPoint};
use spheretopo::solids::{PlatonicSolid, SolidKind, SphericalAnchor};
use spheretopo::topology::{planar_outline, spherical_tiling};

fn solid() -> impl Strategy<Value = SolidKind> {
    prop::sample::select(SolidKind::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn outlines_scale_with_edge_length(kind in solid(), amp in 0.0f64..1.0, mu in 0.1f64..20.0) {
        let s = PlatonicSolid::get(kind);
        let base = SinusoidalCurve::new(10.0, amp).unwrap();
        let scaled = base.scaled(mu).unwrap();
        let o1 = planar_outline(s, &base, s.radius_for_edge(10.0), 32).unwrap();
        let o2 = planar_outline(s, &scaled, s.radius_for_edge(10.0 * mu), 32).unwrap();
        let scale = o2.max_radius();
        for (p, q) in o1.points.iter().zip(&o2.points) {
            prop_assert!((p.x * mu - q.x).abs() <= 1e-9 * scale);
            prop_assert!((p.y * mu - q.y).abs() <= 1e-9 * scale);
        }
        let t1 = spherical_tiling(s, &base, s.radius_for_edge(10.0), 16).unwrap();
        let t2 = spherical_tiling(s, &scaled, s.radius_for_edge(10.0 * mu), 16).unwrap();
        for (f1, f2) in t1.faces.iter().zip(&t2.faces) {
            for (a, b) in f1.points.iter().zip(&f2.points) {
                prop_assert!((a.to_unit_vector() - b.to_unit_vector()).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn intramodular_distortion_is_scale_free(kind in solid(), amp in 0.0f64..0.9, mu in 0.1f64..20.0) {
        let s = PlatonicSolid::get(kind);
        let c1 = sinusoidal_curve(1.0, amp).unwrap();
        let c2 = sinusoidal_curve(mu, amp).unwrap();
        let e1 = intramodular_distortion(&planar_outline(s, &c1, s.radius_for_edge(1.0), 64).unwrap()).unwrap();
        let e2 = intramodular_distortion(&planar_outline(s, &c2, s.radius_for_edge(mu), 64).unwrap()).unwrap();
        prop_assert!((e1.eps_intra - e2.eps_intra).abs() < 1e-10);
        prop_assert!((e2.a_e / (mu * mu) - e1.a_e).abs() < 1e-9 * e1.a_e);
    }

    #[test]
    fn azimuthal_projection_keeps_great_circle_distance(
        phi0 in -1.5f64..1.5, lam0 in -PI..PI, phi in -1.5f64..1.5, lam in -PI..PI, r in 0.1f64..500.0,
    ) {
        let center = SphericalAnchor::new(phi0, lam0, 0.0);
        let pt = SphericalPoint::new(phi, lam);
        let u = pt.to_unit_vector();
        let c = SphericalPoint::new(phi0, lam0).to_unit_vector().angle(&u);
        prop_assume!(c < PI - 1e-6);
        let proj = AzimuthalProjector::new(&center, r).unwrap().project(&u).unwrap();
        prop_assert!((proj.norm() - r * c).abs() <= 1e-12 * r * PI + 1e-12);
    }

    #[test]
    fn any_odd_curve_tiles_the_sphere(kind in solid(), c1 in -0.2f64..0.2, c3 in -0.5f64..0.5) {
        let s = PlatonicSolid::get(kind);
        // odd, and zero at the vertices x = +-1/2
        let curve = CustomCurve::new(1.0, "poly", move |x: f64| (c1 + c3 * x * x) * x * (4.0 * x * x - 1.0)).unwrap();
        let r = s.radius_for_edge(1.0);
        let t = spherical_tiling(s, &curve, r, 32).unwrap();
        let total = t.total_area();
        prop_assert!((total - 4.0 * PI * r * r).abs() < 1e-9 * 4.0 * PI * r * r);
        let expected = 4.0 * PI * r * r / kind.face_count() as f64;
        for f in 0..kind.face_count() {
            prop_assert!((t.face_area(f) - expected).abs() < 1e-9 * expected);
        }
    }

    #[test]
    fn curves_missing_the_vertices_are_rejected(kind in solid(), c in 0.01f64..0.5) {
        let s = PlatonicSolid::get(kind);
        let curve = CustomCurve::new(1.0, "line", move |x: f64| c * x).unwrap();
        let r = s.radius_for_edge(1.0);
        prop_assert!(spherical_tiling(s, &curve, r, 32).is_err());
        prop_assert!(planar_outline(s, &curve, r, 32).is_err());
    }
}

#[test]
fn report_invariants_hold_across_amplitudes() {
    let opts = MetricsOptions {
        samples: 64,
        ..MetricsOptions::default()
    };
    for kind in SolidKind::ALL {
        let ev = Evaluator::new(kind, 110.0, opts).unwrap();
        assert!((ev.radius - 110.0 * PlatonicSolid::get(kind).circumradius_ratio).abs() < 1e-9);
        for i in 0..=10 {
            let r = ev.evaluate(i as f64 / 10.0, 0.56).unwrap();
            assert!(r.a_e > 0.0 && r.g_e >= 0.0 && r.eps_inter >= 0.0);
            assert!((r.eps_intra - (r.a_e - r.a_s) / r.a_e).abs() < 1e-12);
            assert!(
                (r.a_s - 4.0 * PI * ev.radius * ev.radius / kind.face_count() as f64).abs()
                    < 1e-9 * r.a_s
            );
            match (r.feasible, r.d_loco, r.j) {
                (true, Some(d), Some(j)) => {
                    assert!(d > 0.0 && d <= 1.0);
                    assert!((j - (0.56 * r.eps_inter + 0.44 * d)).abs() < 1e-12);
                }
                (false, None, None) => {}
                other => panic!("{kind} A={}: inconsistent {other:?}", r.amplitude),
            }
        }
    }
}
