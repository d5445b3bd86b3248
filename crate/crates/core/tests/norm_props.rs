//! Sampled and property-based invariants for norms and functionals.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use geoconst_core::{functionals, SpaceSpec, Vec2};

fn random_space(rng: &mut ChaCha8Rng) -> SpaceSpec {
    match rng.gen_range(0..3) {
        0 => SpaceSpec::banas_fraczek(rng.gen_range(1.0..8.0)).unwrap(),
        1 => SpaceSpec::generalized_bf(rng.gen_range(1.0..8.0), rng.gen_range(1.0..6.0)).unwrap(),
        _ => SpaceSpec::lp_plane(rng.gen_range(1.0..6.0)).unwrap(),
    }
}

fn random_vec(rng: &mut ChaCha8Rng) -> Vec2 {
    Vec2::new(rng.gen_range(-100.0..100.0), rng.gen_range(-100.0..100.0))
}

#[test]
fn norm_axioms_sampled() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..10_000 {
        let s = random_space(&mut rng);
        let u = random_vec(&mut rng);
        let v = random_vec(&mut rng);
        let c: f64 = rng.gen_range(-50.0..50.0);

        let nu = s.norm(u).unwrap();
        let nv = s.norm(v).unwrap();
        assert!(nv >= 0.0);

        // absolute homogeneity, relative
        let scaled = s.norm(v.scale(c)).unwrap();
        let expect = c.abs() * nv;
        assert!(
            (scaled - expect).abs() <= 1e-12 * expect.max(1.0),
            "{s} {v} c={c}: {scaled} vs {expect}"
        );

        // triangle inequality
        let nsum = s.norm(u + v).unwrap();
        assert!(nsum <= nu + nv + 1e-12, "{s} {u} {v}");

        // symmetry
        assert_eq!(s.norm(-v).unwrap(), nv, "{s} {v}");
    }
}

#[test]
fn generalized_bf_at_p2_matches_bf() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        let lambda = rng.gen_range(1.0..10.0);
        let bf = SpaceSpec::banas_fraczek(lambda).unwrap();
        let gbf = SpaceSpec::generalized_bf(lambda, 2.0).unwrap();
        let v = random_vec(&mut rng);
        let a = bf.norm(v).unwrap();
        let b = gbf.norm(v).unwrap();
        assert!((a - b).abs() <= 1e-14 * a.max(1.0), "lambda={lambda} {v}");
    }
}

#[test]
fn unit_vectors_have_norm_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..1_000 {
        let s = random_space(&mut rng);
        let theta = rng.gen_range(-20.0..20.0);
        let u = s.unit_vector(theta).unwrap();
        let n = s.norm(u).unwrap();
        assert!((n - 1.0).abs() <= 1e-14, "{s} theta={theta}: norm {n}");
    }
}

#[test]
fn sampled_sphere_extreme_points_follow_the_arc_rule() {
    // On the Banaś–Frączek sphere, a norm-one point is extreme exactly when
    // it lies on the Euclidean circle; the |z₁| ≤ 1/λ part is automatic.
    for lambda in [1.1, 1.5, 2.0, 4.0] {
        let s = SpaceSpec::banas_fraczek(lambda).unwrap();
        for p in s.sample_sphere(257).unwrap() {
            let on_circle = (p.a * p.a + p.b * p.b - 1.0).abs() <= 1e-9;
            assert!(p.a.abs() <= 1.0 / lambda + 1e-9);
            assert_eq!(
                s.is_extreme_point(p, 1e-9).unwrap(),
                on_circle,
                "lambda={lambda} {p}"
            );
        }
    }
}

#[test]
fn cnj_equals_lyj_at_unit_weights() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..10_000 {
        let s = random_space(&mut rng);
        let x = random_vec(&mut rng);
        let y = random_vec(&mut rng);
        if x.is_zero() && y.is_zero() {
            continue;
        }
        let a = functionals::cnj_expr(&s, x, y).unwrap();
        let b = functionals::lyj_expr(&s, 1.0, 1.0, x, y).unwrap();
        assert!((a - b).abs() <= 1e-14 * a.abs().max(1.0), "{s} {x} {y}");
    }
}

#[test]
fn cnjp_at_p2_equals_cnj() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..10_000 {
        let s = random_space(&mut rng);
        let x = random_vec(&mut rng);
        let y = random_vec(&mut rng);
        if x.is_zero() && y.is_zero() {
            continue;
        }
        let a = functionals::cnjp_expr(&s, 2.0, x, y).unwrap();
        let b = functionals::cnj_expr(&s, x, y).unwrap();
        assert!((a - b).abs() <= 1e-14 * a.abs().max(1.0), "{s} {x} {y}");
    }
}

#[test]
fn lyj_scale_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10_000 {
        let s = random_space(&mut rng);
        let x = random_vec(&mut rng);
        let y = random_vec(&mut rng);
        if x.is_zero() && y.is_zero() {
            continue;
        }
        let xi = rng.gen_range(0.05..20.0);
        let eta = rng.gen_range(0.05..20.0);
        let base = functionals::lyj_expr(&s, xi, eta, x, y).unwrap();

        // scaling both points
        let c: f64 = rng.gen_range(0.01..100.0) * if rng.gen_bool(0.5) { -1.0 } else { 1.0 };
        let scaled = functionals::lyj_expr(&s, xi, eta, x.scale(c), y.scale(c)).unwrap();
        assert!((scaled - base).abs() <= 1e-12 * base, "{s} c={c}");

        // scaling both weights
        let k: f64 = rng.gen_range(0.01..100.0);
        let reweighted = functionals::lyj_expr(&s, k * xi, k * eta, x, y).unwrap();
        assert!((reweighted - base).abs() <= 1e-12 * base, "{s} k={k}");
    }
}

proptest! {
    #[test]
    fn space_spec_text_round_trip(
        kind in 0usize..3,
        lambda in 1.0f64..50.0,
        p in 1.0f64..20.0,
    ) {
        let spec = match kind {
            0 => SpaceSpec::banas_fraczek(lambda).unwrap(),
            1 => SpaceSpec::generalized_bf(lambda, p).unwrap(),
            _ => SpaceSpec::lp_plane(p).unwrap(),
        };
        let back: SpaceSpec = spec.to_string().parse().unwrap();
        prop_assert_eq!(spec, back);
    }

    #[test]
    fn power_mean_between_min_and_max(
        t in 0.1f64..10.0,
        a in 0.0f64..100.0,
        b in 0.0f64..100.0,
    ) {
        let m = functionals::power_mean(t, a, b).unwrap();
        let lo = a.min(b);
        let hi = a.max(b);
        // μ_t(a,b) lies within [min/2^(1/t)-ish, max]; the robust bounds:
        prop_assert!(m <= hi + 1e-12 * hi.max(1.0));
        prop_assert!(m + 1e-12 >= lo / 2f64.powf(1.0 / t));
    }

    #[test]
    fn lyj_expr_stays_in_unit_to_two_band(
        theta_x in 0.0f64..std::f64::consts::TAU,
        theta_y in 0.0f64..std::f64::consts::TAU,
        t in 0.0f64..=1.0,
        lambda in 1.0f64..6.0,
        xi in 0.1f64..5.0,
        eta in 0.1f64..5.0,
    ) {
        let s = SpaceSpec::banas_fraczek(lambda).unwrap();
        let x = s.unit_vector(theta_x).unwrap();
        let y = s.unit_vector(theta_y).unwrap().scale(t);
        let v = functionals::lyj_expr(&s, xi, eta, x, y).unwrap();
        prop_assert!(v >= 0.0);
        prop_assert!(v <= 2.0 + 1e-9, "v = {}", v);
    }
}
