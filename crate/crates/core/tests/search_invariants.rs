//! Contract invariants of the supremum search: lower-bound soundness,
//! grid monotonicity, swap symmetry, refinement monotonicity, and the
//! location of refined witnesses.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use geoconst_core::{
    compute_constant, functionals, refine_local, Branch, ConstantQuery, SearchConfig, SpaceSpec,
    Witness,
};

fn cfg(angle: usize, scale: usize) -> SearchConfig {
    SearchConfig {
        angle_grid_n: angle,
        scale_grid_n: scale,
        ..SearchConfig::default()
    }
}

#[test]
fn value_dominates_probe_points() {
    let lambda = 2.0;
    let space = SpaceSpec::banas_fraczek(lambda).unwrap();
    let q = ConstantQuery::Lyj { xi: 1.0, eta: 2.0 };
    let r = compute_constant(&space, &q, &cfg(180, 17)).unwrap();

    // the equality pair is a probe point like any other
    let s = (1.0 - 1.0 / (lambda * lambda)).sqrt();
    let wx = geoconst_core::Vec2::new(1.0 / lambda, s);
    let wy = geoconst_core::Vec2::new(1.0 / lambda, -s);
    let probe = functionals::lyj_expr(&space, 1.0, 2.0, wx, wy).unwrap();
    assert!(r.value + 1e-12 >= probe, "value {} probe {probe}", r.value);

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let x = space.unit_vector(rng.gen_range(0.0..std::f64::consts::TAU)).unwrap();
        let u = space.unit_vector(rng.gen_range(0.0..std::f64::consts::TAU)).unwrap();
        let y = u.scale(rng.gen_range(0.0..=1.0));
        let probe = functionals::lyj_expr(&space, 1.0, 2.0, x, y).unwrap();
        assert!(r.value + 1e-12 >= probe, "value {} probe {probe}", r.value);
    }
}

#[test]
fn doubling_grids_never_loses_value() {
    let cases: Vec<(SpaceSpec, ConstantQuery)> = vec![
        (
            SpaceSpec::banas_fraczek(2.0).unwrap(),
            ConstantQuery::Lyj { xi: 1.0, eta: 1.0 },
        ),
        (SpaceSpec::banas_fraczek(1.3).unwrap(), ConstantQuery::Cnj),
        (
            SpaceSpec::lp_plane(3.0).unwrap(),
            ConstantQuery::Lyj { xi: 1.0, eta: 2.0 },
        ),
        (
            SpaceSpec::generalized_bf(1.7, 2.0).unwrap(),
            ConstantQuery::JamesLambdaMu { lam: 0.8, mu: 0.5 },
        ),
    ];
    for (space, q) in &cases {
        let v1 = compute_constant(space, q, &cfg(120, 9)).unwrap().value;
        let v2 = compute_constant(space, q, &cfg(240, 17)).unwrap().value;
        let v3 = compute_constant(space, q, &cfg(480, 33)).unwrap().value;
        assert!(v2 >= v1 - 1e-12, "{q:?}: {v1} -> {v2}");
        assert!(v3 >= v2 - 1e-12, "{q:?}: {v2} -> {v3}");
    }
}

#[test]
fn weight_swap_symmetry() {
    let spaces = [
        SpaceSpec::banas_fraczek(1.6).unwrap(),
        SpaceSpec::generalized_bf(1.2, 3.0).unwrap(),
        SpaceSpec::lp_plane(1.5).unwrap(),
    ];
    for space in &spaces {
        for (xi, eta) in [(1.0, 2.0), (0.3, 1.1), (2.5, 2.5)] {
            let a = compute_constant(space, &ConstantQuery::Lyj { xi, eta }, &cfg(90, 9))
                .unwrap()
                .value;
            let b = compute_constant(space, &ConstantQuery::Lyj { xi: eta, eta: xi }, &cfg(90, 9))
                .unwrap()
                .value;
            assert!((a - b).abs() <= 1e-9, "{space} {xi}/{eta}: {a} vs {b}");
        }
    }
}

#[test]
fn refinement_never_decreases_the_start_value() {
    let space = SpaceSpec::banas_fraczek(1.8).unwrap();
    let q = ConstantQuery::Lyj { xi: 1.0, eta: 3.0 };
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..25 {
        let theta_x = rng.gen_range(0.0..std::f64::consts::TAU);
        let theta_y = rng.gen_range(0.0..std::f64::consts::TAU);
        let t = rng.gen_range(0.0..=1.0);
        let branch = if rng.gen_bool(0.5) {
            Branch::ScaleY
        } else {
            Branch::ScaleX
        };
        let start = Witness {
            x: space.unit_vector(theta_x).unwrap(),
            y: space.unit_vector(theta_y).unwrap(),
            t,
            theta_x,
            theta_y,
            branch,
        };
        let (ex, ey) = start.evaluated_pair();
        let start_value = functionals::lyj_expr(&space, 1.0, 3.0, ex, ey).unwrap();
        let refined = refine_local(&space, &q, &start, &cfg(180, 17)).unwrap();
        assert!(
            refined.value >= start_value - 1e-15,
            "start {start_value} refined {}",
            refined.value
        );
    }
}

#[test]
fn refined_witness_sits_on_the_extreme_arc() {
    // Whenever the value is meaningfully above 1, the maximizing x lies on
    // the circular-arc part of the unit sphere.
    for lambda in [1.2, 2.0] {
        let space = SpaceSpec::banas_fraczek(lambda).unwrap();
        let q = ConstantQuery::Lyj { xi: 1.0, eta: 1.0 };
        let r = compute_constant(&space, &q, &cfg(240, 17)).unwrap();
        assert!(r.value > 1.0 + 1e-4);
        assert!(
            space.is_extreme_point(r.witness.x, 1e-6).unwrap(),
            "lambda={lambda}: witness x {} not on the extreme arc",
            r.witness.x
        );
    }
}

#[test]
fn evaluations_are_counted() {
    let space = SpaceSpec::banas_fraczek(2.0).unwrap();
    let q = ConstantQuery::Cnj;
    let c = cfg(60, 5);
    let r = compute_constant(&space, &q, &c).unwrap();
    // two branches over a 60x60x5 lattice, plus refinement
    assert!(r.evaluations >= 2 * 60 * 60 * 5);
    assert!(r.evaluations < 2 * 60 * 60 * 5 + 20_000);
}

#[test]
fn sphere_constants_skip_the_scale_axis() {
    // for sphere-only constants the scale grid size has no effect
    let space = SpaceSpec::generalized_bf(1.5, 2.0).unwrap();
    let q = ConstantQuery::James;
    let a = compute_constant(&space, &q, &cfg(120, 5)).unwrap();
    let b = compute_constant(&space, &q, &cfg(120, 50)).unwrap();
    assert_eq!(a.value.to_bits(), b.value.to_bits());
    assert_eq!(a.evaluations, b.evaluations);
}
