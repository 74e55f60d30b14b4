//! The verification engine itself: its checks must pass on good input,
//! fail on bad input, and behave as their numerical order predicts.

use isoquad::geometry::{Metric, ParamKind, Vec3};
use isoquad::grid::Lattice;
use isoquad::paracomplex::{l_extend, Interval, Lorentz};
use isoquad::quadrics::{Family, Quadric, QuadricSpec};
use isoquad::verify::{fd_jet, para_cr_check, run_suite, Region, SuiteConfig, FD_STEP};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const REGION: Region = Region { u0: -1.0, u1: 1.0, v0: -0.7, v1: 0.7 };

#[test]
fn para_cauchy_riemann_separates_good_from_bad() {
    let ext = |z: Lorentz| l_extend(f64::exp, Interval::REAL_LINE, z);
    let good = para_cr_check(&ext, REGION, 200, 3, FD_STEP, 1e-6);
    assert!(good.pass, "{:?}", good.max_residual);
    let rotated = para_cr_check(&|z| Ok(Lorentz::J * ext(z)?), REGION, 200, 3, FD_STEP, 1e-6);
    assert!(rotated.pass, "{:?}", rotated.max_residual);
    let real_part = para_cr_check(&|z: Lorentz| Ok(Lorentz::real(z.re)), REGION, 200, 3, FD_STEP, 1e-6);
    assert!(!real_part.pass);
}

#[test]
fn fd_jet_is_exact_on_a_plane() {
    let j = fd_jet(&|u, v| Ok(Vec3::new(u, v, 0.0)), 0.3, -0.2, 1e-3, 2, ParamKind::Complex).unwrap();
    assert!((j.x_u - Vec3::new(1.0, 0.0, 0.0)).norm() < 1e-12);
    assert!(j.x_uv.norm() < 1e-6);
}

/// Halving the step cuts the error of the second-order stencil by about
/// four and of the fourth-order stencil by about sixteen.
#[test]
fn step_halving_matches_the_stencil_order() {
    let q = Quadric::new(QuadricSpec::new(Family::Ellipsoid, 1.5, 1.0, 0.7, Metric::Euclidean).unwrap()).unwrap();
    let sampler = |u: f64, v: f64| Ok(q.jet(u, v)?.x);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for (order, want) in [(2u8, 4.0), (4u8, 16.0)] {
        let mut ratios = Vec::new();
        for _ in 0..20 {
            let (u, v) = (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let exact = q.jet(u, v).unwrap().x_u;
            let err = |h: f64| (fd_jet(&sampler, u, v, h, order, ParamKind::Complex).unwrap().x_u - exact).norm();
            let (coarse, fine) = (err(0.04), err(0.02));
            if fine > 1e-12 {
                ratios.push(coarse / fine);
            }
        }
        ratios.sort_by(f64::total_cmp);
        let median = ratios[ratios.len() / 2];
        assert!((median / want - 1.0).abs() < 0.2, "order {order}: median ratio {median}");
    }
}

#[test]
fn reports_are_deterministic_for_a_seed() {
    let spec = QuadricSpec::new(Family::Hyperboloid2Sheet, 1.5, 1.0, 0.8, Metric::MinkowskiZ).unwrap();
    let mut cfg = SuiteConfig::new(spec, Lattice::from_ranges(0.2, 0.8, 8, 0.2, 0.8, 8).unwrap());
    cfg.samples = 100;
    cfg.seed = 17;
    cfg.checks = vec!["membership".into(), "christoffel-pair".into(), "conformality".into()];
    let a = serde_json::to_string(&run_suite(&cfg).unwrap()).unwrap();
    let b = serde_json::to_string(&run_suite(&cfg).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn unknown_checks_are_config_errors() {
    let spec = QuadricSpec::new(Family::Ellipsoid, 1.5, 1.0, 0.7, Metric::Euclidean).unwrap();
    let mut cfg = SuiteConfig::new(spec, Lattice::from_ranges(0.2, 0.8, 4, 0.2, 0.8, 4).unwrap());
    cfg.checks = vec!["curvature".into()];
    assert!(matches!(run_suite(&cfg), Err(isoquad::Error::Config(_))));
}
