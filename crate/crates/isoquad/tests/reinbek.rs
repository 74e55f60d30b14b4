//! Elliptic-coordinate pairs as an independent oracle: membership, the
//! conjugate orthogonal net, and Combescure tangents with one flipped slot.

use isoquad::geometry::{Metric, ParamKind};
use isoquad::reinbek::{reinbek_pair, tangent_parallelism, ConfocalFamily, EllipticCoordinates};
use isoquad::verify::{conjugacy_check, fd_jet, orthogonality_check};
use isoquad::Error;
use proptest::prelude::*;

/// Coordinates placed at fractions `f1`, `f2` of the open intervals the
/// family's chain allows, on axes built from positive increments.
fn coordinates(family: ConfocalFamily, base: f64, d1: f64, d2: f64, f1: f64, f2: f64) -> EllipticCoordinates {
    let lerp = |lo: f64, hi: f64, f: f64| lo + f * (hi - lo);
    let (a, b, c, t1, t2) = match family {
        ConfocalFamily::Ellipsoid => {
            let (c, b, a) = (base, base + d1, base + d1 + d2);
            (a, b, c, lerp(b * b, a * a, f1), lerp(c * c, b * b, f2))
        }
        ConfocalFamily::OneSheet => {
            let (b, a, c) = (base, base + d1, base + d2);
            (a, b, c, lerp(b * b, a * a, f1), lerp(-c * c - 4.0, -c * c, f2))
        }
        ConfocalFamily::TwoSheet => {
            let (a, b, c) = (base + d2, base, base + d1);
            (a, b, c, lerp(-c * c, -b * b, f1), lerp(-c * c - 4.0, -c * c, f2))
        }
    };
    EllipticCoordinates::new(family, t1, t2, a, b, c).unwrap()
}

fn family() -> impl Strategy<Value = ConfocalFamily> {
    prop_oneof![
        Just(ConfocalFamily::Ellipsoid),
        Just(ConfocalFamily::OneSheet),
        Just(ConfocalFamily::TwoSheet),
    ]
}

#[test]
fn chain_boundaries_are_branch_points() {
    let on_b2 = EllipticCoordinates::new(ConfocalFamily::OneSheet, 2.25, -2.0, 2.0, 1.5, 1.0);
    assert!(matches!(on_b2, Err(Error::BranchPoint(_))));
    let wrong_order = EllipticCoordinates::new(ConfocalFamily::TwoSheet, -1.5, -3.0, 2.0, 1.5, 1.0);
    assert!(matches!(wrong_order, Err(Error::Domain(_))));
}

proptest! {
    #[test]
    fn pairs_are_on_the_quadric_with_parallel_tangents(
        family in family(),
        base in 0.5f64..1.5,
        d1 in 0.2f64..1.0,
        d2 in 0.2f64..1.0,
        f1 in 0.05f64..0.95,
        f2 in 0.05f64..0.95,
    ) {
        let e = coordinates(family, base, d1, d2, f1, f2);
        let (x, xs) = reinbek_pair(&e).unwrap();
        prop_assert!(e.membership_residual(&x).abs() <= 1e-10);
        prop_assert!(xs.iter().all(|t| t.is_finite()));
        prop_assert!(tangent_parallelism(&e, 1e-6).unwrap() <= 1e-6);
    }

    #[test]
    fn coordinates_form_a_conjugate_orthogonal_net(
        family in family(),
        base in 0.5f64..1.5,
        d1 in 0.2f64..1.0,
        d2 in 0.2f64..1.0,
        f1 in 0.1f64..0.9,
        f2 in 0.1f64..0.9,
    ) {
        let e = coordinates(family, base, d1, d2, f1, f2);
        let at = |t1: f64, t2: f64| {
            let mut c = e;
            c.t1 = t1;
            c.t2 = t2;
            reinbek_pair(&c)
        };
        let x = fd_jet(&|s, t| Ok(at(s, t)?.0), e.t1, e.t2, 1e-4, 4, ParamKind::Complex).unwrap();
        let xs = fd_jet(&|s, t| Ok(at(s, t)?.1), e.t1, e.t2, 1e-4, 4, ParamKind::Complex).unwrap();
        let jets = [x];
        prop_assert!(orthogonality_check(&jets, Metric::Euclidean, 1e-6, 0).pass);
        prop_assert!(conjugacy_check(&jets, 1e-6, 0).pass);
        // One slot parallel, the other antiparallel.
        prop_assert!(xs.x_u.dot(&x.x_u) * xs.x_v.dot(&x.x_v) < 0.0);
    }
}
