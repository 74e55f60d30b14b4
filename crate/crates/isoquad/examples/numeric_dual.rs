//! Integrates Christoffel's equations numerically and compares the result
//! with the closed-form dual after a single translation.

use isoquad::duals::{christoffel_numeric, ClosedDual};
use isoquad::geometry::Metric;
use isoquad::grid::Lattice;
use isoquad::quadrics::{Family, Quadric, QuadricSpec};
use isoquad::verify::{oracle_check, FD_STEP};

fn main() -> isoquad::Result<()> {
    let lattice = Lattice::from_ranges(0.1, 0.5, 32, 0.1, 0.5, 32)?;
    let cases = [
        (Family::Ellipsoid, [1.5, 1.0, 0.7], Metric::Euclidean),
        (Family::Hyperboloid2Sheet, [1.5, 1.0, 0.8], Metric::MinkowskiZ),
        (Family::Hyperboloid1Sheet, [1.5, 1.0, 0.6], Metric::MinkowskiX),
    ];
    for (family, [a, b, c], ambient) in cases {
        let q = Quadric::new(QuadricSpec::new(family, a, b, c, ambient)?)?;
        let dual = ClosedDual::new(q);
        let numeric = christoffel_numeric(&|u, v| q.lift_jet(u, v), [a, b, c], lattice, q.lift_metric(), dual.pair_mode())?;
        let closed = dual.grid(lattice, FD_STEP, 2, None);
        let report = oracle_check(&numeric.grid, &closed, 1e-5)?;
        println!("{}:", family.name());
        println!("  closure {:.1e}, refinement {:.1e}", numeric.closure, numeric.refinement);
        println!("  {}", report.summary());
    }
    Ok(())
}
