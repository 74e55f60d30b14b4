//! Duals of 1-sheeted hyperboloids in Minkowski space (signature −,+,+) are
//! timelike minimal surfaces, parametrized over the Lorentz numbers.

use isoquad::duals::{implicit_residual, ClosedDual, ImplicitForm, PairMode};
use isoquad::geometry::{causal_type, Metric, Vec3};
use isoquad::quadrics::{Family, Quadric, QuadricSpec};
use isoquad::verify::pair_residual;

fn main() -> isoquad::Result<()> {
    for axes in [[1.5, 1.0, 0.6], [1.0, 0.6, 1.5]] {
        let q = Quadric::new(QuadricSpec::new(Family::Hyperboloid1Sheet, axes[0], axes[1], axes[2], Metric::MinkowskiX)?)?;
        let dual = ClosedDual::new(q);
        println!("axes {axes:?}: p = {}, case {:?}", q.moduli().p, q.moduli().case);
        for (u, v) in [(0.3, 0.1), (0.5, -0.2), (0.8, 0.35)] {
            let x = q.jet(u, v)?;
            let xs = dual.jet(u, v, 1e-4, 4)?;
            let unit = Vec3::new(xs.x.x / axes[0], xs.x.y / axes[1], xs.x.z / axes[2]);
            let implicit = implicit_residual(ImplicitForm::TimelikeMinimal, q.moduli(), &unit)?.relative();
            println!(
                "  ({u}, {v}): {:?} primal, pair residual {:.1e}, implicit {:.1e}",
                causal_type(&x, Metric::MinkowskiX),
                pair_residual(&x, &xs, PairMode::Timelike),
                implicit
            );
        }
    }
    Ok(())
}
