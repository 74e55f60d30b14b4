//! Duals of 2-sheeted hyperboloids in Minkowski space are maximal surfaces.
//! All three modulus cases, each with its own implicit equation.

use isoquad::cli::output::{obj_string, write_atomic};
use isoquad::duals::{implicit_residual, ClosedDual, ImplicitForm};
use isoquad::geometry::{Metric, Vec3};
use isoquad::grid::Lattice;
use isoquad::quadrics::{Family, Quadric, QuadricSpec};
use isoquad::verify::FD_STEP;

fn main() -> isoquad::Result<()> {
    let lattice = Lattice::from_ranges(0.1, 1.5, 40, 0.1, 1.5, 40)?;
    for (label, axes) in [("p < 1", [1.5, 1.0, 0.8]), ("p imaginary", [1.2, 1.0, 2.0]), ("p > 1", [1.0, 1.4, 1.2])] {
        let q = Quadric::new(QuadricSpec::new(Family::Hyperboloid2Sheet, axes[0], axes[1], axes[2], Metric::MinkowskiZ)?)?;
        let dual = ClosedDual::new(q);
        let grid = dual.grid(lattice, FD_STEP, 2, Some(Metric::MinkowskiZ));
        let mut worst = 0.0f64;
        for j in grid.valid_jets() {
            let unit = Vec3::new(j.x.x / axes[0], j.x.y / axes[1], j.x.z / axes[2]);
            worst = worst.max(implicit_residual(ImplicitForm::Maximal, q.moduli(), &unit)?.relative());
        }
        println!(
            "{label}: case {:?}, {} of {} nodes masked, implicit residual {worst:.2e}",
            q.moduli().case,
            grid.masked_count(),
            lattice.len()
        );
        let path = std::env::temp_dir().join(format!("isoquad_maximal_{:?}.obj", q.moduli().case));
        write_atomic(&path, obj_string(&grid).as_bytes())?;
    }
    Ok(())
}
