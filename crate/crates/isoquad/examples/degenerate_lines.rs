//! On a quadric in Minkowski space the induced metric degenerates along
//! whole parameter lines. Locates them on a Minkowski ellipsoid.

use isoquad::geometry::{causal_type, Metric};
use isoquad::grid::Lattice;
use isoquad::quadrics::{Family, Quadric, QuadricSpec};
use isoquad::verify::degenerate_line_check;

fn main() -> isoquad::Result<()> {
    let q = Quadric::new(QuadricSpec::new(Family::Ellipsoid, 1.2, 1.0, 1.5, Metric::MinkowskiZ)?)?;
    let grid = q.grid(Lattice::from_ranges(-2.0, 2.0, 64, -3.0, 3.0, 64)?);
    let (spacelike, timelike): (Vec<_>, Vec<_>) = grid
        .valid_jets()
        .map(|j| causal_type(j, Metric::MinkowskiZ).code())
        .filter(|&c| c != 0)
        .partition(|&c| c > 0);
    println!("{} spacelike and {} timelike nodes", spacelike.len(), timelike.len());

    let (report, lines) = degenerate_line_check(&grid, &|u, v| q.jet(u, v), Metric::MinkowskiZ, 1e-8)?;
    for line in &lines {
        println!("{line:?}");
    }
    println!("{}", report.summary());

    let euclidean = Quadric::new(QuadricSpec::new(Family::Ellipsoid, 1.2, 1.0, 1.5, Metric::Euclidean)?)?;
    let control = euclidean.grid(Lattice::from_ranges(-2.0, 2.0, 16, -3.0, 3.0, 16)?);
    match degenerate_line_check(&control, &|u, v| euclidean.jet(u, v), Metric::Euclidean, 1e-8) {
        Ok(_) => println!("euclidean control unexpectedly found degenerate nodes"),
        Err(e) => println!("euclidean control: {e}"),
    }
    Ok(())
}
