//! Samples the curvature-line net of a tri-axial ellipsoid and writes it as
//! an OBJ mesh next to the system temp directory.

use isoquad::cli::output::{obj_string, write_atomic};
use isoquad::geometry::Metric;
use isoquad::grid::Lattice;
use isoquad::quadrics::{Family, Quadric, QuadricSpec};
use isoquad::verify::{conjugacy_check, membership_check, orthogonality_check};

fn main() -> isoquad::Result<()> {
    let spec = QuadricSpec::new(Family::Ellipsoid, 1.5, 1.0, 0.7, Metric::Euclidean)?;
    let q = Quadric::new(spec)?;
    let m = q.moduli();
    println!("moduli p = {:.6}, q = {:.6}, r = {:.6}", m.p.re, m.q.re, m.r.re);

    let k = q.p_modulus().real_quarter_period()?;
    let kq = q.q_modulus().real_quarter_period()?;
    // One octant: u from 0 to K_p, v from 0 to K_q.
    let grid = q.grid(Lattice::from_ranges(0.0, k, 24, 0.0, kq, 24)?);
    let jets: Vec<_> = grid.valid_jets().copied().collect();
    for r in [
        membership_check(&jets, &spec, 1e-10, grid.masked_count()),
        orthogonality_check(&jets, Metric::Euclidean, 1e-8, grid.masked_count()),
        conjugacy_check(&jets, 1e-6, grid.masked_count()),
    ] {
        println!("{}", r.summary());
    }

    let path = std::env::temp_dir().join("isoquad_ellipsoid.obj");
    write_atomic(&path, obj_string(&grid).as_bytes())?;
    println!("wrote {}", path.display());
    Ok(())
}
