//! A sphere written as a surface of revolution, `r = sech u`, `h = tanh u`,
//! has the catenoid as its Christoffel dual.

use isoquad::duals::PairMode;
use isoquad::geometry::ParamKind;
use isoquad::quadrics::revolution_pair;
use isoquad::verify::{fd_jet, pair_residual};

fn main() -> isoquad::Result<()> {
    let r = |u: f64| 1.0 / u.cosh();
    let h = |u: f64| u.tanh();
    let primal = |u: f64, v: f64| Ok(revolution_pair(&r, &h, 0.0, u, v)?.0);
    let dual = |u: f64, v: f64| Ok(revolution_pair(&r, &h, 0.0, u, v)?.1);
    for u in [-1.0, -0.3, 0.5, 1.2] {
        let x = fd_jet(&primal, u, 0.8, 1e-3, 4, ParamKind::Complex)?;
        let xs = fd_jet(&dual, u, 0.8, 1e-3, 4, ParamKind::Complex)?;
        // On a catenoid the radius is cosh of the height.
        let radius = (xs.x.x * xs.x.x + xs.x.y * xs.x.y).sqrt();
        println!(
            "u = {u:5.2}: height {:.8}, radius − cosh(height) = {:.1e}, pair residual {:.1e}",
            xs.x.z,
            radius - xs.x.z.cosh(),
            pair_residual(&x, &xs, PairMode::Spacelike)
        );
    }
    Ok(())
}
