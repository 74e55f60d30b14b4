//! Quadrics and their duals in elliptic coordinates, an independent check on
//! the Jacobi-function formulas.

use isoquad::reinbek::{reinbek_pair, tangent_parallelism, ConfocalFamily, EllipticCoordinates};

fn main() -> isoquad::Result<()> {
    let samples = [
        (ConfocalFamily::Ellipsoid, (3.0, 1.5), (2.0, 1.5, 1.0)),
        (ConfocalFamily::OneSheet, (3.0, -2.0), (2.0, 1.5, 1.0)),
        (ConfocalFamily::TwoSheet, (-1.8, -3.0), (2.0, 1.0, 1.5)),
    ];
    for (family, (t1, t2), (a, b, c)) in samples {
        let e = EllipticCoordinates::new(family, t1, t2, a, b, c)?;
        let (x, xs) = reinbek_pair(&e)?;
        println!("{family:?} at t = ({t1}, {t2}):");
        println!("  x  = ({:.6}, {:.6}, {:.6}), residual {:.1e}", x.x, x.y, x.z, e.membership_residual(&x));
        println!("  x* = ({:.6}, {:.6}, {:.6})", xs.x, xs.y, xs.z);
        println!("  tangent angle sine {:.1e}", tangent_parallelism(&e, 1e-6)?);
    }
    if let Err(e) = EllipticCoordinates::new(ConfocalFamily::Ellipsoid, 2.25, 1.5, 2.0, 1.5, 1.0) {
        println!("t1 = b²: {e}");
    }
    Ok(())
}
