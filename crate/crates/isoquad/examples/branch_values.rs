//! Branch values of the parametrizing function `y`: the images of the
//! umbilics, where the curvature-line net becomes singular.

use isoquad::geometry::Metric;
use isoquad::paracomplex::Lorentz;
use isoquad::quadrics::{umbilic_branch_values, Family, QuadricSpec, Scalar};

fn main() -> isoquad::Result<()> {
    let cases = [
        (Family::Ellipsoid, [1.5, 1.0, 0.7], Metric::Euclidean),
        (Family::Ellipsoid, [1.5, 1.0, 1.5], Metric::Euclidean),
        (Family::Ellipsoid, [1.5, 1.0, 0.7], Metric::MinkowskiZ),
        (Family::Hyperboloid2Sheet, [1.5, 1.0, 0.8], Metric::MinkowskiZ),
        (Family::Hyperboloid1Sheet, [1.0, 0.6, 1.5], Metric::MinkowskiX),
    ];
    for (family, [a, b, c], ambient) in cases {
        let census = umbilic_branch_values(&QuadricSpec::new(family, a, b, c, ambient)?)?;
        println!("{} ({a}, {b}, {c}) in {ambient:?}:", family.name());
        if census.no_umbilics {
            println!("  no umbilics");
        }
        for v in &census.values {
            let value = match v.value {
                Scalar::Complex(z) => format!("{:.6}", z + 0.0),
                Scalar::Lorentz(y) => format!("{:.6}, ‖y‖² = {:.6}", y + Lorentz::ZERO, y.norm_sqr()),
            };
            println!("  {:<9} {value}", format!("{:?}", v.class));
        }
    }
    Ok(())
}
