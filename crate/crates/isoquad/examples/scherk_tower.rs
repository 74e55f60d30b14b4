//! The Christoffel dual of an ellipsoid is an affine image of a Scherk
//! tower. Checks the implicit equation and the arctan period along `v`.

use isoquad::duals::{implicit_residual, ClosedDual, ImplicitForm};
use isoquad::geometry::{Metric, Vec3};
use isoquad::quadrics::{Family, Quadric, QuadricSpec};

fn main() -> isoquad::Result<()> {
    let q = Quadric::new(QuadricSpec::new(Family::Ellipsoid, 1.5, 1.0, 0.7, Metric::Euclidean)?)?;
    let dual = ClosedDual::new(q);
    let [a, b, c] = q.spec().axes();
    println!("periods of the dual components: {:?}", dual.periods());

    let mut worst = 0.0f64;
    for k in 0..50 {
        let (u, v) = (0.05 + 0.03 * k as f64, 0.1 + 0.02 * k as f64);
        let Ok(x) = dual.point(u, v) else { continue };
        let unit = Vec3::new(x.x / a, x.y / b, x.z / c);
        worst = worst.max(implicit_residual(ImplicitForm::Scherk, q.moduli(), &unit)?.relative());
    }
    println!("worst implicit residual over 50 points: {worst:.2e}");

    let x = q.jet(0.4, 0.3)?;
    let xs = dual.jet(0.4, 0.3, 1e-4, 4)?;
    let rho = xs.x_u.dot(&x.x_u) / x.x_u.norm_squared();
    println!("ρ at (0.4, 0.3) = {rho:.6}");
    println!("|x*_u − ρ x_u| = {:.1e}", (xs.x_u - rho * x.x_u).norm());
    println!("|x*_v + ρ x_v| = {:.1e}", (xs.x_v + rho * x.x_v).norm());
    Ok(())
}
