//! Lorentz numbers and the analytic extension of real functions to them.

use isoquad::elliptic::EllipticModulus;
use isoquad::lelliptic::{hypihyp_residual, l_jacobi, y_hyp1};
use isoquad::paracomplex::{l_extend, para_derivative, Interval, Lorentz};

fn main() -> isoquad::Result<()> {
    let a = Lorentz::new(3.0, 2.0);
    let (bar, m) = a.conj_and_modulus();
    println!("a = {a}, conj = {bar}, ‖a‖² = {m}, a·conj = {}", a * bar);
    println!("j² = {}", Lorentz::J * Lorentz::J);
    match Lorentz::ONE.checked_div(Lorentz::new(1.0, 1.0)) {
        Ok(x) => println!("1/(1+j) = {x}"),
        Err(e) => println!("1/(1+j): {e}"),
    }

    // exp extends to e^u (cosh v + j sinh v).
    let z = Lorentz::new(0.4, 0.25);
    let e = l_extend(f64::exp, Interval::REAL_LINE, z)?;
    println!("exp({z}) = {e}");

    let q = EllipticModulus::real(0.7)?;
    let lj = l_jacobi(z, &q)?;
    println!("sn({z}) = {}, sn² + cn² = {}", lj.sn, lj.sn * lj.sn + lj.cn * lj.cn);

    let y = y_hyp1(z, &q)?;
    let dy = para_derivative(|w| y_hyp1(w, &q), z, 1e-5)?;
    println!("y({z}) = {y}, ODE residual {}", hypihyp_residual(y, dy, &q));
    Ok(())
}
