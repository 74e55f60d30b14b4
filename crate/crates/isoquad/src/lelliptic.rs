//! Lorentz-Jacobi functions: the Lorentz-analytic extensions of the real
//! Jacobi functions, plus the para-holomorphic solution that parametrizes the
//! 1-sheeted hyperboloid.

use crate::elliptic::{EllipticModulus, JacobiQuadruple};
use crate::error::{Error, Result};
use crate::paracomplex::Lorentz;

/// Denominator magnitude below which [`y_hyp1`] reports a pole.
pub const Y_HYP1_POLE_TOL: f64 = 1e-9;

/// `sn, cn, dn, am` extended to a Lorentz argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LJacobiQuadruple {
    pub sn: Lorentz,
    pub cn: Lorentz,
    pub dn: Lorentz,
    pub am: Lorentz,
}

/// Evaluates the Lorentz-Jacobi functions at `z = u + jv` from two real
/// evaluations at the idempotent components `u ± v`.
///
/// Works for every modulus case since the real functions are real on the
/// real line in all three.
///
/// ```
/// use isoquad::elliptic::EllipticModulus;
/// use isoquad::lelliptic::l_jacobi;
/// use isoquad::paracomplex::Lorentz;
/// let m = EllipticModulus::real(0.5).unwrap();
/// let j = l_jacobi(Lorentz::new(0.4, 0.4), &m).unwrap();
/// let s = m.jacobi(0.8).unwrap().sn;
/// assert!((j.sn.re - s / 2.0).abs() < 1e-15 && (j.sn.im - s / 2.0).abs() < 1e-15);
/// ```
pub fn l_jacobi(z: Lorentz, m: &EllipticModulus) -> Result<LJacobiQuadruple> {
    let (plus, minus) = z.idempotent();
    let a = m.jacobi(plus)?;
    let b = m.jacobi(minus)?;
    Ok(combine(&a, &b))
}

fn combine(a: &JacobiQuadruple<f64>, b: &JacobiQuadruple<f64>) -> LJacobiQuadruple {
    LJacobiQuadruple {
        sn: Lorentz::from_idempotent(a.sn, b.sn),
        cn: Lorentz::from_idempotent(a.cn, b.cn),
        dn: Lorentz::from_idempotent(a.dn, b.dn),
        am: Lorentz::from_idempotent(a.am, b.am),
    }
}

/// The para-holomorphic solution
/// `y(u+jv) = (cn_q u − j sn_q v dn_q u) / (cn_q v + sn_q u dn_q v)`
/// of `y'² = ¼{p²(1+y⁴) + 2(1+q²)y²}`, where `q` is the modulus of the
/// Jacobi functions and `p² = 1 − q²`.
///
/// On the real line it reduces to `cn_q u / (1 + sn_q u)`.
pub fn y_hyp1(z: Lorentz, q: &EllipticModulus) -> Result<Lorentz> {
    let a = q.jacobi(z.re)?;
    let b = q.jacobi(z.im)?;
    let den = b.cn + a.sn * b.dn;
    if den.abs() < Y_HYP1_POLE_TOL {
        return Err(Error::Pole(format!("y_hyp1 denominator vanishes at {z}")));
    }
    Ok(Lorentz::new(a.cn / den, -b.sn * a.dn / den))
}

/// Residual `y'² − ¼{p²(1+y⁴) + 2(1+q²)y²}` of the ODE solved by [`y_hyp1`],
/// with `q` the modulus of the Jacobi functions.
pub fn hypihyp_residual(y: Lorentz, dy: Lorentz, q: &EllipticModulus) -> Lorentz {
    let q2 = q.parameter();
    let p2 = 1.0 - q2;
    let y2 = y * y;
    let rhs = ((Lorentz::ONE + y2 * y2).scale(p2) + y2.scale(2.0 * (1.0 + q2))).scale(0.25);
    dy * dy - rhs
}
