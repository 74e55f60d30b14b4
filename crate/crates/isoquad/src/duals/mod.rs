//! Christoffel duals of the quadrics.
//!
//! The closed forms are finite sums of `Re(coef · f(w))` with `f` the
//! principal `arctan` or `artanh`. Crossing a branch cut shifts a component
//! by a whole period, so every evaluator also reports its periods, and grids
//! are unwrapped against them.

mod implicit;
mod numeric;
mod weierstrass;

pub use implicit::{implicit_residual, ImplicitForm, ImplicitResidual};
pub use numeric::{christoffel_numeric, NumericDual, REFINEMENT_FLAG};
pub use weierstrass::{
    derivative_identities, weierstrass_antiderivatives, weierstrass_integrands, Algebra, IdentityCheck,
};

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::{Metric, SurfaceJet, Vec3};
use crate::grid::{Lattice, SurfaceGrid};
use crate::paracomplex::Lorentz;
use crate::quadrics::{Family, ModuliTriple, Quadric};
use crate::verify::fd_jet;

/// Clearance below which a pointwise dual evaluation reports a pole.
pub const DUAL_POLE_TOL: f64 = 1e-9;

/// How the tangents of a Christoffel pair are related.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum PairMode {
    /// `x*_u = ρ x_u`, `x*_v = −ρ x_v` with `ρ > 0`.
    Spacelike,
    /// `x*_u = ρ_u x_u`, `x*_v = ρ_v x_v` with `ρ_v = −ρ_u`, where `ρ_u`
    /// may change sign.
    Timelike,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Func {
    Arctan,
    Artanh,
    /// `atan2(num, den)` for real `num`, `den`: the branch of
    /// `arctan(num/den)` that stays continuous where `den` changes sign.
    Atan2,
    /// `½ ln |(den + num)/(den − num)|` for real `num`, `den`: the real part
    /// of `artanh(num/den)`, written so that `den = 0` is a regular point.
    LogRatio,
}

impl Func {
    fn eval(self, w: Complex64) -> Complex64 {
        match self {
            Func::Arctan => w.atan(),
            Func::Artanh => w.atanh(),
            Func::Atan2 | Func::LogRatio => {
                unreachable!("real-argument terms are evaluated from num and den")
            }
        }
    }

    /// Jump of the principal branch across its cut.
    fn jump(self) -> Complex64 {
        match self {
            Func::Arctan => Complex64::new(PI, 0.0),
            Func::Artanh => Complex64::new(0.0, PI),
            Func::Atan2 => Complex64::new(2.0 * PI, 0.0),
            Func::LogRatio => Complex64::new(0.0, 0.0),
        }
    }

    /// Distance from `w` to the logarithmic singularities.
    fn clearance(self, w: Complex64) -> f64 {
        let s = match self {
            Func::Arctan => Complex64::i(),
            Func::Artanh => Complex64::new(1.0, 0.0),
            Func::Atan2 | Func::LogRatio => return f64::INFINITY,
        };
        (w - s).norm().min((w + s).norm())
    }
}

/// One term `coef · f(num / den)`.
#[derive(Debug, Clone, Copy)]
struct Term {
    coef: Complex64,
    func: Func,
    num: Complex64,
    den: Complex64,
}

impl Term {
    fn eval(&self) -> (f64, f64) {
        let (n, d) = (self.num.re, self.den.re);
        match self.func {
            Func::Atan2 => return (self.coef.re * n.atan2(d), f64::INFINITY),
            Func::LogRatio => {
                let clear = (d + n).abs().min((d - n).abs());
                return (self.coef.re * 0.5 * ((d + n) / (d - n)).abs().ln(), clear);
            }
            _ => {}
        }
        let w = self.num / self.den;
        let clear = self.den.norm().min(self.func.clearance(w));
        ((self.coef * self.func.eval(w)).re, clear)
    }

    fn period(coef: Complex64, func: Func) -> f64 {
        (coef * func.jump()).re.abs()
    }
}

/// The closed-form Christoffel dual of a quadric.
///
/// * ellipsoid (Euclidean or Minkowski): a Scherk tower,
/// * 2-sheeted hyperboloid: a maximal surface (Minkowski) or its Euclidean
///   counterpart,
/// * 1-sheeted hyperboloid: a timelike minimal surface, evaluated through
///   the Lorentz-Jacobi functions of modulus `q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedDual {
    quadric: Quadric,
}

impl ClosedDual {
    pub fn new(quadric: Quadric) -> Self {
        ClosedDual { quadric }
    }

    pub fn quadric(&self) -> &Quadric {
        &self.quadric
    }

    /// Spacelike for the ellipsoid and the 2-sheeted hyperboloid, timelike
    /// for the 1-sheeted hyperboloid.
    pub fn pair_mode(&self) -> PairMode {
        match self.quadric.spec().family {
            Family::Hyperboloid1Sheet => PairMode::Timelike,
            _ => PairMode::Spacelike,
        }
    }

    fn coefs(&self) -> [(Complex64, Func); 3] {
        let m = self.quadric.moduli();
        let [a, b, c] = self.quadric.spec().axes();
        let (p, q) = (m.p, m.q);
        let two = Complex64::new(2.0, 0.0);
        match self.quadric.spec().family {
            Family::Ellipsoid => [
                (two * a / p, Func::Artanh),
                (two * b / (p * q), Func::Arctan),
                (-two * c / q, Func::Artanh),
            ],
            Family::Hyperboloid2Sheet => [
                (two * a / p, Func::Arctan),
                (two * b / (p * q), Func::Artanh),
                (two * c / q, Func::Artanh),
            ],
            Family::Hyperboloid1Sheet => [
                if p.im == 0.0 {
                    (-two * a / p, Func::Atan2)
                } else {
                    // p = iP turns −(2a/p)·arctan(c/(p s)) into (2a/P)·artanh(c/(P s))
                    (two * a / p.im, Func::LogRatio)
                },
                (two * b / (p * q), Func::Arctan),
                (two * c / q, Func::Artanh),
            ],
        }
    }

    /// Translational periods of the three components; 0 for a component
    /// without one.
    pub fn periods(&self) -> [f64; 3] {
        let half = if self.pair_mode() == PairMode::Timelike { 0.5 } else { 1.0 };
        self.coefs().map(|(coef, func)| half * Term::period(coef, func))
    }

    /// Terms at a complex point (ellipsoid and 2-sheeted hyperboloid).
    fn complex_terms(&self, z: Complex64) -> Result<[Term; 3]> {
        let m = self.quadric.moduli();
        let (s, c, _) = self.quadric.p_modulus().sncndn(z)?;
        let (p, q) = (m.p, m.q);
        let i = Complex64::i();
        let one = Complex64::new(1.0, 0.0);
        let [k1, k2, k3] = self.coefs();
        let t = |(coef, func): (Complex64, Func), num, den| Term { coef, func, num, den };
        Ok(match self.quadric.spec().family {
            Family::Ellipsoid => [t(k1, one, p * s), t(k2, q, p * c), t(k3, -i * q * s, c)],
            _ => [t(k1, one, i * p * s), t(k2, q, i * p * c), t(k3, -i * q * s, c)],
        })
    }

    /// Terms at one real idempotent component (1-sheeted hyperboloid).
    fn real_terms(&self, t: f64) -> Result<[Term; 3]> {
        let m = self.quadric.moduli();
        let j = self.quadric.q_modulus().jacobi(t)?;
        let (p, q) = (m.p, m.q);
        let (s, c) = (Complex64::new(j.sn, 0.0), Complex64::new(j.cn, 0.0));
        let one = Complex64::new(1.0, 0.0);
        let [k1, k2, k3] = self.coefs();
        let mk = |(coef, func): (Complex64, Func), num, den| Term { coef, func, num, den };
        let d1 = if k1.1 == Func::LogRatio { p.im * s } else { p * s };
        Ok([mk(k1, c, d1), mk(k2, q * c, p), mk(k3, q * s, one)])
    }

    /// Dual point and its clearance from the formula's singularities.
    pub fn point_with_clearance(&self, u: f64, v: f64) -> Result<(Vec3, f64)> {
        match self.quadric.spec().family {
            Family::Hyperboloid1Sheet => {
                let (alpha, beta) = Lorentz::new(u, v).idempotent();
                let ta = self.real_terms(alpha)?.map(|t| t.eval());
                let tb = self.real_terms(beta)?.map(|t| t.eval());
                let sign = [1.0, -1.0, 1.0];
                let mut x = Vec3::zeros();
                let mut clear = f64::INFINITY;
                for k in 0..3 {
                    x[k] = 0.5 * (ta[k].0 + sign[k] * tb[k].0);
                    clear = clear.min(ta[k].1).min(tb[k].1);
                }
                Ok((x, clear))
            }
            _ => {
                let terms = self.complex_terms(Complex64::new(u, v))?.map(|t| t.eval());
                let clear = terms.iter().map(|t| t.1).fold(f64::INFINITY, f64::min);
                Ok((Vec3::new(terms[0].0, terms[1].0, terms[2].0), clear))
            }
        }
    }

    /// Dual point at `(u, v)` on the principal branches.
    pub fn point(&self, u: f64, v: f64) -> Result<Vec3> {
        let (x, clear) = self.point_with_clearance(u, v)?;
        if clear < DUAL_POLE_TOL || !x.iter().all(|c| c.is_finite()) {
            return Err(Error::Pole(format!("dual formula is singular at ({u}, {v})")));
        }
        Ok(x)
    }

    /// Finite-difference jet of the dual. Every stencil value is moved to
    /// the branch nearest the centre value first.
    pub fn jet(&self, u: f64, v: f64, step: f64, order: u8) -> Result<SurfaceJet> {
        let centre = self.point(u, v)?;
        let periods = self.periods();
        let sampler = |s: f64, t: f64| -> Result<Vec3> {
            let x = self.point(s, t)?;
            Ok(nearest_branch(x, &centre, periods))
        };
        fd_jet(&sampler, u, v, step, order, self.quadric.param_kind())
    }

    /// Samples the dual on a lattice, masks nodes within
    /// [`crate::grid::GRID_MASK_TOL`] of a singularity and unwraps the
    /// periodic components.
    pub fn grid(&self, lattice: Lattice, step: f64, order: u8, ambient: Option<Metric>) -> SurfaceGrid {
        let mut g = SurfaceGrid::sample(
            lattice,
            ambient,
            |u, v| self.jet(u, v, step, order),
            |u, v| self.point_with_clearance(u, v).map(|(_, c)| c),
        );
        g.unwrap_periods(self.periods());
        g
    }
}

fn nearest_branch(mut x: Vec3, target: &Vec3, periods: [f64; 3]) -> Vec3 {
    for k in 0..3 {
        if periods[k] > 0.0 {
            x[k] += ((target[k] - x[k]) / periods[k]).round() * periods[k];
        }
    }
    x
}

fn dual_of(m: &ModuliTriple, family: Family) -> Result<ClosedDual> {
    if m.family != family {
        return Err(Error::CaseMismatch(format!(
            "moduli belong to {}, not {}",
            m.family.name(),
            family.name()
        )));
    }
    Ok(ClosedDual::new(Quadric::from_moduli(m)?))
}

/// The Scherk tower with unit axes,
/// `(2/pq) Re(q artanh(1/(p sn)), arctan(q/(p cn)), −p artanh((q/i) sn/cn))`,
/// the dual of the unit-axes ellipsoid of modulus `p ∈ (0, 1)`.
///
/// ```
/// use isoquad::duals::scherk_tower;
/// use num_complex::Complex64;
/// let x = scherk_tower(Complex64::new(0.4, 0.3), 0.6).unwrap();
/// let (p, q) = (0.6f64, 0.8f64);
/// let r = q * q * (p * x.x).cosh() + (p * q * x.y).cos() - p * p * (q * x.z).cosh();
/// assert!(r.abs() < 1e-12);
/// ```
pub fn scherk_tower(z: Complex64, p: f64) -> Result<Vec3> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Domain(format!("Scherk tower needs p in (0, 1), got {p}")));
    }
    let m = crate::elliptic::EllipticModulus::real(p)?;
    let (s, c, _) = m.sncndn(z)?;
    let q = (1.0 - p * p).sqrt();
    let i = Complex64::i();
    let k = 2.0 / (p * q);
    let x1 = k * q * (1.0 / (p * s)).atanh().re;
    let x2 = k * (q / (p * c)).atan().re;
    let x3 = -k * p * (-i * q * s / c).atanh().re;
    let x = Vec3::new(x1, x2, x3);
    if !x.iter().all(|t| t.is_finite()) || s.norm() < DUAL_POLE_TOL || c.norm() < DUAL_POLE_TOL {
        return Err(Error::Pole(format!("Scherk tower is singular at {z}")));
    }
    Ok(x)
}

/// Dual of the ellipsoid with moduli `m` at `z = u + iv`.
pub fn ellipsoid_dual(z: Complex64, m: &ModuliTriple) -> Result<Vec3> {
    dual_of(m, Family::Ellipsoid)?.point(z.re, z.im)
}

/// Dual of the 2-sheeted hyperboloid with moduli `m` at `z = u + iv`.
pub fn hyp2_dual(z: Complex64, m: &ModuliTriple) -> Result<Vec3> {
    dual_of(m, Family::Hyperboloid2Sheet)?.point(z.re, z.im)
}

/// Dual of the 1-sheeted hyperboloid with moduli `m` at `z = u + jv`.
pub fn hyp1_dual(z: Lorentz, m: &ModuliTriple) -> Result<Vec3> {
    dual_of(m, Family::Hyperboloid1Sheet)?.point(z.re, z.im)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrics::QuadricSpec;

    fn dual(family: Family, a: f64, b: f64, c: f64, metric: Metric) -> ClosedDual {
        ClosedDual::new(Quadric::new(QuadricSpec::new(family, a, b, c, metric).unwrap()).unwrap())
    }

    fn ratios(d: &ClosedDual, u: f64, v: f64) -> (Vec3, Vec3) {
        let x = d.quadric().jet(u, v).unwrap();
        let xs = d.jet(u, v, 1e-4, 4).unwrap();
        (xs.x_u.component_div(&x.x_u), xs.x_v.component_div(&x.x_v))
    }

    #[test]
    fn ellipsoid_pair_is_spacelike() {
        let d = dual(Family::Ellipsoid, 1.5, 1.0, 0.7, Metric::Euclidean);
        let (ru, rv) = ratios(&d, 0.4, 0.3);
        assert!(ru.x > 0.0);
        for k in 0..3 {
            assert!((ru[k] - ru.x).abs() < 1e-6 * ru.x, "{ru:?}");
            assert!((rv[k] + ru.x).abs() < 1e-6 * ru.x, "{rv:?}");
        }
    }

    #[test]
    fn hyp1_pair_is_timelike() {
        let d = dual(Family::Hyperboloid1Sheet, 1.5, 1.0, 0.6, Metric::MinkowskiX);
        let (ru, rv) = ratios(&d, 0.7, 0.1);
        for k in 0..3 {
            assert!((ru[k] - ru.x).abs() < 1e-6 * ru.x.abs(), "{ru:?}");
            assert!((rv[k] + ru.x).abs() < 1e-6 * ru.x.abs(), "{rv:?}");
        }
    }

    #[test]
    fn scherk_matches_unit_ellipsoid_dual() {
        let p = 0.6f64;
        let m = ModuliTriple::new(
            Complex64::new(p, 0.0),
            Complex64::new(0.0, 0.0),
            Family::Ellipsoid,
            Metric::Euclidean,
        )
        .unwrap();
        let z = Complex64::new(0.3, 0.45);
        let a = scherk_tower(z, p).unwrap();
        let b = ellipsoid_dual(z, &m).unwrap();
        assert!((a - b).norm() < 1e-13);
    }

    #[test]
    fn scherk_period() {
        let d = dual(Family::Ellipsoid, 1.5, 1.0, 0.7, Metric::Euclidean);
        let per = d.periods();
        assert_eq!(per[0], 0.0);
        assert_eq!(per[2], 0.0);
        let m = d.quadric().moduli();
        assert!((per[1] - 2.0 * PI / (m.p * m.q).re).abs() < 1e-12);
    }
}
