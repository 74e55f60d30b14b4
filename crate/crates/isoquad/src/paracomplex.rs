//! Lorentz numbers (para-complex numbers) `u + j v` with `j² = 1`.
//!
//! The algebra splits as a direct product of two copies of the reals through
//! the idempotents `e± = (1 ± j)/2`: the number `u + jv` has idempotent
//! components `u + v` and `u − v`, and multiplication acts componentwise on
//! them. That splitting is what makes the analytic extension of a real
//! function exact: apply the function to each idempotent component.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Relative gate for light-cone detection: `‖b‖²` counts as zero when it is
/// below this multiple of `b₁² + b₂²`.
pub const LIGHT_CONE_TOL: f64 = 1e-13;

/// A Lorentz number `re + j·im`.
#[derive(Debug, Clone, Copy, PartialEq, Default, serde::Serialize, serde::Deserialize)]
pub struct Lorentz {
    pub re: f64,
    pub im: f64,
}

impl Lorentz {
    pub const ZERO: Lorentz = Lorentz { re: 0.0, im: 0.0 };
    pub const ONE: Lorentz = Lorentz { re: 1.0, im: 0.0 };
    pub const J: Lorentz = Lorentz { re: 0.0, im: 1.0 };

    pub const fn new(re: f64, im: f64) -> Self {
        Lorentz { re, im }
    }

    pub const fn real(re: f64) -> Self {
        Lorentz { re, im: 0.0 }
    }

    /// Builds the number whose idempotent components are `plus` (coefficient
    /// of `(1+j)/2`) and `minus` (coefficient of `(1−j)/2`).
    pub fn from_idempotent(plus: f64, minus: f64) -> Self {
        Lorentz {
            re: 0.5 * (plus + minus),
            im: 0.5 * (plus - minus),
        }
    }

    /// The idempotent components `(re + im, re − im)`.
    pub fn idempotent(self) -> (f64, f64) {
        (self.re + self.im, self.re - self.im)
    }

    pub fn conj(self) -> Self {
        Lorentz {
            re: self.re,
            im: -self.im,
        }
    }

    /// Squared modulus `re² − im²`, which may be negative or zero.
    pub fn norm_sqr(self) -> f64 {
        let (p, m) = self.idempotent();
        p * m
    }

    /// Conjugate and squared modulus in one call.
    pub fn conj_and_modulus(self) -> (Lorentz, f64) {
        (self.conj(), self.norm_sqr())
    }

    pub fn scale(self, s: f64) -> Self {
        Lorentz {
            re: s * self.re,
            im: s * self.im,
        }
    }

    /// True when the number lies on the light cone within [`LIGHT_CONE_TOL`].
    pub fn is_null(self) -> bool {
        let n = self.norm_sqr();
        n.abs() <= LIGHT_CONE_TOL * (self.re * self.re + self.im * self.im)
    }

    /// Multiplicative inverse, or `NullDivisor` on the light cone.
    pub fn inv(self) -> Result<Lorentz> {
        if self.is_null() {
            return Err(Error::NullDivisor(self.norm_sqr()));
        }
        let (p, m) = self.idempotent();
        Ok(Lorentz::from_idempotent(1.0 / p, 1.0 / m))
    }

    /// `self / rhs`, or `NullDivisor` when `rhs` lies on the light cone.
    pub fn checked_div(self, rhs: Lorentz) -> Result<Lorentz> {
        Ok(self * rhs.inv()?)
    }

    /// Applies a real function to both idempotent components without a
    /// domain check. See [`l_extend`] for the checked version.
    pub fn map(self, f: impl Fn(f64) -> f64) -> Lorentz {
        let (p, m) = self.idempotent();
        Lorentz::from_idempotent(f(p), f(m))
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

impl fmt::Display for Lorentz {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im < 0.0 { '-' } else { '+' };
        match f.precision() {
            Some(p) => write!(f, "{:.*}{sign}{:.*}j", p, self.re, p, self.im.abs()),
            None => write!(f, "{}{sign}{}j", self.re, self.im.abs()),
        }
    }
}

impl From<f64> for Lorentz {
    fn from(re: f64) -> Self {
        Lorentz::real(re)
    }
}

impl Add for Lorentz {
    type Output = Lorentz;
    fn add(self, rhs: Lorentz) -> Lorentz {
        Lorentz::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for Lorentz {
    type Output = Lorentz;
    fn sub(self, rhs: Lorentz) -> Lorentz {
        Lorentz::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Neg for Lorentz {
    type Output = Lorentz;
    fn neg(self) -> Lorentz {
        Lorentz::new(-self.re, -self.im)
    }
}

impl Mul for Lorentz {
    type Output = Lorentz;
    fn mul(self, rhs: Lorentz) -> Lorentz {
        Lorentz::new(
            self.re * rhs.re + self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Mul<f64> for Lorentz {
    type Output = Lorentz;
    fn mul(self, rhs: f64) -> Lorentz {
        self.scale(rhs)
    }
}

/// A closed real interval, possibly unbounded, used as the validity domain of
/// a function handed to [`l_extend`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub const REAL_LINE: Interval = Interval {
        lo: f64::NEG_INFINITY,
        hi: f64::INFINITY,
    };

    pub fn new(lo: f64, hi: f64) -> Self {
        Interval { lo, hi }
    }

    pub fn contains(&self, t: f64) -> bool {
        t >= self.lo && t <= self.hi
    }
}

/// The Lorentz-analytic extension of a real function:
/// `f(u+v)·(1+j)/2 + f(u−v)·(1−j)/2`.
///
/// ```
/// use isoquad::paracomplex::{l_extend, Interval, Lorentz};
/// let z = Lorentz::new(0.3, 0.2);
/// let e = l_extend(f64::exp, Interval::REAL_LINE, z).unwrap();
/// assert!((e.re - 0.3f64.exp() * 0.2f64.cosh()).abs() < 1e-15);
/// assert!((e.im - 0.3f64.exp() * 0.2f64.sinh()).abs() < 1e-15);
/// ```
pub fn l_extend(f: impl Fn(f64) -> f64, domain: Interval, z: Lorentz) -> Result<Lorentz> {
    let (p, m) = z.idempotent();
    for t in [p, m] {
        if !domain.contains(t) {
            return Err(Error::Domain(format!(
                "idempotent component {t} outside [{}, {}]",
                domain.lo, domain.hi
            )));
        }
    }
    Ok(Lorentz::from_idempotent(f(p), f(m)))
}

/// Para-complex derivative `½(∂/∂u + j ∂/∂v)` of a Lorentz-valued function by
/// central differences with step `h`.
pub fn para_derivative(f: impl Fn(Lorentz) -> Result<Lorentz>, z: Lorentz, h: f64) -> Result<Lorentz> {
    let fu = (f(z + Lorentz::real(h))? - f(z - Lorentz::real(h))?).scale(0.5 / h);
    let fv = (f(z + Lorentz::new(0.0, h))? - f(z - Lorentz::new(0.0, h))?).scale(0.5 / h);
    Ok((fu + Lorentz::J * fv).scale(0.5))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j_squared_is_one() {
        assert_eq!(Lorentz::J * Lorentz::J, Lorentz::ONE);
    }

    #[test]
    fn idempotents() {
        let e = Lorentz::new(0.5, 0.5);
        assert_eq!(e * e, e);
        let f = Lorentz::new(0.5, -0.5);
        assert_eq!(e * f, Lorentz::ZERO);
        assert_eq!(Lorentz::new(1.0, 1.0) * Lorentz::new(1.0, -1.0), Lorentz::ZERO);
    }

    #[test]
    fn modulus_examples() {
        assert_eq!(Lorentz::ONE.conj_and_modulus(), (Lorentz::ONE, 1.0));
        assert_eq!(
            Lorentz::new(1.0, 1.0).conj_and_modulus(),
            (Lorentz::new(1.0, -1.0), 0.0)
        );
        assert_eq!(
            Lorentz::new(3.0, 2.0).conj_and_modulus(),
            (Lorentz::new(3.0, -2.0), 5.0)
        );
    }

    #[test]
    fn division() {
        let a = Lorentz::new(2.5, -0.7);
        assert_eq!(a.checked_div(Lorentz::ONE).unwrap(), a);
        assert_eq!(Lorentz::ONE.checked_div(Lorentz::J).unwrap(), Lorentz::J);
        assert!(matches!(
            a.checked_div(Lorentz::new(1.0, 1.0)),
            Err(Error::NullDivisor(_))
        ));
    }

    #[test]
    fn extension_of_identity_and_restriction() {
        let z = Lorentz::new(0.25, -1.5);
        assert_eq!(l_extend(|t| t, Interval::REAL_LINE, z).unwrap(), z);
        let r = l_extend(f64::sin, Interval::REAL_LINE, Lorentz::real(0.7)).unwrap();
        assert_eq!(r, Lorentz::real(0.7f64.sin()));
    }

    #[test]
    fn extension_respects_domain() {
        let z = Lorentz::new(0.5, 0.6);
        let err = l_extend(f64::ln, Interval::new(0.0, f64::INFINITY), z);
        assert!(matches!(err, Err(Error::Domain(_))));
    }

    #[test]
    fn para_derivative_of_square() {
        let z = Lorentz::new(0.4, 0.9);
        let d = para_derivative(|w| Ok(w * w), z, 1e-5).unwrap();
        let want = z.scale(2.0);
        assert!((d.re - want.re).abs() < 1e-9 && (d.im - want.im).abs() < 1e-9);
    }
}
