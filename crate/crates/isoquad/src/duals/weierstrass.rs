//! Weierstrass-type antiderivatives of the dual surfaces and the derivative
//! identities behind them, over complex or Lorentz numbers.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::paracomplex::{l_extend, Interval, Lorentz};
use crate::quadrics::Family;

/// The scalar operations the identities need, implemented for `ℂ` and `𝕃`.
pub trait Algebra: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self> {
    fn from_real(x: f64) -> Self;
    /// The imaginary unit of the algebra (`i` or `j`).
    fn unit() -> Self;
    fn try_div(self, rhs: Self) -> Result<Self>;
    fn arctan(self) -> Result<Self>;
    /// Inverse hyperbolic tangent. On `𝕃` each idempotent component uses
    /// `½ ln|(1 + t)/(1 − t)|`, the real branch valid on both sides of ±1.
    fn artanh(self) -> Result<Self>;
    fn dist(self, other: Self) -> f64;
    /// Moves `self` by a whole branch jump of `f` toward `centre`.
    fn unwrap_toward(self, centre: Self, artanh: bool) -> Self;
}

impl Algebra for Complex64 {
    fn from_real(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn unit() -> Self {
        Complex64::i()
    }
    fn try_div(self, rhs: Self) -> Result<Self> {
        if rhs.norm() < 1e-300 {
            return Err(Error::Pole(format!("division by {rhs}")));
        }
        Ok(self / rhs)
    }
    fn arctan(self) -> Result<Self> {
        if (self - Complex64::i()).norm() < 1e-12 || (self + Complex64::i()).norm() < 1e-12 {
            return Err(Error::Pole(format!("arctan singular at {self}")));
        }
        Ok(self.atan())
    }
    fn artanh(self) -> Result<Self> {
        if (self - 1.0).norm() < 1e-12 || (self + 1.0).norm() < 1e-12 {
            return Err(Error::Pole(format!("artanh singular at {self}")));
        }
        Ok(self.atanh())
    }
    fn dist(self, other: Self) -> f64 {
        (self - other).norm()
    }
    fn unwrap_toward(self, centre: Self, artanh: bool) -> Self {
        if artanh {
            self + Complex64::new(0.0, ((centre.im - self.im) / PI).round() * PI)
        } else {
            self + ((centre.re - self.re) / PI).round() * PI
        }
    }
}

impl Algebra for Lorentz {
    fn from_real(x: f64) -> Self {
        Lorentz::real(x)
    }
    fn unit() -> Self {
        Lorentz::J
    }
    fn try_div(self, rhs: Self) -> Result<Self> {
        self.checked_div(rhs)
    }
    fn arctan(self) -> Result<Self> {
        l_extend(f64::atan, Interval::REAL_LINE, self)
    }
    fn artanh(self) -> Result<Self> {
        let (a, b) = self.idempotent();
        if (a.abs() - 1.0).abs() < 1e-12 || (b.abs() - 1.0).abs() < 1e-12 {
            return Err(Error::Pole(format!("artanh singular at {self}")));
        }
        let f = |t: f64| 0.5 * ((1.0 + t) / (1.0 - t)).abs().ln();
        Ok(Lorentz::from_idempotent(f(a), f(b)))
    }
    fn dist(self, other: Self) -> f64 {
        let d = self - other;
        d.re.abs().max(d.im.abs())
    }
    fn unwrap_toward(self, _centre: Self, _artanh: bool) -> Self {
        self
    }
}

fn two<T: Algebra>() -> T {
    T::from_real(2.0)
}

fn one<T: Algebra>() -> T {
    T::from_real(1.0)
}

/// The three antiderivatives `z₁, z₂, z₃` of a family at `y`; the dual is
/// read off their real parts (with `z₃` negated for the ellipsoid).
///
/// * ellipsoid: `(2/p) artanh(2y/(p(1+y²)))`, `(2/pq) arctan(2iqy/(p(1−y²)))`,
///   `(2/q) artanh(q(1+y²)/(1−y²))`
/// * 2-sheeted: `−(2/p) arctan(2y/(p(1−y²)))`, `(2/pq) artanh(2qy/(ip(1+y²)))`,
///   `(2/q) artanh(q(1−y²)/(1+y²))`
/// * 1-sheeted (over `𝕃`): `(2/p) arctan(2y/(p(1−y²)))`,
///   `(2j/pq) arctan(2qy/(p(1+y²)))`, `−(2/q) artanh(q(1−y²)/(1+y²))`
pub fn weierstrass_antiderivatives<T: Algebra>(family: Family, y: T, p: T, q: T) -> Result<[T; 3]> {
    let terms = antiderivative_terms(family, y, p, q)?;
    let mut out = [T::from_real(0.0); 3];
    for (k, (coef, arg, is_artanh)) in terms.into_iter().enumerate() {
        out[k] = coef * if is_artanh { arg.artanh()? } else { arg.arctan()? };
    }
    Ok(out)
}

/// `(coef, argument, is_artanh)` for each antiderivative.
fn antiderivative_terms<T: Algebra>(family: Family, y: T, p: T, q: T) -> Result<[(T, T, bool); 3]> {
    let y2 = y * y;
    let (plus, minus) = (one::<T>() + y2, one::<T>() - y2);
    let pq = p * q;
    let e = T::unit();
    let c1 = two::<T>().try_div(p)?;
    let c2 = two::<T>().try_div(pq)?;
    let c3 = two::<T>().try_div(q)?;
    let two_y = two::<T>() * y;
    Ok(match family {
        Family::Ellipsoid => [
            (c1, two_y.try_div(p * plus)?, true),
            (c2, (e * q * two_y).try_div(p * minus)?, false),
            (c3, (q * plus).try_div(minus)?, true),
        ],
        Family::Hyperboloid2Sheet => [
            (-c1, two_y.try_div(p * minus)?, false),
            (c2, (q * two_y).try_div(e * p * plus)?, true),
            (c3, (q * minus).try_div(plus)?, true),
        ],
        Family::Hyperboloid1Sheet => [
            (c1, two_y.try_div(p * minus)?, false),
            (e * c2, (q * two_y).try_div(p * plus)?, false),
            (-c3, (q * minus).try_div(plus)?, true),
        ],
    })
}

/// The integrands `(φ₁, φ₂, φ₃) / y'²` whose antiderivatives are
/// [`weierstrass_antiderivatives`]:
///
/// * ellipsoid: `(1−y², i(1+y²), 2y)`, `y'² = ¼((1−y²)² − q²(1+y²)²)`
/// * 2-sheeted: `(1+y², i(1−y²), 2y)`, `y'² = −¼((1+y²)² − q²(1−y²)²)`
/// * 1-sheeted: `(1+y², j(1−y²), 2y)`, `y'² = ¼((1+y²)² − q²(1−y²)²)`
pub fn weierstrass_integrands<T: Algebra>(family: Family, y: T, q: T) -> Result<[T; 3]> {
    let y2 = y * y;
    let (plus, minus) = (one::<T>() + y2, one::<T>() - y2);
    let e = T::unit();
    let quarter = T::from_real(0.25);
    let q2 = q * q;
    let (phi, dy2) = match family {
        Family::Ellipsoid => ([minus, e * plus, two::<T>() * y], quarter * (minus * minus - q2 * plus * plus)),
        Family::Hyperboloid2Sheet => ([plus, e * minus, two::<T>() * y], -(quarter * (plus * plus - q2 * minus * minus))),
        Family::Hyperboloid1Sheet => ([plus, e * minus, two::<T>() * y], quarter * (plus * plus - q2 * minus * minus)),
    };
    Ok([phi[0].try_div(dy2)?, phi[1].try_div(dy2)?, phi[2].try_div(dy2)?])
}

/// Outcome of one derivative identity over a sample.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct IdentityCheck {
    pub name: String,
    /// Largest `|finite difference − closed form| / max(1, |closed form|)`.
    pub max_error: f64,
    pub samples: usize,
    /// Points skipped because the stencil touched a singularity.
    pub skipped: usize,
}

type Identity<T> = (&'static str, bool, fn(T, T, T) -> Result<T>, fn(T, T, T) -> Result<T>);

fn table<T: Algebra>() -> [Identity<T>; 6] {
    // (name, outer is artanh, inner argument, closed-form derivative)
    [
        (
            "artanh(2y/(p(1+y^2)))' = 2p(1-y^2)/((1-y^2)^2 - q^2(1+y^2)^2)",
            true,
            |y, p, _q| (two::<T>() * y).try_div(p * (one::<T>() + y * y)),
            |y, p, q| {
                let (pl, mi) = (one::<T>() + y * y, one::<T>() - y * y);
                (two::<T>() * p * mi).try_div(mi * mi - q * q * pl * pl)
            },
        ),
        (
            "arctan(2y/(p(1-y^2)))' = 2p(1+y^2)/((1+y^2)^2 - q^2(1-y^2)^2)",
            false,
            |y, p, _q| (two::<T>() * y).try_div(p * (one::<T>() - y * y)),
            |y, p, q| {
                let (pl, mi) = (one::<T>() + y * y, one::<T>() - y * y);
                (two::<T>() * p * pl).try_div(pl * pl - q * q * mi * mi)
            },
        ),
        (
            "artanh(2qy/(p(1-y^2)))' = 2pq(1+y^2)/((1-y^2)^2 - q^2(1+y^2)^2)",
            true,
            |y, p, q| (two::<T>() * q * y).try_div(p * (one::<T>() - y * y)),
            |y, p, q| {
                let (pl, mi) = (one::<T>() + y * y, one::<T>() - y * y);
                (two::<T>() * p * q * pl).try_div(mi * mi - q * q * pl * pl)
            },
        ),
        (
            "arctan(2qy/(p(1+y^2)))' = 2pq(1-y^2)/((1+y^2)^2 - q^2(1-y^2)^2)",
            false,
            |y, p, q| (two::<T>() * q * y).try_div(p * (one::<T>() + y * y)),
            |y, p, q| {
                let (pl, mi) = (one::<T>() + y * y, one::<T>() - y * y);
                (two::<T>() * p * q * mi).try_div(pl * pl - q * q * mi * mi)
            },
        ),
        (
            "artanh(q(1+y^2)/(1-y^2))' = 4yq/((1-y^2)^2 - q^2(1+y^2)^2)",
            true,
            |y, _p, q| (q * (one::<T>() + y * y)).try_div(one::<T>() - y * y),
            |y, _p, q| {
                let (pl, mi) = (one::<T>() + y * y, one::<T>() - y * y);
                (T::from_real(4.0) * y * q).try_div(mi * mi - q * q * pl * pl)
            },
        ),
        (
            "artanh(q(1-y^2)/(1+y^2))' = -4yq/((1+y^2)^2 - q^2(1-y^2)^2)",
            true,
            |y, _p, q| (q * (one::<T>() - y * y)).try_div(one::<T>() + y * y),
            |y, _p, q| {
                let (pl, mi) = (one::<T>() + y * y, one::<T>() - y * y);
                (T::from_real(-4.0) * y * q).try_div(pl * pl - q * q * mi * mi)
            },
        ),
    ]
}

/// Fourth-order central difference along the real direction, unwrapping
/// principal-branch jumps against the centre value.
fn fd<T: Algebra>(f: &dyn Fn(T) -> Result<T>, y: T, h: f64, artanh: bool) -> Result<T> {
    let c = f(y)?;
    let at = |s: f64| -> Result<T> { Ok(f(y + T::from_real(s * h))?.unwrap_toward(c, artanh)) };
    let (p1, m1, p2, m2) = (at(1.0)?, at(-1.0)?, at(2.0)?, at(-2.0)?);
    let w = T::from_real(1.0 / (12.0 * h));
    Ok((m2 - p2 + T::from_real(8.0) * (p1 - m1)) * w)
}

/// Checks the six tabulated derivative identities and, seventh, that the
/// antiderivatives of `family` differentiate to its integrands, at every
/// point of `points`. Requires `p² + q² = 1`.
pub fn derivative_identities<T: Algebra>(family: Family, p: T, q: T, points: &[T]) -> Result<Vec<IdentityCheck>> {
    if (p * p + q * q).dist(one::<T>()) > 1e-12 {
        return Err(Error::Domain("derivative identities need p^2 + q^2 = 1".into()));
    }
    let h = 1e-4;
    let rel = |a: T, b: T| a.dist(b) / b.dist(T::from_real(0.0)).max(1.0);
    let mut out = Vec::with_capacity(7);
    for (name, is_artanh, inner, exact) in table::<T>() {
        let outer = move |w: T| -> Result<T> {
            let g = inner(w, p, q)?;
            if is_artanh {
                g.artanh()
            } else {
                g.arctan()
            }
        };
        let mut check = IdentityCheck {
            name: name.to_string(),
            max_error: 0.0,
            samples: 0,
            skipped: 0,
        };
        for &y in points {
            match (fd(&outer, y, h, is_artanh), exact(y, p, q)) {
                (Ok(d), Ok(e)) => {
                    check.max_error = check.max_error.max(rel(d, e));
                    check.samples += 1;
                }
                _ => check.skipped += 1,
            }
        }
        out.push(check);
    }
    let mut comp = IdentityCheck {
        name: format!("{} antiderivatives differentiate to the integrands", family.name()),
        max_error: 0.0,
        samples: 0,
        skipped: 0,
    };
    for &y in points {
        let Ok(terms) = antiderivative_terms(family, y, p, q) else {
            comp.skipped += 1;
            continue;
        };
        let mut worst: Result<f64> = Ok(0.0);
        for (k, (coef, _, is_artanh)) in terms.into_iter().enumerate() {
            let bare = move |w: T| -> Result<T> {
                let (_, arg, _) = antiderivative_terms(family, w, p, q)?[k];
                if is_artanh {
                    arg.artanh()
                } else {
                    arg.arctan()
                }
            };
            worst = match (worst, fd(&bare, y, h, is_artanh), weierstrass_integrands(family, y, q)) {
                (Ok(w), Ok(d), Ok(e)) => Ok(w.max(rel(coef * d, e[k]))),
                (Err(e), ..) | (_, Err(e), _) | (.., Err(e)) => Err(e),
            };
        }
        match worst {
            Ok(w) => {
                comp.max_error = comp.max_error.max(w);
                comp.samples += 1;
            }
            Err(_) => comp.skipped += 1,
        }
    }
    out.push(comp);
    Ok(out)
}
