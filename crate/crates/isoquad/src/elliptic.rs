//! Jacobi elliptic functions `am, sn, cn, dn` and the complete elliptic
//! integral `K`.
//!
//! Moduli are stored through the real parameter `m = p²`. The three cases
//! that occur for quadrics are
//!
//! | case | parameter   | modulus `p`       | co-modulus `q`    |
//! |------|-------------|-------------------|-------------------|
//! | I    | `0 ≤ m ≤ 1` | real in `[0, 1]`  | real in `[0, 1]`  |
//! | II   | `m < 0`     | purely imaginary  | real, `> 1`       |
//! | III  | `m > 1`     | real, `> 1`       | purely imaginary  |
//!
//! Real arguments with a case I parameter go through the descending Landen
//! (AGM) scheme. Case II and III evaluations are first converted to a case I
//! parameter by the imaginary-modulus or reciprocal-modulus transformation,
//! and complex arguments are assembled from two real evaluations with the
//! addition theorem. All of this is exact algebra on top of the AGM, so
//! accuracy stays near machine precision away from poles.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Distance to a lattice pole below which evaluation raises `Pole`.
pub const POLE_GUARD: f64 = 1e-9;

const AGM_TOL: f64 = 1e-15;
const AGM_MAX_ITER: usize = 32;

/// Which of the three modulus cases a parameter falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum ModulusCase {
    I,
    II,
    III,
}

impl ModulusCase {
    pub fn of_parameter(m: f64) -> ModulusCase {
        if m < 0.0 {
            ModulusCase::II
        } else if m > 1.0 {
            ModulusCase::III
        } else {
            ModulusCase::I
        }
    }
}

/// The four Jacobi functions at one argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiQuadruple<T> {
    pub sn: T,
    pub cn: T,
    pub dn: T,
    pub am: T,
}

/// An elliptic modulus `p` with co-modulus `q`, `p² + q² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticModulus {
    m: f64,
}

impl EllipticModulus {
    /// Modulus from the parameter `m = p²`.
    pub fn from_parameter(m: f64) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::Domain(format!("parameter m = {m} is not finite")));
        }
        Ok(EllipticModulus { m })
    }

    /// Real modulus `p`; any real value is accepted (`p > 1` is case III).
    pub fn real(p: f64) -> Result<Self> {
        Self::from_parameter(p * p)
    }

    /// Purely imaginary modulus `p = i·s`.
    pub fn imaginary(s: f64) -> Result<Self> {
        Self::from_parameter(-s * s)
    }

    /// Modulus from a complex `p`, which must be real or purely imaginary.
    pub fn from_complex(p: Complex64) -> Result<Self> {
        let scale = p.norm().max(1.0);
        if p.im.abs() <= 1e-14 * scale {
            Self::real(p.re)
        } else if p.re.abs() <= 1e-14 * scale {
            Self::imaginary(p.im)
        } else {
            Err(Error::Domain(format!(
                "modulus {p} is neither real nor purely imaginary"
            )))
        }
    }

    /// The parameter `m = p²`.
    pub fn parameter(&self) -> f64 {
        self.m
    }

    pub fn case(&self) -> ModulusCase {
        ModulusCase::of_parameter(self.m)
    }

    /// `p` with the principal square root: nonnegative real or positive
    /// imaginary.
    pub fn p(&self) -> Complex64 {
        signed_sqrt(self.m)
    }

    /// `q = √(1 − p²)` with the same root convention as [`Self::p`].
    pub fn q(&self) -> Complex64 {
        signed_sqrt(1.0 - self.m)
    }

    /// The modulus with `p` and `q` exchanged.
    pub fn complementary(&self) -> EllipticModulus {
        EllipticModulus { m: 1.0 - self.m }
    }

    /// Jacobi functions at a real argument; real in every case.
    pub fn jacobi(&self, u: f64) -> Result<JacobiQuadruple<f64>> {
        let m = self.m;
        if (0.0..=1.0).contains(&m) {
            return Ok(jacobi_real(u, m.sqrt()));
        }
        if m > 1.0 {
            let p = m.sqrt();
            let k = 1.0 / p;
            let t = jacobi_real(p * u, k);
            let sn = k * t.sn;
            let cn = t.dn;
            // cn_p = dn_k > 0 on the real line, so am stays in (−π/2, π/2).
            return Ok(JacobiQuadruple {
                sn,
                cn,
                dn: t.cn,
                am: sn.atan2(cn),
            });
        }
        let (pp, qq) = imaginary_pair(m);
        let t = jacobi_real(u / qq, pp);
        let sn = qq * t.sn / t.dn;
        let cn = t.cn / t.dn;
        let principal = (qq * t.sn).atan2(t.cn);
        let am = principal + 2.0 * PI * ((t.am - principal) / (2.0 * PI)).round();
        Ok(JacobiQuadruple {
            sn,
            cn,
            dn: 1.0 / t.dn,
            am,
        })
    }

    /// Jacobi functions at a complex argument.
    ///
    /// `am` is continued along the vertical segment from `Re z`.
    pub fn jacobi_complex(&self, z: Complex64) -> Result<JacobiQuadruple<Complex64>> {
        if (0.0..=1.0).contains(&self.m) {
            return self.jacobi_complex_case_one(z);
        }
        let (sn, cn, dn) = self.sncndn(z)?;
        let am = self.am_by_continuation(z)?;
        Ok(JacobiQuadruple { sn, cn, dn, am })
    }

    /// `(sn, cn, dn)` at a complex argument without the amplitude.
    pub fn sncndn(&self, z: Complex64) -> Result<(Complex64, Complex64, Complex64)> {
        let m = self.m;
        if (0.0..=1.0).contains(&m) {
            let (sn, cn, dn, _) = sum_formula(z, m)?;
            return Ok((sn, cn, dn));
        }
        let kind = if m > 1.0 {
            ConversionKind::Reciprocal
        } else {
            ConversionKind::Imaginary
        };
        let (zz, target, conv) = modulus_convert(kind, z, self.p())?;
        let (sn, cn, dn, _) = sum_formula(zz, target * target)?;
        conv.apply(sn, cn, dn)
    }

    fn jacobi_complex_case_one(&self, z: Complex64) -> Result<JacobiQuadruple<Complex64>> {
        let (sn, cn, dn, parts) = sum_formula(z, self.m)?;
        let (a, b) = parts;
        // exp(i am) = (cn_p u cn_q v + i sn_p u dn_q v) / (1 + dn_p u sn_q v), and
        // the denominator is nonnegative, so the argument is a plain atan2
        // lifted by the winding of the real-axis amplitude.
        let x = a.cn * b.cn;
        let y = a.sn * b.dn;
        let den = 1.0 + a.dn * b.sn;
        let winding = ((a.am - a.sn.atan2(a.cn)) / (2.0 * PI)).round();
        let re = y.atan2(x) + 2.0 * PI * winding;
        let modulus = x.hypot(y) / den;
        if !(modulus > 0.0) || !modulus.is_finite() {
            return Err(Error::Pole(format!("amplitude singular at {z}")));
        }
        Ok(JacobiQuadruple {
            sn,
            cn,
            dn,
            am: Complex64::new(re, -modulus.ln()),
        })
    }

    fn am_by_continuation(&self, z: Complex64) -> Result<Complex64> {
        let mut re = self.jacobi(z.re)?.am;
        if z.im == 0.0 {
            return Ok(Complex64::new(re, 0.0));
        }
        let steps = 16 + (z.im.abs() * 64.0).ceil() as usize;
        let mut w = Complex64::new(1.0, 0.0);
        for k in 1..=steps {
            let t = z.im * k as f64 / steps as f64;
            let (sn, cn, _) = self.sncndn(Complex64::new(z.re, t))?;
            w = cn + Complex64::i() * sn;
            let mut d = w.arg() - re;
            d -= 2.0 * PI * (d / (2.0 * PI)).round();
            re += d;
        }
        Ok(Complex64::new(re, -w.norm().ln()))
    }

    /// First positive zero of `cn_p` on the real line. Exists for case I and
    /// case II; for case III `cn_p` has no real zero.
    pub fn real_quarter_period(&self) -> Result<f64> {
        let m = self.m;
        if m >= 1.0 {
            return Err(Error::Domain(format!(
                "cn has no real zero for parameter m = {m}"
            )));
        }
        if m >= 0.0 {
            return complete_k(m.sqrt());
        }
        let (pp, qq) = imaginary_pair(m);
        Ok(qq * complete_k(pp)?)
    }

    /// Two generators of a period lattice shared by `sn`, `cn` and `dn`.
    pub fn period_lattice(&self) -> Result<(Complex64, Complex64)> {
        let m = self.m;
        let (k, kp) = if (0.0..1.0).contains(&m) && m > 0.0 {
            (complete_k(m.sqrt())?, complete_k((1.0 - m).sqrt())?)
        } else if m > 1.0 {
            let k = 1.0 / m.sqrt();
            let s = 1.0 / m.sqrt();
            (
                s * complete_k(k)?,
                s * complete_k((1.0 - k * k).sqrt())?,
            )
        } else if m < 0.0 {
            let (pp, qq) = imaginary_pair(m);
            (
                qq * complete_k(pp)?,
                qq * complete_k((1.0 - pp * pp).sqrt())?,
            )
        } else {
            return Err(Error::Domain(format!(
                "parameter m = {m} has a degenerate period lattice"
            )));
        };
        Ok((Complex64::new(4.0 * k, 0.0), Complex64::new(0.0, 4.0 * kp)))
    }
}

/// `√m` for `m ≥ 0`, `i√(−m)` otherwise.
fn signed_sqrt(m: f64) -> Complex64 {
    if m >= 0.0 {
        Complex64::new(m.sqrt(), 0.0)
    } else {
        Complex64::new(0.0, (-m).sqrt())
    }
}

/// Target modulus and scale of the imaginary-modulus conversion for `m < 0`.
fn imaginary_pair(m: f64) -> (f64, f64) {
    let s2 = -m;
    let pp = (s2 / (1.0 + s2)).sqrt();
    let qq = 1.0 / (1.0 + s2).sqrt();
    (pp, qq)
}

/// Complete elliptic integral of the first kind `K(p) = π / (2 AGM(1, q))`.
///
/// ```
/// let k = isoquad::elliptic::complete_k(std::f64::consts::FRAC_1_SQRT_2).unwrap();
/// assert!((k - 1.854074677301372).abs() < 1e-14);
/// ```
pub fn complete_k(p: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&p.abs()) {
        return Err(Error::Domain(format!("complete K needs 0 <= p < 1, got {p}")));
    }
    let mut a: f64 = 1.0;
    let mut b = (1.0 - p * p).sqrt();
    for _ in 0..AGM_MAX_ITER {
        if (a - b).abs() <= AGM_TOL * a {
            break;
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
    }
    Ok(FRAC_PI_2 / a)
}

/// Amplitude `am_p(u)` for `0 ≤ p ≤ 1` by the descending Landen scheme.
fn amplitude(u: f64, m: f64) -> f64 {
    if m == 0.0 {
        return u;
    }
    if m == 1.0 {
        return u.sinh().atan();
    }
    let mut a = [0.0f64; AGM_MAX_ITER + 1];
    let mut c = [0.0f64; AGM_MAX_ITER + 1];
    a[0] = 1.0;
    let mut b = (1.0 - m).sqrt();
    c[0] = m.sqrt();
    let mut n = 0;
    while c[n].abs() > AGM_TOL && n < AGM_MAX_ITER {
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = (a[n] * b).sqrt();
        n += 1;
    }
    let mut phi = (1u64 << n) as f64 * a[n] * u;
    for k in (1..=n).rev() {
        phi = 0.5 * (phi + (c[k] / a[k] * phi.sin()).asin());
    }
    phi
}

/// Jacobi functions of a real argument and real modulus `p ∈ [0, 1]`.
///
/// # Panics
///
/// Panics if `|p| > 1`; use [`EllipticModulus::jacobi`] for other moduli.
///
/// ```
/// use isoquad::elliptic::jacobi_real;
/// let j = jacobi_real(0.7, 0.0);
/// assert_eq!((j.sn, j.cn, j.dn, j.am), (0.7f64.sin(), 0.7f64.cos(), 1.0, 0.7));
/// ```
pub fn jacobi_real(u: f64, p: f64) -> JacobiQuadruple<f64> {
    assert!(p.abs() <= 1.0, "jacobi_real needs |p| <= 1, got {p}");
    let m = p * p;
    if m == 1.0 {
        let c = 1.0 / u.cosh();
        return JacobiQuadruple {
            sn: u.tanh(),
            cn: c,
            dn: c,
            am: u.sinh().atan(),
        };
    }
    let am = amplitude(u, m);
    let (sn, cn) = am.sin_cos();
    JacobiQuadruple {
        sn,
        cn,
        dn: (1.0 - m * sn * sn).max(0.0).sqrt(),
        am,
    }
}

/// Addition-theorem assembly of `sn, cn, dn` at `u + iv` for `0 ≤ m ≤ 1`.
/// Also hands back the two real evaluations (at `u` with `p` and at `v` with
/// `q`) for callers that need them.
#[allow(clippy::type_complexity)]
fn sum_formula(
    z: Complex64,
    m: f64,
) -> Result<(
    Complex64,
    Complex64,
    Complex64,
    (JacobiQuadruple<f64>, JacobiQuadruple<f64>),
)> {
    let a = jacobi_real(z.re, m.sqrt());
    let b = jacobi_real(z.im, (1.0 - m).sqrt());
    let den = b.cn * b.cn + m * a.sn * a.sn * b.sn * b.sn;
    if den.sqrt() < POLE_GUARD {
        return Err(Error::Pole(format!(
            "lattice pole of sn, cn, dn at {z} (parameter {m})"
        )));
    }
    let sn = Complex64::new(a.sn * b.dn, a.cn * a.dn * b.sn * b.cn) / den;
    let cn = Complex64::new(a.cn * b.cn, -a.sn * a.dn * b.sn * b.dn) / den;
    let dn = Complex64::new(a.dn * b.cn * b.dn, -m * a.sn * a.cn * b.sn) / den;
    Ok((sn, cn, dn, (a, b)))
}

/// Jacobi functions of a complex argument; see [`EllipticModulus::jacobi_complex`].
pub fn jacobi_complex(z: Complex64, m: &EllipticModulus) -> Result<JacobiQuadruple<Complex64>> {
    m.jacobi_complex(z)
}

/// The two modulus transformations that map case II and III to case I.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConversionKind {
    /// `p > 1` to `1/p`: `sn_p z = sn_{1/p}(pz)/p`, `cn_p z = dn_{1/p}(pz)`,
    /// `dn_p z = cn_{1/p}(pz)`.
    Reciprocal,
    /// `p = is` to `p' = s/√(1+s²)`: `sn_p z = q' sd_{p'}(z/q')`,
    /// `cn_p z = cd_{p'}(z/q')`, `dn_p z = nd_{p'}(z/q')` with
    /// `q' = 1/√(1+s²)`.
    Imaginary,
}

/// How to turn Jacobi values at the converted argument and modulus back into
/// values for the original modulus.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModulusConversion {
    pub kind: ConversionKind,
    /// `z' = scale · z`.
    pub scale: f64,
    /// The real target modulus `p' ∈ (0, 1)`.
    pub target: f64,
    /// `1/p` for the reciprocal conversion, `q'` for the imaginary one.
    pub prefactor: f64,
}

impl ModulusConversion {
    /// Maps `(sn, cn, dn)` at `(z', p')` to the original modulus.
    pub fn apply(
        &self,
        sn: Complex64,
        cn: Complex64,
        dn: Complex64,
    ) -> Result<(Complex64, Complex64, Complex64)> {
        match self.kind {
            ConversionKind::Reciprocal => Ok((sn * self.prefactor, dn, cn)),
            ConversionKind::Imaginary => {
                if dn.norm() < POLE_GUARD {
                    return Err(Error::Pole(format!(
                        "zero of dn under the imaginary-modulus conversion (p' = {})",
                        self.target
                    )));
                }
                Ok((sn * self.prefactor / dn, cn / dn, dn.inv()))
            }
        }
    }
}

/// Converts an evaluation at modulus `p` to one at a real modulus in `(0, 1)`.
///
/// Returns the converted argument `z'`, the target modulus `p'` and the record
/// needed to map the values back.
///
/// ```
/// use isoquad::elliptic::{modulus_convert, ConversionKind};
/// use num_complex::Complex64;
/// let (_, target, rec) =
///     modulus_convert(ConversionKind::Imaginary, Complex64::new(0.3, 0.0), Complex64::i()).unwrap();
/// assert!((target - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
/// assert!((rec.prefactor - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
/// ```
pub fn modulus_convert(
    kind: ConversionKind,
    z: Complex64,
    p: Complex64,
) -> Result<(Complex64, f64, ModulusConversion)> {
    let scale = p.norm().max(1.0);
    match kind {
        ConversionKind::Reciprocal => {
            if p.im.abs() > 1e-14 * scale || p.re.abs() <= 1.0 {
                return Err(Error::Domain(format!(
                    "reciprocal conversion needs a real modulus above 1, got {p}"
                )));
            }
            let p = p.re.abs();
            let conv = ModulusConversion {
                kind,
                scale: p,
                target: 1.0 / p,
                prefactor: 1.0 / p,
            };
            Ok((z * p, conv.target, conv))
        }
        ConversionKind::Imaginary => {
            if p.re.abs() > 1e-14 * scale || p.im == 0.0 {
                return Err(Error::Domain(format!(
                    "imaginary conversion needs a purely imaginary modulus, got {p}"
                )));
            }
            let (pp, qq) = imaginary_pair(-p.im * p.im);
            let conv = ModulusConversion {
                kind,
                scale: 1.0 / qq,
                target: pp,
                prefactor: qq,
            };
            Ok((z / qq, pp, conv))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn origin_values() {
        let j = jacobi_real(0.0, 0.8);
        assert_eq!((j.sn, j.cn, j.dn, j.am), (0.0, 1.0, 1.0, 0.0));
    }

    #[test]
    fn quarter_period_values() {
        let k = complete_k(0.8).unwrap();
        let j = jacobi_real(k, 0.8);
        assert!(close(j.sn, 1.0, 1e-15));
        assert!(close(j.cn, 0.0, 1e-15));
        assert!(close(j.dn, 0.6, 1e-15));
        assert!(close(j.am, FRAC_PI_2, 1e-15));
    }

    #[test]
    fn complete_k_limits() {
        assert_eq!(complete_k(0.0).unwrap(), FRAC_PI_2);
        assert!(complete_k(1.0).is_err());
        assert!(close(complete_k(0.5).unwrap(), 1.685750354812596, 1e-14));
    }

    #[test]
    fn parameter_one_is_hyperbolic() {
        let j = jacobi_real(0.9, 1.0);
        assert!(close(j.sn, 0.9f64.tanh(), 1e-16));
        assert!(close(j.cn, 1.0 / 0.9f64.cosh(), 1e-16));
    }

    #[test]
    fn pure_imaginary_argument() {
        let m = EllipticModulus::real(0.6).unwrap();
        let q = m.q().re;
        let v = 0.8;
        let j = m.jacobi_complex(Complex64::new(0.0, v)).unwrap();
        let r = jacobi_real(v, q);
        assert!((j.sn - Complex64::new(0.0, r.sn / r.cn)).norm() < 1e-15);
        assert!((j.cn - Complex64::new(1.0 / r.cn, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn real_argument_matches_real_path() {
        let m = EllipticModulus::real(0.6).unwrap();
        let j = m.jacobi_complex(Complex64::new(1.3, 0.0)).unwrap();
        let r = jacobi_real(1.3, 0.6);
        assert_eq!(j.sn, Complex64::new(r.sn, 0.0));
        assert_eq!(j.cn, Complex64::new(r.cn, 0.0));
        assert_eq!(j.dn, Complex64::new(r.dn, 0.0));
        assert!((j.am.re - r.am).abs() < 1e-15 && j.am.im == 0.0);
    }

    #[test]
    fn pole_is_reported() {
        let m = EllipticModulus::real(0.6).unwrap();
        let kq = complete_k(0.8).unwrap();
        assert!(matches!(
            m.jacobi_complex(Complex64::new(0.0, kq)),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn conversion_rejects_unsuitable_moduli() {
        let z = Complex64::new(0.1, 0.0);
        assert!(modulus_convert(ConversionKind::Reciprocal, z, Complex64::new(0.5, 0.0)).is_err());
        assert!(modulus_convert(ConversionKind::Imaginary, z, Complex64::new(0.5, 0.0)).is_err());
        assert!(modulus_convert(ConversionKind::Reciprocal, z, Complex64::new(0.0, 2.0)).is_err());
    }

    #[test]
    fn reciprocal_conversion_matches_record() {
        let (zz, target, rec) =
            modulus_convert(ConversionKind::Reciprocal, Complex64::new(0.3, 0.0), Complex64::new(2.0, 0.0))
                .unwrap();
        assert_eq!(target, 0.5);
        assert_eq!(zz, Complex64::new(0.6, 0.0));
        assert_eq!(rec.prefactor, 0.5);
    }

    #[test]
    fn case_tags() {
        assert_eq!(EllipticModulus::real(0.3).unwrap().case(), ModulusCase::I);
        assert_eq!(EllipticModulus::imaginary(0.3).unwrap().case(), ModulusCase::II);
        assert_eq!(EllipticModulus::real(1.3).unwrap().case(), ModulusCase::III);
        let m = EllipticModulus::imaginary(0.75).unwrap();
        assert!((m.p() * m.p() + m.q() * m.q() - 1.0).norm() < 1e-15);
        assert!(m.q().re > 1.0);
    }
}
