//! Curvature-line parametrizations of ellipsoids and hyperboloids by Jacobi
//! elliptic functions.
//!
//! Every family is handled through signed axis squares `(A, B, C)`, so that
//! Euclidean and Minkowski variants share one set of formulas:
//!
//! | family      | ambient     | `(A, B, C)`        |
//! |-------------|-------------|--------------------|
//! | ellipsoid   | Euclidean   | `(a², b², c²)`     |
//! | ellipsoid   | Minkowski Z | `(a², b², −c²)`    |
//! | 2-sheeted   | Minkowski Z | `(a², b², c²)`     |
//! | 2-sheeted   | Euclidean   | `(a², b², −c²)`    |
//! | 1-sheeted   | Minkowski X | `(a², b², c²)`     |
//! | 1-sheeted   | Euclidean   | `(−a², b², c²)`    |
//!
//! with `p² = (A−B)/(A−C)`, `q² = (B−C)/(A−C)` and `r² = (A−C)/B`.

use num_complex::Complex64;

use crate::elliptic::{EllipticModulus, ModulusCase};
use crate::error::{Error, Result};
use crate::geometry::{Jet, Metric, ParamKind, SurfaceJet, Vec3};
use crate::grid::{Lattice, SurfaceGrid};
use crate::paracomplex::Lorentz;

/// Denominator magnitude below which pointwise evaluation raises an error.
pub const POINT_POLE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Family {
    Ellipsoid,
    Hyperboloid2Sheet,
    Hyperboloid1Sheet,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ellipsoid" | "ell" => Ok(Family::Ellipsoid),
            "hyp2" | "hyperboloid2" | "two-sheeted" => Ok(Family::Hyperboloid2Sheet),
            "hyp1" | "hyperboloid1" | "one-sheeted" => Ok(Family::Hyperboloid1Sheet),
            other => Err(Error::Config(format!("unknown family `{other}`"))),
        }
    }
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Ellipsoid => "ellipsoid",
            Family::Hyperboloid2Sheet => "hyp2",
            Family::Hyperboloid1Sheet => "hyp1",
        }
    }
}

/// A quadric in normal form together with its ambient metric.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct QuadricSpec {
    pub family: Family,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub ambient: Metric,
}

impl QuadricSpec {
    pub fn new(family: Family, a: f64, b: f64, c: f64, ambient: Metric) -> Result<Self> {
        for (name, v) in [("a", a), ("b", b), ("c", c)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Domain(format!("half-axis {name} = {v} must be positive")));
            }
        }
        let ok = matches!(
            (family, ambient),
            (Family::Ellipsoid | Family::Hyperboloid2Sheet, Metric::Euclidean | Metric::MinkowskiZ)
                | (Family::Hyperboloid1Sheet, Metric::Euclidean | Metric::MinkowskiX)
        );
        if !ok {
            return Err(Error::Domain(format!(
                "{} is not supported in the {ambient:?} ambient",
                family.name()
            )));
        }
        Ok(QuadricSpec {
            family,
            a,
            b,
            c,
            ambient,
        })
    }

    pub fn axes(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    /// Signs turning `(a², b², c²)` into the signed squares `(A, B, C)`.
    pub fn axis_signs(&self) -> [f64; 3] {
        axis_signs(self.family, self.ambient)
    }

    /// The signed axis squares `(A, B, C)`.
    pub fn signed_squares(&self) -> [f64; 3] {
        let s = self.axis_signs();
        [s[0] * self.a * self.a, s[1] * self.b * self.b, s[2] * self.c * self.c]
    }

    /// Left-hand side minus right-hand side of the quadric equation.
    pub fn membership_residual(&self, x: &Vec3) -> f64 {
        let t = [x.x / self.a, x.y / self.b, x.z / self.c];
        let (sig, rhs) = quadric_form(self.family);
        sig[0] * t[0] * t[0] + sig[1] * t[1] * t[1] + sig[2] * t[2] * t[2] - rhs
    }

    /// Metric in which the unscaled lift of the family is conformal.
    pub fn lift_metric(&self) -> Metric {
        lift_metric(self.family)
    }
}

fn axis_signs(family: Family, ambient: Metric) -> [f64; 3] {
    match (family, ambient) {
        (Family::Ellipsoid, Metric::MinkowskiZ) | (Family::Hyperboloid2Sheet, Metric::Euclidean) => {
            [1.0, 1.0, -1.0]
        }
        (Family::Hyperboloid1Sheet, Metric::Euclidean) => [-1.0, 1.0, 1.0],
        _ => [1.0, 1.0, 1.0],
    }
}

/// Coefficient signs and right-hand side of the normal form.
fn quadric_form(family: Family) -> ([f64; 3], f64) {
    match family {
        Family::Ellipsoid => ([1.0, 1.0, 1.0], 1.0),
        Family::Hyperboloid2Sheet => ([1.0, 1.0, -1.0], -1.0),
        Family::Hyperboloid1Sheet => ([-1.0, 1.0, 1.0], 1.0),
    }
}

/// Metric in which the unit-axes lift of a family is conformal: the sphere
/// lift is Euclidean, the hyperboloid lifts live in Minkowski space.
pub fn lift_metric(family: Family) -> Metric {
    match family {
        Family::Ellipsoid => Metric::Euclidean,
        Family::Hyperboloid2Sheet => Metric::MinkowskiZ,
        Family::Hyperboloid1Sheet => Metric::MinkowskiX,
    }
}

/// The moduli `(p, q, r)` of a quadric, normalized to `b = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModuliTriple {
    pub p: Complex64,
    pub q: Complex64,
    pub r: Complex64,
    pub case: ModulusCase,
    pub family: Family,
    pub ambient: Metric,
}

impl ModuliTriple {
    /// Builds a triple from `p` and `r`; `q = √(1 − p²)`.
    pub fn new(p: Complex64, r: Complex64, family: Family, ambient: Metric) -> Result<Self> {
        let pm = EllipticModulus::from_complex(p)?;
        let r2 = r * r;
        if r2.im.abs() > 1e-14 * r2.norm().max(1.0) {
            return Err(Error::Domain(format!("r = {r} must be real or purely imaginary")));
        }
        Ok(ModuliTriple {
            p: pm.p(),
            q: pm.q(),
            r: signed_sqrt(r2.re),
            case: pm.case(),
            family,
            ambient,
        })
    }

    /// The modulus `p` as an [`EllipticModulus`].
    pub fn p_modulus(&self) -> EllipticModulus {
        EllipticModulus::from_parameter((self.p * self.p).re).expect("finite parameter")
    }

    /// The co-modulus `q` as an [`EllipticModulus`].
    pub fn q_modulus(&self) -> EllipticModulus {
        self.p_modulus().complementary()
    }
}

fn signed_sqrt(x: f64) -> Complex64 {
    if x >= 0.0 {
        Complex64::new(x.sqrt(), 0.0)
    } else {
        Complex64::new(0.0, (-x).sqrt())
    }
}

const AXIS_TOL: f64 = 1e-12;

/// Moduli of a quadric from its half-axes.
///
/// ```
/// use isoquad::geometry::Metric;
/// use isoquad::quadrics::{moduli_from_axes, Family, QuadricSpec};
/// let spec = QuadricSpec::new(Family::Ellipsoid, 1.5f64.sqrt(), 1.0, 0.5f64.sqrt(), Metric::Euclidean).unwrap();
/// let m = moduli_from_axes(&spec).unwrap();
/// assert!((m.p.re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
/// assert!((m.r.re - 1.0).abs() < 1e-15);
/// ```
pub fn moduli_from_axes(spec: &QuadricSpec) -> Result<ModuliTriple> {
    let [aa, bb, cc] = spec.signed_squares();
    let scale = aa.abs().max(bb.abs()).max(cc.abs());
    if (aa - bb).abs() <= AXIS_TOL * scale {
        return Err(Error::DegenerateAxes(format!(
            "surface of revolution: a = {}, b = {}",
            spec.a, spec.b
        )));
    }
    if (aa - cc).abs() <= AXIS_TOL * scale {
        return Err(Error::DegenerateAxes(format!(
            "moduli undefined: a = {}, c = {}",
            spec.a, spec.c
        )));
    }
    if (bb - cc).abs() <= AXIS_TOL * scale {
        return Err(Error::DegenerateAxes(format!(
            "surface of revolution: b = {}, c = {}",
            spec.b, spec.c
        )));
    }
    let m = (aa - bb) / (aa - cc);
    let r2 = (aa - cc) / bb;
    let pm = EllipticModulus::from_parameter(m)?;
    Ok(ModuliTriple {
        p: pm.p(),
        q: pm.q(),
        r: signed_sqrt(r2),
        case: pm.case(),
        family: spec.family,
        ambient: spec.ambient,
    })
}

/// Half-axes `(a, 1, c)` from moduli: `A = 1 + r²p²`, `C = 1 − r²q²`.
pub fn axes_from_moduli(m: &ModuliTriple) -> Result<[f64; 3]> {
    let r2 = (m.r * m.r).re;
    let p2 = (m.p * m.p).re;
    let q2 = (m.q * m.q).re;
    let big_a = 1.0 + r2 * p2;
    let big_c = 1.0 - r2 * q2;
    let s = axis_signs(m.family, m.ambient);
    let a2 = s[0] * big_a;
    let c2 = s[2] * big_c;
    if !(a2 > 0.0) || !(c2 > 0.0) {
        return Err(Error::Domain(format!(
            "moduli p = {}, r = {} give no real half-axes (a² = {a2}, c² = {c2})",
            m.p, m.r
        )));
    }
    Ok([a2.sqrt(), 1.0, c2.sqrt()])
}

/// `(g, g', g'')` for sn, cn, dn at a real argument.
fn jacobi_jets(m: &EllipticModulus, t: f64) -> Result<[[f64; 3]; 3]> {
    let j = m.jacobi(t)?;
    let k = m.parameter();
    let (s, c, d) = (j.sn, j.cn, j.dn);
    Ok([
        [s, c * d, -s * (d * d + k * c * c)],
        [c, -s * d, -c * (d * d - k * s * s)],
        [d, -k * s * c, -k * d * (c * c - s * s)],
    ])
}

/// A validated quadric with its moduli: the evaluator behind the
/// `*_point` functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadric {
    spec: QuadricSpec,
    moduli: ModuliTriple,
    pm: EllipticModulus,
    qm: EllipticModulus,
}

impl Quadric {
    pub fn new(spec: QuadricSpec) -> Result<Self> {
        let moduli = moduli_from_axes(&spec)?;
        Ok(Self::assemble(spec, moduli))
    }

    /// The quadric with half-axes `axes_from_moduli(m)`.
    pub fn from_moduli(m: &ModuliTriple) -> Result<Self> {
        let [a, b, c] = axes_from_moduli(m)?;
        let spec = QuadricSpec::new(m.family, a, b, c, m.ambient)?;
        Ok(Self::assemble(spec, *m))
    }

    fn assemble(spec: QuadricSpec, moduli: ModuliTriple) -> Self {
        let pm = moduli.p_modulus();
        Quadric {
            spec,
            moduli,
            pm,
            qm: pm.complementary(),
        }
    }

    pub fn spec(&self) -> &QuadricSpec {
        &self.spec
    }

    pub fn moduli(&self) -> &ModuliTriple {
        &self.moduli
    }

    pub fn p_modulus(&self) -> &EllipticModulus {
        &self.pm
    }

    pub fn q_modulus(&self) -> &EllipticModulus {
        &self.qm
    }

    pub fn param_kind(&self) -> ParamKind {
        match self.spec.family {
            Family::Hyperboloid1Sheet => ParamKind::Lorentz,
            _ => ParamKind::Complex,
        }
    }

    /// Closed-form jet of the parametrization at `(u, v)`.
    pub fn jet(&self, u: f64, v: f64) -> Result<SurfaceJet> {
        Ok(self.lift_jet(u, v)?.scaled(self.spec.axes()))
    }

    /// Jet of the unit-axes lift: the parametrization with `a = b = c = 1`,
    /// which lies on the unit sphere or hyperboloid of [`Self::lift_metric`].
    pub fn lift_jet(&self, u: f64, v: f64) -> Result<SurfaceJet> {
        let kind = self.param_kind();
        let comps = match self.spec.family {
            Family::Ellipsoid => {
                let [su, cu, du] = jacobi_jets(&self.pm, u)?.map(Jet::of_u);
                let [sv, cv, dv] = jacobi_jets(&self.qm, v)?.map(Jet::of_v);
                [su * dv, -(cu * cv), du * sv]
            }
            Family::Hyperboloid2Sheet => {
                let [su, cu, du] = jacobi_jets(&self.pm, u)?.map(Jet::of_u);
                let [sv, cv, dv] = jacobi_jets(&self.qm, v)?.map(Jet::of_v);
                let den = du * sv;
                if den.f.abs() < POINT_POLE_TOL {
                    return Err(Error::Pole(format!(
                        "dn_p(u) sn_q(v) vanishes at ({u}, {v})"
                    )));
                }
                let inv = den.recip();
                [cu * cv * inv, su * dv * inv, inv]
            }
            Family::Hyperboloid1Sheet => {
                let [su, cu, du] = jacobi_jets(&self.qm, u)?.map(Jet::of_u);
                let [sv, cv, dv] = jacobi_jets(&self.qm, v)?.map(Jet::of_v);
                let den = su * dv;
                if den.f.abs() < POINT_POLE_TOL {
                    return Err(Error::NullDivisor(den.f));
                }
                let inv = den.recip();
                [cu * inv, -(sv * du * inv), cv * inv]
            }
        };
        Ok(SurfaceJet::from_components(u, v, kind, comps))
    }

    /// Smallest formula denominator at `(u, v)`; infinite for the entire
    /// ellipsoid parametrization.
    pub fn min_denominator(&self, u: f64, v: f64) -> Result<f64> {
        Ok(match self.spec.family {
            Family::Ellipsoid => f64::INFINITY,
            Family::Hyperboloid2Sheet => (self.pm.jacobi(u)?.dn * self.qm.jacobi(v)?.sn).abs(),
            Family::Hyperboloid1Sheet => (self.qm.jacobi(u)?.sn * self.qm.jacobi(v)?.dn).abs(),
        })
    }

    pub fn lift_metric(&self) -> Metric {
        self.spec.lift_metric()
    }

    /// Closed-form jets on every lattice node, masked near the poles of the
    /// parametrization, with causal types in the quadric's ambient metric.
    pub fn grid(&self, lattice: Lattice) -> SurfaceGrid {
        SurfaceGrid::sample(
            lattice,
            Some(self.spec.ambient),
            |u, v| self.jet(u, v),
            |u, v| self.min_denominator(u, v),
        )
    }

    /// The parametrizing function `y` of the lift at `(u, v)`.
    pub fn y(&self, u: f64, v: f64) -> Result<Scalar> {
        match self.spec.family {
            Family::Ellipsoid => {
                let j = self.pm.jacobi_complex(Complex64::new(u, v))?;
                Ok(Scalar::Complex(j.sn - Complex64::i() * j.cn))
            }
            Family::Hyperboloid1Sheet => Ok(Scalar::Lorentz(crate::lelliptic::y_hyp1(
                Lorentz::new(u, v),
                &self.qm,
            )?)),
            Family::Hyperboloid2Sheet => {
                // Inverse of the 2-sheeted lift applied to the closed form.
                let x = self.lift_jet(u, v)?.x;
                Ok(Scalar::Complex(Complex64::new(x.x, x.y) / (1.0 + x.z)))
            }
        }
    }
}

/// Ellipsoid parametrization `(a sn_p u dn_q v, −b cn_p u cn_q v, c dn_p u sn_q v)`.
pub fn ellipsoid_point(z: Complex64, m: &ModuliTriple) -> Result<SurfaceJet> {
    family_check(m, Family::Ellipsoid)?;
    Quadric::from_moduli(m)?.jet(z.re, z.im)
}

/// 2-sheeted hyperboloid parametrization
/// `(a cn_p u cn_q v, b sn_p u dn_q v, c) / (dn_p u sn_q v)`.
pub fn hyp2_point(z: Complex64, m: &ModuliTriple) -> Result<SurfaceJet> {
    family_check(m, Family::Hyperboloid2Sheet)?;
    Quadric::from_moduli(m)?.jet(z.re, z.im)
}

/// 1-sheeted hyperboloid parametrization
/// `(a cn_q u, −b sn_q v dn_q u, c cn_q v) / (sn_q u dn_q v)`.
pub fn hyp1_point(z: Lorentz, m: &ModuliTriple) -> Result<SurfaceJet> {
    family_check(m, Family::Hyperboloid1Sheet)?;
    Quadric::from_moduli(m)?.jet(z.re, z.im)
}

fn family_check(m: &ModuliTriple, want: Family) -> Result<()> {
    if m.family != want {
        return Err(Error::CaseMismatch(format!(
            "moduli belong to {}, not {}",
            m.family.name(),
            want.name()
        )));
    }
    Ok(())
}

/// A complex or Lorentz scalar.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Scalar {
    Complex(Complex64),
    Lorentz(Lorentz),
}

/// Target of an inverse stereographic projection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftTarget {
    /// Unit sphere in Euclidean space.
    Sphere,
    /// Unit 2-sheeted hyperboloid `x₁² + x₂² − x₃² = −1`.
    Hyp2,
    /// Lorentz sphere `−x₁² + x₂² + x₃² = 1`.
    Hyp1,
}

/// Inverse stereographic projection with unit axes.
///
/// ```
/// use isoquad::quadrics::{inverse_stereographic, LiftTarget, Scalar};
/// use num_complex::Complex64;
/// let x = inverse_stereographic(Scalar::Complex(Complex64::new(0.0, 0.0)), LiftTarget::Sphere).unwrap();
/// assert_eq!((x.x, x.y, x.z), (0.0, 0.0, 1.0));
/// ```
pub fn inverse_stereographic(y: Scalar, target: LiftTarget) -> Result<Vec3> {
    match (target, y) {
        (LiftTarget::Sphere, Scalar::Complex(y)) => {
            let n = y.norm_sqr();
            Ok(Vec3::new(2.0 * y.re, 2.0 * y.im, 1.0 - n) / (1.0 + n))
        }
        (LiftTarget::Hyp2, Scalar::Complex(y)) => {
            let n = y.norm_sqr();
            if (1.0 - n).abs() < POINT_POLE_TOL {
                return Err(Error::Domain(format!("|y| = 1 at y = {y}")));
            }
            Ok(Vec3::new(2.0 * y.re, 2.0 * y.im, 1.0 + n) / (1.0 - n))
        }
        (LiftTarget::Hyp1, Scalar::Lorentz(y)) => {
            let n = y.norm_sqr();
            if (1.0 - n).abs() < POINT_POLE_TOL {
                return Err(Error::Domain(format!("‖y‖² = 1 at y = {y}")));
            }
            Ok(Vec3::new(2.0 * y.re, 2.0 * y.im, 1.0 + n) / (1.0 - n))
        }
        (t, _) => Err(Error::Domain(format!(
            "{t:?} lift needs a {} argument",
            if t == LiftTarget::Hyp1 { "Lorentz" } else { "complex" }
        ))),
    }
}

/// How a branch value sits in its number system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum BranchClass {
    Real,
    Imaginary,
    Unitary,
    /// `‖y‖² = 1`: does not project to the hyperboloid.
    Excluded,
    /// None of the above.
    General,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchValue {
    pub value: Scalar,
    pub class: BranchClass,
}

/// Branch values of the parametrizing function `y` (where `y' = 0`), which
/// project to the umbilics.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchCensus {
    pub values: Vec<BranchValue>,
    /// Set when no branch value projects to an umbilic.
    pub no_umbilics: bool,
}

const BRANCH_TOL: f64 = 1e-12;

fn classify_complex(y: Complex64) -> BranchClass {
    let n = y.norm();
    if (n - 1.0).abs() <= BRANCH_TOL {
        BranchClass::Unitary
    } else if y.im.abs() <= BRANCH_TOL * n {
        BranchClass::Real
    } else if y.re.abs() <= BRANCH_TOL * n {
        BranchClass::Imaginary
    } else {
        BranchClass::General
    }
}

fn classify_lorentz(y: Lorentz) -> BranchClass {
    let scale = y.re.abs().max(y.im.abs());
    if (y.norm_sqr() - 1.0).abs() <= BRANCH_TOL * scale.max(1.0) {
        BranchClass::Excluded
    } else if y.im.abs() <= BRANCH_TOL * scale {
        BranchClass::Real
    } else if y.re.abs() <= BRANCH_TOL * scale {
        BranchClass::Imaginary
    } else {
        BranchClass::General
    }
}

/// Census of the branch values of `y` for a quadric.
///
/// For the ellipsoid and the 2-sheeted hyperboloid these are the four roots
/// of `y² = ±(√(A−C) ± √(B−C))²/(A−B)`. For the 1-sheeted hyperboloid in
/// Minkowski space with purely imaginary `p` there are sixteen Lorentz
/// values `±(q±1)/(ip)`, `±(q±j)/(ip)`, `±j(q±1)/(ip)`, `±j(q±j)/(ip)`,
/// four of which lie on `‖y‖² = 1` and are excluded.
pub fn umbilic_branch_values(spec: &QuadricSpec) -> Result<BranchCensus> {
    let [aa, bb, cc] = spec.signed_squares();
    if (aa - bb).abs() <= AXIS_TOL * aa.abs().max(bb.abs()) {
        return Err(Error::DegenerateAxes(format!(
            "surface of revolution: a = {}, b = {}",
            spec.a, spec.b
        )));
    }
    match spec.family {
        Family::Ellipsoid | Family::Hyperboloid2Sheet => {
            let sign = if spec.family == Family::Ellipsoid { 1.0 } else { -1.0 };
            let s1 = Complex64::new(aa - cc, 0.0).sqrt();
            let s2 = Complex64::new(bb - cc, 0.0).sqrt();
            let mut values = Vec::with_capacity(4);
            for t in [s1 + s2, s1 - s2] {
                let y = (t * t * sign / (aa - bb)).sqrt();
                for v in [y, -y] {
                    values.push(BranchValue {
                        value: Scalar::Complex(v),
                        class: classify_complex(v),
                    });
                }
            }
            let no_umbilics = values.iter().all(|b| b.class == BranchClass::Unitary);
            Ok(BranchCensus { values, no_umbilics })
        }
        Family::Hyperboloid1Sheet => {
            let m = moduli_from_axes(spec)?;
            if spec.ambient != Metric::MinkowskiX || m.case != ModulusCase::II {
                return Ok(BranchCensus {
                    values: Vec::new(),
                    no_umbilics: true,
                });
            }
            // ip is real when p is purely imaginary.
            let ip = -m.p.im;
            let q = m.q.re;
            let mut values = Vec::with_capacity(16);
            for w in [Lorentz::real(q + 1.0), Lorentz::real(q - 1.0), Lorentz::new(q, 1.0), Lorentz::new(q, -1.0)] {
                let base = w.scale(1.0 / ip);
                for v in [base, -base, Lorentz::J * base, -(Lorentz::J * base)] {
                    values.push(BranchValue {
                        value: Scalar::Lorentz(v),
                        class: classify_lorentz(v),
                    });
                }
            }
            let no_umbilics = values.iter().all(|b| b.class == BranchClass::Excluded);
            Ok(BranchCensus { values, no_umbilics })
        }
    }
}

/// The five quantities of the inequality chain placing the umbilics of a
/// Minkowski ellipsoid (`a > b`) in its spacelike part:
/// the squared branch values, the squared intersections of the umbilic
/// equator with the separating curve, and 1. They are strictly increasing.
pub fn minkowski_umbilic_chain(a: f64, b: f64, c: f64) -> Result<[f64; 5]> {
    if !(a > b && b > 0.0 && c > 0.0) {
        return Err(Error::Domain(format!("need a > b > 0 and c > 0, got ({a}, {b}, {c})")));
    }
    let sa = (a * a + c * c).sqrt();
    let sb = (b * b + c * c).sqrt();
    let d = (a * a - b * b).sqrt();
    Ok([
        ((sa - sb) / d).powi(2),
        ((sa - c) / a).powi(2),
        1.0,
        ((sa + c) / a).powi(2),
        ((sa + sb) / d).powi(2),
    ])
}

/// Surface of revolution `x = (r cos v, r sin v, h)` and its Christoffel dual
/// `x* = (−cos v / r, −sin v / r, ∫ h'/r² du)` with the integral taken from
/// `u0`.
pub fn revolution_pair(
    r: &dyn Fn(f64) -> f64,
    h: &dyn Fn(f64) -> f64,
    u0: f64,
    u: f64,
    v: f64,
) -> Result<(Vec3, Vec3)> {
    let ru = r(u);
    if ru.abs() < POINT_POLE_TOL {
        return Err(Error::Domain(format!("profile radius vanishes at u = {u}")));
    }
    let step = 1e-3;
    let integrand = |t: f64| {
        let dh = (h(t - 2.0 * step) - 8.0 * h(t - step) + 8.0 * h(t + step) - h(t + 2.0 * step))
            / (12.0 * step);
        let rt = r(t);
        dh / (rt * rt)
    };
    let height = gauss_legendre(&integrand, u0, u, 64);
    let (s, c) = v.sin_cos();
    Ok((
        Vec3::new(ru * c, ru * s, h(u)),
        Vec3::new(-c / ru, -s / ru, height),
    ))
}

/// Composite 5-point Gauss-Legendre quadrature on `n` panels.
fn gauss_legendre(f: &dyn Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    const X: [f64; 5] = [
        0.0,
        0.538_469_310_105_683_1,
        -0.538_469_310_105_683_1,
        0.906_179_845_938_664,
        -0.906_179_845_938_664,
    ];
    const W: [f64; 5] = [
        0.568_888_888_888_888_9,
        0.478_628_670_499_366_5,
        0.478_628_670_499_366_5,
        0.236_926_885_056_189_1,
        0.236_926_885_056_189_1,
    ];
    let h = (b - a) / n as f64;
    let mut sum = 0.0;
    for k in 0..n {
        let mid = a + (k as f64 + 0.5) * h;
        for (x, w) in X.iter().zip(W) {
            sum += w * f(mid + 0.5 * h * x);
        }
    }
    0.5 * h * sum
}
