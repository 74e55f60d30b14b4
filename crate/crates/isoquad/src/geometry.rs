//! Ambient metrics, second-order surface jets and causal types.

use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::Vector3;

use crate::error::{Error, Result};

pub type Vec3 = Vector3<f64>;

/// Ambient inner product on ℝ³.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Metric {
    Euclidean,
    /// Signature `(+, +, −)`; the third axis is timelike.
    MinkowskiZ,
    /// Signature `(−, +, +)`; the first axis is timelike.
    MinkowskiX,
}

impl Metric {
    pub fn signature(self) -> [f64; 3] {
        match self {
            Metric::Euclidean => [1.0, 1.0, 1.0],
            Metric::MinkowskiZ => [1.0, 1.0, -1.0],
            Metric::MinkowskiX => [-1.0, 1.0, 1.0],
        }
    }

    pub fn inner(self, a: &Vec3, b: &Vec3) -> f64 {
        let s = self.signature();
        s[0] * a.x * b.x + s[1] * a.y * b.y + s[2] * a.z * b.z
    }

    pub fn is_definite(self) -> bool {
        self == Metric::Euclidean
    }
}

impl std::str::FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "euclidean" | "e" => Ok(Metric::Euclidean),
            "minkowski-z" | "minkowskiz" | "mz" => Ok(Metric::MinkowskiZ),
            "minkowski-x" | "minkowskix" | "mx" => Ok(Metric::MinkowskiX),
            other => Err(Error::Config(format!("unknown ambient metric `{other}`"))),
        }
    }
}

/// A scalar function of `(u, v)` together with its first and second
/// partial derivatives. Arithmetic propagates all of them exactly, which is
/// how the closed-form surface jets are assembled.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Jet {
    pub f: f64,
    pub u: f64,
    pub v: f64,
    pub uu: f64,
    pub uv: f64,
    pub vv: f64,
}

impl Jet {
    pub fn constant(f: f64) -> Jet {
        Jet {
            f,
            ..Jet::default()
        }
    }

    /// Lifts `(g, g', g'')` of a function of `u` alone.
    pub fn of_u(g: [f64; 3]) -> Jet {
        Jet {
            f: g[0],
            u: g[1],
            uu: g[2],
            ..Jet::default()
        }
    }

    /// Lifts `(g, g', g'')` of a function of `v` alone.
    pub fn of_v(g: [f64; 3]) -> Jet {
        Jet {
            f: g[0],
            v: g[1],
            vv: g[2],
            ..Jet::default()
        }
    }

    pub fn recip(self) -> Jet {
        let g = self.f;
        let g2 = g * g;
        let g3 = g2 * g;
        Jet {
            f: 1.0 / g,
            u: -self.u / g2,
            v: -self.v / g2,
            uu: 2.0 * self.u * self.u / g3 - self.uu / g2,
            uv: 2.0 * self.u * self.v / g3 - self.uv / g2,
            vv: 2.0 * self.v * self.v / g3 - self.vv / g2,
        }
    }

    pub fn scale(self, s: f64) -> Jet {
        Jet {
            f: s * self.f,
            u: s * self.u,
            v: s * self.v,
            uu: s * self.uu,
            uv: s * self.uv,
            vv: s * self.vv,
        }
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        Jet {
            f: self.f + o.f,
            u: self.u + o.u,
            v: self.v + o.v,
            uu: self.uu + o.uu,
            uv: self.uv + o.uv,
            vv: self.vv + o.vv,
        }
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        self + (-o)
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        Jet {
            f: self.f * o.f,
            u: self.u * o.f + self.f * o.u,
            v: self.v * o.f + self.f * o.v,
            uu: self.uu * o.f + 2.0 * self.u * o.u + self.f * o.uu,
            uv: self.uv * o.f + self.u * o.v + self.v * o.u + self.f * o.uv,
            vv: self.vv * o.f + 2.0 * self.v * o.v + self.f * o.vv,
        }
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, s: f64) -> Jet {
        self.scale(s)
    }
}

/// How the derivatives of a [`SurfaceJet`] were obtained.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub enum DerivativeMode {
    ClosedForm,
    FiniteDifference { step: f64, order: u8 },
    /// Positions integrated numerically; derivatives exact from the
    /// integrand.
    Integrated,
}

/// Whether the parameter point is read as `u + iv` or `u + jv`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum ParamKind {
    Complex,
    Lorentz,
}

/// Position and first and second parameter derivatives at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceJet {
    pub u: f64,
    pub v: f64,
    pub param: ParamKind,
    pub x: Vec3,
    pub x_u: Vec3,
    pub x_v: Vec3,
    pub x_uu: Vec3,
    pub x_uv: Vec3,
    pub x_vv: Vec3,
    pub mode: DerivativeMode,
}

impl SurfaceJet {
    /// Assembles a closed-form jet from three component jets.
    pub fn from_components(u: f64, v: f64, param: ParamKind, c: [Jet; 3]) -> SurfaceJet {
        let pick = |g: fn(&Jet) -> f64| Vec3::new(g(&c[0]), g(&c[1]), g(&c[2]));
        SurfaceJet {
            u,
            v,
            param,
            x: pick(|j| j.f),
            x_u: pick(|j| j.u),
            x_v: pick(|j| j.v),
            x_uu: pick(|j| j.uu),
            x_uv: pick(|j| j.uv),
            x_vv: pick(|j| j.vv),
            mode: DerivativeMode::ClosedForm,
        }
    }

    /// First fundamental form `(E, F, G)` in the given metric.
    pub fn first_fundamental_form(&self, metric: Metric) -> (f64, f64, f64) {
        (
            metric.inner(&self.x_u, &self.x_u),
            metric.inner(&self.x_u, &self.x_v),
            metric.inner(&self.x_v, &self.x_v),
        )
    }

    /// Applies `x ↦ diag(s)·x` to every entry.
    pub fn scaled(&self, s: [f64; 3]) -> SurfaceJet {
        let d = Vec3::new(s[0], s[1], s[2]);
        let m = |w: &Vec3| w.component_mul(&d);
        SurfaceJet {
            x: m(&self.x),
            x_u: m(&self.x_u),
            x_v: m(&self.x_v),
            x_uu: m(&self.x_uu),
            x_uv: m(&self.x_uv),
            x_vv: m(&self.x_vv),
            ..*self
        }
    }

    pub fn is_finite(&self) -> bool {
        [self.x, self.x_u, self.x_v, self.x_uu, self.x_uv, self.x_vv]
            .iter()
            .all(|w| w.iter().all(|c| c.is_finite()))
    }
}

/// Causal type of a tangent plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum CausalType {
    Spacelike,
    Timelike,
    Degenerate,
}

impl CausalType {
    /// CSV encoding: 1 spacelike, −1 timelike, 0 degenerate.
    pub fn code(self) -> i32 {
        match self {
            CausalType::Spacelike => 1,
            CausalType::Timelike => -1,
            CausalType::Degenerate => 0,
        }
    }
}

/// Relative gate on `EG − F²` for the degenerate classification.
pub const CAUSAL_TOL: f64 = 1e-9;

/// Classifies the induced metric by the sign of `EG − F²`, with a gate
/// relative to `(|E| + |G|)²`.
pub fn causal_type(jet: &SurfaceJet, ambient: Metric) -> CausalType {
    if ambient.is_definite() {
        return CausalType::Spacelike;
    }
    let (e, f, g) = jet.first_fundamental_form(ambient);
    let det = e * g - f * f;
    let scale = (e.abs() + g.abs()).powi(2);
    if det > CAUSAL_TOL * scale {
        CausalType::Spacelike
    } else if det < -CAUSAL_TOL * scale {
        CausalType::Timelike
    } else {
        CausalType::Degenerate
    }
}
