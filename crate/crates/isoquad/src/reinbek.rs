//! Quadrics and their Christoffel duals in elliptic coordinates `(t₁, t₂)`,
//! an oracle independent of the Jacobi-function parametrizations.
//!
//! With signed axis squares `A = (A₁, A₂, A₃)` the quadric point is
//! `xᵢ = √(Aᵢ (Aᵢ − t₁)(Aᵢ − t₂) / ((Aᵢ − Aⱼ)(Aᵢ − Aₖ)))` in the first octant.
//! The dual formulas are sums of `artanh √·` and `arctan √·` terms.

use crate::error::{Error, Result};
use crate::geometry::Vec3;

/// Radicands this close below zero are clamped to zero.
const CLAMP_TOL: f64 = 1e-12;
/// Relative distance below which an inequality of the chain counts as an
/// equality.
const EQUALITY_TOL: f64 = 1e-14;

/// Which confocal family the coordinates live on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum ConfocalFamily {
    /// `(x₁/a)² + (x₂/b)² + (x₃/c)² = 1`, chain `a² > t₁ > b² > t₂ > c²`.
    Ellipsoid,
    /// `(x₁/a)² + (x₂/b)² − (x₃/c)² = 1`, chain `a² > t₁ > b² > −c² > t₂`.
    OneSheet,
    /// `(x₁/a)² − (x₂/b)² − (x₃/c)² = 1`, chain `a² > −b² > t₁ > −c² > t₂`;
    /// needs `c > b`.
    TwoSheet,
}

impl ConfocalFamily {
    fn squares(self, a: f64, b: f64, c: f64) -> [f64; 3] {
        let (a2, b2, c2) = (a * a, b * b, c * c);
        match self {
            ConfocalFamily::Ellipsoid => [a2, b2, c2],
            ConfocalFamily::OneSheet => [a2, b2, -c2],
            ConfocalFamily::TwoSheet => [a2, -b2, -c2],
        }
    }
}

/// Validated elliptic coordinates on a quadric with half-axes `(a, b, c)`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct EllipticCoordinates {
    pub family: ConfocalFamily,
    pub t1: f64,
    pub t2: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl EllipticCoordinates {
    /// Checks the strict inequality chain of `family`: `Domain` when it is
    /// violated, `BranchPoint` when one of its links is an equality.
    pub fn new(family: ConfocalFamily, t1: f64, t2: f64, a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a > 0.0 && b > 0.0 && c > 0.0) || ![t1, t2].iter().all(|t| t.is_finite()) {
            return Err(Error::Domain(format!("bad input a={a}, b={b}, c={c}, t=({t1}, {t2})")));
        }
        let [s1, s2, s3] = family.squares(a, b, c);
        let chain = match family {
            ConfocalFamily::Ellipsoid => {
                if !(a > b && b > c) {
                    return Err(Error::Domain(format!("ellipsoid chain needs a > b > c, got ({a}, {b}, {c})")));
                }
                [s1, t1, s2, t2, s3]
            }
            ConfocalFamily::OneSheet => {
                if !(a > b) {
                    return Err(Error::Domain(format!("one-sheeted chain needs a > b, got ({a}, {b})")));
                }
                [s1, t1, s2, s3, t2]
            }
            ConfocalFamily::TwoSheet => {
                if !(c > b) {
                    return Err(Error::Domain(format!("two-sheeted chain needs c > b, got (b, c) = ({b}, {c})")));
                }
                [s1, s2, t1, s3, t2]
            }
        };
        let scale = chain.iter().fold(1.0f64, |m, x| m.max(x.abs()));
        for w in chain.windows(2) {
            let gap = w[0] - w[1];
            if gap.abs() <= EQUALITY_TOL * scale {
                return Err(Error::BranchPoint(format!(
                    "t = ({t1}, {t2}) sits on the boundary of the {family:?} chain"
                )));
            }
            if gap < 0.0 {
                return Err(Error::Domain(format!(
                    "t = ({t1}, {t2}) violates the {family:?} chain {chain:?}"
                )));
            }
        }
        Ok(EllipticCoordinates { family, t1, t2, a, b, c })
    }

    /// Signed axis squares of the family.
    pub fn squares(&self) -> [f64; 3] {
        self.family.squares(self.a, self.b, self.c)
    }

    /// Residual of the quadric equation `Σ xᵢ² / Aᵢ − 1` at `x`.
    pub fn membership_residual(&self, x: &Vec3) -> f64 {
        let s = self.squares();
        x.x * x.x / s[0] + x.y * x.y / s[1] + x.z * x.z / s[2] - 1.0
    }
}

fn root(x: f64) -> Result<f64> {
    if x >= 0.0 {
        Ok(x.sqrt())
    } else if x >= -CLAMP_TOL {
        Ok(0.0)
    } else {
        Err(Error::Domain(format!("negative radicand {x:e}")))
    }
}

/// Quadric point and Christoffel dual at the given coordinates.
///
/// The dual of item (i) (ellipsoid) is assembled with `t₁ − b²` in its
/// second component and a negated third component; the other two families
/// use their formulas as they stand. Along the coordinate lines the pair
/// satisfies `x*_{t₁} = ρ x_{t₁}` and `x*_{t₂} = −ρ x_{t₂}`.
///
/// ```
/// use isoquad::reinbek::{reinbek_pair, ConfocalFamily, EllipticCoordinates};
/// let e = EllipticCoordinates::new(ConfocalFamily::Ellipsoid, 3.0, 1.5, 2.0, 1.5, 1.0).unwrap();
/// let (x, _) = reinbek_pair(&e).unwrap();
/// assert!(e.membership_residual(&x).abs() < 1e-14);
/// ```
pub fn reinbek_pair(coords: &EllipticCoordinates) -> Result<(Vec3, Vec3)> {
    let EllipticCoordinates { t1, t2, a, b, c, .. } = *coords;
    let s = coords.squares();
    let mut x = Vec3::zeros();
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        x[i] = root(s[i] * (s[i] - t1) * (s[i] - t2) / ((s[i] - s[j]) * (s[i] - s[k])))?;
    }
    let (a2, b2, c2) = (a * a, b * b, c * c);
    let artanh_root = |r: f64| -> Result<f64> { Ok(root(r)?.atanh()) };
    let arctan_root = |r: f64| -> Result<f64> { Ok(root(r)?.atan()) };
    let dual = match coords.family {
        ConfocalFamily::Ellipsoid => Vec3::new(
            root(a2 / ((a2 - b2) * (a2 - c2)))? * artanh_root((a2 - t1) / (a2 - t2))?,
            root(b2 / ((a2 - b2) * (b2 - c2)))? * arctan_root((t1 - b2) / (b2 - t2))?,
            -root(c2 / ((a2 - c2) * (b2 - c2)))? * artanh_root((t2 - c2) / (t1 - c2))?,
        ),
        ConfocalFamily::OneSheet => Vec3::new(
            root(a2 / ((a2 - b2) * (a2 + c2)))? * artanh_root((a2 - t1) / (a2 - t2))?,
            root(b2 / ((a2 - b2) * (b2 + c2)))? * arctan_root((t1 - b2) / (b2 - t2))?,
            root(c2 / ((a2 + c2) * (b2 + c2)))? * arctan_root(-(t1 + c2) / (c2 + t2))?,
        ),
        ConfocalFamily::TwoSheet => Vec3::new(
            root(a2 / ((a2 + b2) * (a2 + c2)))? * artanh_root((a2 - t1) / (a2 - t2))?,
            root(b2 / ((a2 + b2) * (c2 - b2)))? * artanh_root((b2 + t1) / (b2 + t2))?,
            root(c2 / ((a2 + c2) * (c2 - b2)))? * arctan_root(-(t1 + c2) / (c2 + t2))?,
        ),
    };
    if !dual.iter().all(|v| v.is_finite()) {
        return Err(Error::BranchPoint(format!("dual diverges at t = ({t1}, {t2})")));
    }
    Ok((x, dual))
}

/// Sine of the angle between `x_{tᵢ}` and `x*_{tᵢ}`, maximized over
/// `i = 1, 2`, with derivatives by central differences of step `h`
/// (relative to the coordinate's size). Zero for a Combescure pair.
pub fn tangent_parallelism(coords: &EllipticCoordinates, h: f64) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for along_t1 in [true, false] {
        let t = if along_t1 { coords.t1 } else { coords.t2 };
        let step = h * t.abs().max(1.0);
        let at = |dt: f64| {
            let mut c = *coords;
            if along_t1 {
                c.t1 += dt;
            } else {
                c.t2 += dt;
            }
            reinbek_pair(&c)
        };
        let (xp, sp) = at(step)?;
        let (xm, sm) = at(-step)?;
        let dx = xp - xm;
        let ds = sp - sm;
        worst = worst.max(dx.cross(&ds).norm() / (dx.norm() * ds.norm()));
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_is_branch_point() {
        let r = EllipticCoordinates::new(ConfocalFamily::Ellipsoid, 2.25, 1.5, 2.0, 1.5, 1.0);
        assert!(matches!(r, Err(Error::BranchPoint(_))));
        let r = EllipticCoordinates::new(ConfocalFamily::Ellipsoid, 5.0, 1.5, 2.0, 1.5, 1.0);
        assert!(matches!(r, Err(Error::Domain(_))));
        let r = EllipticCoordinates::new(ConfocalFamily::TwoSheet, -1.2, -2.5, 2.0, 1.5, 1.0);
        assert!(matches!(r, Err(Error::Domain(_))));
    }

    #[test]
    fn on_quadric() {
        for (fam, t1, t2, a, b, c) in [
            (ConfocalFamily::Ellipsoid, 3.0, 1.5, 2.0, 1.5, 1.0),
            (ConfocalFamily::OneSheet, 3.0, -1.5, 2.0, 1.5, 1.0),
            (ConfocalFamily::TwoSheet, -1.5, -3.0, 2.0, 1.0, 1.5),
        ] {
            let e = EllipticCoordinates::new(fam, t1, t2, a, b, c).unwrap();
            let (x, xs) = reinbek_pair(&e).unwrap();
            assert!(e.membership_residual(&x).abs() < 1e-14, "{fam:?}");
            assert!(xs.iter().all(|v| v.is_finite()));
            assert!(tangent_parallelism(&e, 1e-6).unwrap() < 1e-7, "{fam:?}");
        }
    }

    #[test]
    fn second_component_vanishes_at_b_squared() {
        // t1 → b² from above: the x₂ factor √(b² − t1) closes.
        let e = EllipticCoordinates::new(ConfocalFamily::Ellipsoid, 2.25 + 1e-12, 1.5, 2.0, 1.5, 1.0).unwrap();
        let (x, _) = reinbek_pair(&e).unwrap();
        assert!(x.y.abs() < 1e-5);
    }
}
