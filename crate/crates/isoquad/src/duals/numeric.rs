//! Numerical Christoffel transform: integrates `dx* = ρ_u S x_u du + ρ_v S x_v dv`
//! over a lattice from the unit-axes lift of a quadric.

use rayon::prelude::*;

use super::PairMode;
use crate::error::{Error, Result};
use crate::geometry::{causal_type, DerivativeMode, Metric, SurfaceJet, Vec3};
use crate::grid::{Lattice, NodeMask, SurfaceGrid};

/// Refinement change above which a [`NumericDual`] is flagged.
pub const REFINEMENT_FLAG: f64 = 1e-7;

/// `(x, x)` relative to `|x|²` below which a tangent is treated as null.
const NULL_TANGENT_TOL: f64 = 1e-10;

/// Result of [`christoffel_numeric`].
#[derive(Debug, Clone, PartialEq)]
pub struct NumericDual {
    /// Dual jets, with `x*(u0, v0) = 0`.
    pub grid: SurfaceGrid,
    /// Largest difference between integrating along `u` then `v` and along
    /// `v` then `u`, relative to the largest `|x*|`.
    pub closure: f64,
    /// Largest change at a node when every step is halved, relative to the
    /// largest `|x*|`.
    pub refinement: f64,
    /// Set when `refinement` exceeds [`REFINEMENT_FLAG`].
    pub flagged: bool,
}

/// Tangent fields of the dual at one point, with their derivatives.
#[derive(Debug, Clone, Copy)]
struct Field {
    t_u: Vec3,
    t_v: Vec3,
    t_uu: Vec3,
    t_uv: Vec3,
    t_vv: Vec3,
}

fn field(jet: &SurfaceJet, scale: &Vec3, metric: Metric, mode: PairMode) -> Result<Field> {
    let eu = metric.inner(&jet.x_u, &jet.x_u);
    let ev = metric.inner(&jet.x_v, &jet.x_v);
    if eu.abs() < NULL_TANGENT_TOL * jet.x_u.norm_squared() || ev.abs() < NULL_TANGENT_TOL * jet.x_v.norm_squared() {
        return Err(Error::SingularStep(format!(
            "null or vanishing tangent at ({}, {})",
            jet.u, jet.v
        )));
    }
    let sigma = match mode {
        PairMode::Spacelike => -1.0,
        PairMode::Timelike => 1.0,
    };
    let rho_u = 2.0 / eu;
    let rho_v = sigma * 2.0 / ev;
    // ∂ρ = −2ρ (x_·, ∂x_·) / (x_·, x_·)
    let rho_u_u = -2.0 * rho_u * metric.inner(&jet.x_uu, &jet.x_u) / eu;
    let rho_u_v = -2.0 * rho_u * metric.inner(&jet.x_uv, &jet.x_u) / eu;
    let rho_v_v = -2.0 * rho_v * metric.inner(&jet.x_vv, &jet.x_v) / ev;
    let s = |w: &Vec3| w.component_mul(scale);
    Ok(Field {
        t_u: s(&(jet.x_u * rho_u)),
        t_v: s(&(jet.x_v * rho_v)),
        t_uu: s(&(jet.x_u * rho_u_u + jet.x_uu * rho_u)),
        t_uv: s(&(jet.x_u * rho_u_v + jet.x_uv * rho_u)),
        t_vv: s(&(jet.x_v * rho_v_v + jet.x_vv * rho_v)),
    })
}

/// Positions on `lattice` by Simpson's rule on the half-step lattice,
/// integrating first along `u` (`u_first`) or first along `v`.
fn integrate(fields: &[Field], half: &Lattice, lattice: &Lattice, u_first: bool) -> Vec<Vec3> {
    let f = |i: usize, k: usize| &fields[half.index(i, k)];
    let (du, dv) = (lattice.du / 6.0, lattice.dv / 6.0);
    let step_u = |i: usize, k: usize| (f(2 * i, 2 * k).t_u + f(2 * i + 1, 2 * k).t_u * 4.0 + f(2 * i + 2, 2 * k).t_u) * du;
    let step_v = |i: usize, k: usize| (f(2 * i, 2 * k).t_v + f(2 * i, 2 * k + 1).t_v * 4.0 + f(2 * i, 2 * k + 2).t_v) * dv;
    let mut x = vec![Vec3::zeros(); lattice.len()];
    if u_first {
        for i in 1..lattice.nu {
            x[lattice.index(i, 0)] = x[lattice.index(i - 1, 0)] + step_u(i - 1, 0);
        }
        for k in 1..lattice.nv {
            for i in 0..lattice.nu {
                x[lattice.index(i, k)] = x[lattice.index(i, k - 1)] + step_v(i, k - 1);
            }
        }
    } else {
        for k in 1..lattice.nv {
            x[lattice.index(0, k)] = x[lattice.index(0, k - 1)] + step_v(0, k - 1);
        }
        for k in 0..lattice.nv {
            for i in 1..lattice.nu {
                x[lattice.index(i, k)] = x[lattice.index(i - 1, k)] + step_u(i - 1, k);
            }
        }
    }
    x
}

fn fields_on(
    base: &(dyn Fn(f64, f64) -> Result<SurfaceJet> + Sync),
    lattice: &Lattice,
    scale: &Vec3,
    metric: Metric,
    mode: PairMode,
) -> Result<Vec<Field>> {
    lattice
        .nodes()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&(i, k)| {
            let jet = base(lattice.u(i), lattice.v(k)).map_err(|e| match e {
                Error::SingularStep(_) => e,
                other => Error::SingularStep(format!("base surface unavailable: {other}")),
            })?;
            field(&jet, scale, metric, mode)
        })
        .collect()
}

/// Integrates the Christoffel dual of `base` (a unit-axes lift, conformal
/// in `metric`) scaled by `scale = (a, b, c)`:
/// `x*_u = ρ_u S x_u`, `x*_v = ρ_v S x_v` with `ρ_u = 2/(x_u, x_u)` and
/// `ρ_v = ∓2/(x_v, x_v)` (minus for spacelike pairs).
///
/// The lattice must avoid the umbilics and the poles of `base`; a null
/// tangent or an unavailable base jet is a `SingularStep`. The sphere with
/// `a = b = c` is rejected outright, as every point is umbilic.
pub fn christoffel_numeric(
    base: &(dyn Fn(f64, f64) -> Result<SurfaceJet> + Sync),
    scale: [f64; 3],
    lattice: Lattice,
    metric: Metric,
    mode: PairMode,
) -> Result<NumericDual> {
    let [a, b, c] = scale;
    if (a - b).abs() <= 1e-12 * a.abs() && (b - c).abs() <= 1e-12 * b.abs() {
        return Err(Error::SingularStep(
            "a = b = c: every point is umbilic, no curvature-line net".into(),
        ));
    }
    let s = Vec3::new(a, b, c);
    let half = lattice.refined();
    let fields = fields_on(base, &half, &s, metric, mode)?;
    let xa = integrate(&fields, &half, &lattice, true);
    let xb = integrate(&fields, &half, &lattice, false);

    let quarter = half.refined();
    let fine_fields = fields_on(base, &quarter, &s, metric, mode)?;
    let xf = integrate(&fine_fields, &quarter, &half, true);

    let size = xa.iter().map(|x| x.norm()).fold(1e-300, f64::max).max(1.0);
    let mut closure = 0.0f64;
    let mut refinement = 0.0f64;
    for (i, k) in lattice.nodes() {
        let n = lattice.index(i, k);
        closure = closure.max((xa[n] - xb[n]).norm());
        refinement = refinement.max((xa[n] - xf[half.index(2 * i, 2 * k)]).norm());
    }
    closure /= size;
    refinement /= size;

    let mut jets = Vec::with_capacity(lattice.len());
    let mut causal = Vec::with_capacity(lattice.len());
    for (i, k) in lattice.nodes() {
        let f = &fields[half.index(2 * i, 2 * k)];
        let jet = SurfaceJet {
            u: lattice.u(i),
            v: lattice.v(k),
            param: base(lattice.u(i), lattice.v(k))?.param,
            x: xa[lattice.index(i, k)],
            x_u: f.t_u,
            x_v: f.t_v,
            x_uu: f.t_uu,
            x_uv: f.t_uv,
            x_vv: f.t_vv,
            mode: DerivativeMode::Integrated,
        };
        causal.push(Some(causal_type(&jet, metric)));
        jets.push(Some(jet));
    }
    Ok(NumericDual {
        grid: SurfaceGrid {
            lattice,
            mask: vec![NodeMask::Valid; lattice.len()],
            jets,
            causal,
        },
        closure,
        refinement,
        flagged: refinement > REFINEMENT_FLAG,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Metric;
    use crate::quadrics::{Family, Quadric, QuadricSpec};

    #[test]
    fn sphere_is_rejected() {
        let l = Lattice::from_ranges(0.1, 0.5, 4, 0.1, 0.5, 4).unwrap();
        let base = |_u: f64, _v: f64| -> Result<SurfaceJet> { unreachable!() };
        let r = christoffel_numeric(&base, [1.0, 1.0, 1.0], l, Metric::Euclidean, PairMode::Spacelike);
        assert!(matches!(r, Err(Error::SingularStep(_))));
    }

    #[test]
    fn ellipsoid_closes() {
        let q = Quadric::new(QuadricSpec::new(Family::Ellipsoid, 1.5, 1.0, 0.7, Metric::Euclidean).unwrap()).unwrap();
        let l = Lattice::from_ranges(0.2, 1.0, 9, 0.2, 1.0, 9).unwrap();
        let nd = christoffel_numeric(&|u, v| q.lift_jet(u, v), q.spec().axes(), l, Metric::Euclidean, PairMode::Spacelike)
            .unwrap();
        assert!(nd.closure < 1e-9, "{}", nd.closure);
        assert!(!nd.flagged, "{}", nd.refinement);
    }
}
