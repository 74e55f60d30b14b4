//! Finite-difference jets, the oracle for every closed-form derivative.

use crate::error::{Error, Result};
use crate::geometry::{DerivativeMode, ParamKind, SurfaceJet, Vec3};

/// Default finite-difference step.
pub const FD_STEP: f64 = 1e-5;

/// Central-difference jet of `sampler` at `(u, v)`.
///
/// `order` 2 uses the 9-point stencil; `order` 4 uses five points per axis
/// and a 16-point cross stencil for the mixed derivative. A `Pole`,
/// `NullDivisor` or `Domain` failure anywhere on the stencil is reported as
/// `StencilMasked`.
///
/// ```
/// use isoquad::geometry::{ParamKind, Vec3};
/// use isoquad::verify::fd_jet;
/// let j = fd_jet(&|u, v| Ok(Vec3::new(u, v, 0.0)), 0.3, 0.1, 1e-5, 2, ParamKind::Complex).unwrap();
/// assert!((j.x_u - Vec3::new(1.0, 0.0, 0.0)).norm() < 1e-10);
/// assert!(j.x_uv.norm() < 1e-6);
/// ```
pub fn fd_jet(
    sampler: &dyn Fn(f64, f64) -> Result<Vec3>,
    u: f64,
    v: f64,
    step: f64,
    order: u8,
    param: ParamKind,
) -> Result<SurfaceJet> {
    let f = |du: f64, dv: f64| -> Result<Vec3> {
        sampler(u + du, v + dv).map_err(|e| match e {
            Error::Pole(_) | Error::NullDivisor(_) | Error::Domain(_) => Error::StencilMasked,
            other => other,
        })
    };
    let h = step;
    let x = f(0.0, 0.0)?;
    let (x_u, x_v, x_uu, x_vv, x_uv) = match order {
        2 => {
            let (up, um) = (f(h, 0.0)?, f(-h, 0.0)?);
            let (vp, vm) = (f(0.0, h)?, f(0.0, -h)?);
            let mixed = (f(h, h)? - f(h, -h)? - f(-h, h)? + f(-h, -h)?) / (4.0 * h * h);
            (
                (up - um) / (2.0 * h),
                (vp - vm) / (2.0 * h),
                (up - 2.0 * x + um) / (h * h),
                (vp - 2.0 * x + vm) / (h * h),
                mixed,
            )
        }
        4 => {
            let axis = |dir: (f64, f64)| -> Result<(Vec3, Vec3)> {
                let g = |s: f64| f(s * dir.0, s * dir.1);
                let (p1, m1, p2, m2) = (g(h)?, g(-h)?, g(2.0 * h)?, g(-2.0 * h)?);
                let d1 = (-p2 + 8.0 * p1 - 8.0 * m1 + m2) / (12.0 * h);
                let d2 = (-p2 + 16.0 * p1 - 30.0 * x + 16.0 * m1 - m2) / (12.0 * h * h);
                Ok((d1, d2))
            };
            let (x_u, x_uu) = axis((1.0, 0.0))?;
            let (x_v, x_vv) = axis((0.0, 1.0))?;
            let w = [(1.0, 8.0), (2.0, -1.0)];
            let mut mixed = Vec3::zeros();
            for (i, wi) in w {
                for (k, wk) in w {
                    let c = f(i * h, k * h)? - f(i * h, -k * h)? - f(-i * h, k * h)? + f(-i * h, -k * h)?;
                    mixed += c * (wi * wk);
                }
            }
            (x_u, x_v, x_uu, x_vv, mixed / (144.0 * h * h))
        }
        other => {
            return Err(Error::Config(format!(
                "finite-difference order {other} is not supported (use 2 or 4)"
            )))
        }
    };
    Ok(SurfaceJet {
        u,
        v,
        param,
        x,
        x_u,
        x_v,
        x_uu,
        x_uv,
        x_vv,
        mode: DerivativeMode::FiniteDifference { step, order },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_on_quadratics() {
        let s = |u: f64, v: f64| Ok(Vec3::new(u * u, u * v, v * v - u));
        for order in [2, 4] {
            let j = fd_jet(&s, 0.4, -0.2, 1e-3, order, ParamKind::Complex).unwrap();
            assert!((j.x_u - Vec3::new(0.8, -0.2, -1.0)).norm() < 1e-9);
            assert!((j.x_uv - Vec3::new(0.0, 1.0, 0.0)).norm() < 1e-7);
            assert!((j.x_vv - Vec3::new(0.0, 0.0, 2.0)).norm() < 1e-7);
        }
    }

    #[test]
    fn masked_stencil() {
        let s = |u: f64, _v: f64| {
            if u > 0.0 {
                Err(Error::Pole("right half".into()))
            } else {
                Ok(Vec3::zeros())
            }
        };
        assert_eq!(fd_jet(&s, 0.0, 0.0, 1e-3, 2, ParamKind::Complex), Err(Error::StencilMasked));
    }
}
