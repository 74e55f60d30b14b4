//! Residual evaluators for the geometric identities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::CheckReport;
use crate::duals::{implicit_residual, ImplicitForm, PairMode};
use crate::error::{Error, Result};
use crate::geometry::{Metric, SurfaceJet, Vec3};
use crate::grid::SurfaceGrid;
use crate::paracomplex::Lorentz;
use crate::quadrics::{ModuliTriple, QuadricSpec};

/// Relative quadric-equation residual at each jet.
pub fn membership_check(jets: &[SurfaceJet], spec: &QuadricSpec, tol: f64, masked: usize) -> CheckReport {
    let axes = spec.axes();
    let res = jets.iter().map(|j| {
        let t: f64 = (0..3).map(|k| (j.x[k] / axes[k]).powi(2)).sum();
        spec.membership_residual(&j.x).abs() / (1.0 + t)
    });
    CheckReport::from_residuals("membership", "the parametrization lies on the quadric", res, tol, masked)
}

/// `|(x_u, x_v)| / (|x_u| |x_v|)` in `metric`.
pub fn orthogonality_check(jets: &[SurfaceJet], metric: Metric, tol: f64, masked: usize) -> CheckReport {
    let res = jets
        .iter()
        .map(|j| metric.inner(&j.x_u, &j.x_v).abs() / (j.x_u.norm() * j.x_v.norm()));
    CheckReport::from_residuals(
        "orthogonality",
        "parameter lines are orthogonal in the ambient metric",
        res,
        tol,
        masked,
    )
}

/// `|det(x_uv, x_u, x_v)| / (|x_uv| |x_u| |x_v|)`: the parameters are
/// conjugate.
pub fn conjugacy_check(jets: &[SurfaceJet], tol: f64, masked: usize) -> CheckReport {
    let res = jets.iter().map(|j| {
        let det = j.x_uv.dot(&j.x_u.cross(&j.x_v));
        let scale = j.x_uv.norm() * j.x_u.norm() * j.x_v.norm();
        if scale == 0.0 {
            0.0
        } else {
            det.abs() / scale
        }
    });
    CheckReport::from_residuals("conjugacy", "mixed derivative lies in the tangent plane", res, tol, masked)
}

/// Proportionality factors `ρ_u`, `ρ_v` with `x*_u ≈ ρ_u x_u`.
fn ratios(x: &SurfaceJet, xs: &SurfaceJet) -> (f64, f64) {
    (
        xs.x_u.dot(&x.x_u) / x.x_u.norm_squared(),
        xs.x_v.dot(&x.x_v) / x.x_v.norm_squared(),
    )
}

/// Residual of the Christoffel pair relations at one node: the larger of
/// the two sines between corresponding tangents, `|ρ_u + ρ_v| / |ρ_u|`,
/// and, for spacelike pairs, 1 when `ρ_u ≤ 0`.
pub fn pair_residual(x: &SurfaceJet, xs: &SurfaceJet, mode: PairMode) -> f64 {
    let sin = |a: &Vec3, b: &Vec3| a.cross(b).norm() / (a.norm() * b.norm());
    let (ru, rv) = ratios(x, xs);
    let mut r = sin(&xs.x_u, &x.x_u).max(sin(&xs.x_v, &x.x_v));
    r = r.max((ru + rv).abs() / ru.abs());
    if mode == PairMode::Spacelike && !(ru > 0.0) {
        r = r.max(1.0);
    }
    r
}

/// Christoffel pair check over matched jets.
pub fn christoffel_pair_check_jets(
    pairs: &[(SurfaceJet, SurfaceJet)],
    mode: PairMode,
    tol: f64,
    masked: usize,
) -> CheckReport {
    let res = pairs.iter().map(|(x, xs)| pair_residual(x, xs, mode));
    let anchor = match mode {
        PairMode::Spacelike => "x*_u = rho x_u and x*_v = -rho x_v with rho > 0",
        PairMode::Timelike => "x*_u = rho_u x_u and x*_v = rho_v x_v with rho_v = -rho_u",
    };
    CheckReport::from_residuals("christoffel-pair", anchor, res, tol, masked)
}

/// Christoffel pair check on two grids over the same lattice.
pub fn christoffel_pair_check(primal: &SurfaceGrid, dual: &SurfaceGrid, mode: PairMode, tol: f64) -> Result<CheckReport> {
    if primal.lattice != dual.lattice {
        return Err(Error::Config("primal and dual grids use different lattices".into()));
    }
    let mut pairs = Vec::new();
    let mut masked = 0;
    for (a, b) in primal.jets.iter().zip(&dual.jets) {
        match (a, b) {
            (Some(a), Some(b)) => pairs.push((*a, *b)),
            _ => masked += 1,
        }
    }
    Ok(christoffel_pair_check_jets(&pairs, mode, tol, masked))
}

/// Induced metric of the dual against `ρ²` times the primal metric with
/// the sign of `F` flipped, relative to `ρ²(|E| + |G|)`.
pub fn conformality_check(pairs: &[(SurfaceJet, SurfaceJet)], metric: Metric, tol: f64, masked: usize) -> CheckReport {
    let res = pairs.iter().map(|(x, xs)| {
        let (ru, _) = ratios(x, xs);
        let (e, f, g) = x.first_fundamental_form(metric);
        let (es, fs, gs) = xs.first_fundamental_form(metric);
        let r2 = ru * ru;
        let d = (es - r2 * e).abs().max((fs + r2 * f).abs()).max((gs - r2 * g).abs());
        d / (r2 * (e.abs() + g.abs()))
    });
    CheckReport::from_residuals(
        "conformality",
        "dual metric is rho^2 times the primal metric with the cross term reversed",
        res,
        tol,
        masked,
    )
}

/// `|x_uu + x_vv|` (Laplace) or `|x_uu − x_vv|` (wave) relative to the
/// size of the jet.
pub fn harmonic_check(jets: &[SurfaceJet], wave: bool, tol: f64, masked: usize) -> CheckReport {
    let res = jets.iter().map(|j| {
        let op = if wave { j.x_uu - j.x_vv } else { j.x_uu + j.x_vv };
        op.norm() / (j.x_uu.norm() + j.x_vv.norm() + j.x_u.norm() + j.x_v.norm())
    });
    let (name, anchor) = if wave {
        ("harmonic", "components solve the wave equation (real parts of para-holomorphic maps)")
    } else {
        ("harmonic", "components are harmonic (real parts of holomorphic maps)")
    };
    CheckReport::from_residuals(name, anchor, res, tol, masked)
}

/// Relative implicit-equation residual at unit-axes dual points.
pub fn implicit_check(
    points: &[Vec3],
    form: ImplicitForm,
    moduli: &ModuliTriple,
    tol: f64,
    masked: usize,
) -> Result<CheckReport> {
    let res = points
        .iter()
        .map(|x| implicit_residual(form, moduli, x).map(|r| r.relative()))
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::from_residuals(
        "implicit",
        "the dual satisfies its implicit cosh/cos equation",
        res,
        tol,
        masked,
    ))
}

/// Numerical dual against a closed-form dual after one translation, fixed
/// at the first node valid in both, relative to the largest `|x*|`.
pub fn oracle_check(numeric: &SurfaceGrid, closed: &SurfaceGrid, tol: f64) -> Result<CheckReport> {
    if numeric.lattice != closed.lattice {
        return Err(Error::Config("oracle grids use different lattices".into()));
    }
    let both: Vec<(Vec3, Vec3)> = numeric
        .jets
        .iter()
        .zip(&closed.jets)
        .filter_map(|(a, b)| Some((a.as_ref()?.x, b.as_ref()?.x)))
        .collect();
    let masked = numeric.lattice.len() - both.len();
    let Some(&(n0, c0)) = both.first() else {
        return Ok(CheckReport::from_residuals("oracle", "", [], tol, masked));
    };
    let shift = c0 - n0;
    let scale = both.iter().map(|(_, c)| (c - c0).norm()).fold(1.0, f64::max);
    let res = both.iter().map(|(n, c)| (n + shift - c).norm() / scale);
    Ok(CheckReport::from_residuals(
        "oracle",
        "integrated Christoffel equations reproduce the closed-form dual up to translation",
        res,
        tol,
        masked,
    ))
}

/// Least-squares fit of `target ≈ s · source + t` over matched points;
/// returns the relative residual `max |s·source + t − target| / scale`.
pub fn affine_gauge_residual(source: &[Vec3], target: &[Vec3]) -> f64 {
    let n = source.len().min(target.len());
    if n == 0 {
        return f64::NAN;
    }
    let ms = source[..n].iter().sum::<Vec3>() / n as f64;
    let mt = target[..n].iter().sum::<Vec3>() / n as f64;
    let (mut num, mut den) = (0.0, 0.0);
    for k in 0..n {
        num += (source[k] - ms).dot(&(target[k] - mt));
        den += (source[k] - ms).norm_squared();
    }
    let s = num / den;
    let scale = target[..n].iter().map(|t| (t - mt).norm()).fold(1e-300, f64::max);
    (0..n)
        .map(|k| ((source[k] - ms) * s - (target[k] - mt)).norm() / scale)
        .fold(0.0, f64::max)
}

/// A rectangle `[u0, u1] × [v0, v1]` of the parameter plane.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Region {
    pub u0: f64,
    pub u1: f64,
    pub v0: f64,
    pub v1: f64,
}

impl Region {
    pub fn sample(&self, rng: &mut impl Rng) -> (f64, f64) {
        (rng.gen_range(self.u0..self.u1), rng.gen_range(self.v0..self.v1))
    }
}

/// Para-Cauchy-Riemann residuals `|(Re f)_u − (Im f)_v|` and
/// `|(Im f)_u − (Re f)_v|` by central differences at `samples` seeded
/// random points of `region`, relative to `max(1, |f_u|)`.
pub fn para_cr_check(
    f: &dyn Fn(Lorentz) -> Result<Lorentz>,
    region: Region,
    samples: usize,
    seed: u64,
    step: f64,
    tol: f64,
) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut res = Vec::with_capacity(samples);
    let mut masked = 0;
    for _ in 0..samples {
        let (u, v) = region.sample(&mut rng);
        let d = |du: f64, dv: f64| f(Lorentz::new(u + du, v + dv));
        let r = (|| -> Result<f64> {
            let fu = (d(step, 0.0)? - d(-step, 0.0)?).scale(0.5 / step);
            let fv = (d(0.0, step)? - d(0.0, -step)?).scale(0.5 / step);
            let r = (fu.re - fv.im).abs().max((fu.im - fv.re).abs());
            Ok(r / fu.re.abs().max(fu.im.abs()).max(1.0))
        })();
        match r {
            Ok(r) => res.push(r),
            Err(_) => masked += 1,
        }
    }
    CheckReport::from_residuals(
        "para-cauchy-riemann",
        "(Re f)_u = (Im f)_v and (Im f)_u = (Re f)_v",
        res,
        tol,
        masked,
    )
}

/// Bisection tolerance in the parameter for locating a degenerate node.
pub const BISECTION_TOL: f64 = 1e-12;

/// One located degenerate parameter line.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct DegenerateLine {
    /// `true` for a line `v = value`, `false` for `u = value`.
    pub along_u: bool,
    pub value: f64,
    /// Largest relative `|G|` (or `|E|`) found sweeping the line.
    pub max_residual: f64,
}

/// Locates every degenerate node crossed between neighbouring grid nodes
/// (a sign change of `EG − F²` in `metric`), refines it by bisection and
/// sweeps the parameter line through it, measuring whichever of `E`, `G`
/// vanished there relative to `|E| + |G|`.
///
/// A crossing found walking along `v` lies on a line `v = const`, and vice
/// versa. Returns `NoDegenerateNodes` when nothing is found, which is
/// always the case for a Euclidean ambient.
pub fn degenerate_line_check(
    grid: &SurfaceGrid,
    sampler: &dyn Fn(f64, f64) -> Result<SurfaceJet>,
    metric: Metric,
    tol: f64,
) -> Result<(CheckReport, Vec<DegenerateLine>)> {
    if metric.is_definite() {
        return Err(Error::NoDegenerateNodes);
    }
    let l = grid.lattice;
    let det = |j: &SurfaceJet| {
        let (e, f, g) = j.first_fundamental_form(metric);
        e * g - f * f
    };
    let mut lines: Vec<DegenerateLine> = Vec::new();
    let seen = |along_u: bool, value: f64, lines: &Vec<DegenerateLine>| -> bool {
        let step = if along_u { l.dv } else { l.du };
        lines
            .iter()
            .any(|d| d.along_u == along_u && (d.value - value).abs() < 1e-3 * step)
    };
    // Walk each column along v (lines v = const) and each row along u.
    for along_u in [true, false] {
        let (outer, inner) = if along_u { (l.nu, l.nv) } else { (l.nv, l.nu) };
        for a in 0..outer {
            for b in 0..inner - 1 {
                let (i0, k0, i1, k1) = if along_u { (a, b, a, b + 1) } else { (b, a, b + 1, a) };
                let (Some(j0), Some(j1)) = (grid.get(i0, k0), grid.get(i1, k1)) else { continue };
                let (d0, d1) = (det(j0), det(j1));
                if d0 * d1 > 0.0 || (d0 == 0.0 && d1 == 0.0) {
                    continue;
                }
                let at = |t: f64| -> Result<f64> {
                    let j = if along_u { sampler(l.u(a), t)? } else { sampler(t, l.v(a))? };
                    Ok(det(&j))
                };
                let (mut lo, mut hi) = if along_u { (l.v(k0), l.v(k1)) } else { (l.u(i0), l.u(i1)) };
                let mut flo = d0;
                while hi - lo > BISECTION_TOL {
                    let mid = 0.5 * (lo + hi);
                    let fm = at(mid)?;
                    if fm == 0.0 {
                        lo = mid;
                        hi = mid;
                        break;
                    }
                    if (fm > 0.0) == (flo > 0.0) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                let root = 0.5 * (lo + hi);
                if seen(along_u, root, &lines) {
                    continue;
                }
                let probe = if along_u { sampler(l.u(a), root)? } else { sampler(root, l.v(a))? };
                let (e, _, g) = probe.first_fundamental_form(metric);
                let use_g = g.abs() <= e.abs();
                let mut worst = 0.0f64;
                let count = if along_u { l.nu } else { l.nv };
                for s in 0..2 * count - 1 {
                    let t = if along_u { l.u0 + 0.5 * s as f64 * l.du } else { l.v0 + 0.5 * s as f64 * l.dv };
                    let j = match if along_u { sampler(t, root) } else { sampler(root, t) } {
                        Ok(j) => j,
                        Err(_) => continue,
                    };
                    let (e, _, g) = j.first_fundamental_form(metric);
                    let r = if use_g { g.abs() } else { e.abs() } / (e.abs() + g.abs());
                    worst = worst.max(r);
                }
                lines.push(DegenerateLine {
                    along_u,
                    value: root,
                    max_residual: worst,
                });
            }
        }
    }
    if lines.is_empty() {
        return Err(Error::NoDegenerateNodes);
    }
    let report = CheckReport::from_residuals(
        "degenerate-lines",
        "a degenerate induced metric degenerates along a whole parameter line",
        lines.iter().map(|d| d.max_residual),
        tol,
        grid.masked_count(),
    );
    Ok((report, lines))
}
