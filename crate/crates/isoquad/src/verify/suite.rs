//! Check-suite orchestration for one quadric.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::checks::*;
use super::fd::FD_STEP;
use super::report::*;
use crate::duals::{christoffel_numeric, ClosedDual, ImplicitForm, REFINEMENT_FLAG};
use crate::error::{Error, Result};
use crate::geometry::{Metric, SurfaceJet, Vec3};
use crate::grid::{Lattice, GRID_MASK_TOL};
use crate::lelliptic::y_hyp1;
use crate::paracomplex::Lorentz;
use crate::quadrics::{Family, Quadric, QuadricSpec};

/// Every check the suite knows, in report order.
pub const CHECK_NAMES: &[&str] = &[
    "membership",
    "orthogonality",
    "conjugacy",
    "christoffel-pair",
    "conformality",
    "harmonic",
    "implicit",
    "oracle",
    "involution",
    "degenerate-lines",
    "para-cauchy-riemann",
];

/// What to check and where.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub spec: QuadricSpec,
    pub lattice: Lattice,
    pub seed: u64,
    /// Random points per pointwise check.
    pub samples: usize,
    /// Check names; empty selects every check that applies to the quadric.
    pub checks: Vec<String>,
    /// Pair the primal with itself instead of its dual (must fail).
    pub negative_control: bool,
}

impl SuiteConfig {
    pub fn new(spec: QuadricSpec, lattice: Lattice) -> Self {
        SuiteConfig {
            spec,
            lattice,
            seed: 0,
            samples: 1000,
            checks: Vec::new(),
            negative_control: false,
        }
    }
}

fn wave(family: Family) -> bool {
    family == Family::Hyperboloid1Sheet
}

/// Seeded random points of the lattice rectangle where the primal and the
/// dual are both clear of their singularities, with their jets.
fn sample_pairs(dual: &ClosedDual, lattice: &Lattice, n: usize, seed: u64) -> (Vec<(SurfaceJet, SurfaceJet)>, usize) {
    let q = dual.quadric();
    let region = Region {
        u0: lattice.u0,
        u1: lattice.u(lattice.nu - 1),
        v0: lattice.v0,
        v1: lattice.v(lattice.nv - 1),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<(f64, f64)> = (0..n).map(|_| region.sample(&mut rng)).collect();
    let results: Vec<Option<(SurfaceJet, SurfaceJet)>> = points
        .par_iter()
        .map(|&(u, v)| {
            let clear = q.min_denominator(u, v).ok()? >= GRID_MASK_TOL
                && dual.point_with_clearance(u, v).ok()?.1 >= GRID_MASK_TOL;
            if !clear {
                return None;
            }
            Some((q.jet(u, v).ok()?, dual.jet(u, v, 1e-4, 4).ok()?))
        })
        .collect();
    let masked = results.iter().filter(|r| r.is_none()).count();
    (results.into_iter().flatten().collect(), masked)
}

fn failed(check: &str, err: &Error, tol: f64) -> CheckReport {
    let mut r = CheckReport::from_residuals(check, &format!("not evaluated: {err}"), [], tol, 0);
    r.max_residual = None;
    r
}

/// Runs the selected checks and returns their reports in [`CHECK_NAMES`]
/// order. Unknown or inapplicable check names are a `Config` error.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<CheckReport>> {
    for name in &cfg.checks {
        if !CHECK_NAMES.contains(&name.as_str()) {
            return Err(Error::Config(format!(
                "unknown check `{name}`; known checks: {}",
                CHECK_NAMES.join(", ")
            )));
        }
    }
    let explicit = !cfg.checks.is_empty();
    let wanted = |name: &str| !explicit || cfg.checks.iter().any(|c| c == name);
    let quadric = Quadric::new(cfg.spec)?;
    let dual = ClosedDual::new(quadric);
    let family = cfg.spec.family;
    let ambient = cfg.spec.ambient;
    let moduli = *quadric.moduli();
    let mode = dual.pair_mode();
    let (pairs, masked) = sample_pairs(&dual, &cfg.lattice, cfg.samples, cfg.seed);
    let primal: Vec<SurfaceJet> = pairs.iter().map(|p| p.0).collect();
    let duals: Vec<SurfaceJet> = pairs.iter().map(|p| p.1).collect();
    let mut out = Vec::new();

    if wanted("membership") {
        out.push(membership_check(&primal, &cfg.spec, TOL_IDENTITY, masked));
    }
    if wanted("orthogonality") {
        out.push(orthogonality_check(&primal, ambient, TOL_CLOSED_FORM, masked));
    }
    if wanted("conjugacy") {
        out.push(conjugacy_check(&primal, TOL_FINITE_DIFF, masked));
    }
    if wanted("christoffel-pair") {
        let checked: Vec<(SurfaceJet, SurfaceJet)> = if cfg.negative_control {
            primal.iter().map(|x| (*x, *x)).collect()
        } else {
            pairs.clone()
        };
        out.push(christoffel_pair_check_jets(&checked, mode, TOL_FINITE_DIFF, masked));
    }
    if wanted("conformality") {
        out.push(conformality_check(&pairs, ambient, TOL_FINITE_DIFF, masked));
    }
    if wanted("harmonic") {
        out.push(harmonic_check(&duals, wave(family), TOL_QUADRATURE, masked));
    }
    if wanted("implicit") {
        let axes = cfg.spec.axes();
        let unit: Vec<Vec3> = duals
            .iter()
            .map(|j| Vec3::new(j.x.x / axes[0], j.x.y / axes[1], j.x.z / axes[2]))
            .collect();
        match implicit_check(&unit, ImplicitForm::for_family(family), &moduli, TOL_CLOSED_FORM, masked) {
            Ok(r) => out.push(r),
            Err(e @ Error::CaseMismatch(_)) if explicit => {
                return Err(Error::Config(format!("implicit check does not apply: {e}")))
            }
            Err(Error::CaseMismatch(_)) => {}
            Err(e) => return Err(e),
        }
    }
    if wanted("oracle") {
        out.extend(oracle_reports(&dual, &cfg.lattice));
    }
    if wanted("involution") {
        out.push(involution_report(&dual, &cfg.lattice));
    }
    if wanted("degenerate-lines") {
        let grid = quadric.grid(cfg.lattice);
        match degenerate_line_check(&grid, &|u, v| quadric.jet(u, v), ambient, TOL_CLOSED_FORM) {
            Ok((r, _)) => out.push(r),
            Err(Error::NoDegenerateNodes) if explicit => out.push(CheckReport {
                check: "degenerate-lines".into(),
                anchor: "no degenerate nodes on the grid (vacuous pass)".into(),
                samples: 0,
                max_residual: Some(0.0),
                tolerance: TOL_CLOSED_FORM,
                pass: true,
                masked: grid.masked_count(),
            }),
            Err(Error::NoDegenerateNodes) => {}
            Err(e) => out.push(failed("degenerate-lines", &e, TOL_CLOSED_FORM)),
        }
    }
    if wanted("para-cauchy-riemann") {
        if family == Family::Hyperboloid1Sheet {
            let qm = *quadric.q_modulus();
            let l = &cfg.lattice;
            let region = Region { u0: l.u0, u1: l.u(l.nu - 1), v0: l.v0, v1: l.v(l.nv - 1) };
            out.push(para_cr_check(&|z: Lorentz| y_hyp1(z, &qm), region, cfg.samples, cfg.seed, FD_STEP, TOL_FINITE_DIFF));
        } else if explicit {
            return Err(Error::Config("para-cauchy-riemann applies to hyp1 only".into()));
        }
    }
    Ok(out)
}

/// Fewest nodes per direction the numerical duals are integrated on.
const QUADRATURE_MIN_NODES: usize = 33;

/// `lattice`, refined until the quadrature checks measure the transform
/// rather than the coarseness of the user's grid. The dual varies much
/// faster than the quadric near the poles, so a grid fine enough to draw
/// the quadric can still be too coarse to integrate on.
fn quadrature_lattice(lattice: &Lattice) -> Lattice {
    let mut l = *lattice;
    while l.nu.min(l.nv) < QUADRATURE_MIN_NODES && l.nu.min(l.nv) > 1 {
        l = l.refined();
    }
    l
}

/// Successive gates on `|(x_u, x_u)| / |x_u|²` (and likewise for `x_v`)
/// below which a lift tangent counts as nearly null. The quadrature checks
/// tighten the gate until the integrator reports convergence.
const NEAR_NULL_GATES: [f64; 7] = [0.0, 1e-3, 3e-3, 1e-2, 3e-2, 0.1, 0.3];

/// The largest sub-lattice on which the lift is regular: every lift jet
/// exists, no tangent is nearly null at `gate`, and `(x_u, x_u)`, `(x_v, x_v)` keep
/// one sign throughout.
///
/// The Christoffel factor `2/(x_u, x_u)` blows up on a degenerate line, so
/// the transform cannot be integrated across one, and fixed-step quadrature
/// loses its accuracy well before reaching it.
fn regular_patch(q: &Quadric, lattice: &Lattice, gate: f64) -> Lattice {
    let metric = q.lift_metric();
    let class: Vec<Option<(bool, bool)>> = lattice
        .nodes()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&(i, k)| {
            let j = q.lift_jet(lattice.u(i), lattice.v(k)).ok()?;
            let (eu, ev) = (metric.inner(&j.x_u, &j.x_u), metric.inner(&j.x_v, &j.x_v));
            if eu.abs() < gate * j.x_u.norm_squared() || ev.abs() < gate * j.x_v.norm_squared() {
                return None;
            }
            Some((eu > 0.0, ev > 0.0))
        })
        .collect();
    // Largest all-`want` rectangle by the histogram method, row by row.
    let mut best = (0usize, 0usize, 0usize, 0usize); // (i0, k0, width, height)
    for want in [(true, true), (true, false), (false, true), (false, false)] {
        let mut heights = vec![0usize; lattice.nu];
        for k in 0..lattice.nv {
            for (i, h) in heights.iter_mut().enumerate() {
                *h = if class[lattice.index(i, k)] == Some(want) { *h + 1 } else { 0 };
            }
            let mut stack: Vec<usize> = Vec::new();
            for i in 0..=lattice.nu {
                let h = if i < lattice.nu { heights[i] } else { 0 };
                while let Some(&top) = stack.last() {
                    if heights[top] < h {
                        break;
                    }
                    stack.pop();
                    let left = stack.last().map_or(0, |&l| l + 1);
                    let (w, ht) = (i - left, heights[top]);
                    if w * ht > best.2 * best.3 {
                        best = (left, k + 1 - ht, w, ht);
                    }
                }
                stack.push(i);
            }
        }
    }
    let (i0, k0, nu, nv) = best;
    Lattice { u0: lattice.u(i0), v0: lattice.v(k0), nu, nv, ..*lattice }
}

/// Oracle comparison, path closure and step-halving stability of the
/// numerical dual.
///
/// Near a degenerate line the integrand grows without bound, so the patch
/// is the largest regular one on which the integrator's own step-halving
/// estimate has converged; everything outside it is reported as masked.
/// The oracle comparison against the closed form stays independent of
/// that choice.
fn oracle_reports(dual: &ClosedDual, lattice: &Lattice) -> Vec<CheckReport> {
    let q = *dual.quadric();
    let full = quadrature_lattice(lattice);
    let base = move |u: f64, v: f64| q.lift_jet(u, v);
    let mut attempt = None;
    for gate in NEAR_NULL_GATES {
        let patch = regular_patch(&q, &full, gate);
        if patch.nu < 2 || patch.nv < 2 {
            break;
        }
        let numeric = christoffel_numeric(&base, q.spec().axes(), patch, q.lift_metric(), dual.pair_mode());
        let converged = matches!(&numeric, Ok(nd) if !nd.flagged);
        attempt = Some((patch, numeric));
        if converged {
            break;
        }
    }
    let Some((patch, numeric)) = attempt else {
        let e = Error::SingularStep("the lift has no regular patch on the lattice".into());
        return vec![failed("oracle", &e, TOL_QUADRATURE)];
    };
    let nd = match numeric {
        Ok(nd) => nd,
        Err(e) => {
            return vec![failed("oracle", &e, TOL_QUADRATURE)];
        }
    };
    let cut = full.len() - patch.len();
    let closed = dual.grid(patch, 1e-4, 4, None);
    let mut oracle = oracle_check(&nd.grid, &closed, TOL_QUADRATURE).unwrap_or_else(|e| failed("oracle", &e, TOL_QUADRATURE));
    oracle.masked += cut;
    let mut out = vec![oracle];
    out.push(CheckReport::from_residuals(
        "path-closure",
        "integrating along u then v agrees with v then u",
        [nd.closure],
        1e-7,
        cut,
    ));
    out.push(CheckReport::from_residuals(
        "step-halving",
        "halving the quadrature step changes the numerical dual by little",
        [nd.refinement],
        REFINEMENT_FLAG,
        cut,
    ));
    out
}

/// Dual of the dual: integrating the Christoffel equations of the
/// unit-axes dual with the quadric's axes returns the quadric up to a
/// translation and a global scale.
fn involution_report(dual: &ClosedDual, lattice: &Lattice) -> CheckReport {
    let q = *dual.quadric();
    let axes = q.spec().axes();
    let inv = [1.0 / axes[0], 1.0 / axes[1], 1.0 / axes[2]];
    let d = *dual;
    let base = move |u: f64, v: f64| Ok(d.jet(u, v, 1e-4, 4)?.scaled(inv));
    let metric: Metric = q.lift_metric();
    let tol = 1e-4;
    let lattice = &quadrature_lattice(lattice);
    match christoffel_numeric(&base, axes, *lattice, metric, dual.pair_mode()) {
        Ok(nd) => {
            let mut src = Vec::new();
            let mut dst = Vec::new();
            for (i, k) in lattice.nodes() {
                if let (Some(j), Ok(x)) = (nd.grid.get(i, k), q.jet(lattice.u(i), lattice.v(k))) {
                    src.push(j.x);
                    dst.push(x.x);
                }
            }
            CheckReport::from_residuals(
                "involution",
                "the dual of the dual is the quadric up to translation and scale",
                [affine_gauge_residual(&src, &dst)],
                tol,
                lattice.len() - src.len(),
            )
        }
        Err(e) => failed("involution", &e, tol),
    }
}
