//! Implicit equations of the dual surfaces.

use num_complex::Complex64;

use crate::elliptic::ModulusCase;
use crate::error::{Error, Result};
use crate::geometry::Vec3;
use crate::quadrics::{Family, ModuliTriple};

/// Which implicit relation to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum ImplicitForm {
    /// Scherk tower: `q² cosh(p x₁) + cos(pq x₂) − p² cosh(q x₃) = 0`.
    Scherk,
    /// Maximal surface dual to a 2-sheeted hyperboloid.
    Maximal,
    /// Timelike minimal surface dual to a 1-sheeted hyperboloid.
    TimelikeMinimal,
}

impl ImplicitForm {
    pub fn for_family(family: Family) -> ImplicitForm {
        match family {
            Family::Ellipsoid => ImplicitForm::Scherk,
            Family::Hyperboloid2Sheet => ImplicitForm::Maximal,
            Family::Hyperboloid1Sheet => ImplicitForm::TimelikeMinimal,
        }
    }
}

/// Left-hand side of an implicit equation and the sum of the magnitudes
/// of its three terms, for a relative test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImplicitResidual {
    pub value: f64,
    pub scale: f64,
}

impl ImplicitResidual {
    pub fn relative(&self) -> f64 {
        self.value.abs() / self.scale.max(f64::MIN_POSITIVE)
    }

    fn of(terms: [f64; 3]) -> Self {
        ImplicitResidual {
            value: terms.iter().sum(),
            scale: terms.iter().map(|t| t.abs()).sum(),
        }
    }
}

/// Evaluates the implicit equation of `form` at the unit-axes dual point
/// `x` (each component divided by its half-axis).
///
/// Supported combinations:
///
/// | form | case | relation |
/// |---|---|---|
/// | Scherk | I | `q² cosh(p x₁) + cos(pq x₂) − p² cosh(q x₃)` |
/// | Maximal | I | `q² cos(p x₁) + cosh(pq x₂) − p² cosh(q x₃)` |
/// | Maximal | II, `p = iP` | `q² cosh(P x₁) + cos(Pq x₂) − P² cosh(q x₃)` |
/// | Maximal | III, `q = iQ` | `−Q² cos(p x₁) + cos(pQ x₂) − p² cos(Q x₃)` |
/// | TimelikeMinimal | I | `q² cos(p x₁) + cos(pq x₂) − p² cosh(q x₃)` |
/// | TimelikeMinimal | II, `p = iP` | `q² cosh(P x₁) − cosh(Pq x₂) − P² cosh(q x₃)` |
///
/// Anything else is a `CaseMismatch`, as is a `case` tag that disagrees
/// with `p`.
pub fn implicit_residual(form: ImplicitForm, m: &ModuliTriple, x: &Vec3) -> Result<ImplicitResidual> {
    check_case(m)?;
    let (x1, x2, x3) = (x.x, x.y, x.z);
    let mismatch = || {
        Err(Error::CaseMismatch(format!(
            "no implicit equation for {form:?} in case {:?}",
            m.case
        )))
    };
    let terms = match (form, m.case) {
        (ImplicitForm::Scherk, ModulusCase::I) => {
            let (p, q) = (m.p.re, m.q.re);
            [q * q * (p * x1).cosh(), (p * q * x2).cos(), -p * p * (q * x3).cosh()]
        }
        (ImplicitForm::Maximal, ModulusCase::I) => {
            let (p, q) = (m.p.re, m.q.re);
            [q * q * (p * x1).cos(), (p * q * x2).cosh(), -p * p * (q * x3).cosh()]
        }
        (ImplicitForm::Maximal, ModulusCase::II) => {
            let (pp, q) = (m.p.im, m.q.re);
            [q * q * (pp * x1).cosh(), (pp * q * x2).cos(), -pp * pp * (q * x3).cosh()]
        }
        (ImplicitForm::Maximal, ModulusCase::III) => {
            let (p, qq) = (m.p.re, m.q.im);
            [-qq * qq * (p * x1).cos(), (p * qq * x2).cos(), -p * p * (qq * x3).cos()]
        }
        (ImplicitForm::TimelikeMinimal, ModulusCase::I) => {
            let (p, q) = (m.p.re, m.q.re);
            [q * q * (p * x1).cos(), (p * q * x2).cos(), -p * p * (q * x3).cosh()]
        }
        (ImplicitForm::TimelikeMinimal, ModulusCase::II) => {
            let (pp, q) = (m.p.im, m.q.re);
            [q * q * (pp * x1).cosh(), -(pp * q * x2).cosh(), -pp * pp * (q * x3).cosh()]
        }
        _ => return mismatch(),
    };
    Ok(ImplicitResidual::of(terms))
}

fn check_case(m: &ModuliTriple) -> Result<()> {
    let p = m.p;
    let tol = 1e-12 * p.norm().max(1.0);
    let ok = match m.case {
        ModulusCase::I => p.im.abs() <= tol && p.re > 0.0 && p.re <= 1.0,
        ModulusCase::II => p.re.abs() <= tol && p.im > 0.0,
        ModulusCase::III => p.im.abs() <= tol && p.re > 1.0,
    };
    let q2 = Complex64::new(1.0, 0.0) - p * p;
    if !ok || (m.q * m.q - q2).norm() > 1e-12 * q2.norm().max(1.0) {
        return Err(Error::CaseMismatch(format!(
            "case {:?} does not match p = {}, q = {}",
            m.case, m.p, m.q
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Metric;

    #[test]
    fn mismatched_tag_is_rejected() {
        let mut m = ModuliTriple::new(
            Complex64::new(0.6, 0.0),
            Complex64::new(1.0, 0.0),
            Family::Ellipsoid,
            Metric::Euclidean,
        )
        .unwrap();
        m.case = ModulusCase::II;
        let r = implicit_residual(ImplicitForm::Scherk, &m, &Vec3::zeros());
        assert!(matches!(r, Err(Error::CaseMismatch(_))));
    }

    #[test]
    fn scherk_needs_case_one() {
        let m = ModuliTriple::new(
            Complex64::new(1.3, 0.0),
            Complex64::new(0.0, 0.5),
            Family::Hyperboloid2Sheet,
            Metric::MinkowskiZ,
        )
        .unwrap();
        assert!(matches!(
            implicit_residual(ImplicitForm::Scherk, &m, &Vec3::zeros()),
            Err(Error::CaseMismatch(_))
        ));
    }
}
