use serde::Serialize;

/// Tolerance for exact algebraic identities.
pub const TOL_IDENTITY: f64 = 1e-11;
/// Tolerance for residuals of closed-form evaluations.
pub const TOL_CLOSED_FORM: f64 = 1e-8;
/// Tolerance for residuals that go through finite differences.
pub const TOL_FINITE_DIFF: f64 = 1e-6;
/// Tolerance for comparisons against numerical quadrature.
pub const TOL_QUADRATURE: f64 = 1e-5;

/// Outcome of one check, serialized as
/// `{check, anchor, samples, max_residual, tolerance, pass, masked}`.
#[derive(Debug, Clone, PartialEq, Serialize, serde::Deserialize)]
pub struct CheckReport {
    pub check: String,
    /// What identity the check certifies, in words.
    pub anchor: String,
    pub samples: usize,
    /// Largest residual seen; `None` (JSON `null`) when a residual was not
    /// finite.
    pub max_residual: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
    /// Nodes or samples excluded because they sit on a pole or a
    /// degenerate point.
    pub masked: usize,
}

impl CheckReport {
    /// Builds a report from residuals; `pass` holds iff every residual is
    /// finite and at most `tolerance`, and there was at least one sample.
    pub fn from_residuals(
        check: &str,
        anchor: &str,
        residuals: impl IntoIterator<Item = f64>,
        tolerance: f64,
        masked: usize,
    ) -> CheckReport {
        let mut samples = 0;
        let mut worst = Some(0.0f64);
        for r in residuals {
            samples += 1;
            worst = match worst {
                Some(w) if r.is_finite() => Some(w.max(r)),
                _ => None,
            };
        }
        CheckReport {
            check: check.to_string(),
            anchor: anchor.to_string(),
            samples,
            max_residual: worst,
            tolerance,
            pass: samples > 0 && worst.is_some_and(|w| w <= tolerance),
            masked,
        }
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        let r = self.max_residual.map_or("non-finite".to_string(), |r| format!("{r:.3e}"));
        format!(
            "{} {}: max residual {} (tol {:.0e}), {} samples, {} masked",
            if self.pass { "PASS" } else { "FAIL" },
            self.check,
            r,
            self.tolerance,
            self.samples,
            self.masked
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_iff_within_tolerance() {
        assert!(CheckReport::from_residuals("a", "", [1e-9, 2e-9], 1e-8, 0).pass);
        assert!(!CheckReport::from_residuals("a", "", [1e-9, 2e-7], 1e-8, 0).pass);
        assert!(!CheckReport::from_residuals("a", "", [f64::NAN], 1e-8, 0).pass);
        assert!(!CheckReport::from_residuals("a", "", [], 1e-8, 0).pass);
    }

    #[test]
    fn json_schema() {
        let r = CheckReport::from_residuals("x", "y", [0.5], 1.0, 2);
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        for k in ["check", "anchor", "samples", "max_residual", "tolerance", "pass", "masked"] {
            assert!(keys.contains(&k), "{k}");
        }
    }
}
