//! Numerical checks of the geometric identities, each producing a
//! [`CheckReport`].

mod checks;
mod fd;
mod report;
mod suite;

pub use checks::{
    affine_gauge_residual, christoffel_pair_check, christoffel_pair_check_jets, conformality_check, conjugacy_check,
    degenerate_line_check, harmonic_check, implicit_check, membership_check, oracle_check, orthogonality_check,
    pair_residual, para_cr_check, DegenerateLine, Region, BISECTION_TOL,
};
pub use fd::{fd_jet, FD_STEP};
pub use report::{CheckReport, TOL_CLOSED_FORM, TOL_FINITE_DIFF, TOL_IDENTITY, TOL_QUADRATURE};
pub use suite::{run_suite, SuiteConfig, CHECK_NAMES};
