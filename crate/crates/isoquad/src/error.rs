use thiserror::Error;

/// Everything that can go wrong while evaluating a parametrization, a dual
/// surface or a check.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Division by a Lorentz number on the light cone.
    #[error("division by a null Lorentz number (squared modulus {0:e})")]
    NullDivisor(f64),
    #[error("argument outside the domain: {0}")]
    Domain(String),
    /// Evaluation too close to a pole of the formula.
    #[error("pole: {0}")]
    Pole(String),
    #[error("degenerate half-axes: {0}")]
    DegenerateAxes(String),
    #[error("case tag does not match the moduli: {0}")]
    CaseMismatch(String),
    /// The Christoffel integrator hit a vanishing metric coefficient.
    #[error("singular integration step: {0}")]
    SingularStep(String),
    #[error("finite-difference stencil touches a masked node")]
    StencilMasked,
    /// Square-root branch point of an elliptic-coordinate formula.
    #[error("square-root branch point: {0}")]
    BranchPoint(String),
    /// A degeneracy check found nothing to test.
    #[error("no degenerate nodes on the grid")]
    NoDegenerateNodes,
    #[error("configuration: {0}")]
    Config(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
