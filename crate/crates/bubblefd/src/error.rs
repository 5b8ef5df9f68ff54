//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A constructor or entry point rejected its inputs.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The centered-difference comparison principle needs |b(x)|*dx <= a(x)
    /// (for Black-Scholes coefficients, |rho*x| <= sigma^2/dx). Solver entry
    /// points refuse to run otherwise unless explicitly overridden.
    #[error(
        "stability condition violated: dx = {dx} exceeds the largest admissible \
         step {max_dx_allowed} (need |drift(x)|*dx <= diffusion(x) on the whole \
         domain); rerun with --allow-unstable to override"
    )]
    Unstable { dx: f64, max_dx_allowed: f64 },

    /// The assembled step matrix is not an M-matrix where a solver requires one.
    #[error("M-matrix precondition violated: {0}")]
    NotMMatrix(String),

    /// An iterative or direct solve did not reach its tolerance.
    #[error("solver failure: {0}")]
    SolverFailure(String),

    /// Special-function evaluation outside the supported domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Root bracketing or refinement failed.
    #[error("root finding failed: {0}")]
    RootFinding(String),

    /// Configuration file or flag parsing failed.
    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 1 for configuration/validation
    /// problems, 2 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParameter(_)
            | Error::Unstable { .. }
            | Error::Config(_)
            | Error::Io(_) => 1,
            Error::NotMMatrix(_)
            | Error::SolverFailure(_)
            | Error::Domain(_)
            | Error::RootFinding(_) => 2,
        }
    }
}
