//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument left the mathematical domain of an operation by more than
    /// the roundoff clamp (1e-14).
    #[error("domain error: {0}")]
    Domain(String),

    /// A root-bracketing precondition failed; the requested configuration does
    /// not admit a solution.
    #[error("no root: {0}")]
    NoRoot(String),

    /// The group needs at least 4 rotation centers.
    #[error("invalid group: l must be >= 4, got {0}")]
    InvalidL(u32),

    /// A structural precondition on arguments failed.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The KKT Jacobian is numerically singular.
    #[error("singular KKT system (condition estimate {0:.3e})")]
    SingularSystem(f64),

    /// Newton iteration diverged (non-finite iterate).
    #[error("no convergence after {0} iterations")]
    NonConvergence(usize),
}
