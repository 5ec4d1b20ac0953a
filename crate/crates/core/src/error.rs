use num_complex::Complex64;
use thiserror::Error;

/// Failure modes shared by every computation in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside an operation's validated domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Adaptive summation hit `max_terms` before the stall criterion was met.
    /// Carries the partial sum accumulated so far.
    #[error("series truncation failure after {terms_used} terms (partial sum {partial})")]
    Truncation {
        partial: Complex64,
        terms_used: usize,
    },

    /// A result or intermediate left the finite double-precision range.
    #[error("overflow: {0}")]
    Overflow(String),

    /// The requested series diverges for these inputs; refused rather than summed.
    #[error("divergent: {0}")]
    Divergence(String),

    /// Closed-form evaluation too close to a pole or branch point.
    #[error("singularity: {0}")]
    Singularity(String),

    /// An iterative kernel failed to converge.
    #[error("convergence failure: {0}")]
    ConvergenceFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
