use thiserror::Error;

/// Errors produced by the numeric routines and inference operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument fell outside the function's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A root-finding bracket did not straddle a sign change.
    #[error("bracket error: f({lo}) and f({hi}) have the same sign")]
    NoSignChange { lo: f64, hi: f64 },

    /// An iteration failed to converge; carries the last bracket.
    #[error("no convergence after {max_iter} iterations; last bracket [{lo}, {hi}]")]
    NoConvergence { max_iter: usize, lo: f64, hi: f64 },

    /// An estimator was requested for data that cannot support one.
    #[error("estimate undefined: no trials observed")]
    UndefinedEstimate,

    /// Bayes conditioning on an event of zero marginal probability.
    #[error("conditioning on an event of zero probability")]
    NullConditioning,

    /// Normalization requested for an improper (non-integrable) distribution.
    #[error("normalization requested for an improper distribution")]
    ImproperNormalization,

    /// A confidence density degenerated to a boundary atom where a genuine
    /// density function was required.
    #[error("degenerate confidence density for x={x} of n={n} on the {side} side")]
    DegenerateDensity { n: u64, x: u64, side: &'static str },

    /// A likelihood ratio of the form 0/0.
    #[error("indeterminate likelihood ratio 0/0")]
    IndeterminateRatio,

    /// An operation needed inputs that were only partially supplied.
    #[error("incomplete input: {0}")]
    IncompleteInput(String),

    /// An operation that needs at least one observation received none.
    #[error("no evidence: at least one trial is required")]
    NoEvidence,
}

pub type Result<T> = std::result::Result<T, Error>;
