use thiserror::Error;

/// Errors surfaced by the engine. Endpoint misuse inside the engine itself
/// is a programming error and panics instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    /// A stated precondition of an operation does not hold for the inputs.
    #[error("precondition failed: {0}")]
    PreconditionFailed(&'static str),

    /// A theorem hypothesis does not hold, so the construction was not
    /// attempted. Carries the name of the failing hypothesis.
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(&'static str),

    /// Two consecutive morphisms of a sequence do not compose; the index is
    /// the position of the first morphism of the offending pair.
    #[error("morphisms at positions {0} and {1} do not compose")]
    CompositionMismatch(usize, usize),
}
