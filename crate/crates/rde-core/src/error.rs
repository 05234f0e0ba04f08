use thiserror::Error;

/// Failure modes of the recurrence machinery.
///
/// A singular point hit during iteration is deliberately *not* represented
/// here: the engine records it as data inside the trajectory (see
/// [`crate::model::Singularity`]) so downstream comparisons can reason about
/// where and why an orbit stopped.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a rational literal (expected `p/q` or `p` with q > 0): {0:?}")]
    InvalidRational(String),

    #[error("not an exponent pattern (expected four comma-separated integers): {0:?}")]
    InvalidPattern(String),

    #[error("coefficient list must not be empty")]
    EmptyCoefficientList,

    #[error("explicit coefficient list has {len} entries, index {index} requested")]
    IndexBeyondExplicitData { index: usize, len: usize },

    #[error("value at index {0} is not available")]
    ValueUnavailable(i64),

    #[error("zero factor in the invariant window u_{start}..u_{end}", start = .0, end = .0 + 3)]
    ZeroProduct(i64),

    #[error("seed x_{0} is zero")]
    SeedZero(i64),

    #[error("closed-form denominator factor vanishes at s = {s}, residue class j = {j}")]
    FormulaDenominatorZero { s: usize, j: u8 },

    #[error("condition violated: {0}")]
    ConditionViolated(String),

    #[error("scale parameter t must be nonzero")]
    DegenerateScale,
}
