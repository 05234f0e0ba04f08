//! Direct forward iteration of
//!
//! ```text
//! x_{n+1} = x_{n-3} x_{n-4} / ( x_n ( a_n + b_n x_{n-1} x_{n-2} x_{n-3} x_{n-4} ) )
//! ```
//!
//! with exact singularity detection. Iteration is the ground truth: every
//! closed-form result elsewhere in the crate is compared against it.
//!
//! Zero seeds are allowed here even though the closed forms reject them; the
//! recurrence itself only needs nonzero denominators, and the singularity
//! detector catches any consequence a zero value has downstream.

use num::Zero;

use crate::error::Error;
use crate::model::{CoefficientSpec, InitialConditions, Singularity, SingularityKind, Trajectory};
use crate::Rat;

/// One application of the recurrence. `window` is `x_{n-4}..x_n` in order.
///
/// The error carries the exact reason a denominator factor vanished; callers
/// decide whether that ends an orbit or aborts a computation. When both
/// factors vanish, `ZeroXn` is reported.
pub fn step(window: &[Rat; 5], a: &Rat, b: &Rat) -> Result<Rat, SingularityKind> {
    let [xm4, xm3, xm2, xm1, xn] = window;
    if xn.is_zero() {
        return Err(SingularityKind::ZeroXn);
    }
    let bracket = a + b * xm1 * xm2 * xm3 * xm4;
    if bracket.is_zero() {
        return Err(SingularityKind::ZeroBracket);
    }
    Ok(xm3 * xm4 / (xn * bracket))
}

/// Iterate from the seeds for `steps` applications, producing
/// `x_{-4}..x_steps`, or stopping early with a singularity record at the
/// first index that could not be computed.
///
/// Running out of data in an explicit coefficient list is a genuine error:
/// the caller asked for more steps than the spec supports.
pub fn iterate(
    ic: &InitialConditions,
    a: &CoefficientSpec,
    b: &CoefficientSpec,
    steps: usize,
) -> Result<Trajectory, Error> {
    let mut values: Vec<Rat> = ic.seeds().to_vec();
    let mut singularity = None;
    for n in 0..steps {
        let a_n = a.at(n)?;
        let b_n = b.at(n)?;
        let window: &[Rat; 5] = values[values.len() - 5..].try_into().expect("window of 5");
        match step(window, a_n, b_n) {
            Ok(next) => values.push(next),
            Err(kind) => {
                singularity = Some(Singularity {
                    index: n as i64 + 1,
                    kind,
                });
                break;
            }
        }
    }
    Ok(Trajectory::from_parts(values, singularity))
}
