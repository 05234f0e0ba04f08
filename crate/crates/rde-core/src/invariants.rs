//! The window invariant and its linear reduction.
//!
//! For a u-indexed orbit (`u_m = x_{m-4}`) set
//!
//! ```text
//! V_n = 1 / (u_n u_{n+1} u_{n+2} u_{n+3}).
//! ```
//!
//! Along any orbit of the recurrence the invariant satisfies
//! `V_{n+2} = a_n V_n + b_n`, a linear recurrence that decouples into an even
//! and an odd subsequence, each first order in steps of two.
//! [`v_closed_form`] evaluates the explicit solution of that reduction;
//! [`weight`] exposes the integer exponent table by which the orbit is
//! rebuilt from invariants: `u_n = u_{n mod 4} prod_{k<n} V_k^{w(k-n)}`,
//! which telescopes to `u_{n+4}/u_n = V_n/V_{n+1}`.

use num::{One, Zero};

use crate::error::Error;
use crate::model::{CoefficientSpec, InvariantOrigin, InvariantSeq, Trajectory};
use crate::Rat;

/// Invariants `V_0, V_1, ...` for every window the trajectory supports.
///
/// A zero factor anywhere in a window is an error: the invariant is undefined
/// there (only zero seeds can cause this; computed values are never zero when
/// the seeds are not).
pub fn v_sequence(traj: &Trajectory) -> Result<InvariantSeq, Error> {
    let count = traj.len().saturating_sub(3);
    let mut entries = Vec::with_capacity(count);
    for n in 0..count {
        let mut window = Rat::one();
        for k in n..n + 4 {
            let u = traj.u(k as i64).expect("window inside trajectory");
            if u.is_zero() {
                return Err(Error::ZeroProduct(n as i64));
            }
            window *= u;
        }
        entries.push(window.recip());
    }
    Ok(InvariantSeq::new(entries, InvariantOrigin::Trajectory))
}

/// Residual `V_{n+2} - a_n V_n - b_n`; exactly zero on any invariant sequence
/// built from a genuine orbit.
pub fn v_recurrence_residual(
    v: &InvariantSeq,
    a: &CoefficientSpec,
    b: &CoefficientSpec,
    n: usize,
) -> Result<Rat, Error> {
    let v_n = v.get(n).ok_or(Error::ValueUnavailable(n as i64))?;
    let v_n2 = v.get(n + 2).ok_or(Error::ValueUnavailable(n as i64 + 2))?;
    Ok(v_n2 - a.at(n)? * v_n - b.at(n)?)
}

/// Explicit solution of `V_{n+2} = a_n V_n + b_n` along parity class `j`:
///
/// ```text
/// V_{2n+j} = V_j prod_{k=0}^{n-1} a_{2k+j}
///          + sum_{l=0}^{n-1} b_{2l+j} prod_{k=l+1}^{n-1} a_{2k+j}
/// ```
///
/// with empty products equal to 1 and empty sums equal to 0. The offset `j`
/// applies to every coefficient index, inner products included.
pub fn v_closed_form(
    v0: &Rat,
    v1: &Rat,
    a: &CoefficientSpec,
    b: &CoefficientSpec,
    n: usize,
    j: u8,
) -> Result<Rat, Error> {
    assert!(j <= 1, "parity class must be 0 or 1");
    let anchor = if j == 0 { v0 } else { v1 };
    // Walk l downward keeping the suffix product prod_{k=l+1}^{n-1} a_{2k+j};
    // after the loop the suffix holds the full leading product.
    let mut suffix = Rat::one();
    let mut sum = Rat::zero();
    for l in (0..n).rev() {
        sum += b.at(2 * l + j as usize)? * &suffix;
        suffix *= a.at(2 * l + j as usize)?;
    }
    Ok(anchor * suffix + sum)
}

/// The integer weight `w(m)`, period 4, table `[1, -1, 0, 0]`.
///
/// This is the exact value of `(sqrt(2) cos(pi (2m+1)/4) + (-1)^m) / 2`,
/// which collapses to integers, so no floating point is involved.
pub fn weight(m: i64) -> i64 {
    const TABLE: [i64; 4] = [1, -1, 0, 0];
    TABLE[m.rem_euclid(4) as usize]
}
