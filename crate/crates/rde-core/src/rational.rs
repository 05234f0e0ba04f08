//! Scalar helpers and the text grammar used at process boundaries.
//!
//! The grammar is `p/q` or `p` with an optional leading minus and q > 0,
//! e.g. `-3/8`. Values are always kept in canonical form (reduced, positive
//! denominator); [`crate::Rat`] maintains that automatically.

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::error::Error;
use crate::Rat;

/// Shorthand constructor, mostly for tests and fixtures.
///
/// Panics if `denom` is zero.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `q^e` for any integer exponent. A negative exponent requires `q != 0`
/// (panics otherwise, like division by zero would).
pub fn qpow(q: &Rat, e: i64) -> Rat {
    let e = i32::try_from(e).expect("exponent out of supported range");
    q.pow(e)
}

/// Parse the `p/q` | `p` grammar. Rejects zero or signed denominators.
pub fn parse_rat(text: &str) -> Result<Rat, Error> {
    let bad = || Error::InvalidRational(text.to_string());
    let (numer_text, denom_text) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numer = parse_int(numer_text, true).ok_or_else(bad)?;
    let denom = match denom_text {
        Some(d) => parse_int(d, false).ok_or_else(bad)?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(numer, denom))
}

fn parse_int(text: &str, allow_minus: bool) -> Option<BigInt> {
    let digits = if allow_minus {
        text.strip_prefix('-').unwrap_or(text)
    } else {
        text
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

/// Decimal rendering of `q` to `digits` fractional places, rounded half away
/// from zero. Display aid only; the rational text form is the authoritative
/// value.
pub fn decimal_string(q: &Rat, digits: usize) -> String {
    let sign = if q.is_negative() { "-" } else { "" };
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = q.numer().abs() * &scale;
    let (mut quot, rem) = scaled.div_rem(q.denom());
    if &rem * 2u32 >= *q.denom() {
        quot += 1;
    }
    let (int_part, frac_part) = quot.div_rem(&scale);
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part:0>digits$}")
    }
}
