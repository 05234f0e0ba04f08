//! Closed-form solution formulas and forbidden-set detection.
//!
//! Every entry point returns `x_{4n+j-4}` (u-index `4n+j`) for `n >= 0` and a
//! residue class `j` in `{0,1,2,3}`: at `n = 0` the value is the seed
//! `x_{j-4}`, and each increment of `n` advances one full period of four
//! indices.
//!
//! The general solution is built from two families of "channel terms", one
//! per coefficient parity, with the two four-seed window products
//! `H = x_{-4}x_{-3}x_{-2}x_{-1}` and `T = x_{-3}x_{-2}x_{-1}x_0`:
//!
//! ```text
//! E(m) = prod_{k=0}^{m} a_{2k}   + H sum_{l=0}^{m} b_{2l}   prod_{k=l+1}^{m} a_{2k}
//! O(m) = prod_{k=0}^{m} a_{2k+1} + T sum_{l=0}^{m} b_{2l+1} prod_{k=l+1}^{m} a_{2k+1}
//! ```
//!
//! with `E(-1) = O(-1) = 1`. In terms of the invariant, `E(m) = V_{2m+2}/V_0`
//! and `O(m) = V_{2m+3}/V_1`, so a vanishing term is a vanishing invariant,
//! i.e. a forbidden initial condition. The four residue classes read
//!
//! ```text
//! x_{4n-4} = x_0^n x_{-4}^{1-n}   prod_{s<n} E(2s-1)/O(2s-1)
//! x_{4n-3} = x_{-4}^n x_{-3}/x_0^n  prod_{s<n} O(2s-1)/E(2s)
//! x_{4n-2} = x_0^n x_{-2}/x_{-4}^n  prod_{s<n} E(2s)/O(2s)
//! x_{4n-1} = x_{-4}^n x_{-1}/x_0^n  prod_{s<n} O(2s)/E(2s+1)
//! ```
//!
//! [`x_const_coeff`] and [`x_two_periodic`] evaluate the specialized shapes
//! these collapse to for constant and 2-periodic coefficients (geometric
//! sums, arithmetic factors, or plain powers). The specializations are
//! separate evaluation paths on purpose: tests compare them against
//! [`x_general`], and everything against direct iteration, for exact
//! equality.

use std::fmt;

use num::{One, Zero};

use crate::error::Error;
use crate::model::{CoefficientSpec, InitialConditions};
use crate::rational::{int, qpow};
use crate::Rat;

// ---------------------------------------------------------------------------
// Channel terms and the general solution
// ---------------------------------------------------------------------------

/// Coefficient parity channel. `Even` combines the even-indexed coefficients
/// with the window product `x_{-4}x_{-3}x_{-2}x_{-1}`; `Odd` the odd-indexed
/// coefficients with `x_{-3}x_{-2}x_{-1}x_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Channel {
    Even,
    Odd,
}

impl fmt::Display for Channel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Channel::Even => write!(f, "even"),
            Channel::Odd => write!(f, "odd"),
        }
    }
}

/// Channel term with upper index `m` via the literal product/sum form.
fn channel_term(
    a: &CoefficientSpec,
    b: &CoefficientSpec,
    parity: usize,
    window: &Rat,
    m: usize,
) -> Result<Rat, Error> {
    // Walk l downward keeping the suffix product prod_{k=l+1}^{m} a_{2k+p};
    // after the loop the suffix holds the full leading product.
    let mut suffix = Rat::one();
    let mut sum = Rat::zero();
    for l in (0..=m).rev() {
        sum += b.at(2 * l + parity)? * &suffix;
        suffix *= a.at(2 * l + parity)?;
    }
    Ok(suffix + window * sum)
}

/// Evaluator for the general variable-coefficient solution, with channel
/// terms precomputed up to a horizon.
#[derive(Debug, Clone)]
pub struct GeneralSolution {
    seeds: [Rat; 5],
    /// `even[i] = E(i-1)`; slot 0 holds the empty term 1. Same for `odd`.
    even: Vec<Rat>,
    odd: Vec<Rat>,
    max_n: usize,
}

impl GeneralSolution {
    /// Precompute channel terms sufficient for every query with period count
    /// `n <= max_n` in any residue class.
    pub fn new(
        ic: &InitialConditions,
        a: &CoefficientSpec,
        b: &CoefficientSpec,
        max_n: usize,
    ) -> Result<Self, Error> {
        if let Some(m) = ic.first_zero_seed() {
            return Err(Error::SeedZero(m));
        }
        let head = ic.window_product_head();
        let tail = ic.window_product_tail();
        // the largest channel index any class uses at n = max_n is 2 max_n - 1
        let terms = 2 * max_n;
        let mut even = Vec::with_capacity(terms + 1);
        let mut odd = Vec::with_capacity(terms + 1);
        even.push(Rat::one());
        odd.push(Rat::one());
        for m in 0..terms {
            even.push(channel_term(a, b, 0, &head, m)?);
            odd.push(channel_term(a, b, 1, &tail, m)?);
        }
        Ok(GeneralSolution {
            seeds: ic.seeds().clone(),
            even,
            odd,
            max_n,
        })
    }

    fn even_term(&self, m: i64) -> &Rat {
        &self.even[(m + 1) as usize]
    }

    fn odd_term(&self, m: i64) -> &Rat {
        &self.odd[(m + 1) as usize]
    }

    /// `x_{4n+j-4}`. Fails with the offending factor position if a
    /// denominator term vanishes.
    pub fn x(&self, n: usize, j: u8) -> Result<Rat, Error> {
        assert!(j <= 3, "residue class must be 0..=3");
        assert!(n <= self.max_n, "query beyond precomputed horizon");
        let u0 = &self.seeds[0];
        let u4 = &self.seeds[4];
        let ratio = if j % 2 == 0 { u4 / u0 } else { u0 / u4 };
        let mut value = &self.seeds[j as usize] * qpow(&ratio, n as i64);
        for s in 0..n as i64 {
            let (num, den) = match j {
                0 => (self.even_term(2 * s - 1), self.odd_term(2 * s - 1)),
                1 => (self.odd_term(2 * s - 1), self.even_term(2 * s)),
                2 => (self.even_term(2 * s), self.odd_term(2 * s)),
                3 => (self.odd_term(2 * s), self.even_term(2 * s + 1)),
                _ => unreachable!(),
            };
            if den.is_zero() {
                return Err(Error::FormulaDenominatorZero { s: s as usize, j });
            }
            value = value * num / den;
        }
        Ok(value)
    }
}

/// `x_{4n+j-4}` by the general variable-coefficient formula; one-shot wrapper
/// around [`GeneralSolution`].
pub fn x_general(
    ic: &InitialConditions,
    a: &CoefficientSpec,
    b: &CoefficientSpec,
    n: usize,
    j: u8,
) -> Result<Rat, Error> {
    GeneralSolution::new(ic, a, b, n)?.x(n, j)
}

// ---------------------------------------------------------------------------
// Constant coefficients
// ---------------------------------------------------------------------------

/// `x_{4n+j-4}` for constant coefficients `a_n = a`, `b_n = b`, via the
/// specialized branch the general formula collapses to:
///
/// - `a = 1`: arithmetic factors `1 + k b W`,
/// - `a = -1`: plain powers (the channel terms alternate between two values),
/// - otherwise: geometric factors `a^q + b W (1 - a^q)/(1 - a)`.
///
/// Branch selection is exact equality on rationals, never a tolerance. Each
/// branch checks its own printed admissibility condition list first and
/// reports the first violated condition by name.
pub fn x_const_coeff(
    ic: &InitialConditions,
    a: &Rat,
    b: &Rat,
    n: usize,
    j: u8,
) -> Result<Rat, Error> {
    assert!(j <= 3, "residue class must be 0..=3");
    if let Some(m) = ic.first_zero_seed() {
        return Err(Error::SeedZero(m));
    }
    if n == 0 && j == 0 {
        return Ok(ic.x(-4).clone());
    }
    // class 0 is the x_{4n'} shape one period back
    let np = if j == 0 { n - 1 } else { n };
    if a.is_one() {
        const_unit_a(ic, b, np, j)
    } else if *a == -Rat::one() {
        const_negative_unit_a(ic, b, np, j)
    } else {
        const_general_a(ic, a, b, np, j)
    }
}

fn prefactor(ic: &InitialConditions, np: i64, class: u8) -> Rat {
    let xm4 = ic.x(-4);
    let x0 = ic.x(0);
    match class {
        0 => qpow(x0, np + 1) / qpow(xm4, np),
        1 => qpow(xm4, np) * ic.x(-3) / qpow(x0, np),
        2 => qpow(x0, np) * ic.x(-2) / qpow(xm4, np),
        3 => qpow(xm4, np) * ic.x(-1) / qpow(x0, np),
        _ => unreachable!(),
    }
}

/// `1 + k b W`
fn arith_factor(k: i64, b: &Rat, window: &Rat) -> Rat {
    int(1) + int(k) * b * window
}

fn const_unit_a(ic: &InitialConditions, b: &Rat, np: usize, class: u8) -> Result<Rat, Error> {
    let head = ic.window_product_head();
    let tail = ic.window_product_tail();
    // for all j = 1..n': 2j b W != -1 and (2j-1) b W != -1, both windows
    for jj in 1..=np as i64 {
        for (mult, name) in [(2 * jj, "2j"), (2 * jj - 1, "(2j-1)")] {
            if arith_factor(mult, b, &head).is_zero() {
                return Err(Error::ConditionViolated(format!(
                    "{name}*b*x[-4]x[-3]x[-2]x[-1] = -1 at j = {jj}"
                )));
            }
            if arith_factor(mult, b, &tail).is_zero() {
                return Err(Error::ConditionViolated(format!(
                    "{name}*b*x[-3]x[-2]x[-1]x[0] = -1 at j = {jj}"
                )));
            }
        }
    }
    let mut value = prefactor(ic, np as i64, class);
    for s in 0..np as i64 {
        let (num, den) = match class {
            0 => (
                arith_factor(2 * s + 2, b, &head),
                arith_factor(2 * s + 2, b, &tail),
            ),
            1 => (
                arith_factor(2 * s, b, &tail),
                arith_factor(2 * s + 1, b, &head),
            ),
            2 => (
                arith_factor(2 * s + 1, b, &head),
                arith_factor(2 * s + 1, b, &tail),
            ),
            3 => (
                arith_factor(2 * s + 1, b, &tail),
                arith_factor(2 * s + 2, b, &head),
            ),
            _ => unreachable!(),
        };
        value = value * num / den;
    }
    Ok(value)
}

fn const_negative_unit_a(
    ic: &InitialConditions,
    b: &Rat,
    np: usize,
    class: u8,
) -> Result<Rat, Error> {
    let head = ic.window_product_head();
    let tail = ic.window_product_tail();
    let head_factor = int(-1) + b * &head;
    let tail_factor = int(-1) + b * &tail;
    if np >= 1 {
        if head_factor.is_zero() {
            return Err(Error::ConditionViolated(
                "b*x[-4]x[-3]x[-2]x[-1] = 1".to_string(),
            ));
        }
        if tail_factor.is_zero() {
            return Err(Error::ConditionViolated(
                "b*x[-3]x[-2]x[-1]x[0] = 1".to_string(),
            ));
        }
    }
    let np = np as i64;
    let pref = prefactor(ic, np, class);
    Ok(match class {
        0 => pref,
        1 => pref * qpow(&head_factor, -np),
        2 => pref * qpow(&(head_factor / tail_factor), np),
        3 => pref * qpow(&tail_factor, np),
        _ => unreachable!(),
    })
}

fn const_general_a(
    ic: &InitialConditions,
    a: &Rat,
    b: &Rat,
    np: usize,
    class: u8,
) -> Result<Rat, Error> {
    let head = ic.window_product_head();
    let tail = ic.window_product_tail();
    let one_minus_a = int(1) - a;
    // F_W(q) = a^q + b W (1 - a^q)/(1 - a)
    let factor = |q: i64, window: &Rat| -> Rat {
        let a_q = qpow(a, q);
        &a_q + b * window * (int(1) - &a_q) / &one_minus_a
    };
    // for all (i,s) in {0,1} x {0..n'-1}:
    //   (1-a) a^{2s+i} + (1-a^{2s+i}) b T != 0
    //   (1-a) a^{2s+1+i} + (1-a^{2s+1+i}) b H != 0
    for s in 0..np as i64 {
        for i in 0..=1i64 {
            let q = 2 * s + i;
            if factor(q, &tail).is_zero() {
                return Err(Error::ConditionViolated(format!(
                    "(1-a)*a^{q} + (1-a^{q})*b*x[-3]x[-2]x[-1]x[0] = 0 at (i, s) = ({i}, {s})"
                )));
            }
            if factor(q + 1, &head).is_zero() {
                return Err(Error::ConditionViolated(format!(
                    "(1-a)*a^{} + (1-a^{})*b*x[-4]x[-3]x[-2]x[-1] = 0 at (i, s) = ({i}, {s})",
                    q + 1,
                    q + 1
                )));
            }
        }
    }
    let mut value = prefactor(ic, np as i64, class);
    for s in 0..np as i64 {
        let (num, den) = match class {
            0 => (factor(2 * s + 2, &head), factor(2 * s + 2, &tail)),
            1 => (factor(2 * s, &tail), factor(2 * s + 1, &head)),
            2 => (factor(2 * s + 1, &head), factor(2 * s + 1, &tail)),
            3 => (factor(2 * s + 1, &tail), factor(2 * s + 2, &head)),
            _ => unreachable!(),
        };
        // the printed list stops one tail exponent short of the class-0
        // denominator at s = n'-1, so a zero can still slip through here
        if den.is_zero() {
            return Err(Error::FormulaDenominatorZero {
                s: s as usize,
                j: class,
            });
        }
        value = value * num / den;
    }
    Ok(value)
}

// ---------------------------------------------------------------------------
// 2-periodic coefficients
// ---------------------------------------------------------------------------

/// `x_{4n+j-4}` for 2-periodic coefficients `a_0, a_1, a_0, ...` and
/// `b_0, b_1, b_0, ...`.
///
/// The general shape uses power sums `sum_{l<q} a^l` evaluated term by term;
/// the two sign patterns `(a_0, a_1) = (1, -1)` and `(-1, 1)` take collapsed
/// fast branches with their own printed condition lists.
pub fn x_two_periodic(
    ic: &InitialConditions,
    a0: &Rat,
    a1: &Rat,
    b0: &Rat,
    b1: &Rat,
    n: usize,
    j: u8,
) -> Result<Rat, Error> {
    assert!(j <= 3, "residue class must be 0..=3");
    if let Some(m) = ic.first_zero_seed() {
        return Err(Error::SeedZero(m));
    }
    if n == 0 && j == 0 {
        return Ok(ic.x(-4).clone());
    }
    let np = if j == 0 { n - 1 } else { n };
    let neg_one = -Rat::one();
    if a0.is_one() && *a1 == neg_one {
        two_periodic_unit_neg(ic, b0, b1, np, j)
    } else if *a0 == neg_one && a1.is_one() {
        two_periodic_neg_unit(ic, b0, b1, np, j)
    } else {
        two_periodic_general(ic, a0, a1, b0, b1, np, j)
    }
}

fn two_periodic_general(
    ic: &InitialConditions,
    a0: &Rat,
    a1: &Rat,
    b0: &Rat,
    b1: &Rat,
    np: usize,
    class: u8,
) -> Result<Rat, Error> {
    let head = ic.window_product_head();
    let tail = ic.window_product_tail();
    // G_c(q) = a_c^q + b_c W_c sum_{l<q} a_c^l, with running power sums
    let q_top = 2 * np;
    let mut g0 = Vec::with_capacity(q_top + 1);
    let mut g1 = Vec::with_capacity(q_top + 1);
    let (mut pow0, mut pow1) = (Rat::one(), Rat::one());
    let (mut sum0, mut sum1) = (Rat::zero(), Rat::zero());
    for _q in 0..=q_top {
        g0.push(&pow0 + b0 * &head * &sum0);
        g1.push(&pow1 + b1 * &tail * &sum1);
        sum0 += &pow0;
        sum1 += &pow1;
        pow0 *= a0;
        pow1 *= a1;
    }
    // for all (i,s) in {0,1} x {0..n'-1}: G_0(2s+1+i) != 0 and G_1(2s+1+i) != 0
    for s in 0..np {
        for i in 0..=1usize {
            let q = 2 * s + 1 + i;
            if g0[q].is_zero() {
                return Err(Error::ConditionViolated(format!(
                    "a0^{q} + b0*x[-4]x[-3]x[-2]x[-1]*sum(a0^l, l < {q}) = 0 at (i, s) = ({i}, {s})"
                )));
            }
            if g1[q].is_zero() {
                return Err(Error::ConditionViolated(format!(
                    "a1^{q} + b1*x[-3]x[-2]x[-1]x[0]*sum(a1^l, l < {q}) = 0 at (i, s) = ({i}, {s})"
                )));
            }
        }
    }
    let mut value = prefactor(ic, np as i64, class);
    for s in 0..np {
        let (num, den) = match class {
            0 => (&g0[2 * s + 2], &g1[2 * s + 2]),
            1 => (&g1[2 * s], &g0[2 * s + 1]),
            2 => (&g0[2 * s + 1], &g1[2 * s + 1]),
            3 => (&g1[2 * s + 1], &g0[2 * s + 2]),
            _ => unreachable!(),
        };
        if den.is_zero() {
            return Err(Error::FormulaDenominatorZero { s, j: class });
        }
        value = value * num / den;
    }
    Ok(value)
}

/// `(a_0, a_1) = (1, -1)`.
fn two_periodic_unit_neg(
    ic: &InitialConditions,
    b0: &Rat,
    b1: &Rat,
    np: usize,
    class: u8,
) -> Result<Rat, Error> {
    let head = ic.window_product_head();
    let tail = ic.window_product_tail();
    let tail_factor = int(-1) + b1 * &tail;
    if np >= 1 {
        if tail_factor.is_zero() {
            return Err(Error::ConditionViolated(
                "b1*x[-3]x[-2]x[-1]x[0] = 1".to_string(),
            ));
        }
        for jj in 1..=(2 * np as i64) {
            if arith_factor(jj, b0, &head).is_zero() {
                return Err(Error::ConditionViolated(format!(
                    "j*b0*x[-4]x[-3]x[-2]x[-1] = -1 at j = {jj}"
                )));
            }
        }
    }
    let np = np as i64;
    let xm4 = ic.x(-4);
    let x0 = ic.x(0);
    Ok(match class {
        0 => {
            let mut value = prefactor(ic, np, 0);
            for s in 0..np {
                value *= arith_factor(2 * s + 2, b0, &head);
            }
            value
        }
        1 => {
            let mut value = prefactor(ic, np, 1);
            for s in 0..np {
                value /= arith_factor(2 * s + 1, b0, &head);
            }
            value
        }
        2 => {
            let mut value = ic.x(-2) * qpow(&(x0 / (xm4 * &tail_factor)), np);
            for s in 0..np {
                value *= arith_factor(2 * s + 1, b0, &head);
            }
            value
        }
        3 => {
            let mut value = ic.x(-1) * qpow(&(xm4 * &tail_factor / x0), np);
            for s in 0..np {
                value /= arith_factor(2 * s + 2, b0, &head);
            }
            value
        }
        _ => unreachable!(),
    })
}

/// `(a_0, a_1) = (-1, 1)`.
fn two_periodic_neg_unit(
    ic: &InitialConditions,
    b0: &Rat,
    b1: &Rat,
    np: usize,
    class: u8,
) -> Result<Rat, Error> {
    let head = ic.window_product_head();
    let tail = ic.window_product_tail();
    let head_factor = int(-1) + b0 * &head;
    if np >= 1 {
        if head_factor.is_zero() {
            return Err(Error::ConditionViolated(
                "b0*x[-4]x[-3]x[-2]x[-1] = 1".to_string(),
            ));
        }
        for jj in 1..=(2 * np as i64) {
            if arith_factor(jj, b1, &tail).is_zero() {
                return Err(Error::ConditionViolated(format!(
                    "j*b1*x[-3]x[-2]x[-1]x[0] = -1 at j = {jj}"
                )));
            }
        }
    }
    let np = np as i64;
    let xm4 = ic.x(-4);
    let x0 = ic.x(0);
    Ok(match class {
        0 => {
            let mut value = prefactor(ic, np, 0);
            for s in 0..np {
                value /= arith_factor(2 * s + 2, b1, &tail);
            }
            value
        }
        1 => {
            let mut value = ic.x(-3) * qpow(&(xm4 / (x0 * &head_factor)), np);
            for s in 0..np {
                value *= arith_factor(2 * s, b1, &tail);
            }
            value
        }
        2 => {
            let mut value = ic.x(-2) * qpow(&(x0 * &head_factor / xm4), np);
            for s in 0..np {
                value /= arith_factor(2 * s + 1, b1, &tail);
            }
            value
        }
        3 => {
            let mut value = prefactor(ic, np, 3);
            for s in 0..np {
                value *= arith_factor(2 * s + 1, b1, &tail);
            }
            value
        }
        _ => unreachable!(),
    })
}

// ---------------------------------------------------------------------------
// Forbidden-set detection
// ---------------------------------------------------------------------------

/// One violated admissibility condition found by [`forbidden_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// A zero seed; every closed form needs all five seeds nonzero.
    SeedZero { x_index: i64 },
    /// The channel term with upper index `m = 2s + parity` vanishes; it is
    /// the denominator factor of some residue class at product position `s`.
    DenominatorZero {
        s: usize,
        parity: u8,
        channel: Channel,
    },
}

impl Violation {
    /// Upper index of the vanishing channel term, when applicable.
    pub fn term_index(&self) -> Option<usize> {
        match self {
            Violation::SeedZero { .. } => None,
            Violation::DenominatorZero { s, parity, .. } => Some(2 * s + *parity as usize),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SeedZero { x_index } => write!(f, "seed x[{x_index}] = 0"),
            Violation::DenominatorZero { s, parity, channel } => write!(
                f,
                "{channel}-channel term vanishes at s = {s}, parity {parity} (term index {})",
                2 * s + *parity as usize
            ),
        }
    }
}

/// Enumerate every admissibility violation for general-solution queries up to
/// x-index `4n+3`, i.e. for every `x_general` call with period count at most
/// `n + 1` in any residue class.
///
/// An empty result means every such call succeeds. Zero seeds short-circuit:
/// no channel term is meaningful without nonzero seeds.
pub fn forbidden_check(
    ic: &InitialConditions,
    a: &CoefficientSpec,
    b: &CoefficientSpec,
    n: usize,
) -> Result<Vec<Violation>, Error> {
    let mut violations: Vec<Violation> = ic
        .seeds()
        .iter()
        .enumerate()
        .filter(|(_, seed)| seed.is_zero())
        .map(|(i, _)| Violation::SeedZero {
            x_index: i as i64 - 4,
        })
        .collect();
    if !violations.is_empty() {
        return Ok(violations);
    }
    let head = ic.window_product_head();
    let tail = ic.window_product_tail();
    // denominators reach E(2n+1) (class 3 at n+1) and O(2n) (class 2 at n+1)
    for m in 0..=(2 * n + 1) {
        if channel_term(a, b, 0, &head, m)?.is_zero() {
            violations.push(Violation::DenominatorZero {
                s: m / 2,
                parity: (m % 2) as u8,
                channel: Channel::Even,
            });
        }
        if m <= 2 * n && channel_term(a, b, 1, &tail, m)?.is_zero() {
            violations.push(Violation::DenominatorZero {
                s: m / 2,
                parity: (m % 2) as u8,
                channel: Channel::Odd,
            });
        }
    }
    Ok(violations)
}
