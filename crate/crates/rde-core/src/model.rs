//! Domain types: coefficient sequences, seeds, trajectories, invariant
//! sequences and scaling exponent patterns.
//!
//! Two index conventions coexist. The recurrence is stated for `x_n` with
//! `n >= -4`; the shifted view `u_m = x_{m-4}` with `m >= 0` is what the
//! invariant and symmetry machinery works in. [`Trajectory`] stores values
//! u-indexed internally and exposes both views.

use std::fmt;
use std::str::FromStr;

use num::Zero;

use crate::error::Error;
use crate::Rat;

// ---------------------------------------------------------------------------
// Coefficient sequences
// ---------------------------------------------------------------------------

/// A coefficient sequence `a_n` or `b_n`: constant, periodic with some period
/// >= 1, or an explicit finite table.
///
/// Explicit tables are bounds-checked; reading past the end is an error,
/// never a silent wraparound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoefficientSpec {
    Constant(Rat),
    Periodic(Vec<Rat>),
    Explicit(Vec<Rat>),
}

impl CoefficientSpec {
    pub fn constant(value: Rat) -> Self {
        CoefficientSpec::Constant(value)
    }

    pub fn periodic(values: Vec<Rat>) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::EmptyCoefficientList);
        }
        Ok(CoefficientSpec::Periodic(values))
    }

    pub fn explicit(values: Vec<Rat>) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::EmptyCoefficientList);
        }
        Ok(CoefficientSpec::Explicit(values))
    }

    /// The sequence value at index `n`.
    pub fn at(&self, n: usize) -> Result<&Rat, Error> {
        match self {
            CoefficientSpec::Constant(v) => Ok(v),
            CoefficientSpec::Periodic(vs) => {
                if vs.is_empty() {
                    return Err(Error::EmptyCoefficientList);
                }
                Ok(&vs[n % vs.len()])
            }
            CoefficientSpec::Explicit(vs) => vs.get(n).ok_or(Error::IndexBeyondExplicitData {
                index: n,
                len: vs.len(),
            }),
        }
    }
}

// ---------------------------------------------------------------------------
// Seeds
// ---------------------------------------------------------------------------

/// The five seeds `x_{-4}, x_{-3}, x_{-2}, x_{-1}, x_0`, equivalently
/// `u_0..u_4` under `u_m = x_{m-4}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitialConditions {
    seeds: [Rat; 5],
}

impl InitialConditions {
    /// Seeds in x order: `x_{-4}, x_{-3}, x_{-2}, x_{-1}, x_0`.
    pub fn new(seeds: [Rat; 5]) -> Self {
        InitialConditions { seeds }
    }

    /// Seed `x_m` for `m` in `-4..=0`.
    pub fn x(&self, m: i64) -> &Rat {
        assert!((-4..=0).contains(&m), "seed index x_{m} out of range");
        &self.seeds[(m + 4) as usize]
    }

    /// Seed `u_m = x_{m-4}` for `m` in `0..=4`.
    pub fn u(&self, m: i64) -> &Rat {
        assert!((0..=4).contains(&m), "seed index u_{m} out of range");
        &self.seeds[m as usize]
    }

    pub fn seeds(&self) -> &[Rat; 5] {
        &self.seeds
    }

    /// x-index of the first zero seed, if any.
    pub fn first_zero_seed(&self) -> Option<i64> {
        self.seeds
            .iter()
            .position(|s| s.is_zero())
            .map(|i| i as i64 - 4)
    }

    /// `u_0 u_1 u_2 u_3 = x_{-4} x_{-3} x_{-2} x_{-1}`, the reciprocal of V_0.
    pub fn window_product_head(&self) -> Rat {
        self.seeds[..4].iter().product()
    }

    /// `u_1 u_2 u_3 u_4 = x_{-3} x_{-2} x_{-1} x_0`, the reciprocal of V_1.
    pub fn window_product_tail(&self) -> Rat {
        self.seeds[1..].iter().product()
    }
}

// ---------------------------------------------------------------------------
// Trajectories
// ---------------------------------------------------------------------------

/// Why an iterate could not be computed: the divisor `x_n` was zero, or the
/// bracket `a_n + b_n x_{n-1} x_{n-2} x_{n-3} x_{n-4}` was zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingularityKind {
    ZeroXn,
    ZeroBracket,
}

impl fmt::Display for SingularityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityKind::ZeroXn => write!(f, "zero_xn"),
            SingularityKind::ZeroBracket => write!(f, "zero_bracket"),
        }
    }
}

/// First x-index whose value could not be computed, with the reason.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Singularity {
    pub index: i64,
    pub kind: SingularityKind,
}

/// A computed orbit `x_{-4}, ..., x_N` in order.
///
/// If `singularity` is present at index `k`, exactly `x_{-4}..x_{k-1}` are
/// stored and nothing at or beyond `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory {
    values: Vec<Rat>,
    singularity: Option<Singularity>,
}

impl Trajectory {
    pub(crate) fn from_parts(values: Vec<Rat>, singularity: Option<Singularity>) -> Self {
        debug_assert!(values.len() >= 5);
        Trajectory {
            values,
            singularity,
        }
    }

    /// Number of stored values (seeds included).
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest x-index with a stored value.
    pub fn last_x_index(&self) -> i64 {
        self.values.len() as i64 - 5
    }

    /// `x_n` for `n >= -4`, if stored.
    pub fn x(&self, n: i64) -> Option<&Rat> {
        self.u(n + 4)
    }

    /// `u_m = x_{m-4}` for `m >= 0`, if stored.
    pub fn u(&self, m: i64) -> Option<&Rat> {
        if m < 0 {
            return None;
        }
        self.values.get(m as usize)
    }

    /// `u_m` as a result; the error names the missing u-index, which happens
    /// when the orbit ended in a singularity earlier.
    pub fn u_view(&self, m: i64) -> Result<&Rat, Error> {
        self.u(m).ok_or(Error::ValueUnavailable(m))
    }

    pub fn singularity(&self) -> Option<&Singularity> {
        self.singularity.as_ref()
    }

    /// `(n, x_n)` pairs from `n = -4` upward.
    pub fn iter_x(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.values.iter().enumerate().map(|(i, v)| (i as i64 - 4, v))
    }
}

// ---------------------------------------------------------------------------
// Invariant sequences
// ---------------------------------------------------------------------------

/// Where an invariant sequence came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantOrigin {
    Trajectory,
    ClosedForm,
}

/// `V_0, V_1, ...` where `V_n = 1/(u_n u_{n+1} u_{n+2} u_{n+3})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantSeq {
    entries: Vec<Rat>,
    origin: InvariantOrigin,
}

impl InvariantSeq {
    pub fn new(entries: Vec<Rat>, origin: InvariantOrigin) -> Self {
        InvariantSeq { entries, origin }
    }

    pub fn get(&self, n: usize) -> Option<&Rat> {
        self.entries.get(n)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn origin(&self) -> InvariantOrigin {
        self.origin
    }

    /// Replace entry `n`; for building tampered fixtures in tests and fault
    /// injection.
    pub fn set(&mut self, n: usize, value: Rat) {
        self.entries[n] = value;
    }
}

// ---------------------------------------------------------------------------
// Exponent patterns
// ---------------------------------------------------------------------------

/// Integer scaling exponents `(p_0, p_1, p_2, p_3)`, applied with period 4:
/// `u_m` scales by `t^{p_{m mod 4}}`.
///
/// The pattern is a symmetry of the recurrence exactly when the window sum
/// `p_0 + p_1 + p_2 + p_3` vanishes; the sum is invariant under cyclic
/// rotation, so the choice of window does not matter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExponentPattern {
    pub exponents: [i64; 4],
}

impl ExponentPattern {
    pub fn new(exponents: [i64; 4]) -> Self {
        ExponentPattern { exponents }
    }

    pub fn window_sum(&self) -> i64 {
        self.exponents.iter().sum()
    }

    /// True iff the window sum is zero.
    pub fn is_symmetry(&self) -> bool {
        self.window_sum() == 0
    }

    /// `p_{m mod 4}` with the euclidean remainder, so negative `m` is fine.
    pub fn exponent_at(&self, m: i64) -> i64 {
        self.exponents[m.rem_euclid(4) as usize]
    }
}

impl FromStr for ExponentPattern {
    type Err = Error;

    /// Text form: four comma-separated integers, e.g. `1,-1,1,-1`.
    fn from_str(text: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidPattern(text.to_string());
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 4 {
            return Err(bad());
        }
        let mut exponents = [0i64; 4];
        for (slot, part) in exponents.iter_mut().zip(&parts) {
            *slot = part.trim().parse().map_err(|_| bad())?;
        }
        Ok(ExponentPattern::new(exponents))
    }
}

impl fmt::Display for ExponentPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p0, p1, p2, p3] = self.exponents;
        write!(f, "{p0},{p1},{p2},{p3}")
    }
}
