//! Exact-arithmetic toolkit for the fifth-order rational difference equation
//! family
//!
//! ```text
//! x_{n+1} = x_{n-3} x_{n-4} / ( x_n ( a_n + b_n x_{n-1} x_{n-2} x_{n-3} x_{n-4} ) )
//! ```
//!
//! with real coefficient sequences `a_n`, `b_n` and seeds `x_{-4}..x_0`.
//!
//! The crate iterates the recurrence directly with exact singularity
//! detection ([`engine`]), reduces orbits to the window invariant
//! `V_n = 1/(u_n u_{n+1} u_{n+2} u_{n+3})` and its linear two-step recurrence
//! ([`invariants`]), evaluates the closed-form solutions the reduction yields
//! ([`closedform`]), and verifies the scaling symmetries of the equation as
//! exact finite group actions ([`symmetry`]). [`campaign`] provides the
//! seeded random instance generator used by verification runs.
//!
//! Every value is an arbitrary-precision rational in canonical form, so all
//! cross-checks are exact equalities, never tolerance comparisons. Floating
//! point appears only as a display rendering.

pub mod campaign;
pub mod closedform;
pub mod engine;
pub mod error;
pub mod invariants;
pub mod model;
pub mod rational;
pub mod symmetry;

/// The scalar used throughout: an exact ratio of big integers.
pub type Rat = num::BigRational;

pub use error::Error;
pub use model::{
    CoefficientSpec, ExponentPattern, InitialConditions, InvariantOrigin, InvariantSeq,
    Singularity, SingularityKind, Trajectory,
};
pub use rational::{decimal_string, int, parse_rat, qpow, rat};
