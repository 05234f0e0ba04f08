//! Seeded random instance generation for verification campaigns.
//!
//! The generator is fixed so reports are reproducible across machines: a
//! ChaCha8 stream seeded with the campaign seed, consumed in a fixed order
//! (five seeds, then the `a` spec, then the `b` spec; for each spec a period
//! draw followed by that many values). Every drawn rational has a nonzero
//! numerator in `[-9, 9]` and a denominator in `[1, 9]`; coefficient specs
//! are constant or periodic with period at most [`MAX_PERIOD`].

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::closedform::forbidden_check;
use crate::engine::iterate;
use crate::model::{CoefficientSpec, InitialConditions};
use crate::rational::rat;
use crate::Rat;

/// Largest period drawn for periodic coefficient specs.
pub const MAX_PERIOD: usize = 4;

/// One randomly drawn problem instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub ic: InitialConditions,
    pub a: CoefficientSpec,
    pub b: CoefficientSpec,
}

/// Deterministic instance source.
pub struct InstanceSampler {
    rng: ChaCha8Rng,
}

impl InstanceSampler {
    pub fn new(seed: u64) -> Self {
        InstanceSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Nonzero rational with numerator in `[-9, 9]` and denominator in `[1, 9]`.
    pub fn nonzero_rational(&mut self) -> Rat {
        let numer = loop {
            let v = self.rng.gen_range(-9i64..=9);
            if v != 0 {
                break v;
            }
        };
        rat(numer, self.rng.gen_range(1i64..=9))
    }

    pub fn initial_conditions(&mut self) -> InitialConditions {
        InitialConditions::new([
            self.nonzero_rational(),
            self.nonzero_rational(),
            self.nonzero_rational(),
            self.nonzero_rational(),
            self.nonzero_rational(),
        ])
    }

    /// Constant, or periodic with period `2..=MAX_PERIOD`, equally likely per
    /// period.
    pub fn coefficient_spec(&mut self) -> CoefficientSpec {
        let period = self.rng.gen_range(1..=MAX_PERIOD);
        if period == 1 {
            CoefficientSpec::constant(self.nonzero_rational())
        } else {
            let values = (0..period).map(|_| self.nonzero_rational()).collect();
            CoefficientSpec::Periodic(values)
        }
    }

    /// Unconstrained draw: seeds, then `a`, then `b`.
    pub fn instance(&mut self) -> Instance {
        let ic = self.initial_conditions();
        let a = self.coefficient_spec();
        let b = self.coefficient_spec();
        Instance { ic, a, b }
    }

    /// Draw until the instance iterates without singularity through
    /// `x_{4 max_n + 3}`.
    pub fn nonsingular_instance(&mut self, max_n: usize) -> Instance {
        loop {
            let inst = self.instance();
            let traj = iterate(&inst.ic, &inst.a, &inst.b, 4 * max_n + 3)
                .expect("constant/periodic specs never run out");
            if traj.singularity().is_none() {
                return inst;
            }
        }
    }

    /// Draw until the instance both passes [`forbidden_check`] at horizon
    /// `max_n` and iterates without singularity through `x_{4 max_n + 3}`,
    /// i.e. every closed-form/iteration comparison below that index is
    /// defined on both sides.
    pub fn admissible_instance(&mut self, max_n: usize) -> Instance {
        loop {
            let inst = self.nonsingular_instance(max_n);
            let clean = forbidden_check(&inst.ic, &inst.a, &inst.b, max_n)
                .expect("constant/periodic specs never run out")
                .is_empty();
            if clean {
                return inst;
            }
        }
    }
}
