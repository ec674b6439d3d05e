//! Simulation of Valiant-style evolvability for Boolean function classes.
//!
//! A single lineage of hypotheses is evolved toward a hidden target using
//! nothing but aggregate empirical performance on freshly drawn samples.
//! The crate covers the six target classes (monotone and general
//! conjunctions/disjunctions, parity, majority), four product input
//! distributions, the beneficial/neutral mutator, a per-trial engine and a
//! sweep harness that persists trajectories, summaries and plot data.
//!
//! ```
//! use evolab::{run_trial, FunctionClass, TrialConfig};
//!
//! let cfg = TrialConfig::new(FunctionClass::MonotoneConjunction, 5).with_seed(7);
//! let result = run_trial(&cfg).unwrap();
//! assert!(result.generations_used <= cfg.max_generations);
//! ```

pub mod bits;
pub mod boolfn;
pub mod engine;
mod error;
pub mod harness;
pub mod mutation;
pub mod perf;
pub mod sampling;
mod serde_str;

pub use boolfn::{
    eval_hypothesis, eval_target, initial_hypothesis, sample_target, Assignment, FunctionClass,
    Hypothesis, InitMode, SupportSampling, TargetFunction,
};
pub use engine::{
    evolvable_verdict, run_trial, GenerationRecord, Outcome, Regime, StepKind, TrialConfig,
    TrialResult,
};
pub use error::{Error, Result};
pub use mutation::{classify, neighborhood, select_next, MutationClassification, Neighborhood};
pub use perf::{empirical_perf, exact_perf, PerfValue};
pub use sampling::{pmf, sample_assignment, sample_batch, DistributionSpec};

/// Random stream used everywhere in the crate. ChaCha keeps streams stable
/// across platforms and crate versions, which the persisted artifacts rely on.
pub type SimRng = rand_chacha::ChaCha8Rng;

/// Builds the simulation stream for a seed.
pub fn rng_from_seed(seed: u64) -> SimRng {
    use rand::SeedableRng;
    SimRng::seed_from_u64(seed)
}
