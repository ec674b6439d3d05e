//! One evolutionary trial: a single lineage evolved until success,
//! termination or the generation cap.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::boolfn::{
    initial_hypothesis, near_target_hypothesis, sample_target, Assignment, FunctionClass, InitMode,
    SupportSampling,
};
use crate::error::{Error, Result};
use crate::mutation::{
    classify, neighborhood, select_next, MutatorRegime, Neighborhood, Selection,
};
use crate::perf::{LabelledBatch, PerfValue};
use crate::sampling::{sample_batch, DistributionSpec};
use crate::serde_str::serde_via_str;

pub use crate::mutation::StepKind;

pub const DEFAULT_SAMPLES: usize = 1000;
pub const DEFAULT_VALIDATION_SIZE: usize = 5000;
pub const DEFAULT_TOLERANCE: f64 = 0.01;
pub const DEFAULT_EPSILON: f64 = 0.05;
pub const DEFAULT_MAX_GENERATIONS: usize = 500;
/// Majority subset size used by smart initialization (clamped to `n`).
pub const SMART_INIT_SUBSET: usize = 10;

/// Experimental regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Regime {
    /// Random `r_0`, neutral moves allowed.
    #[default]
    Standard,
    /// Fixed `r_0` (empty literal vector, or majority over the first ten
    /// variables), neutral moves allowed.
    SmartInit,
    /// Random `r_0`, only beneficial moves accepted.
    NoNeutral,
}

impl Regime {
    pub const ALL: [Regime; 3] = [Regime::Standard, Regime::SmartInit, Regime::NoNeutral];

    pub fn name(self) -> &'static str {
        match self {
            Regime::Standard => "standard",
            Regime::SmartInit => "smart_init",
            Regime::NoNeutral => "no_neutral",
        }
    }

    pub fn mutator(self) -> MutatorRegime {
        match self {
            Regime::Standard | Regime::SmartInit => MutatorRegime::NeutralAllowed,
            Regime::NoNeutral => MutatorRegime::BeneficialOnly,
        }
    }

    /// Initialization the regime prescribes for `class` at dimension `n`.
    pub fn default_init(self, class: FunctionClass, n: usize) -> InitMode {
        match (self, class) {
            (Regime::SmartInit, FunctionClass::Majority) => {
                InitMode::FixedSubset(SMART_INIT_SUBSET.min(n))
            }
            (Regime::SmartInit, _) => InitMode::FixedEmpty,
            _ => InitMode::Random,
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown regime '{s}' (valid: standard, smart_init, no_neutral)"
                ))
            })
    }
}

serde_via_str!(Regime);

/// Everything that determines a trial. Identical configs give identical results.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub class: FunctionClass,
    pub n: usize,
    #[serde(default)]
    pub dist: DistributionSpec,
    #[serde(default)]
    pub regime: Regime,
    /// `None` takes the regime's prescribed initialization.
    #[serde(default)]
    pub init: Option<InitMode>,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default = "default_validation_size")]
    pub validation_size: usize,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    #[serde(default = "default_epsilon")]
    pub epsilon: f64,
    #[serde(default = "default_max_generations")]
    pub max_generations: usize,
    #[serde(default)]
    pub support: SupportSampling,
    /// Draw a fresh validation set every generation instead of once per trial.
    #[serde(default)]
    pub validation_redraw: bool,
    #[serde(default)]
    pub seed: u64,
}

fn default_samples() -> usize {
    DEFAULT_SAMPLES
}
fn default_validation_size() -> usize {
    DEFAULT_VALIDATION_SIZE
}
fn default_tolerance() -> f64 {
    DEFAULT_TOLERANCE
}
fn default_epsilon() -> f64 {
    DEFAULT_EPSILON
}
fn default_max_generations() -> usize {
    DEFAULT_MAX_GENERATIONS
}

impl TrialConfig {
    pub fn new(class: FunctionClass, n: usize) -> Self {
        TrialConfig {
            class,
            n,
            dist: DistributionSpec::Uniform,
            regime: Regime::Standard,
            init: None,
            samples: DEFAULT_SAMPLES,
            validation_size: DEFAULT_VALIDATION_SIZE,
            tolerance: DEFAULT_TOLERANCE,
            epsilon: DEFAULT_EPSILON,
            max_generations: DEFAULT_MAX_GENERATIONS,
            support: SupportSampling::default(),
            validation_redraw: false,
            seed: 0,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_regime(mut self, regime: Regime) -> Self {
        self.regime = regime;
        self
    }

    pub fn with_dist(mut self, dist: DistributionSpec) -> Self {
        self.dist = dist;
        self
    }

    pub fn with_init(mut self, init: InitMode) -> Self {
        self.init = Some(init);
        self
    }

    /// The initialization this trial will use.
    pub fn resolved_init(&self) -> InitMode {
        self.init
            .unwrap_or_else(|| self.regime.default_init(self.class, self.n))
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::config("n must be at least 1"));
        }
        if self.samples == 0 {
            return Err(Error::config("samples per generation must be at least 1"));
        }
        if self.validation_size == 0 {
            return Err(Error::config("validation size must be at least 1"));
        }
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(Error::config(format!(
                "epsilon = {} must lie in (0, 1)",
                self.epsilon
            )));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::config(format!(
                "tolerance = {} must be positive",
                self.tolerance
            )));
        }
        if self.max_generations == 0 {
            return Err(Error::config("max generations must be at least 1"));
        }
        self.dist.validate()?;
        let init = self.resolved_init();
        if self.regime == Regime::SmartInit && init != self.regime.default_init(self.class, self.n)
        {
            return Err(Error::config(format!(
                "smart_init fixes the initial hypothesis; got init '{init}'"
            )));
        }
        init.check(self.class, self.n)
    }
}

/// One row of a trial's trajectory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenerationRecord {
    /// 1-based generation number.
    #[serde(rename = "gen")]
    pub generation: usize,
    /// Empirical performance of the chosen hypothesis on this generation's batch.
    pub train_perf: f64,
    #[serde(rename = "val_perf")]
    pub validation_perf: f64,
    #[serde(rename = "bene")]
    pub bene_count: usize,
    #[serde(rename = "neut")]
    pub neut_count: usize,
    pub kind: StepKind,
    /// Empirical performance of the previous hypothesis on the same batch.
    pub base_perf: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Success,
    Failure,
    TerminatedEarly,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialResult {
    pub config: TrialConfig,
    /// Index of the trial within its sweep cell.
    #[serde(default)]
    pub trial: usize,
    pub outcome: Outcome,
    pub generations_used: usize,
    pub final_validation_perf: f64,
    pub target: String,
    pub initial_hypothesis: String,
    pub final_hypothesis: String,
    pub records: Vec<GenerationRecord>,
}

impl TrialResult {
    pub fn is_success(&self) -> bool {
        self.outcome == Outcome::Success
    }

    /// The trajectory as JSON Lines, one record per generation.
    pub fn records_jsonl(&self) -> Result<String> {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r)?);
            out.push('\n');
        }
        Ok(out)
    }
}

/// Hook into the generation loop, mainly for instrumentation in tests.
pub trait TrialObserver {
    /// Called after every candidate has been scored on `batch`.
    fn scored(
        &mut self,
        _generation: usize,
        _batch: &[Assignment],
        _neighborhood: &Neighborhood,
        _perfs: &[PerfValue],
    ) {
    }
}

impl TrialObserver for () {}

pub fn run_trial(cfg: &TrialConfig) -> Result<TrialResult> {
    run_trial_observed(cfg, &mut ())
}

/// Runs a trial, reporting each scored generation to `observer`.
///
/// Each generation draws a fresh batch of `samples` inputs, scores the
/// current hypothesis and its whole neighborhood on that batch, classifies
/// at tolerance `t`, applies the mutator and scores the chosen hypothesis on
/// the validation set. The trial is a success as soon as a validation score
/// exceeds `1 - epsilon`, including on the step where the mutator finds
/// nothing to accept.
pub fn run_trial_observed(
    cfg: &TrialConfig,
    observer: &mut dyn TrialObserver,
) -> Result<TrialResult> {
    cfg.validate()?;
    let class = cfg.class;
    let n = cfg.n;
    let init = cfg.resolved_init();
    let mut rng = crate::rng_from_seed(cfg.seed);

    let target = sample_target(class, n, cfg.support, &mut rng)?;
    let mut current = match init {
        InitMode::NearTarget(edits) => near_target_hypothesis(&target, edits, &mut rng)?,
        mode => initial_hypothesis(class, n, mode, &mut rng)?,
    };
    let initial_text = current.to_text(class);

    let mut validation = sample_batch(&cfg.dist, n, cfg.validation_size, &mut rng);
    let mut validation_labels = LabelledBatch::new(&target, &validation)?.into_labels();
    let threshold = 1.0 - cfg.epsilon;
    let mutator = cfg.regime.mutator();

    let mut records = Vec::new();
    let mut outcome = Outcome::Failure;
    for generation in 1..=cfg.max_generations {
        let nb = neighborhood(&current, class)?;
        let batch = sample_batch(&cfg.dist, n, cfg.samples, &mut rng);
        let labelled = LabelledBatch::new(&target, &batch)?;
        let perfs: Vec<PerfValue> = nb
            .candidates()
            .iter()
            .map(|c| labelled.score(c, class))
            .collect();
        observer.scored(generation, &batch, &nb, &perfs);

        let base = perfs[0];
        let cls = classify(base, &perfs, cfg.tolerance)?;
        let selection = select_next(&cls, &nb, mutator, &mut rng);
        let train = match selection {
            Selection::Next { index, .. } => {
                let train = perfs[index];
                current = nb.into_candidate(index);
                train
            }
            Selection::Terminated => base,
        };

        if cfg.validation_redraw {
            validation = sample_batch(&cfg.dist, n, cfg.validation_size, &mut rng);
            validation_labels = LabelledBatch::new(&target, &validation)?.into_labels();
        }
        let val = validation_labels.score(&validation, &current, class);

        records.push(GenerationRecord {
            generation,
            train_perf: train.value(),
            validation_perf: val.value(),
            bene_count: cls.bene.len(),
            neut_count: cls.neut.len(),
            kind: selection.kind(),
            base_perf: base.value(),
        });

        if val.value() > threshold {
            outcome = Outcome::Success;
            break;
        }
        if selection == Selection::Terminated {
            outcome = Outcome::TerminatedEarly;
            break;
        }
    }

    let mut config = cfg.clone();
    config.init = Some(init);
    Ok(TrialResult {
        config,
        trial: 0,
        outcome,
        generations_used: records.len(),
        final_validation_perf: records.last().map_or(0.0, |r| r.validation_perf),
        target: target.to_text(),
        initial_hypothesis: initial_text,
        final_hypothesis: current.to_text(class),
        records,
    })
}

/// True iff at least `min_successes` of the `trials` results succeeded.
pub fn evolvable_verdict(
    results: &[TrialResult],
    min_successes: usize,
    trials: usize,
) -> Result<bool> {
    if results.len() != trials {
        return Err(Error::config(format!(
            "expected {trials} trial results, got {}",
            results.len()
        )));
    }
    Ok(results.iter().filter(|r| r.is_success()).count() >= min_successes)
}

/// Successes needed to call a class evolvable: 3 of 5, otherwise
/// `ceil(0.6 * trials)`.
pub fn default_min_successes(trials: usize) -> usize {
    (3 * trials).div_ceil(5)
}
