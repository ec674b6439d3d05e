//! Sweep orchestration over (regime × class × n × distribution) cells.
//!
//! Trials run in parallel on a bounded pool; every trial owns a stream
//! seeded from `(master_seed, cell key, trial index)`, and all files are
//! written after the pool drains, so persisted artifacts depend only on the
//! configuration.
//!
//! Layout under the output directory:
//!
//! ```text
//! <out>/<regime>/<class>/n<k>/<dist>/trial<i>.jsonl   generation records
//! <out>/<regime>/<class>/n<k>/<dist>/trial<i>.json    full TrialResult
//! <out>/summary.csv
//! <out>/plots/<Layout>.csv
//! ```

mod plot;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boolfn::{FunctionClass, SupportSampling};
use crate::engine::{
    default_min_successes, evolvable_verdict, run_trial, Regime, TrialConfig, TrialResult,
    DEFAULT_EPSILON, DEFAULT_MAX_GENERATIONS, DEFAULT_SAMPLES, DEFAULT_TOLERANCE,
    DEFAULT_VALIDATION_SIZE,
};
use crate::error::{Error, Result};
use crate::sampling::DistributionSpec;

pub use plot::{emit_plot_data, plot_points, write_plot_csv, Layout, PlotPoint, PlotSelection};

pub const SUMMARY_HEADER: [&str; 11] = [
    "regime",
    "class",
    "n",
    "dist",
    "trials",
    "successes",
    "success_rate",
    "avg_generations_success",
    "avg_bene_per_gen",
    "avg_neut_per_gen",
    "evolvable",
];

pub const DEFAULT_DIMS: [usize; 5] = [5, 10, 20, 30, 50];
pub const DEFAULT_TRIALS_STANDARD: usize = 30;
pub const DEFAULT_TRIALS_VARIANT: usize = 5;

/// A sweep definition, readable from JSON. Missing keys take the defaults.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default = "default_regimes")]
    pub regimes: Vec<Regime>,
    #[serde(default = "default_classes")]
    pub classes: Vec<FunctionClass>,
    #[serde(default = "default_dims")]
    pub dims: Vec<usize>,
    #[serde(default = "default_dists")]
    pub dists: Vec<DistributionSpec>,
    /// Overrides the per-regime trial counts for every cell.
    #[serde(default)]
    pub trials: Option<usize>,
    /// Trials for standard-regime cells under the uniform distribution.
    #[serde(default = "default_trials_standard")]
    pub trials_standard: usize,
    /// Trials for every constrained or distributional variant.
    #[serde(default = "default_trials_variant")]
    pub trials_variant: usize,
    #[serde(default)]
    pub master_seed: u64,
    #[serde(default = "default_out")]
    pub out: PathBuf,
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
    #[serde(default)]
    pub validation_redraw: bool,
}

fn default_regimes() -> Vec<Regime> {
    vec![Regime::Standard]
}
fn default_classes() -> Vec<FunctionClass> {
    FunctionClass::ALL.to_vec()
}
fn default_dims() -> Vec<usize> {
    DEFAULT_DIMS.to_vec()
}
fn default_dists() -> Vec<DistributionSpec> {
    vec![DistributionSpec::Uniform]
}
fn default_trials_standard() -> usize {
    DEFAULT_TRIALS_STANDARD
}
fn default_trials_variant() -> usize {
    DEFAULT_TRIALS_VARIANT
}
fn default_out() -> PathBuf {
    PathBuf::from("results")
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

impl Default for ExperimentConfig {
    fn default() -> Self {
        serde_json::from_str("{}").expect("all fields have defaults")
    }
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, empty) in [
            ("regimes", self.regimes.is_empty()),
            ("classes", self.classes.is_empty()),
            ("dims", self.dims.is_empty()),
            ("dists", self.dists.is_empty()),
        ] {
            if empty {
                return Err(Error::config(format!("{name} must not be empty")));
            }
        }
        if self.dims.contains(&0) {
            return Err(Error::config("every dimension must be at least 1"));
        }
        if self.trials == Some(0) || self.trials_standard == 0 || self.trials_variant == 0 {
            return Err(Error::config("trial counts must be at least 1"));
        }
        for cell in self.cells() {
            self.trial_config(&cell, 0).validate()?;
        }
        Ok(())
    }

    /// Cells in configuration order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut cells = Vec::new();
        for &regime in &self.regimes {
            for &class in &self.classes {
                for &n in &self.dims {
                    for &dist in &self.dists {
                        cells.push(Cell {
                            regime,
                            class,
                            n,
                            dist,
                        });
                    }
                }
            }
        }
        cells
    }

    pub fn trials_for(&self, cell: &Cell) -> usize {
        match self.trials {
            Some(t) => t,
            None if cell.regime == Regime::Standard && cell.dist == DistributionSpec::Uniform => {
                self.trials_standard
            }
            None => self.trials_variant,
        }
    }

    pub fn trial_config(&self, cell: &Cell, trial: usize) -> TrialConfig {
        TrialConfig {
            class: cell.class,
            n: cell.n,
            dist: cell.dist,
            regime: cell.regime,
            init: None,
            samples: self.samples,
            validation_size: self.validation_size,
            tolerance: self.tolerance,
            epsilon: self.epsilon,
            max_generations: self.max_generations,
            support: self.support,
            validation_redraw: self.validation_redraw,
            seed: trial_seed(self.master_seed, &cell.key(), trial),
        }
    }
}

/// One point of the sweep grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cell {
    pub regime: Regime,
    pub class: FunctionClass,
    pub n: usize,
    pub dist: DistributionSpec,
}

impl Cell {
    pub fn of(cfg: &TrialConfig) -> Self {
        Cell {
            regime: cfg.regime,
            class: cfg.class,
            n: cfg.n,
            dist: cfg.dist,
        }
    }

    /// `regime/class/n<k>/dist`, the relative directory and the seed salt.
    pub fn key(&self) -> String {
        format!(
            "{}/{}/n{}/{}",
            self.regime,
            self.class,
            self.n,
            self.dist.slug()
        )
    }

    pub fn dir(&self, root: &Path) -> PathBuf {
        root.join(self.regime.name())
            .join(self.class.name())
            .join(format!("n{}", self.n))
            .join(self.dist.slug())
    }
}

fn dist_rank(d: &DistributionSpec) -> u8 {
    match d {
        DistributionSpec::Uniform => 0,
        DistributionSpec::BinomialLowEntropy { .. } => 1,
        DistributionSpec::BetaThreshold { .. } => 2,
        DistributionSpec::BiasedBernoulli { .. } => 3,
    }
}

impl Eq for Cell {}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        (
            self.regime,
            self.class,
            self.n,
            dist_rank(&self.dist),
            self.dist.slug(),
        )
            .cmp(&(
                other.regime,
                other.class,
                other.n,
                dist_rank(&other.dist),
                other.dist.slug(),
            ))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

/// Stable per-trial seed; independent of scheduling and of the other cells.
pub fn trial_seed(master_seed: u64, cell_key: &str, trial: usize) -> u64 {
    splitmix64(splitmix64(master_seed ^ fnv1a(cell_key.as_bytes())) ^ trial as u64)
}

/// Aggregate metrics for one cell.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub regime: Regime,
    pub class: FunctionClass,
    pub n: usize,
    pub dist: DistributionSpec,
    pub trials: usize,
    pub successes: usize,
    pub success_rate: f64,
    /// Mean generations over successful trials; `None` without successes.
    pub avg_generations_success: Option<f64>,
    pub avg_bene_per_gen: f64,
    pub avg_neut_per_gen: f64,
    pub evolvable: bool,
}

impl SummaryRow {
    pub fn cell(&self) -> Cell {
        Cell {
            regime: self.regime,
            class: self.class,
            n: self.n,
            dist: self.dist,
        }
    }

    fn csv_fields(&self) -> [String; 11] {
        [
            self.regime.to_string(),
            self.class.to_string(),
            self.n.to_string(),
            self.dist.slug(),
            self.trials.to_string(),
            self.successes.to_string(),
            self.success_rate.to_string(),
            self.avg_generations_success
                .map(|v| v.to_string())
                .unwrap_or_default(),
            self.avg_bene_per_gen.to_string(),
            self.avg_neut_per_gen.to_string(),
            self.evolvable.to_string(),
        ]
    }
}

/// Aggregates the trials of a single cell.
pub fn summarize(results: &[TrialResult]) -> Result<SummaryRow> {
    let first = results.first().ok_or(Error::Empty("trial results"))?;
    let cell = Cell::of(&first.config);
    if let Some(other) = results.iter().find(|r| Cell::of(&r.config) != cell) {
        return Err(Error::config(format!(
            "summarize expects one cell, got {} and {}",
            cell.key(),
            Cell::of(&other.config).key()
        )));
    }
    let trials = results.len();
    let successes = results.iter().filter(|r| r.is_success()).count();
    let success_gens: usize = results
        .iter()
        .filter(|r| r.is_success())
        .map(|r| r.generations_used)
        .sum();
    let generations: usize = results.iter().map(|r| r.records.len()).sum();
    let bene: usize = results
        .iter()
        .flat_map(|r| &r.records)
        .map(|g| g.bene_count)
        .sum();
    let neut: usize = results
        .iter()
        .flat_map(|r| &r.records)
        .map(|g| g.neut_count)
        .sum();
    let per_gen = |total: usize| {
        if generations == 0 {
            0.0
        } else {
            total as f64 / generations as f64
        }
    };
    Ok(SummaryRow {
        regime: cell.regime,
        class: cell.class,
        n: cell.n,
        dist: cell.dist,
        trials,
        successes,
        success_rate: successes as f64 / trials as f64,
        avg_generations_success: (successes > 0).then(|| success_gens as f64 / successes as f64),
        avg_bene_per_gen: per_gen(bene),
        avg_neut_per_gen: per_gen(neut),
        evolvable: evolvable_verdict(results, default_min_successes(trials), trials)?,
    })
}

/// Renders rows as `summary.csv`, sorted by cell.
pub fn summary_csv(rows: &[SummaryRow]) -> Result<String> {
    let mut sorted: Vec<&SummaryRow> = rows.iter().collect();
    sorted.sort_by_key(|r| r.cell());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(SUMMARY_HEADER)?;
    for row in sorted {
        w.write_record(row.csv_fields())?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::io("summary.csv", e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn write_summary(out: &Path, rows: &[SummaryRow]) -> Result<PathBuf> {
    let path = out.join("summary.csv");
    fs::write(&path, summary_csv(rows)?).map_err(|e| Error::io(&path, e))?;
    Ok(path)
}

/// A trial that panicked or returned an error. Such trials never reach
/// generation 0, so they are left out of the cell's denominator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialError {
    pub trial: usize,
    pub config: TrialConfig,
    pub message: String,
}

#[derive(Debug, Clone)]
pub struct CellReport {
    pub cell: Cell,
    pub results: Vec<TrialResult>,
    pub errors: Vec<TrialError>,
}

#[derive(Debug, Clone)]
pub struct ExperimentReport {
    pub cells: Vec<CellReport>,
    /// One row per cell with at least one completed trial, sorted by cell.
    pub rows: Vec<SummaryRow>,
}

impl ExperimentReport {
    pub fn errors(&self) -> impl Iterator<Item = &TrialError> {
        self.cells.iter().flat_map(|c| &c.errors)
    }

    pub fn all_results(&self) -> impl Iterator<Item = &TrialResult> {
        self.cells.iter().flat_map(|c| &c.results)
    }
}

pub fn run_experiment(cfg: &ExperimentConfig, workers: usize) -> Result<ExperimentReport> {
    run_experiment_with(cfg, workers, run_trial)
}

/// Runs every cell with `runner` standing in for the engine. Panics and
/// errors inside a trial are captured as [`TrialError`]s.
pub fn run_experiment_with<F>(
    cfg: &ExperimentConfig,
    workers: usize,
    runner: F,
) -> Result<ExperimentReport>
where
    F: Fn(&TrialConfig) -> Result<TrialResult> + Sync,
{
    cfg.validate()?;
    ensure_writable(&cfg.out)?;

    let cells = cfg.cells();
    let jobs: Vec<(usize, usize, TrialConfig)> = cells
        .iter()
        .enumerate()
        .flat_map(|(ci, cell)| {
            (0..cfg.trials_for(cell)).map(move |t| (ci, t, cfg.trial_config(cell, t)))
        })
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::config(format!("cannot start worker pool: {e}")))?;
    let outcomes: Vec<std::result::Result<TrialResult, String>> = pool.install(|| {
        jobs.par_iter()
            .map(
                |(_, trial, tc)| match catch_unwind(AssertUnwindSafe(|| runner(tc))) {
                    Ok(Ok(mut r)) => {
                        r.trial = *trial;
                        Ok(r)
                    }
                    Ok(Err(e)) => Err(e.to_string()),
                    Err(panic) => Err(panic_message(panic.as_ref())),
                },
            )
            .collect()
    });

    let mut reports: Vec<CellReport> = cells
        .iter()
        .map(|&cell| CellReport {
            cell,
            results: Vec::new(),
            errors: Vec::new(),
        })
        .collect();
    for ((ci, trial, tc), outcome) in jobs.into_iter().zip(outcomes) {
        match outcome {
            Ok(r) => reports[ci].results.push(r),
            Err(message) => reports[ci].errors.push(TrialError {
                trial,
                config: tc,
                message,
            }),
        }
    }

    let mut rows = Vec::new();
    for report in &reports {
        write_cell(&cfg.out, report)?;
        if !report.results.is_empty() {
            rows.push(summarize(&report.results)?);
        }
    }
    rows.sort_by_key(|r| r.cell());
    write_summary(&cfg.out, &rows)?;
    Ok(ExperimentReport {
        cells: reports,
        rows,
    })
}

fn panic_message(panic: &(dyn std::any::Any + Send)) -> String {
    if let Some(s) = panic.downcast_ref::<&str>() {
        format!("trial panicked: {s}")
    } else if let Some(s) = panic.downcast_ref::<String>() {
        format!("trial panicked: {s}")
    } else {
        "trial panicked".to_string()
    }
}

fn ensure_writable(out: &Path) -> Result<()> {
    fs::create_dir_all(out).map_err(|e| Error::io(out, e))?;
    let probe = out.join(".evolab-write-probe");
    fs::write(&probe, b"").map_err(|e| Error::io(&probe, e))?;
    fs::remove_file(&probe).map_err(|e| Error::io(&probe, e))
}

fn write_cell(root: &Path, report: &CellReport) -> Result<()> {
    let dir = report.cell.dir(root);
    fs::create_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
    for r in &report.results {
        let jsonl = dir.join(format!("trial{}.jsonl", r.trial));
        fs::write(&jsonl, r.records_jsonl()?).map_err(|e| Error::io(&jsonl, e))?;
        let json = dir.join(format!("trial{}.json", r.trial));
        fs::write(&json, serde_json::to_string_pretty(r)? + "\n")
            .map_err(|e| Error::io(&json, e))?;
    }
    for e in &report.errors {
        let path = dir.join(format!("trial{}.error.json", e.trial));
        fs::write(&path, serde_json::to_string_pretty(e)? + "\n")
            .map_err(|err| Error::io(&path, err))?;
    }
    Ok(())
}

/// Reads every persisted `TrialResult` under `dir`, ordered by cell and
/// trial index.
pub fn load_results(dir: &Path) -> Result<Vec<TrialResult>> {
    let mut files = Vec::new();
    collect_json(dir, &mut files)?;
    let mut results = Vec::with_capacity(files.len());
    for path in files {
        let text = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
        results.push(serde_json::from_str::<TrialResult>(&text)?);
    }
    if results.is_empty() {
        return Err(Error::Empty("no trial results found"));
    }
    results.sort_by(|a, b| {
        Cell::of(&a.config)
            .cmp(&Cell::of(&b.config))
            .then(a.trial.cmp(&b.trial))
    });
    Ok(results)
}

fn collect_json(dir: &Path, out: &mut Vec<PathBuf>) -> Result<()> {
    let entries = fs::read_dir(dir).map_err(|e| Error::io(dir, e))?;
    for entry in entries {
        let path = entry.map_err(|e| Error::io(dir, e))?.path();
        if path.is_dir() {
            if path.file_name().is_some_and(|n| n != "plots") {
                collect_json(&path, out)?;
            }
            continue;
        }
        let name = path
            .file_name()
            .and_then(|n| n.to_str())
            .unwrap_or_default();
        if name.starts_with("trial") && name.ends_with(".json") && !name.ends_with(".error.json") {
            out.push(path);
        }
    }
    Ok(())
}

/// Groups results by cell, preserving input order within each cell.
pub fn group_by_cell(results: &[TrialResult]) -> BTreeMap<Cell, Vec<TrialResult>> {
    let mut groups: BTreeMap<Cell, Vec<TrialResult>> = BTreeMap::new();
    for r in results {
        groups
            .entry(Cell::of(&r.config))
            .or_default()
            .push(r.clone());
    }
    groups
}

/// Recomputes summary rows from the trial files under `dir`.
pub fn summarize_dir(dir: &Path) -> Result<Vec<SummaryRow>> {
    let results = load_results(dir)?;
    group_by_cell(&results)
        .values()
        .map(|group| summarize(group))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{GenerationRecord, Outcome, StepKind};

    fn record(bene: usize, neut: usize) -> GenerationRecord {
        GenerationRecord {
            generation: 1,
            train_perf: 0.0,
            validation_perf: 0.0,
            bene_count: bene,
            neut_count: neut,
            kind: StepKind::Neutral,
            base_perf: 0.0,
        }
    }

    fn result(outcome: Outcome, records: Vec<GenerationRecord>) -> TrialResult {
        TrialResult {
            config: TrialConfig::new(FunctionClass::Majority, 5),
            trial: 0,
            outcome,
            generations_used: records.len(),
            final_validation_perf: 0.0,
            target: String::new(),
            initial_hypothesis: String::new(),
            final_hypothesis: String::new(),
            records,
        }
    }

    #[test]
    fn summary_examples() {
        let trials: Vec<TrialResult> = (0..5)
            .map(|i| {
                result(
                    if i < 3 {
                        Outcome::Success
                    } else {
                        Outcome::Failure
                    },
                    vec![record(1, 1)],
                )
            })
            .collect();
        let row = summarize(&trials).unwrap();
        assert_eq!(row.success_rate, 0.6);
        assert!(row.evolvable);

        let single = summarize(&[result(
            Outcome::Failure,
            vec![record(2, 0), record(0, 0), record(1, 3)],
        )])
        .unwrap();
        assert_eq!(single.avg_bene_per_gen, 1.0);
        assert_eq!(single.avg_neut_per_gen, 1.0);
        assert_eq!(single.avg_generations_success, None);

        let three = vec![record(0, 0); 3];
        let five = vec![record(0, 0); 5];
        let pair = summarize(&[
            result(Outcome::Success, three),
            result(Outcome::Success, five),
        ])
        .unwrap();
        assert_eq!(pair.avg_generations_success, Some(4.0));

        assert!(matches!(summarize(&[]), Err(Error::Empty(_))));
    }

    #[test]
    fn summarize_rejects_mixed_cells() {
        let a = result(Outcome::Success, vec![record(0, 0)]);
        let mut b = a.clone();
        b.config.n = 6;
        assert!(summarize(&[a, b]).is_err());
    }

    #[test]
    fn empty_average_is_an_empty_csv_field() {
        let row = summarize(&[result(Outcome::Failure, vec![record(0, 2)])]).unwrap();
        let csv = summary_csv(&[row]).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), SUMMARY_HEADER.join(","));
        assert_eq!(
            lines.next().unwrap(),
            "standard,majority,5,uniform,1,0,0,,0,2,false"
        );
    }

    #[test]
    fn config_defaults_and_validation() {
        let cfg = ExperimentConfig::default();
        assert_eq!(cfg.dims, DEFAULT_DIMS);
        assert_eq!(cfg.classes.len(), 6);
        assert_eq!(cfg.samples, 1000);
        assert_eq!(cfg.max_generations, 500);
        cfg.validate().unwrap();

        let cfg = ExperimentConfig::from_json(r#"{"dims": [], "out": "x"}"#).unwrap();
        assert!(cfg.validate().is_err());
        assert!(ExperimentConfig::from_json(r#"{"dimz": [5]}"#).is_err());
        let cfg = ExperimentConfig::from_json(
            r#"{"dists": ["bernoulli:p=0.75", "beta"], "regimes": ["no_neutral"]}"#,
        )
        .unwrap();
        assert_eq!(
            cfg.dists,
            vec![DistributionSpec::bernoulli(), DistributionSpec::beta()]
        );
        assert_eq!(cfg.regimes, vec![Regime::NoNeutral]);
    }

    #[test]
    fn trial_counts_per_cell() {
        let cfg = ExperimentConfig::default();
        let cell = |regime, dist| Cell {
            regime,
            class: FunctionClass::Parity,
            n: 5,
            dist,
        };
        assert_eq!(
            cfg.trials_for(&cell(Regime::Standard, DistributionSpec::Uniform)),
            30
        );
        assert_eq!(
            cfg.trials_for(&cell(Regime::Standard, DistributionSpec::beta())),
            5
        );
        assert_eq!(
            cfg.trials_for(&cell(Regime::NoNeutral, DistributionSpec::Uniform)),
            5
        );
        let fixed = ExperimentConfig {
            trials: Some(2),
            ..ExperimentConfig::default()
        };
        assert_eq!(
            fixed.trials_for(&cell(Regime::Standard, DistributionSpec::Uniform)),
            2
        );
    }

    #[test]
    fn seeds_are_stable_and_distinct() {
        assert_eq!(trial_seed(1, "a", 0), trial_seed(1, "a", 0));
        assert_ne!(trial_seed(1, "a", 0), trial_seed(1, "a", 1));
        assert_ne!(trial_seed(1, "a", 0), trial_seed(1, "b", 0));
        assert_ne!(trial_seed(1, "a", 0), trial_seed(2, "a", 0));
    }

    #[test]
    fn cells_order_by_regime_class_n_dist() {
        let mut cells = ExperimentConfig {
            regimes: vec![Regime::NoNeutral, Regime::Standard],
            classes: vec![FunctionClass::Parity, FunctionClass::GeneralConjunction],
            dims: vec![10, 5],
            dists: vec![DistributionSpec::bernoulli(), DistributionSpec::Uniform],
            ..ExperimentConfig::default()
        }
        .cells();
        cells.sort();
        assert_eq!(
            cells.first().unwrap().key(),
            "standard/general_conjunction/n5/uniform"
        );
        assert_eq!(
            cells.last().unwrap().key(),
            "no_neutral/parity/n10/bernoulli_p0.75"
        );
    }
}
