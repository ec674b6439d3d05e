//! Exact and empirical performance: the correlation `E[f(x) r(x)]`.

use serde::{Deserialize, Serialize};

use crate::boolfn::{target_truth, Assignment, FunctionClass, Hypothesis, TargetFunction};
use crate::error::{Error, Result};
use crate::sampling::{pmf, DistributionSpec};

/// Default largest `n` for which [`exact_perf`] enumerates `2^n` inputs.
pub const DEFAULT_ENUMERATION_CAP: usize = 20;

/// A performance value in `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PerfValue(f64);

impl PerfValue {
    pub fn new(value: f64) -> Result<Self> {
        if (-1.0..=1.0).contains(&value) {
            Ok(PerfValue(value))
        } else {
            Err(Error::config(format!(
                "performance {value} outside [-1, 1]"
            )))
        }
    }

    /// From agreement counts on a batch of `s` points: `(agree - disagree) / s`.
    pub(crate) fn from_agreements(agree: usize, s: usize) -> Self {
        debug_assert!(agree <= s && s > 0);
        PerfValue((2.0 * agree as f64 - s as f64) / s as f64)
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }
}

impl From<PerfValue> for f64 {
    fn from(p: PerfValue) -> f64 {
        p.0
    }
}

fn check_pair(f: &TargetFunction, r: &Hypothesis) -> Result<()> {
    r.check_class(f.class())?;
    if r.n() != f.n() {
        return Err(Error::DimensionMismatch {
            expected: f.n(),
            actual: r.n(),
        });
    }
    Ok(())
}

/// `Σ_x f(x) r(x) D(x)` by enumeration, refused above the default cap.
pub fn exact_perf(f: &TargetFunction, r: &Hypothesis, d: &DistributionSpec) -> Result<PerfValue> {
    exact_perf_capped(f, r, d, DEFAULT_ENUMERATION_CAP)
}

pub fn exact_perf_capped(
    f: &TargetFunction,
    r: &Hypothesis,
    d: &DistributionSpec,
    cap: usize,
) -> Result<PerfValue> {
    check_pair(f, r)?;
    let n = f.n();
    if n > cap || n > 63 {
        return Err(Error::TooLarge {
            n,
            cap: cap.min(63),
        });
    }
    let class = f.class();
    let total: f64 = (0..1u64 << n)
        .map(|mask| {
            let x = Assignment::from_mask(mask, n);
            let agree = target_truth(f, &x) == r.truth(class, &x);
            let w = pmf(d, &x);
            if agree {
                w
            } else {
                -w
            }
        })
        .sum();
    Ok(PerfValue(total.clamp(-1.0, 1.0)))
}

/// Target labels for a batch, computed once and shared by every candidate
/// scored against that batch.
#[derive(Debug, Clone)]
pub struct LabelledBatch<'a> {
    batch: &'a [Assignment],
    labels: Vec<bool>,
}

impl<'a> LabelledBatch<'a> {
    pub fn new(f: &TargetFunction, batch: &'a [Assignment]) -> Result<Self> {
        if batch.is_empty() {
            return Err(Error::Empty("batch"));
        }
        if let Some(x) = batch.iter().find(|x| x.n() != f.n()) {
            return Err(Error::DimensionMismatch {
                expected: f.n(),
                actual: x.n(),
            });
        }
        let labels = batch.iter().map(|x| target_truth(f, x)).collect();
        Ok(LabelledBatch { batch, labels })
    }

    pub fn len(&self) -> usize {
        self.batch.len()
    }

    pub fn is_empty(&self) -> bool {
        self.batch.is_empty()
    }

    pub fn assignments(&self) -> &'a [Assignment] {
        self.batch
    }

    /// Empirical performance of `r`; `r` must already be valid for `f`.
    pub(crate) fn score(&self, r: &Hypothesis, class: FunctionClass) -> PerfValue {
        score_labels(self.batch, &self.labels, r, class)
    }

    pub(crate) fn into_labels(self) -> Labels {
        Labels(self.labels)
    }
}

/// Target labels detached from the batch they were computed on.
#[derive(Debug, Clone)]
pub(crate) struct Labels(Vec<bool>);

impl Labels {
    pub(crate) fn score(
        &self,
        batch: &[Assignment],
        r: &Hypothesis,
        class: FunctionClass,
    ) -> PerfValue {
        debug_assert_eq!(batch.len(), self.0.len());
        score_labels(batch, &self.0, r, class)
    }
}

fn score_labels(
    batch: &[Assignment],
    labels: &[bool],
    r: &Hypothesis,
    class: FunctionClass,
) -> PerfValue {
    let agree = batch
        .iter()
        .zip(labels)
        .filter(|(x, &label)| r.truth(class, x) == label)
        .count();
    PerfValue::from_agreements(agree, batch.len())
}

/// `(1/s) Σ f(x_i) r(x_i)` over the batch.
pub fn empirical_perf(
    f: &TargetFunction,
    r: &Hypothesis,
    batch: &[Assignment],
) -> Result<PerfValue> {
    check_pair(f, r)?;
    let labelled = LabelledBatch::new(f, batch)?;
    Ok(labelled.score(r, f.class()))
}

/// Mean of the pointwise product of two equally long sign sequences.
pub fn correlation(a: &[i8], b: &[i8]) -> Result<PerfValue> {
    if a.is_empty() {
        return Err(Error::Empty("sign sequence"));
    }
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            actual: b.len(),
        });
    }
    let agree = a.iter().zip(b).filter(|(x, y)| x == y).count();
    Ok(PerfValue::from_agreements(agree, a.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::{
        eval_hypothesis, initial_hypothesis, sample_target, InitMode, SupportSampling,
    };
    use crate::rng_from_seed;
    use crate::sampling::sample_batch;
    use rand::Rng;

    fn monconj(n: usize, support: Vec<usize>) -> TargetFunction {
        TargetFunction::new(FunctionClass::MonotoneConjunction, n, support, None).unwrap()
    }

    #[test]
    fn exact_perf_of_own_encoding_is_one() {
        let mut rng = rng_from_seed(1);
        for class in FunctionClass::ALL {
            for d in DistributionSpec::defaults() {
                let f = sample_target(class, 8, SupportSampling::UniformSize, &mut rng).unwrap();
                let p = exact_perf(&f, &f.to_hypothesis(), &d).unwrap();
                assert!((p.value() - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn exact_perf_of_complement_is_minus_one() {
        // x1 and ¬x1 as general conjunctions disagree everywhere.
        let f = TargetFunction::new(
            FunctionClass::GeneralConjunction,
            3,
            vec![0],
            Some(vec![false]),
        )
        .unwrap();
        let g = TargetFunction::new(
            FunctionClass::GeneralConjunction,
            3,
            vec![0],
            Some(vec![true]),
        )
        .unwrap();
        let p = exact_perf(&f, &g.to_hypothesis(), &DistributionSpec::Uniform).unwrap();
        assert!((p.value() + 1.0).abs() < 1e-12);
    }

    /// Enumerated by hand: f = x1, r = x1 ∧ x2 differ only at (+1, -1).
    #[test]
    fn exact_perf_small_example() {
        let f = monconj(2, vec![0]);
        let r = monconj(2, vec![0, 1]).to_hypothesis();
        let p = exact_perf(&f, &r, &DistributionSpec::Uniform).unwrap();
        assert!((p.value() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn exact_perf_refuses_large_n() {
        let f = monconj(21, vec![0]);
        let r = f.to_hypothesis();
        assert!(matches!(
            exact_perf(&f, &r, &DistributionSpec::Uniform),
            Err(Error::TooLarge { n: 21, cap: 20 })
        ));
        assert!(exact_perf_capped(
            &monconj(4, vec![0]),
            &monconj(4, vec![1]).to_hypothesis(),
            &DistributionSpec::Uniform,
            3
        )
        .is_err());
    }

    #[test]
    fn empirical_examples() {
        let f = monconj(2, vec![0]);
        let r = monconj(2, vec![0, 1]).to_hypothesis();
        let batch: Vec<Assignment> = [[1, 1], [-1, 1], [-1, -1], [1, -1]]
            .iter()
            .map(|s| Assignment::from_signs(s).unwrap())
            .collect();
        assert_eq!(empirical_perf(&f, &r, &batch).unwrap().value(), 0.5);
        assert_eq!(
            empirical_perf(&f, &f.to_hypothesis(), &batch)
                .unwrap()
                .value(),
            1.0
        );
        assert!(matches!(empirical_perf(&f, &r, &[]), Err(Error::Empty(_))));
    }

    #[test]
    fn empirical_values_are_on_the_2_over_s_lattice() {
        let mut rng = rng_from_seed(8);
        let f = sample_target(
            FunctionClass::GeneralDisjunction,
            6,
            SupportSampling::UniformSize,
            &mut rng,
        )
        .unwrap();
        let r = initial_hypothesis(
            FunctionClass::GeneralDisjunction,
            6,
            InitMode::Random,
            &mut rng,
        )
        .unwrap();
        for s in [1, 7, 100] {
            let batch = sample_batch(&DistributionSpec::Uniform, 6, s, &mut rng);
            let v = empirical_perf(&f, &r, &batch).unwrap().value();
            let steps = (v + 1.0) * s as f64 / 2.0;
            assert!((steps - steps.round()).abs() < 1e-9);
            assert!((-1.0..=1.0).contains(&v));
        }
    }

    #[test]
    fn negated_hypothesis_flips_sign() {
        let mut rng = rng_from_seed(12);
        for class in FunctionClass::ALL {
            let f = sample_target(class, 9, SupportSampling::UniformSize, &mut rng).unwrap();
            let r = initial_hypothesis(class, 9, InitMode::Random, &mut rng).unwrap();
            let batch = sample_batch(&DistributionSpec::Uniform, 9, 301, &mut rng);
            let fs: Vec<i8> = batch
                .iter()
                .map(|x| crate::eval_target(&f, x).unwrap())
                .collect();
            let rs: Vec<i8> = batch
                .iter()
                .map(|x| eval_hypothesis(&r, class, x).unwrap())
                .collect();
            let neg: Vec<i8> = rs.iter().map(|v| -v).collect();
            let p = empirical_perf(&f, &r, &batch).unwrap().value();
            assert_eq!(correlation(&fs, &rs).unwrap().value(), p);
            assert_eq!(correlation(&fs, &neg).unwrap().value(), -p);
        }
    }

    /// Scoring the full cube with equal weights reproduces the exact value.
    #[test]
    fn full_enumeration_matches_exact_uniform() {
        let mut rng = rng_from_seed(13);
        for n in 1..=8 {
            let cube: Vec<Assignment> = (0..1u64 << n)
                .map(|m| Assignment::from_mask(m, n))
                .collect();
            for class in FunctionClass::ALL {
                let f = sample_target(class, n, SupportSampling::UniformSize, &mut rng).unwrap();
                let r = initial_hypothesis(class, n, InitMode::Random, &mut rng).unwrap();
                let e = empirical_perf(&f, &r, &cube).unwrap().value();
                let x = exact_perf(&f, &r, &DistributionSpec::Uniform)
                    .unwrap()
                    .value();
                assert!((e - x).abs() < 1e-12, "{class} n={n}: {e} vs {x}");
            }
        }
    }

    #[test]
    fn empirical_concentrates_on_exact() {
        let mut rng = rng_from_seed(14);
        let mut misses = 0;
        for _ in 0..20 {
            let class = FunctionClass::ALL[rng.random_range(0..6)];
            let f = sample_target(class, 10, SupportSampling::UniformSize, &mut rng).unwrap();
            let r = initial_hypothesis(class, 10, InitMode::Random, &mut rng).unwrap();
            let batch = sample_batch(&DistributionSpec::Uniform, 10, 10_000, &mut rng);
            let e = empirical_perf(&f, &r, &batch).unwrap().value();
            let x = exact_perf(&f, &r, &DistributionSpec::Uniform)
                .unwrap()
                .value();
            if (e - x).abs() > 0.04 {
                misses += 1;
            }
        }
        assert!(misses <= 1);
    }
}
