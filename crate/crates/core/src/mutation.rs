//! Neighborhoods, beneficial/neutral classification and the mutator rule.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::boolfn::{FunctionClass, Hypothesis, MajoritySubset};
use crate::error::{Error, Result};
use crate::perf::PerfValue;

/// Candidates reachable from `r` in one generation. Index 0 is always `r`.
#[derive(Debug, Clone)]
pub struct Neighborhood {
    class: FunctionClass,
    candidates: Vec<Hypothesis>,
}

impl Neighborhood {
    pub fn class(&self) -> FunctionClass {
        self.class
    }

    pub fn candidates(&self) -> &[Hypothesis] {
        &self.candidates
    }

    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }

    pub fn current(&self) -> &Hypothesis {
        &self.candidates[0]
    }

    pub fn get(&self, index: usize) -> Option<&Hypothesis> {
        self.candidates.get(index)
    }

    pub fn into_candidate(mut self, index: usize) -> Hypothesis {
        self.candidates.swap_remove(index)
    }

    /// Largest neighborhood the edit rules can produce around `r`:
    /// `2n + 1` for literal vectors, `k(n - k) + n + 1` for a majority
    /// over `k` members.
    pub fn size_bound(r: &Hypothesis) -> usize {
        let n = r.n();
        match r {
            Hypothesis::Literals(_) => 2 * n + 1,
            Hypothesis::Majority(m) => {
                let k = m.size();
                k * (n - k) + n + 1
            }
        }
    }
}

/// Builds `N(r)`.
///
/// Literal classes: `r`, every single include toggle, then (general classes
/// only) every polarity flip at an included position. Majority: `r`, every
/// single addition, every single removal while more than one member
/// remains, then every member-for-non-member swap.
pub fn neighborhood(r: &Hypothesis, class: FunctionClass) -> Result<Neighborhood> {
    r.check_class(class)?;
    let n = r.n();
    let mut candidates = Vec::with_capacity(Neighborhood::size_bound(r));
    candidates.push(r.clone());
    match r {
        Hypothesis::Literals(lv) => {
            for i in 0..n {
                let mut next = lv.clone();
                next.toggle_include(i);
                candidates.push(Hypothesis::Literals(next));
            }
            if class.is_general() {
                for i in lv.include().iter_ones() {
                    let mut next = lv.clone();
                    next.flip_polarity(i);
                    candidates.push(Hypothesis::Literals(next));
                }
            }
        }
        Hypothesis::Majority(m) => {
            let members: Vec<usize> = m.members().iter_ones().collect();
            let outsiders: Vec<usize> = (0..n).filter(|&i| !m.members().get(i)).collect();
            for &a in &outsiders {
                candidates.push(Hypothesis::Majority(m.toggled(a)));
            }
            if members.len() > 1 {
                for &d in &members {
                    candidates.push(Hypothesis::Majority(m.toggled(d)));
                }
            }
            for &d in &members {
                let without: MajoritySubset = m.toggled(d);
                for &a in &outsiders {
                    candidates.push(Hypothesis::Majority(without.toggled(a)));
                }
            }
        }
    }
    debug_assert!(candidates.len() <= Neighborhood::size_bound(r));
    Ok(Neighborhood { class, candidates })
}

/// Indices of beneficial and neutral candidates relative to `base_perf`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MutationClassification {
    pub bene: Vec<usize>,
    pub neut: Vec<usize>,
    pub base_perf: PerfValue,
}

/// Empirical perfs sit on a lattice of spacing `2/s`; differences landing
/// exactly on `±t` must not be lost to rounding.
const TIE_SLACK: f64 = 1e-9;

/// Bene: `perf >= base + t`. Neut: `perf >= base - t` and not Bene.
/// Anything lower is deleterious and lands in neither set.
pub fn classify(
    base_perf: PerfValue,
    candidate_perfs: &[PerfValue],
    t: f64,
) -> Result<MutationClassification> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::config(format!("tolerance t = {t} must be positive")));
    }
    let mut bene = Vec::new();
    let mut neut = Vec::new();
    for (i, p) in candidate_perfs.iter().enumerate() {
        let diff = p.value() - base_perf.value();
        if diff >= t - TIE_SLACK {
            bene.push(i);
        } else if diff >= -t - TIE_SLACK {
            neut.push(i);
        }
    }
    Ok(MutationClassification {
        bene,
        neut,
        base_perf,
    })
}

/// Whether neutral candidates may be chosen when nothing is beneficial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MutatorRegime {
    NeutralAllowed,
    BeneficialOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    Beneficial,
    Neutral,
    Terminated,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepKind::Beneficial => "beneficial",
            StepKind::Neutral => "neutral",
            StepKind::Terminated => "terminated",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    Next { index: usize, kind: StepKind },
    Terminated,
}

impl Selection {
    pub fn kind(&self) -> StepKind {
        match self {
            Selection::Next { kind, .. } => *kind,
            Selection::Terminated => StepKind::Terminated,
        }
    }
}

/// The mutator: uniform over Bene if nonempty, otherwise uniform over Neut
/// when the regime allows it, otherwise terminate.
pub fn select_next<R: Rng + ?Sized>(
    cls: &MutationClassification,
    neighborhood: &Neighborhood,
    regime: MutatorRegime,
    rng: &mut R,
) -> Selection {
    let (pool, kind) = if !cls.bene.is_empty() {
        (&cls.bene, StepKind::Beneficial)
    } else if regime == MutatorRegime::NeutralAllowed && !cls.neut.is_empty() {
        (&cls.neut, StepKind::Neutral)
    } else {
        return Selection::Terminated;
    };
    let index = pool[rng.random_range(0..pool.len())];
    debug_assert!(index < neighborhood.len());
    Selection::Next { index, kind }
}
