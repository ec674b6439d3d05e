//! Boolean function classes, targets and hypotheses over `{-1,+1}^n`.
//!
//! Signs are `i8` values `-1` / `+1`; `+1` is logical true. Variable indices
//! are zero-based. Targets are evaluated by walking their support directly,
//! while hypotheses are evaluated on packed bit masks; the two paths are
//! checked against each other in the tests.

use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::Rng;

use crate::bits::BitVector;
use crate::error::{Error, Result};
use crate::serde_str::serde_via_str;

/// One environmental input: a length-`n` vector of signs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    /// Bit `i` is set iff `x_i = +1`.
    plus: BitVector,
}

impl Assignment {
    pub fn from_signs(signs: &[i8]) -> Result<Self> {
        if signs.is_empty() {
            return Err(Error::config("assignment dimension must be at least 1"));
        }
        let mut bits = Vec::with_capacity(signs.len());
        for &s in signs {
            match s {
                1 => bits.push(true),
                -1 => bits.push(false),
                other => {
                    return Err(Error::Parse(format!(
                        "assignment entry {other} is not -1 or +1"
                    )))
                }
            }
        }
        Ok(Assignment {
            plus: BitVector::from_bools(bits),
        })
    }

    /// Builds an assignment from the set of `+1` positions.
    pub fn from_plus_bits(plus: BitVector) -> Self {
        Assignment { plus }
    }

    /// Assignment whose `+1` positions are the low `n` bits of `mask`.
    pub fn from_mask(mask: u64, n: usize) -> Self {
        assert!((1..=64).contains(&n));
        Assignment {
            plus: BitVector::from_words(vec![mask], n),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.plus.len()
    }

    #[inline]
    pub fn sign(&self, i: usize) -> i8 {
        if self.plus.get(i) {
            1
        } else {
            -1
        }
    }

    pub fn signs(&self) -> Vec<i8> {
        (0..self.n()).map(|i| self.sign(i)).collect()
    }

    pub fn plus_bits(&self) -> &BitVector {
        &self.plus
    }

    pub fn count_plus(&self) -> usize {
        self.plus.count_ones()
    }
}

impl fmt::Debug for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Assignment(")?;
        for i in 0..self.n() {
            f.write_str(if self.plus.get(i) { "+" } else { "-" })?;
        }
        f.write_str(")")
    }
}

/// The six target classes. Declaration order is the order used for reports
/// and figure panels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FunctionClass {
    GeneralConjunction,
    GeneralDisjunction,
    MonotoneConjunction,
    MonotoneDisjunction,
    Majority,
    Parity,
}

impl FunctionClass {
    pub const ALL: [FunctionClass; 6] = [
        FunctionClass::GeneralConjunction,
        FunctionClass::GeneralDisjunction,
        FunctionClass::MonotoneConjunction,
        FunctionClass::MonotoneDisjunction,
        FunctionClass::Majority,
        FunctionClass::Parity,
    ];

    /// Snake-case identifier used on the command line, in paths and in CSVs.
    pub fn name(self) -> &'static str {
        match self {
            FunctionClass::GeneralConjunction => "general_conjunction",
            FunctionClass::GeneralDisjunction => "general_disjunction",
            FunctionClass::MonotoneConjunction => "monotone_conjunction",
            FunctionClass::MonotoneDisjunction => "monotone_disjunction",
            FunctionClass::Majority => "majority",
            FunctionClass::Parity => "parity",
        }
    }

    /// Short tag used in the canonical text form of targets and hypotheses.
    pub fn short_name(self) -> &'static str {
        match self {
            FunctionClass::GeneralConjunction => "genconj",
            FunctionClass::GeneralDisjunction => "gendisj",
            FunctionClass::MonotoneConjunction => "monconj",
            FunctionClass::MonotoneDisjunction => "mondisj",
            FunctionClass::Majority => "majority",
            FunctionClass::Parity => "parity",
        }
    }

    /// Classes whose literals may be negated.
    pub fn is_general(self) -> bool {
        matches!(
            self,
            FunctionClass::GeneralConjunction | FunctionClass::GeneralDisjunction
        )
    }

    /// Classes represented by include/polarity vectors (everything but majority).
    pub fn uses_literals(self) -> bool {
        self != FunctionClass::Majority
    }

    pub fn valid_names() -> String {
        Self::ALL
            .iter()
            .map(|c| c.name())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for FunctionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FunctionClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s || c.short_name() == s)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown function class '{s}' (valid: {})",
                    Self::valid_names()
                ))
            })
    }
}

serde_via_str!(FunctionClass);

/// How a target's support set is drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SupportSampling {
    /// `|S|` uniform in `1..=n`, then a uniform subset of that size.
    UniformSize,
    /// Every variable joins `S` independently with probability 1/2,
    /// redrawn while empty (a uniform nonempty subset).
    #[default]
    UniformSubset,
}

impl fmt::Display for SupportSampling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SupportSampling::UniformSize => "uniform_size",
            SupportSampling::UniformSubset => "uniform_subset",
        })
    }
}

impl FromStr for SupportSampling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform_size" => Ok(SupportSampling::UniformSize),
            "uniform_subset" => Ok(SupportSampling::UniformSubset),
            _ => Err(Error::Parse(format!(
                "unknown support sampling '{s}' (valid: uniform_size, uniform_subset)"
            ))),
        }
    }
}

serde_via_str!(SupportSampling);

/// A hidden target `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetFunction {
    class: FunctionClass,
    n: usize,
    support: Vec<usize>,
    /// `negated[j]` applies to `support[j]`; present only for general classes.
    negated: Option<Vec<bool>>,
}

impl TargetFunction {
    /// Validates and builds a target. `support` may be in any order but must
    /// hold distinct indices below `n`.
    pub fn new(
        class: FunctionClass,
        n: usize,
        support: Vec<usize>,
        negated: Option<Vec<bool>>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::config("dimension n must be at least 1"));
        }
        let mut pairs: Vec<(usize, bool)> = match (&negated, class.is_general()) {
            (Some(neg), true) => {
                if neg.len() != support.len() {
                    return Err(Error::config(
                        "polarity must cover exactly the support variables",
                    ));
                }
                support.iter().copied().zip(neg.iter().copied()).collect()
            }
            (None, false) => support.iter().map(|&i| (i, false)).collect(),
            (None, true) => {
                return Err(Error::config(format!(
                    "{class} target needs polarity flags"
                )))
            }
            (Some(_), false) => {
                return Err(Error::config(format!(
                    "{class} target takes no polarity flags"
                )))
            }
        };
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::config(format!("duplicate support index {}", w[0].0)));
            }
        }
        if let Some(&(i, _)) = pairs.iter().find(|(i, _)| *i >= n) {
            return Err(Error::config(format!(
                "support index {i} out of range for n = {n}"
            )));
        }
        if class == FunctionClass::Majority && pairs.len() != n {
            return Err(Error::config("majority targets range over all n variables"));
        }
        let support = pairs.iter().map(|p| p.0).collect();
        let negated = class
            .is_general()
            .then(|| pairs.iter().map(|p| p.1).collect());
        Ok(TargetFunction {
            class,
            n,
            support,
            negated,
        })
    }

    pub fn majority(n: usize) -> Result<Self> {
        Self::new(FunctionClass::Majority, n, (0..n).collect(), None)
    }

    pub fn class(&self) -> FunctionClass {
        self.class
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sorted support indices.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn negated(&self) -> Option<&[bool]> {
        self.negated.as_deref()
    }

    /// The hypothesis whose literal set is exactly this target's.
    pub fn to_hypothesis(&self) -> Hypothesis {
        let mut include = BitVector::zeros(self.n);
        let mut polarity = BitVector::zeros(self.n);
        for (j, &i) in self.support.iter().enumerate() {
            include.set(i, true);
            if self.negated.as_ref().is_some_and(|neg| neg[j]) {
                polarity.set(i, true);
            }
        }
        match self.class {
            FunctionClass::Majority => Hypothesis::Majority(MajoritySubset { members: include }),
            _ => Hypothesis::Literals(LiteralVector { include, polarity }),
        }
    }

    pub fn to_text(&self) -> String {
        self.to_hypothesis().to_text(self.class)
    }
}

impl fmt::Display for TargetFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Include/polarity encoding for the literal-based classes. A set polarity
/// bit means the literal is negated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LiteralVector {
    include: BitVector,
    polarity: BitVector,
}

impl LiteralVector {
    pub fn new(include: BitVector, polarity: BitVector) -> Result<Self> {
        if include.len() != polarity.len() {
            return Err(Error::DimensionMismatch {
                expected: include.len(),
                actual: polarity.len(),
            });
        }
        if include.is_empty() {
            return Err(Error::config("dimension n must be at least 1"));
        }
        let mut canonical = polarity.clone();
        canonical.retain(&include);
        if canonical != polarity {
            return Err(Error::config(
                "polarity bits must be 0 where include bits are 0",
            ));
        }
        Ok(LiteralVector { include, polarity })
    }

    pub fn empty(n: usize) -> Self {
        LiteralVector {
            include: BitVector::zeros(n),
            polarity: BitVector::zeros(n),
        }
    }

    pub fn include(&self) -> &BitVector {
        &self.include
    }

    pub fn polarity(&self) -> &BitVector {
        &self.polarity
    }

    /// Toggles inclusion of literal `i`; dropping a literal clears its polarity.
    pub fn toggle_include(&mut self, i: usize) {
        self.include.toggle(i);
        if !self.include.get(i) {
            self.polarity.set(i, false);
        }
    }

    /// Flips the sign of an included literal.
    pub fn flip_polarity(&mut self, i: usize) {
        debug_assert!(self.include.get(i));
        self.polarity.toggle(i);
    }
}

/// Majority over a nonempty subset of the variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MajoritySubset {
    members: BitVector,
}

impl MajoritySubset {
    pub fn new(members: BitVector) -> Result<Self> {
        if members.none() {
            return Err(Error::config(
                "majority hypothesis needs at least one member",
            ));
        }
        Ok(MajoritySubset { members })
    }

    pub fn from_indices(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut bits = BitVector::zeros(n);
        for i in members {
            if i >= n {
                return Err(Error::config(format!(
                    "member {i} out of range for n = {n}"
                )));
            }
            bits.set(i, true);
        }
        Self::new(bits)
    }

    pub fn members(&self) -> &BitVector {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.count_ones()
    }

    pub(crate) fn toggled(&self, i: usize) -> Self {
        let mut members = self.members.clone();
        members.toggle(i);
        MajoritySubset { members }
    }
}

/// A candidate representation `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Hypothesis {
    Literals(LiteralVector),
    Majority(MajoritySubset),
}

impl Hypothesis {
    pub fn n(&self) -> usize {
        match self {
            Hypothesis::Literals(lv) => lv.include.len(),
            Hypothesis::Majority(m) => m.members.len(),
        }
    }

    /// Checks that this representation is a valid member of `class`.
    pub fn check_class(&self, class: FunctionClass) -> Result<()> {
        match (self, class) {
            (Hypothesis::Majority(_), FunctionClass::Majority) => Ok(()),
            (Hypothesis::Literals(lv), c) if c.uses_literals() => {
                if !c.is_general() && !lv.polarity.none() {
                    return Err(Error::RepresentationMismatch(c));
                }
                Ok(())
            }
            _ => Err(Error::RepresentationMismatch(class)),
        }
    }

    /// Evaluates without validation; callers must have run `check_class`
    /// and checked dimensions.
    #[inline]
    pub(crate) fn truth(&self, class: FunctionClass, x: &Assignment) -> bool {
        let plus = x.plus.words();
        match self {
            Hypothesis::Literals(lv) => {
                let inc = lv.include.words();
                let pol = lv.polarity.words();
                match class {
                    FunctionClass::MonotoneConjunction | FunctionClass::GeneralConjunction => {
                        !lv.include.none()
                            && plus
                                .iter()
                                .zip(inc)
                                .zip(pol)
                                .all(|((p, i), q)| (p ^ q) & i == *i)
                    }
                    FunctionClass::MonotoneDisjunction | FunctionClass::GeneralDisjunction => plus
                        .iter()
                        .zip(inc)
                        .zip(pol)
                        .any(|((p, i), q)| (p ^ q) & i != 0),
                    FunctionClass::Parity => {
                        plus.iter()
                            .zip(inc)
                            .map(|(p, i)| (p & i).count_ones())
                            .sum::<u32>()
                            % 2
                            == 1
                    }
                    FunctionClass::Majority => {
                        unreachable!("majority uses a subset representation")
                    }
                }
            }
            Hypothesis::Majority(m) => {
                let mem = m.members.words();
                let agree: u32 = plus
                    .iter()
                    .zip(mem)
                    .map(|(p, q)| (p & q).count_ones())
                    .sum();
                2 * agree as usize >= m.size()
            }
        }
    }

    /// Canonical text form, e.g. `genconj n=5 inc=10101 pol=00100` or
    /// `majority n=5 mem=0,2,4`.
    pub fn to_text(&self, class: FunctionClass) -> String {
        match self {
            Hypothesis::Literals(lv) if class.is_general() => format!(
                "{} n={} inc={} pol={}",
                class.short_name(),
                lv.include.len(),
                lv.include,
                lv.polarity
            ),
            Hypothesis::Literals(lv) => {
                format!(
                    "{} n={} inc={}",
                    class.short_name(),
                    lv.include.len(),
                    lv.include
                )
            }
            Hypothesis::Majority(m) => {
                let members: Vec<String> = m.members.iter_ones().map(|i| i.to_string()).collect();
                format!(
                    "{} n={} mem={}",
                    class.short_name(),
                    m.members.len(),
                    members.join(",")
                )
            }
        }
    }

    /// Parses the canonical text form back into a class and hypothesis.
    pub fn parse_text(text: &str) -> Result<(FunctionClass, Hypothesis)> {
        let bad = || Error::Parse(format!("malformed hypothesis text '{text}'"));
        let mut parts = text.split_whitespace();
        let class: FunctionClass = parts.next().ok_or_else(bad)?.parse()?;
        let n: usize = parts
            .next()
            .and_then(|p| p.strip_prefix("n="))
            .and_then(|p| p.parse().ok())
            .ok_or_else(bad)?;
        let bitstring = |s: &str| -> Result<BitVector> {
            if s.len() != n || !s.bytes().all(|b| b == b'0' || b == b'1') {
                return Err(bad());
            }
            Ok(BitVector::from_bools(s.bytes().map(|b| b == b'1')))
        };
        let hyp = if class == FunctionClass::Majority {
            let list = parts
                .next()
                .and_then(|p| p.strip_prefix("mem="))
                .ok_or_else(bad)?;
            let members = list
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            Hypothesis::Majority(MajoritySubset::from_indices(n, members)?)
        } else {
            let include = bitstring(
                parts
                    .next()
                    .and_then(|p| p.strip_prefix("inc="))
                    .ok_or_else(bad)?,
            )?;
            let polarity = if class.is_general() {
                bitstring(
                    parts
                        .next()
                        .and_then(|p| p.strip_prefix("pol="))
                        .ok_or_else(bad)?,
                )?
            } else {
                BitVector::zeros(n)
            };
            Hypothesis::Literals(LiteralVector::new(include, polarity)?)
        };
        if parts.next().is_some() {
            return Err(bad());
        }
        hyp.check_class(class)?;
        Ok((class, hyp))
    }
}

fn sign(b: bool) -> i8 {
    if b {
        1
    } else {
        -1
    }
}

/// Evaluates a target on one input.
pub fn eval_target(f: &TargetFunction, x: &Assignment) -> Result<i8> {
    if x.n() != f.n {
        return Err(Error::DimensionMismatch {
            expected: f.n,
            actual: x.n(),
        });
    }
    Ok(sign(target_truth(f, x)))
}

pub(crate) fn target_truth(f: &TargetFunction, x: &Assignment) -> bool {
    let satisfied = |j: usize| -> bool {
        let i = f.support[j];
        let want = match &f.negated {
            Some(neg) if neg[j] => -1,
            _ => 1,
        };
        x.sign(i) == want
    };
    let m = f.support.len();
    match f.class {
        // Empty conjunctions are false, matching the empty hypothesis.
        FunctionClass::MonotoneConjunction | FunctionClass::GeneralConjunction => {
            m > 0 && (0..m).all(satisfied)
        }
        FunctionClass::MonotoneDisjunction | FunctionClass::GeneralDisjunction => {
            (0..m).any(satisfied)
        }
        FunctionClass::Parity => (0..m).filter(|&j| satisfied(j)).count() % 2 == 1,
        FunctionClass::Majority => 2 * (0..m).filter(|&j| satisfied(j)).count() >= m,
    }
}

/// Evaluates a hypothesis of `class` on one input.
pub fn eval_hypothesis(r: &Hypothesis, class: FunctionClass, x: &Assignment) -> Result<i8> {
    r.check_class(class)?;
    if x.n() != r.n() {
        return Err(Error::DimensionMismatch {
            expected: r.n(),
            actual: x.n(),
        });
    }
    Ok(sign(r.truth(class, x)))
}

/// Draws a target of `class` over `n` variables.
pub fn sample_target<R: Rng + ?Sized>(
    class: FunctionClass,
    n: usize,
    support_rule: SupportSampling,
    rng: &mut R,
) -> Result<TargetFunction> {
    if n == 0 {
        return Err(Error::config("dimension n must be at least 1"));
    }
    if class == FunctionClass::Majority {
        return TargetFunction::majority(n);
    }
    let mut support = match support_rule {
        SupportSampling::UniformSize => {
            let size = rng.random_range(1..=n);
            index::sample(rng, n, size).into_vec()
        }
        SupportSampling::UniformSubset => loop {
            let picked: Vec<usize> = (0..n).filter(|_| rng.random::<bool>()).collect();
            if !picked.is_empty() {
                break picked;
            }
        },
    };
    support.sort_unstable();
    let negated = class
        .is_general()
        .then(|| support.iter().map(|_| rng.random::<bool>()).collect());
    TargetFunction::new(class, n, support, negated)
}

/// How the initial hypothesis `r_0` is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InitMode {
    /// Every include bit (and polarity bit for general classes) uniform.
    Random,
    /// The empty literal vector. Not valid for majority.
    FixedEmpty,
    /// Majority over variables `0..k`. Only valid for majority.
    FixedSubset(usize),
    /// The target's own encoding with `k` random single edits applied.
    /// Not part of the reference protocol; useful for probing plateaus.
    NearTarget(usize),
}

impl fmt::Display for InitMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InitMode::Random => f.write_str("random"),
            InitMode::FixedEmpty => f.write_str("empty"),
            InitMode::FixedSubset(k) => write!(f, "subset:{k}"),
            InitMode::NearTarget(k) => write!(f, "near:{k}"),
        }
    }
}

impl FromStr for InitMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::Parse(format!(
                "unknown init mode '{s}' (valid: random, empty, subset:<k>, near:<k>)"
            ))
        };
        match s {
            "random" => return Ok(InitMode::Random),
            "empty" => return Ok(InitMode::FixedEmpty),
            _ => {}
        }
        let (kind, k) = s.split_once(':').ok_or_else(bad)?;
        let k: usize = k.parse().map_err(|_| bad())?;
        match kind {
            "subset" => Ok(InitMode::FixedSubset(k)),
            "near" => Ok(InitMode::NearTarget(k)),
            _ => Err(bad()),
        }
    }
}

serde_via_str!(InitMode);

impl InitMode {
    pub fn check(self, class: FunctionClass, n: usize) -> Result<()> {
        match (self, class) {
            (InitMode::FixedEmpty, FunctionClass::Majority) => Err(Error::config(
                "empty initialization is undefined for majority",
            )),
            (InitMode::FixedSubset(_), c) if c != FunctionClass::Majority => Err(Error::config(
                format!("fixed-subset initialization only applies to majority, not {c}"),
            )),
            (InitMode::FixedSubset(k), _) if k == 0 || k > n => Err(Error::config(format!(
                "fixed subset size {k} must lie in 1..={n}"
            ))),
            _ => Ok(()),
        }
    }
}

/// Builds `r_0`. `NearTarget` needs the target and is handled by
/// [`near_target_hypothesis`]; passing it here is a configuration error.
pub fn initial_hypothesis<R: Rng + ?Sized>(
    class: FunctionClass,
    n: usize,
    mode: InitMode,
    rng: &mut R,
) -> Result<Hypothesis> {
    if n == 0 {
        return Err(Error::config("dimension n must be at least 1"));
    }
    mode.check(class, n)?;
    match mode {
        InitMode::Random if class == FunctionClass::Majority => loop {
            let members = BitVector::from_bools((0..n).map(|_| rng.random::<bool>()));
            if !members.none() {
                break Ok(Hypothesis::Majority(MajoritySubset { members }));
            }
        },
        InitMode::Random => {
            let include = BitVector::from_bools((0..n).map(|_| rng.random::<bool>()));
            let mut polarity = if class.is_general() {
                BitVector::from_bools((0..n).map(|_| rng.random::<bool>()))
            } else {
                BitVector::zeros(n)
            };
            polarity.retain(&include);
            Ok(Hypothesis::Literals(LiteralVector { include, polarity }))
        }
        InitMode::FixedEmpty => Ok(Hypothesis::Literals(LiteralVector::empty(n))),
        InitMode::FixedSubset(k) => {
            Ok(Hypothesis::Majority(MajoritySubset::from_indices(n, 0..k)?))
        }
        InitMode::NearTarget(_) => {
            Err(Error::config("near-target initialization needs the target"))
        }
    }
}

/// The target's encoding perturbed by `edits` distinct single-variable
/// edits (include toggles, or member toggles for majority).
pub fn near_target_hypothesis<R: Rng + ?Sized>(
    target: &TargetFunction,
    edits: usize,
    rng: &mut R,
) -> Result<Hypothesis> {
    let n = target.n();
    if edits > n {
        return Err(Error::config(format!(
            "cannot apply {edits} distinct edits with n = {n}"
        )));
    }
    let mut hyp = target.to_hypothesis();
    for i in index::sample(rng, n, edits) {
        hyp = match hyp {
            Hypothesis::Literals(mut lv) => {
                lv.toggle_include(i);
                Hypothesis::Literals(lv)
            }
            Hypothesis::Majority(m) => {
                let next = m.toggled(i);
                Hypothesis::Majority(if next.members.none() { m } else { next })
            }
        };
    }
    Ok(hyp)
}
