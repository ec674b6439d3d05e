//! Product distributions over `{-1,+1}^n`.
//!
//! Every distribution draws bits independently with a fixed marginal
//! `q = P(x_i = +1)`, so the exact performance oracle only needs `q`.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_distr::{Beta, Distribution};

use crate::bits::BitVector;
use crate::boolfn::Assignment;
use crate::error::{Error, Result};
use crate::serde_str::serde_via_str;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum DistributionSpec {
    #[default]
    Uniform,
    /// Low-entropy binomial inputs: i.i.d. bits with `P(+1) = p_one`.
    BinomialLowEntropy {
        p_one: f64,
    },
    /// Each bit is `+1` iff a `Beta(alpha, beta)` draw reaches `threshold`.
    BetaThreshold {
        alpha: f64,
        beta: f64,
        threshold: f64,
    },
    BiasedBernoulli {
        p_one: f64,
    },
}

impl DistributionSpec {
    pub const DEFAULT_BINOMIAL_P: f64 = 0.25;
    pub const DEFAULT_BETA: (f64, f64, f64) = (2.0, 5.0, 0.5);
    pub const DEFAULT_BERNOULLI_P: f64 = 0.75;

    pub fn binomial() -> Self {
        DistributionSpec::BinomialLowEntropy {
            p_one: Self::DEFAULT_BINOMIAL_P,
        }
    }

    pub fn beta() -> Self {
        let (alpha, beta, threshold) = Self::DEFAULT_BETA;
        DistributionSpec::BetaThreshold {
            alpha,
            beta,
            threshold,
        }
    }

    pub fn bernoulli() -> Self {
        DistributionSpec::BiasedBernoulli {
            p_one: Self::DEFAULT_BERNOULLI_P,
        }
    }

    /// The four default distributions in report order.
    pub fn defaults() -> [DistributionSpec; 4] {
        [
            Self::Uniform,
            Self::binomial(),
            Self::beta(),
            Self::bernoulli(),
        ]
    }

    pub fn validate(&self) -> Result<()> {
        let open_unit = |name: &str, v: f64| {
            if v > 0.0 && v < 1.0 {
                Ok(())
            } else {
                Err(Error::config(format!("{name} = {v} must lie in (0, 1)")))
            }
        };
        match *self {
            DistributionSpec::Uniform => Ok(()),
            DistributionSpec::BinomialLowEntropy { p_one }
            | DistributionSpec::BiasedBernoulli { p_one } => open_unit("p", p_one),
            DistributionSpec::BetaThreshold {
                alpha,
                beta,
                threshold,
            } => {
                for (name, v) in [("a", alpha), ("b", beta)] {
                    if !(v.is_finite() && v > 0.0) {
                        return Err(Error::config(format!(
                            "beta shape {name} = {v} must be positive"
                        )));
                    }
                }
                open_unit("t", threshold)
            }
        }
    }

    /// Filesystem- and CSV-safe identifier, e.g. `beta_a2_b5_t0.5`.
    pub fn slug(&self) -> String {
        match *self {
            DistributionSpec::Uniform => "uniform".into(),
            DistributionSpec::BinomialLowEntropy { p_one } => format!("binomial_p{p_one}"),
            DistributionSpec::BetaThreshold {
                alpha,
                beta,
                threshold,
            } => {
                format!("beta_a{alpha}_b{beta}_t{threshold}")
            }
            DistributionSpec::BiasedBernoulli { p_one } => format!("bernoulli_p{p_one}"),
        }
    }

    /// Marginal probability that a bit is `+1`.
    pub fn bit_probability(&self) -> f64 {
        match *self {
            DistributionSpec::Uniform => 0.5,
            DistributionSpec::BinomialLowEntropy { p_one }
            | DistributionSpec::BiasedBernoulli { p_one } => p_one,
            DistributionSpec::BetaThreshold {
                alpha,
                beta,
                threshold,
            } => beta_upper_tail(alpha, beta, threshold),
        }
    }
}

impl fmt::Display for DistributionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DistributionSpec::Uniform => f.write_str("uniform"),
            DistributionSpec::BinomialLowEntropy { p_one } => write!(f, "binomial:p={p_one}"),
            DistributionSpec::BetaThreshold {
                alpha,
                beta,
                threshold,
            } => {
                write!(f, "beta:a={alpha},b={beta},t={threshold}")
            }
            DistributionSpec::BiasedBernoulli { p_one } => write!(f, "bernoulli:p={p_one}"),
        }
    }
}

impl FromStr for DistributionSpec {
    type Err = Error;

    /// Accepts `uniform`, `binomial[:p=..]`, `beta[:a=..,b=..,t=..]` and
    /// `bernoulli[:p=..]`; omitted parameters take their defaults.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: String| {
            Error::Parse(format!(
                "invalid distribution '{s}': {why} (valid: uniform, binomial:p=<p>, beta:a=<a>,b=<b>,t=<t>, bernoulli:p=<p>)"
            ))
        };
        let (kind, params) = match s.split_once(':') {
            Some((k, p)) => (k, p),
            None => (s, ""),
        };
        let mut spec = match kind {
            "uniform" => DistributionSpec::Uniform,
            "binomial" => Self::binomial(),
            "beta" => Self::beta(),
            "bernoulli" => Self::bernoulli(),
            other => return Err(bad(format!("unknown kind '{other}'"))),
        };
        for pair in params.split(',').filter(|p| !p.is_empty()) {
            let (key, value) = pair
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, got '{pair}'")))?;
            let value: f64 = value
                .parse()
                .map_err(|_| bad(format!("'{value}' is not a number")))?;
            match (&mut spec, key) {
                (DistributionSpec::BinomialLowEntropy { p_one }, "p")
                | (DistributionSpec::BiasedBernoulli { p_one }, "p") => *p_one = value,
                (DistributionSpec::BetaThreshold { alpha, .. }, "a") => *alpha = value,
                (DistributionSpec::BetaThreshold { beta, .. }, "b") => *beta = value,
                (DistributionSpec::BetaThreshold { threshold, .. }, "t") => *threshold = value,
                _ => return Err(bad(format!("unexpected parameter '{key}' for {kind}"))),
            }
        }
        spec.validate().map_err(|e| bad(e.to_string()))?;
        Ok(spec)
    }
}

serde_via_str!(DistributionSpec);

/// `P(U >= threshold)` for `U ~ Beta(alpha, beta)`, as the ratio of two
/// tanh-sinh quadratures of the unnormalised density. The double-exponential
/// substitution copes with the integrable endpoint singularities when a
/// shape parameter is below one.
pub fn beta_upper_tail(alpha: f64, beta: f64, threshold: f64) -> f64 {
    let log_density =
        |x: f64, one_minus_x: f64| (alpha - 1.0) * x.ln() + (beta - 1.0) * one_minus_x.ln();
    // Shift by the log-density at the mode (or midpoint) to keep exp() in range.
    let mode = if alpha > 1.0 && beta > 1.0 {
        (alpha - 1.0) / (alpha + beta - 2.0)
    } else {
        0.5
    };
    let shift = log_density(mode, 1.0 - mode);
    let density = |x: f64, one_minus_x: f64| {
        let v = (log_density(x, one_minus_x) - shift).exp();
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };
    let upper = tanh_sinh(threshold, 1.0, &density);
    let lower = tanh_sinh(0.0, threshold, &density);
    upper / (upper + lower)
}

/// Integrates `f(x, 1 - x)` over `[lo, hi] ⊆ [0, 1]`.
fn tanh_sinh(lo: f64, hi: f64, f: &dyn Fn(f64, f64) -> f64) -> f64 {
    const STEP: f64 = 1.0 / 256.0;
    const T_MAX: f64 = 4.5;
    let half_pi = std::f64::consts::FRAC_PI_2;
    let width = hi - lo;
    let sigmoid = |z: f64| 1.0 / (1.0 + (-z).exp());
    let steps = (T_MAX / STEP) as i64;
    let mut total = 0.0;
    for k in -steps..=steps {
        let t = k as f64 * STEP;
        let u = half_pi * t.sinh();
        let from_lo = width * sigmoid(2.0 * u);
        let from_hi = width * sigmoid(-2.0 * u);
        if from_lo <= 0.0 || from_hi <= 0.0 {
            continue;
        }
        let x = lo + from_lo;
        let one_minus_x = (1.0 - hi) + from_hi;
        let weight = 2.0 * width * sigmoid(2.0 * u) * sigmoid(-2.0 * u) * half_pi * t.cosh();
        total += weight * f(x, one_minus_x);
    }
    total * STEP
}

/// Draws one input.
pub fn sample_assignment<R: Rng + ?Sized>(
    d: &DistributionSpec,
    n: usize,
    rng: &mut R,
) -> Assignment {
    let mut sampler = BitSampler::new(d);
    sampler.draw(n, rng)
}

/// Draws `s` independent inputs in order.
pub fn sample_batch<R: Rng + ?Sized>(
    d: &DistributionSpec,
    n: usize,
    s: usize,
    rng: &mut R,
) -> Vec<Assignment> {
    let mut sampler = BitSampler::new(d);
    (0..s).map(|_| sampler.draw(n, rng)).collect()
}

enum BitSampler {
    Fair,
    Biased(f64),
    Beta(Beta<f64>, f64),
}

impl BitSampler {
    fn new(d: &DistributionSpec) -> Self {
        match *d {
            DistributionSpec::Uniform => BitSampler::Fair,
            DistributionSpec::BinomialLowEntropy { p_one }
            | DistributionSpec::BiasedBernoulli { p_one } => BitSampler::Biased(p_one),
            DistributionSpec::BetaThreshold {
                alpha,
                beta,
                threshold,
            } => {
                let dist = Beta::new(alpha, beta).expect("beta shapes validated as positive");
                BitSampler::Beta(dist, threshold)
            }
        }
    }

    fn draw<R: Rng + ?Sized>(&mut self, n: usize, rng: &mut R) -> Assignment {
        let plus = match self {
            BitSampler::Fair => {
                let words = (0..n.div_ceil(64)).map(|_| rng.random::<u64>()).collect();
                BitVector::from_words(words, n)
            }
            BitSampler::Biased(q) => {
                BitVector::from_bools((0..n).map(|_| rng.random::<f64>() < *q))
            }
            BitSampler::Beta(dist, threshold) => {
                BitVector::from_bools((0..n).map(|_| dist.sample(rng) >= *threshold))
            }
        };
        Assignment::from_plus_bits(plus)
    }
}

/// Probability of `x` under the product measure of `d`.
pub fn pmf(d: &DistributionSpec, x: &Assignment) -> f64 {
    let q = d.bit_probability();
    let plus = x.count_plus() as i32;
    let minus = x.n() as i32 - plus;
    q.powi(plus) * (1.0 - q).powi(minus)
}
