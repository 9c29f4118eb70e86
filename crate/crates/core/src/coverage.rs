//! Monte Carlo check of interval coverage.
//!
//! Repeatedly draws binomial samples at a fixed true θ, builds the exact
//! equal-tailed interval for each, and counts how often the interval covers
//! θ. That long-run rate is the propensity reading of the confidence level.
//!
//! Every replicate derives its RNG from the base seed and its own index, so
//! the hit count is independent of execution order. With the `parallel`
//! feature (on by default) the replicate loop runs on rayon;
//! [`simulate_coverage_seq`] is always available as the sequential reference
//! and produces bit-identical results.

use crate::bernoulli::BernoulliData;
use crate::confidence::confidence_interval;
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Parameters of a coverage simulation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverageConfig {
    /// True success rate used to generate the data.
    pub theta: f64,
    /// Trials per replicate.
    pub n: u64,
    /// Confidence level of the interval under test.
    pub level: f64,
    /// Number of simulated datasets.
    pub replicates: u64,
    /// Base RNG seed.
    pub seed: u64,
}

/// Outcome of a coverage simulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverageResult {
    pub hits: u64,
    pub replicates: u64,
}

impl CoverageResult {
    /// Empirical coverage frequency.
    pub fn coverage(&self) -> f64 {
        self.hits as f64 / self.replicates as f64
    }
}

fn validate(cfg: &CoverageConfig) -> Result<()> {
    if !(0.0..=1.0).contains(&cfg.theta) {
        return Err(Error::Domain(format!(
            "theta must lie in [0,1], got {}",
            cfg.theta
        )));
    }
    if cfg.n == 0 {
        return Err(Error::NoEvidence);
    }
    if !(cfg.level > 0.0 && cfg.level < 1.0) {
        return Err(Error::Domain(format!(
            "level must lie strictly between 0 and 1, got {}",
            cfg.level
        )));
    }
    if cfg.replicates == 0 {
        return Err(Error::Domain("at least one replicate is required".into()));
    }
    Ok(())
}

/// SplitMix64 step; decorrelates per-replicate seeds.
fn replicate_seed(seed: u64, rep: u64) -> u64 {
    let mut z = seed ^ rep.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn replicate_covers(cfg: &CoverageConfig, rep: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(replicate_seed(cfg.seed, rep));
    let mut x = 0u64;
    for _ in 0..cfg.n {
        if rng.gen::<f64>() < cfg.theta {
            x += 1;
        }
    }
    let ci = confidence_interval(BernoulliData::new(cfg.n, x)?, cfg.level)?;
    Ok(ci.contains(cfg.theta))
}

/// Runs the simulation on the rayon thread pool.
#[cfg(feature = "parallel")]
pub fn simulate_coverage(cfg: &CoverageConfig) -> Result<CoverageResult> {
    use rayon::prelude::*;
    validate(cfg)?;
    let hits = (0..cfg.replicates)
        .into_par_iter()
        .map(|rep| replicate_covers(cfg, rep).map(u64::from))
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(CoverageResult {
        hits,
        replicates: cfg.replicates,
    })
}

/// Sequential fallback used when the `parallel` feature is disabled.
#[cfg(not(feature = "parallel"))]
pub fn simulate_coverage(cfg: &CoverageConfig) -> Result<CoverageResult> {
    simulate_coverage_seq(cfg)
}

/// Runs the simulation on the calling thread.
pub fn simulate_coverage_seq(cfg: &CoverageConfig) -> Result<CoverageResult> {
    validate(cfg)?;
    let mut hits = 0u64;
    for rep in 0..cfg.replicates {
        hits += u64::from(replicate_covers(cfg, rep)?);
    }
    Ok(CoverageResult {
        hits,
        replicates: cfg.replicates,
    })
}
