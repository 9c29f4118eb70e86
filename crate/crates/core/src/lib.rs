//! Quantitative induction arithmetic over binary evidence.
//!
//! The crate computes, at desk scale, the objects that appear when a
//! universal hypothesis ("every trial succeeds") meets finite data:
//!
//! - binomial likelihoods and their logs ([`bernoulli`]);
//! - Bayesian posteriors under uniform, reference, point-mass-mixture, and
//!   improper priors, with predictive probabilities and Carnap confirmation
//!   ([`bayes`]);
//! - confidence distributions derived from one-sided P-value functions:
//!   densities, exact equal-tailed intervals, induced priors, and the
//!   confidence updating rule ([`confidence`]);
//! - Monte Carlo coverage checks of those intervals ([`coverage`]), run on
//!   rayon when the default `parallel` feature is enabled;
//! - likelihood-versus-probability comparison tools: composite-hypothesis
//!   mixtures, likelihood ratios, Dutch-book audits, and the
//!   sampling-generalization decision rule ([`reasoning`]).
//!
//! All types are plain values and all operations are pure functions, so
//! everything is safe to call concurrently.
//!
//! ```
//! use credence::bayes::{posterior, prob_general};
//! use credence::confidence::{confidence_of_general, PValueSide};
//! use credence::{BernoulliData, ThetaDistribution};
//!
//! let data = BernoulliData::new(10, 10)?;
//!
//! // Flat prior: no finite run of successes moves the mass on θ=1 off zero.
//! let flat = posterior(&ThetaDistribution::uniform(), data)?;
//! assert_eq!(prob_general(&flat), 0.0);
//!
//! // Mixture prior: the mass climbs as (n+1)/(n+2).
//! let mixed = posterior(&ThetaDistribution::jeffreys_mixture(), data)?;
//! assert!((prob_general(&mixed) - 11.0 / 12.0).abs() < 1e-12);
//!
//! // The left-side induced prior reaches full confidence from finite data.
//! assert_eq!(confidence_of_general(data, PValueSide::Left)?, 1.0);
//! # Ok::<(), credence::Error>(())
//! ```

pub mod bayes;
pub mod bernoulli;
pub mod confidence;
pub mod coverage;
pub mod error;
pub mod numerics;
pub mod reasoning;

pub use bernoulli::{BernoulliData, GeneralizedBeta, ThetaDistribution};
pub use confidence::{ConfidenceDensity, ConfidenceInterval, PValueSide};
pub use error::{Error, Result};
