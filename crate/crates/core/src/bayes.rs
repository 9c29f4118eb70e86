//! Posterior updating, prediction, and confirmation for binary evidence.
//!
//! Priors and posteriors are [`ThetaDistribution`] mixtures. A point mass at
//! θ=1 is the general proposition "every trial succeeds"; its
//! per-observation likelihood is 1 for a success and 0 for a failure, so a
//! single observed failure annihilates it (falsification by one
//! counterexample), and symmetrically for the mass at θ=0. The continuous
//! part updates conjugately: Beta(a, b) becomes Beta(a+x, b+n-x).
//!
//! Improper continuous priors (a = 0 or b = 0) are updated through their
//! formal posterior. When that posterior is proper it is used as is; when it
//! degenerates (a zero parameter survives the data) all continuous mass is
//! assigned to the corresponding boundary atom, the limit of Beta(·, ε) as
//! ε shrinks. That limit is what turns all-success data under the Beta(1, 0)
//! prior into full posterior mass on θ=1.

use crate::bernoulli::{BernoulliData, GeneralizedBeta, ThetaDistribution};
use crate::error::{Error, Result};
use crate::numerics;

/// Posterior distribution for θ given `data`, by Bayes rule.
pub fn posterior(prior: &ThetaDistribution, data: BernoulliData) -> Result<ThetaDistribution> {
    let (n, x) = (data.trials(), data.successes());
    let cont = prior.cont();
    let cont_weight = prior.cont_weight();

    if cont_weight > 0.0 && !cont.is_proper() {
        if prior.atom0() != 0.0 || prior.atom1() != 0.0 {
            return Err(Error::Domain(
                "an improper continuous prior cannot be mixed with endpoint atoms".into(),
            ));
        }
        let a = cont.a() + x as f64;
        let b = cont.b() + (n - x) as f64;
        return if a == 0.0 && b == 0.0 {
            Err(Error::Domain(
                "posterior undefined for Beta(0,0) with no data".into(),
            ))
        } else if b == 0.0 {
            Ok(ThetaDistribution::atom_at_one())
        } else if a == 0.0 {
            Ok(ThetaDistribution::atom_at_zero())
        } else {
            Ok(ThetaDistribution::from_beta(GeneralizedBeta::new(a, b)?))
        };
    }

    // Proper prior: weight each component by its marginal likelihood.
    let w1 = if x == n { prior.atom1() } else { 0.0 };
    let w0 = if x == 0 { prior.atom0() } else { 0.0 };
    let (post_shape, wc) = if cont_weight > 0.0 {
        let a = cont.a() + x as f64;
        let b = cont.b() + (n - x) as f64;
        // Marginal of the continuous part: B(a+x, b+n-x) / B(a, b).
        let ln_ratio = numerics::log_beta_raw(a, b) - numerics::log_beta_raw(cont.a(), cont.b());
        (GeneralizedBeta::new(a, b)?, cont_weight * ln_ratio.exp())
    } else {
        (GeneralizedBeta::uniform(), 0.0)
    };

    let marginal = w0 + w1 + wc;
    if marginal == 0.0 {
        return Err(Error::NullConditioning);
    }
    ThetaDistribution::new(w0 / marginal, w1 / marginal, post_shape, wc / marginal)
}

/// Posterior probability of the general proposition G = [θ=1]: the point
/// mass the distribution places on θ=1.
pub fn prob_general(post: &ThetaDistribution) -> f64 {
    post.atom1()
}

/// Predictive probability that the next trial succeeds: E[θ] under the
/// posterior.
pub fn predictive_success(post: &ThetaDistribution) -> Result<f64> {
    post.mean()
}

/// Predictive probability of `m` further consecutive successes: E[θ^m].
///
/// Nonincreasing in `m`; its limit as m grows is the mass on θ=1.
pub fn predictive_run(post: &ThetaDistribution, m: u64) -> Result<f64> {
    if m == 0 {
        return Err(Error::Domain("predictive_run requires m >= 1".into()));
    }
    post.moment(m)
}

/// Carnap's increase in firmness: Prob(H|Data) - Prob(H).
pub fn carnap_confirmation(prior_prob: f64, posterior_prob: f64) -> Result<f64> {
    for (name, p) in [("prior", prior_prob), ("posterior", posterior_prob)] {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Domain(format!(
                "{name} probability must lie in [0,1], got {p}"
            )));
        }
    }
    Ok(posterior_prob - prior_prob)
}

/// Posterior summary: the distribution itself, the mass on the general
/// proposition, and the next-trial predictive.
#[derive(Debug, Clone, PartialEq)]
pub struct PosteriorReport {
    pub posterior: ThetaDistribution,
    pub prob_g: f64,
    pub predictive_next: f64,
}

pub fn posterior_report(prior: &ThetaDistribution, data: BernoulliData) -> Result<PosteriorReport> {
    let post = posterior(prior, data)?;
    Ok(PosteriorReport {
        prob_g: prob_general(&post),
        predictive_next: predictive_success(&post)?,
        posterior: post,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(n: u64, x: u64) -> BernoulliData {
        BernoulliData::new(n, x).unwrap()
    }

    /// Simpson integration of g(θ)·θ^x·(1-θ)^(n-x)·prior_shape over [0,1].
    fn integrate(f: impl Fn(f64) -> f64) -> f64 {
        let m = 40_000;
        let h = 1.0 / m as f64;
        let mut total = 0.0;
        for i in 0..m {
            let lo = i as f64 * h;
            total += h / 6.0 * (f(lo) + 4.0 * f(lo + 0.5 * h) + f(lo + h));
        }
        total
    }

    #[test]
    fn uniform_prior_updates_conjugately() {
        for (n, x) in [(5u64, 3u64), (10, 10), (7, 0)] {
            let post = posterior(&ThetaDistribution::uniform(), data(n, x)).unwrap();
            assert_eq!(post.cont().a(), 1.0 + x as f64);
            assert_eq!(post.cont().b(), 1.0 + (n - x) as f64);
            assert_eq!(prob_general(&post), 0.0);
            assert!((post.cont_weight() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn jeffreys_mixture_first_days() {
        let prior = ThetaDistribution::jeffreys_mixture();
        let one = posterior(&prior, data(1, 1)).unwrap();
        assert!((prob_general(&one) - 2.0 / 3.0).abs() < 1e-14);
        let two = posterior(&prior, data(2, 2)).unwrap();
        assert!((prob_general(&two) - 3.0 / 4.0).abs() < 1e-14);
    }

    #[test]
    fn jeffreys_mixture_general_formula() {
        let prior = ThetaDistribution::jeffreys_mixture();
        for n in [1u64, 2, 5, 100, 1000] {
            let post = posterior(&prior, data(n, n)).unwrap();
            let expect = (n + 1) as f64 / (n + 2) as f64;
            assert!(
                (prob_general(&post) - expect).abs() < 1e-12,
                "prob_general at n={n}"
            );
        }
    }

    #[test]
    fn one_failure_annihilates_the_atom() {
        let prior = ThetaDistribution::jeffreys_mixture();
        let post = posterior(&prior, data(5, 4)).unwrap();
        assert_eq!(prob_general(&post), 0.0);
    }

    #[test]
    fn atom_prior_survives_consistent_data() {
        let post = posterior(&ThetaDistribution::atom_at_one(), data(8, 8)).unwrap();
        assert_eq!(prob_general(&post), 1.0);
    }

    #[test]
    fn atom_prior_with_contradicting_data_is_null_conditioning() {
        let err = posterior(&ThetaDistribution::atom_at_one(), data(3, 2)).unwrap_err();
        assert_eq!(err, Error::NullConditioning);
    }

    #[test]
    fn reference_prior_gives_zero_general_mass() {
        for n in [1u64, 10, 1000] {
            let post = posterior(&ThetaDistribution::jeffreys_beta(), data(n, n)).unwrap();
            assert_eq!(prob_general(&post), 0.0);
        }
    }

    #[test]
    fn sunrise_predictive_probability() {
        let n = 2_190_000;
        let report = posterior_report(&ThetaDistribution::uniform(), data(n, n)).unwrap();
        assert!((report.predictive_next - 0.9999995).abs() < 1e-7);
        assert_eq!(report.prob_g, 0.0);
    }

    #[test]
    fn empty_data_keeps_uniform_mean() {
        let post = posterior(&ThetaDistribution::uniform(), data(0, 0)).unwrap();
        assert!((predictive_success(&post).unwrap() - 0.5).abs() < 1e-14);
    }

    #[test]
    fn rule_of_succession_matches_integration_oracle() {
        // Under Beta(1,1): predictive = ∫θ·θ^x(1-θ)^(n-x)dθ / ∫θ^x(1-θ)^(n-x)dθ.
        for n in 0..=10u64 {
            for x in 0..=n {
                let lik = |t: f64| t.powi(x as i32) * (1.0 - t).powi((n - x) as i32);
                let oracle = integrate(|t| t * lik(t)) / integrate(lik);
                let post = posterior(&ThetaDistribution::uniform(), data(n, x)).unwrap();
                let got = predictive_success(&post).unwrap();
                assert!(
                    (got - oracle).abs() < 1e-9,
                    "predictive mismatch at n={n}, x={x}: {got} vs {oracle}"
                );
                let closed = (x + 1) as f64 / (n + 2) as f64;
                assert!((got - closed).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn predictive_run_closed_form_and_oracle() {
        // Beta(1,1) prior after (n,n): E[θ^m] = (n+1)/(n+m+1).
        for (n, m) in [(3u64, 2u64), (5, 4), (10, 1)] {
            let post = posterior(&ThetaDistribution::uniform(), data(n, n)).unwrap();
            let got = predictive_run(&post, m).unwrap();
            let closed = (n + 1) as f64 / (n + m + 1) as f64;
            assert!((got - closed).abs() < 1e-12);
            let lik = |t: f64| t.powi(n as i32);
            let oracle = integrate(|t| t.powi(m as i32) * lik(t)) / integrate(lik);
            assert!((got - oracle).abs() < 1e-9);
        }
    }

    #[test]
    fn predictive_run_with_certain_atom_is_one() {
        let post = posterior(&ThetaDistribution::atom_at_one(), data(2, 2)).unwrap();
        assert_eq!(predictive_run(&post, 1_000_000).unwrap(), 1.0);
    }

    #[test]
    fn predictive_run_limit_is_general_mass() {
        for n in [1u64, 4, 20] {
            let post = posterior(&ThetaDistribution::jeffreys_mixture(), data(n, n)).unwrap();
            let run = predictive_run(&post, 1_000_000).unwrap();
            assert!(
                (run - prob_general(&post)).abs() < 1e-4,
                "limit mismatch at n={n}"
            );
        }
    }

    #[test]
    fn predictive_run_is_nonincreasing() {
        let post = posterior(&ThetaDistribution::jeffreys_mixture(), data(4, 4)).unwrap();
        let mut prev = 1.0;
        for m in 1..=50 {
            let v = predictive_run(&post, m).unwrap();
            assert!(v <= prev + 1e-15);
            prev = v;
        }
    }

    #[test]
    fn predictive_rejects_improper_posterior() {
        let improper = ThetaDistribution::from_beta(GeneralizedBeta::new(1.0, 0.0).unwrap());
        assert_eq!(
            predictive_success(&improper).unwrap_err(),
            Error::ImproperNormalization
        );
        assert_eq!(
            predictive_run(&improper, 2).unwrap_err(),
            Error::ImproperNormalization
        );
    }

    #[test]
    fn improper_prior_posterior_proper_case() {
        // Beta(0,1) prior with one success: formal posterior Beta(1, n).
        let prior = ThetaDistribution::from_beta(GeneralizedBeta::new(0.0, 1.0).unwrap());
        let post = posterior(&prior, data(4, 1)).unwrap();
        assert_eq!(post.cont().a(), 1.0);
        assert_eq!(post.cont().b(), 4.0);
        assert!(post.is_proper());
    }

    #[test]
    fn improper_prior_degenerate_case_collapses_to_atom() {
        let left = ThetaDistribution::from_beta(GeneralizedBeta::new(1.0, 0.0).unwrap());
        let post = posterior(&left, data(6, 6)).unwrap();
        assert_eq!(prob_general(&post), 1.0);

        let right = ThetaDistribution::from_beta(GeneralizedBeta::new(0.0, 1.0).unwrap());
        let post = posterior(&right, data(6, 0)).unwrap();
        assert_eq!(post.atom0(), 1.0);
    }

    #[test]
    fn carnap_examples() {
        assert_eq!(carnap_confirmation(0.0, 0.0).unwrap(), 0.0);
        assert_eq!(carnap_confirmation(1.0, 1.0).unwrap(), 0.0);
        for n in [1u64, 2, 5, 100] {
            let post_prob = (n + 1) as f64 / (n + 2) as f64;
            let got = carnap_confirmation(0.5, post_prob).unwrap();
            let expect = n as f64 / (2 * (n + 2)) as f64;
            assert!((got - expect).abs() < 1e-14);
            assert!(got <= 1.0 - 0.5);
        }
        assert!(carnap_confirmation(-0.1, 0.5).is_err());
        assert!(carnap_confirmation(0.5, 1.1).is_err());
    }

    #[test]
    fn sequential_updates_match_pooled_data() {
        for prior in [
            ThetaDistribution::uniform(),
            ThetaDistribution::jeffreys_mixture(),
        ] {
            for n in 0..=12u64 {
                for x in 0..=n {
                    for n1 in 0..=n {
                        let x1_lo = x.saturating_sub(n - n1);
                        let x1_hi = x.min(n1);
                        for x1 in x1_lo..=x1_hi {
                            let d1 = data(n1, x1);
                            let d2 = data(n - n1, x - x1);
                            let stepwise = posterior(&posterior(&prior, d1).unwrap(), d2).unwrap();
                            let pooled = posterior(&prior, data(n, x)).unwrap();
                            assert!(
                                (stepwise.atom0() - pooled.atom0()).abs() < 1e-12
                                    && (stepwise.atom1() - pooled.atom1()).abs() < 1e-12
                                    && (stepwise.cont_weight() - pooled.cont_weight()).abs()
                                        < 1e-12,
                                "weights differ for n={n}, x={x}, split ({n1},{x1})"
                            );
                            if pooled.cont_weight() > 0.0 {
                                assert_eq!(stepwise.cont(), pooled.cont());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn predictive_run_chain_rule() {
        let post = posterior(&ThetaDistribution::jeffreys_mixture(), data(6, 6)).unwrap();
        for (m1, m2) in [(1u64, 1u64), (3, 4), (10, 7)] {
            let joint = predictive_run(&post, m1 + m2).unwrap();
            let first = predictive_run(&post, m1).unwrap();
            let updated = posterior(&post, data(m1, m1)).unwrap();
            let second = predictive_run(&updated, m2).unwrap();
            assert!(
                (joint - first * second).abs() < 1e-9,
                "chain rule failed at m1={m1}, m2={m2}"
            );
        }
    }

    #[test]
    fn conjugacy_density_matches_on_grid() {
        // Posterior density under Beta(2,3) after (n, x) equals the
        // Beta(2+x, 3+n-x) density, for every (n, x) with n <= 20.
        let prior_shape = GeneralizedBeta::new(2.0, 3.0).unwrap();
        let prior = ThetaDistribution::from_beta(prior_shape);
        for n in 0..=20u64 {
            for x in 0..=n {
                let post = posterior(&prior, data(n, x)).unwrap();
                let expect = GeneralizedBeta::new(2.0 + x as f64, 3.0 + (n - x) as f64).unwrap();
                assert_eq!(post.cont(), expect);
                let mut sup = 0.0f64;
                for i in 0..=1000 {
                    let t = i as f64 / 1000.0;
                    let lhs = post.cont().density_at(t).unwrap();
                    let rhs = expect.density_at(t).unwrap();
                    sup = sup.max((lhs - rhs).abs());
                }
                assert!(sup < 1e-9, "density sup diff {sup} at n={n}, x={x}");
            }
        }
    }

    #[test]
    fn monotone_confirmation_under_mixture() {
        let prior = ThetaDistribution::jeffreys_mixture();
        let mut prev = 0.5;
        for n in 1..=50u64 {
            let p = prob_general(&posterior(&prior, data(n, n)).unwrap());
            assert!(p > prev, "not strictly increasing at n={n}");
            prev = p;
        }
    }
}
