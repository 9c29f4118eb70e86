//! Cross-module invariants: algebraic identities checked on sweeps and
//! randomized inputs.

use credence::bayes::{posterior, prob_general};
use credence::bernoulli::{likelihood, log_likelihood, BernoulliData, GeneralizedBeta};
use credence::numerics::reg_inc_beta;
use credence::reasoning::{likelihood_ratio, mixture_likelihood, CompositeHypothesis, Hypothesis};
use credence::ThetaDistribution;
use proptest::prelude::*;

fn data(n: u64, x: u64) -> BernoulliData {
    BernoulliData::new(n, x).unwrap()
}

/// Binomial coefficient as f64; exact for n <= 20.
fn choose(n: u64, k: u64) -> f64 {
    let mut c = 1.0;
    for i in 0..k {
        c *= (n - i) as f64 / (i + 1) as f64;
    }
    c
}

#[test]
fn incomplete_beta_equals_binomial_tail() {
    // I_p(k, n-k+1) = Σ_{j>=k} C(n,j) p^j (1-p)^(n-j).
    for n in 1..=20u64 {
        for k in 1..=n {
            for &p in &[0.1f64, 0.25, 0.5, 0.75, 0.9] {
                let direct: f64 = (k..=n)
                    .map(|j| choose(n, j) * p.powi(j as i32) * (1.0 - p).powi((n - j) as i32))
                    .sum();
                let via_beta = reg_inc_beta(k as f64, (n - k + 1) as f64, p).unwrap();
                assert!(
                    (direct - via_beta).abs() < 1e-10,
                    "tail identity failed at n={n}, k={k}, p={p}: {direct} vs {via_beta}"
                );
            }
        }
    }
}

#[test]
fn zero_atom_priors_never_confirm_the_general_proposition() {
    let priors = [
        ThetaDistribution::uniform(),
        ThetaDistribution::jeffreys_beta(),
        ThetaDistribution::from_beta(GeneralizedBeta::new(2.0, 5.0).unwrap()),
        ThetaDistribution::from_beta(GeneralizedBeta::new(0.4, 3.0).unwrap()),
    ];
    for prior in &priors {
        for n in 1..=10u64 {
            for x in 0..=n {
                let post = posterior(prior, data(n, x)).unwrap();
                assert_eq!(prob_general(&post), 0.0);
            }
        }
    }
}

proptest! {
    #[test]
    fn incomplete_beta_reflection(
        a in 0.1f64..50.0,
        b in 0.1f64..50.0,
        x in 0.0f64..=1.0,
    ) {
        let lhs = reg_inc_beta(a, b, x).unwrap();
        let rhs = 1.0 - reg_inc_beta(b, a, 1.0 - x).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-12);
    }

    #[test]
    fn likelihood_factorizes_over_concatenation(
        n1 in 0u64..=10,
        n2 in 0u64..=10,
        x1_frac in 0.0f64..=1.0,
        x2_frac in 0.0f64..=1.0,
        theta in 0.0f64..=1.0,
    ) {
        let x1 = (x1_frac * n1 as f64).round() as u64;
        let x2 = (x2_frac * n2 as f64).round() as u64;
        let joint = likelihood(data(n1 + n2, x1 + x2), theta).unwrap();
        let parts = likelihood(data(n1, x1), theta).unwrap()
            * likelihood(data(n2, x2), theta).unwrap();
        prop_assert!((joint - parts).abs() < 1e-12);
    }

    #[test]
    fn log_likelihood_exponentiates_to_likelihood(
        n in 1u64..=30,
        x_frac in 0.0f64..=1.0,
        theta in 0.01f64..=0.99,
    ) {
        let x = (x_frac * n as f64).round() as u64;
        let lik = likelihood(data(n, x), theta).unwrap();
        let from_log = log_likelihood(data(n, x), theta).unwrap().exp();
        prop_assert!(lik > 0.0);
        prop_assert!(((from_log - lik) / lik).abs() < 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn mixture_likelihood_stays_within_component_range(
        likelihoods in prop::collection::vec(0.0f64..=1.0, 1..=4),
        raw_weights in prop::collection::vec(0.01f64..=1.0, 1..=4),
    ) {
        let k = likelihoods.len().min(raw_weights.len());
        let total: f64 = raw_weights[..k].iter().sum();
        let components: Vec<(Hypothesis, f64)> = likelihoods[..k]
            .iter()
            .zip(&raw_weights[..k])
            .enumerate()
            .map(|(i, (&l, &w))| {
                (Hypothesis::new(format!("h{i}"), format!("h{i}"), l).unwrap(), w / total)
            })
            .collect();
        // Renormalization can miss 1 by a few ulps; nudge the last weight.
        let drift: f64 = 1.0 - components.iter().map(|(_, w)| w).sum::<f64>();
        let mut components = components;
        let last = components.len() - 1;
        components[last].1 += drift;
        let comp = CompositeHypothesis::new("c", "c", components).unwrap();

        let m = mixture_likelihood(&comp);
        let lo = likelihoods[..k].iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = likelihoods[..k].iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        prop_assert!(m >= lo - 1e-12 && m <= hi + 1e-12);
    }

    #[test]
    fn likelihood_ratio_multiplicative_over_independent_evidence(
        la1 in 1e-6f64..=1.0,
        lb1 in 1e-6f64..=1.0,
        la2 in 1e-6f64..=1.0,
        lb2 in 1e-6f64..=1.0,
    ) {
        let h = |id: &str, l: f64| Hypothesis::new(id, id, l).unwrap();
        let joint = likelihood_ratio(&h("a", la1 * la2), &h("b", lb1 * lb2)).unwrap();
        let product = likelihood_ratio(&h("a", la1), &h("b", lb1)).unwrap()
            * likelihood_ratio(&h("a", la2), &h("b", lb2)).unwrap();
        prop_assert!(((joint - product) / product).abs() < 1e-12);
    }
}
