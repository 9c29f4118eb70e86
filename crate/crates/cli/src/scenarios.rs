//! Builds a deterministic report for each subcommand.

use crate::report::{ReportValue, RunReport};
use crate::Command;
use credence::bayes::posterior_report;
use credence::bernoulli::BernoulliData;
use credence::confidence::{
    confidence_density, confidence_interval, confidence_of_general, induced_prior,
};
use credence::coverage::{simulate_coverage, CoverageConfig};
use credence::reasoning::{
    compare_reasoning, dutch_book_audit, infant_generalization, likelihood_ratio,
    mixture_likelihood, BettingBook, CompositeHypothesis, Containment, Hypothesis, ReasoningItem,
    SamplingScenario,
};

const IMPROPER_NOTE: &str =
    "improper-prior output: the value is a confidence, not necessarily a Kolmogorov probability";

fn num(x: f64) -> ReportValue {
    ReportValue::number(x)
}

fn count(x: u64) -> ReportValue {
    ReportValue::Count(x)
}

pub fn run(command: &Command) -> credence::Result<RunReport> {
    match command {
        Command::Ravens { n, level } => interval_report("ravens", *n, *n, *level),

        Command::Sunrise { prior, n } => {
            let dist = prior.to_distribution()?;
            let report = posterior_report(&dist, BernoulliData::all_successes(*n))?;
            let mut out = RunReport::new("sunrise")
                .input("prior", ReportValue::Text(prior.label()))
                .input("n", count(*n))
                .output("predictive", num(report.predictive_next))
                .output("prob_g", num(report.prob_g));
            if !dist.is_proper() {
                out = out.note(IMPROPER_NOTE);
            }
            Ok(out)
        }

        Command::Linda {
            p,
            l2,
            l3,
            prior_teller,
        } => {
            let h2 =
                Hypothesis::new("h2", "feminist bank teller", *l2)?.with_prior(p * prior_teller)?;
            let h3 = Hypothesis::new("h3", "non-feminist bank teller", *l3)?
                .with_prior((1.0 - p) * prior_teller)?;
            let h1 = CompositeHypothesis::new(
                "h1",
                "bank teller",
                vec![(h2.clone(), *p), (h3.clone(), 1.0 - p)],
            )?;
            let l1 = mixture_likelihood(&h1);
            let lr = likelihood_ratio(&h2, &Hypothesis::new("h1", "bank teller", l1)?)?;
            let items = vec![
                ReasoningItem::Composite(h1),
                ReasoningItem::Simple(h2),
                ReasoningItem::Simple(h3),
            ];
            let nesting = [
                Containment {
                    container: "h1".into(),
                    contained: "h2".into(),
                },
                Containment {
                    container: "h1".into(),
                    contained: "h3".into(),
                },
            ];
            let comparison = compare_reasoning(&items, &nesting)?;
            let posterior = comparison
                .posterior_ranking
                .as_ref()
                .expect("priors were supplied");
            let score = |id: &str| posterior.iter().find(|(i, _)| i == id).unwrap().1;
            Ok(RunReport::new("linda")
                .input("p", num(*p))
                .input("l2", num(*l2))
                .input("l3", num(*l3))
                .input("prior_teller", num(*prior_teller))
                .output("l1", num(l1))
                .output("lr_h2_vs_h1", num(lr))
                .output("posterior_h1", num(score("h1")))
                .output("posterior_h2", num(score("h2")))
                .output("posterior_h3", num(score("h3")))
                .output(
                    "likelihood_prefers",
                    ReportValue::Text(comparison.likelihood_ranking[0].0.clone()),
                )
                .output(
                    "probability_prefers",
                    ReportValue::Text(posterior[0].0.clone()),
                )
                .output(
                    "divergence",
                    ReportValue::Bool(!comparison.divergences.is_empty()),
                ))
        }

        Command::Prosecutor {
            l_guilty,
            l_innocent,
        } => {
            let guilty = Hypothesis::new("guilty", "evidence if guilty", *l_guilty)?;
            let innocent = Hypothesis::new("innocent", "evidence if innocent", *l_innocent)?;
            let lr = likelihood_ratio(&guilty, &innocent)?;
            Ok(RunReport::new("prosecutor")
                .input("l_guilty", num(*l_guilty))
                .input("l_innocent", num(*l_innocent))
                .output("lr", num(lr)))
        }

        Command::DutchBook { alpha, beta, stake } => {
            let book = BettingBook::new(*alpha, *beta)?.with_stake(*stake)?;
            let audit = dutch_book_audit(&book);
            Ok(RunReport::new("dutch-book")
                .input("alpha", num(*alpha))
                .input("beta", num(*beta))
                .input("stake", num(*stake))
                .output("coherent", ReportValue::Bool(audit.coherent))
                .output("profit", num(audit.guaranteed_profit))
                .output("role", ReportValue::Text(audit.role.as_str().into())))
        }

        Command::Infant {
            blue_fraction,
            sample_size,
            threshold,
        } => {
            let scenario = SamplingScenario::new(*blue_fraction, *sample_size, *threshold)?;
            let decision = infant_generalization(&scenario);
            Ok(RunReport::new("infant")
                .input("blue_fraction", num(*blue_fraction))
                .input("sample_size", count(*sample_size as u64))
                .input("threshold", num(*threshold))
                .output("lr", num(decision.lr))
                .output("generalize", ReportValue::Bool(decision.generalize)))
        }

        Command::Ci {
            n,
            successes,
            level,
        } => interval_report("ci", *n, *successes, *level),

        Command::Posterior {
            n,
            successes,
            prior,
        } => {
            let dist = prior.to_distribution()?;
            let data = BernoulliData::new(*n, *successes)?;
            let report = posterior_report(&dist, data)?;
            let post = &report.posterior;
            let mut out = RunReport::new("posterior")
                .input("n", count(*n))
                .input("successes", count(*successes))
                .input("prior", ReportValue::Text(prior.label()))
                .output("prob_g", num(report.prob_g))
                .output("predictive", num(report.predictive_next))
                .output("atom0", num(post.atom0()))
                .output("atom1", num(post.atom1()))
                .output("cont_a", num(post.cont().a()))
                .output("cont_b", num(post.cont().b()))
                .output("cont_weight", num(post.cont_weight()));
            if !dist.is_proper() {
                out = out.note(IMPROPER_NOTE);
            }
            Ok(out)
        }

        Command::Confidence {
            n,
            successes,
            side,
            grid,
        } => {
            let data = BernoulliData::new(*n, *successes)?;
            let side = side.to_side();
            let cd = confidence_density(data, side)?;
            let prior = induced_prior(&cd);
            let general = confidence_of_general(data, side)?;
            let mut out = RunReport::new("confidence")
                .input("n", count(*n))
                .input("successes", count(*successes))
                .input("side", ReportValue::Text(side.as_str().into()))
                .output("shape_a", num(cd.shape().a()))
                .output("shape_b", num(cd.shape().b()))
                .output("degenerate", ReportValue::Bool(cd.is_degenerate()))
                .output("induced_prior_a", num(prior.a()))
                .output("induced_prior_b", num(prior.b()))
                .output("confidence_of_general", num(general))
                .note(IMPROPER_NOTE);
            if let Some(points) = grid {
                out = out.input("grid", count(*points as u64));
                if let Some(atom) = cd.boundary_atom() {
                    out = out.note(format!("density degenerate: boundary atom at theta={atom}"));
                } else {
                    for i in 1..=*points {
                        let theta = i as f64 / (*points + 1) as f64;
                        out =
                            out.output(&format!("density@{theta:.6}"), num(cd.density_at(theta)?));
                    }
                }
            }
            Ok(out)
        }

        Command::Coverage {
            theta,
            n,
            level,
            replicates,
            seed,
        } => {
            let cfg = CoverageConfig {
                theta: *theta,
                n: *n,
                level: *level,
                replicates: *replicates,
                seed: *seed,
            };
            let result = simulate_coverage(&cfg)?;
            Ok(RunReport::new("coverage")
                .input("theta", num(*theta))
                .input("n", count(*n))
                .input("level", num(*level))
                .input("replicates", count(*replicates))
                .input("seed", count(*seed))
                .output("hits", count(result.hits))
                .output("coverage", num(result.coverage())))
        }
    }
}

fn interval_report(
    scenario: &str,
    n: u64,
    successes: u64,
    level: f64,
) -> credence::Result<RunReport> {
    let data = BernoulliData::new(n, successes)?;
    let ci = confidence_interval(data, level)?;
    Ok(RunReport::new(scenario)
        .input("n", count(n))
        .input("successes", count(successes))
        .input("level", num(level))
        .output("lo", num(ci.lo()))
        .output("hi", num(ci.hi()))
        .output("confidence", num(ci.coverage_likelihood())))
}
