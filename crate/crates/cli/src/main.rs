//! Command-line front end: one subcommand per scenario plus generic forms.
//!
//! Exit codes: 0 on success, 1 when a computation fails, 2 on usage errors.

mod report;
mod scenarios;

use clap::{Parser, Subcommand, ValueEnum};
use credence::{GeneralizedBeta, PValueSide, ThetaDistribution};

#[derive(Parser)]
#[command(
    name = "credence",
    version,
    about = "Likelihood, confidence, and Bayesian induction calculator for binary evidence"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Right,
    Left,
}

impl SideArg {
    fn to_side(self) -> PValueSide {
        match self {
            SideArg::Right => PValueSide::Right,
            SideArg::Left => PValueSide::Left,
        }
    }
}

/// Prior selector: `uniform`, `jeffreys-beta`, `jeffreys-mixture`, or
/// `beta:a,b` (a and b nonnegative; zero values give the improper members).
#[derive(Clone, Debug, PartialEq)]
enum PriorSpec {
    Uniform,
    JeffreysBeta,
    JeffreysMixture,
    Beta(f64, f64),
}

impl PriorSpec {
    fn to_distribution(&self) -> credence::Result<ThetaDistribution> {
        Ok(match self {
            PriorSpec::Uniform => ThetaDistribution::uniform(),
            PriorSpec::JeffreysBeta => ThetaDistribution::jeffreys_beta(),
            PriorSpec::JeffreysMixture => ThetaDistribution::jeffreys_mixture(),
            PriorSpec::Beta(a, b) => ThetaDistribution::from_beta(GeneralizedBeta::new(*a, *b)?),
        })
    }

    fn label(&self) -> String {
        match self {
            PriorSpec::Uniform => "uniform".into(),
            PriorSpec::JeffreysBeta => "jeffreys-beta".into(),
            PriorSpec::JeffreysMixture => "jeffreys-mixture".into(),
            PriorSpec::Beta(a, b) => format!("beta:{a},{b}"),
        }
    }
}

fn parse_prior(s: &str) -> Result<PriorSpec, String> {
    match s {
        "uniform" => Ok(PriorSpec::Uniform),
        "jeffreys-beta" => Ok(PriorSpec::JeffreysBeta),
        "jeffreys-mixture" => Ok(PriorSpec::JeffreysMixture),
        other => {
            let spec = other.strip_prefix("beta:").ok_or_else(|| {
                format!(
                    "unknown prior '{other}'; expected uniform, jeffreys-beta, \
                     jeffreys-mixture, or beta:a,b"
                )
            })?;
            let (a, b) = spec
                .split_once(',')
                .ok_or_else(|| format!("expected beta:a,b, got 'beta:{spec}'"))?;
            let a: f64 = a.trim().parse().map_err(|e| format!("bad beta a: {e}"))?;
            let b: f64 = b.trim().parse().map_err(|e| format!("bad beta b: {e}"))?;
            if !a.is_finite() || a < 0.0 || !b.is_finite() || b < 0.0 {
                return Err(format!("beta parameters must be nonnegative, got {a},{b}"));
            }
            Ok(PriorSpec::Beta(a, b))
        }
    }
}

fn parse_level(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v < 1.0 {
        Ok(v)
    } else {
        Err(format!("must lie strictly between 0 and 1, got {v}"))
    }
}

fn parse_unit(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if (0.0..=1.0).contains(&v) {
        Ok(v)
    } else {
        Err(format!("must lie in [0,1], got {v}"))
    }
}

fn parse_nonnegative(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v >= 0.0 {
        Ok(v)
    } else {
        Err(format!("must be finite and nonnegative, got {v}"))
    }
}

fn parse_positive(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(format!("must be positive, got {v}"))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Exact equal-tailed interval after observing n black ravens out of n.
    Ravens {
        /// Ravens observed, all black.
        #[arg(long, default_value_t = 10)]
        n: u64,
        /// Confidence level, strictly between 0 and 1.
        #[arg(long, default_value_t = 0.95, value_parser = parse_level)]
        level: f64,
    },
    /// Posterior mass on "the sun rises forever" and tomorrow's predictive.
    Sunrise {
        /// Prior over the sunrise rate.
        #[arg(long, value_parser = parse_prior, default_value = "uniform")]
        prior: PriorSpec,
        /// Days of consecutive sunrises.
        #[arg(long, default_value_t = 2_190_000)]
        n: u64,
    },
    /// Bank-teller comparison: composite hypothesis vs its strong component.
    Linda {
        /// Proportion of feminists among bank tellers.
        #[arg(long, default_value_t = 0.25, value_parser = parse_unit)]
        p: f64,
        /// Likelihood of the description given a feminist bank teller.
        #[arg(long, default_value_t = 0.8, value_parser = parse_nonnegative)]
        l2: f64,
        /// Likelihood given a non-feminist bank teller.
        #[arg(long, default_value_t = 0.2, value_parser = parse_nonnegative)]
        l3: f64,
        /// Prior probability that Linda is a bank teller at all.
        #[arg(long, default_value_t = 0.1, value_parser = parse_level)]
        prior_teller: f64,
    },
    /// Likelihood ratio of guilt vs innocence for the presented evidence.
    Prosecutor {
        /// P(evidence | guilty).
        #[arg(long, default_value_t = 1.0, value_parser = parse_nonnegative)]
        l_guilty: f64,
        /// P(evidence | innocent).
        #[arg(long, default_value_t = 1e-8, value_parser = parse_nonnegative)]
        l_innocent: f64,
    },
    /// Audit a pair of betting quotients for arbitrage.
    DutchBook {
        /// Quotient risked on the proposition.
        #[arg(long, value_parser = parse_unit)]
        alpha: f64,
        /// Quotient risked on its negation.
        #[arg(long, value_parser = parse_unit)]
        beta: f64,
        /// Stake per bet.
        #[arg(long, default_value_t = 1.0, value_parser = parse_positive)]
        stake: f64,
    },
    /// Sampling-generalization decision from the squeaky-ball experiment.
    Infant {
        /// Fraction of blue balls in the population picture.
        #[arg(long, default_value_t = 0.75, value_parser = parse_level)]
        blue_fraction: f64,
        /// Number of squeaky blue balls drawn.
        #[arg(long, default_value_t = 3)]
        sample_size: u32,
        /// Likelihood-ratio cutoff for calling the sample random.
        #[arg(long, default_value_t = 0.1, value_parser = parse_positive)]
        threshold: f64,
    },
    /// Exact equal-tailed interval for generic counts.
    Ci {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        successes: u64,
        #[arg(long, default_value_t = 0.95, value_parser = parse_level)]
        level: f64,
    },
    /// Posterior report for generic counts under a chosen prior.
    Posterior {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        successes: u64,
        #[arg(long, value_parser = parse_prior, default_value = "uniform")]
        prior: PriorSpec,
    },
    /// Confidence density, induced prior, and confidence in the general
    /// proposition for generic counts.
    Confidence {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        successes: u64,
        /// Which one-sided P-value function to differentiate.
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
        /// Also dump the density on an interior grid of this many points.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=1000))]
        grid: Option<u32>,
    },
    /// Monte Carlo coverage of the exact interval at a fixed true rate.
    Coverage {
        /// True success rate generating the data.
        #[arg(long, value_parser = parse_unit)]
        theta: f64,
        #[arg(long, default_value_t = 20)]
        n: u64,
        #[arg(long, default_value_t = 0.95, value_parser = parse_level)]
        level: f64,
        #[arg(long, default_value_t = 10_000)]
        replicates: u64,
        /// RNG seed; identical seeds reproduce the run bit for bit.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Ravens { .. } => "ravens",
            Command::Sunrise { .. } => "sunrise",
            Command::Linda { .. } => "linda",
            Command::Prosecutor { .. } => "prosecutor",
            Command::DutchBook { .. } => "dutch-book",
            Command::Infant { .. } => "infant",
            Command::Ci { .. } => "ci",
            Command::Posterior { .. } => "posterior",
            Command::Confidence { .. } => "confidence",
            Command::Coverage { .. } => "coverage",
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let report = match scenarios::run(&cli.command) {
        Ok(report) => report,
        Err(err) => {
            eprintln!("error: {}: {err}", cli.command.name());
            std::process::exit(1);
        }
    };
    match cli.format {
        OutputFormat::Text => print!("{}", report.to_text()),
        OutputFormat::Json => println!("{}", report.to_json()),
    }
}
