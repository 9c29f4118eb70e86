//! Likelihood-based versus probability-based comparison of hypotheses.
//!
//! The two modes can disagree: a composite hypothesis always carries at
//! least as much posterior probability as any hypothesis it contains, while
//! its likelihood is a weighted average of the components and so can fall
//! below the strongest one. [`compare_reasoning`] computes both orderings
//! and flags each containment pair where they invert.
//!
//! The module also audits betting books for Dutch-book vulnerability and
//! scores the sampling-generalization decision rule with a likelihood-ratio
//! threshold.

use crate::error::{Error, Result};

/// A simple hypothesis scored by the likelihood of the observed data under
/// it, with an optional prior probability.
///
/// The prior is optional on purpose: likelihood-only comparison is a
/// first-class mode and needs no probabilities over hypotheses.
#[derive(Debug, Clone, PartialEq)]
pub struct Hypothesis {
    id: String,
    label: String,
    likelihood: f64,
    prior: Option<f64>,
}

impl Hypothesis {
    pub fn new(id: impl Into<String>, label: impl Into<String>, likelihood: f64) -> Result<Self> {
        if !likelihood.is_finite() || likelihood < 0.0 {
            return Err(Error::Domain(format!(
                "likelihood must be finite and nonnegative, got {likelihood}"
            )));
        }
        Ok(Self {
            id: id.into(),
            label: label.into(),
            likelihood,
            prior: None,
        })
    }

    pub fn with_prior(mut self, prior: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&prior) {
            return Err(Error::Domain(format!(
                "prior must lie in [0,1], got {prior}"
            )));
        }
        self.prior = Some(prior);
        Ok(self)
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn likelihood(&self) -> f64 {
        self.likelihood
    }

    pub fn prior(&self) -> Option<f64> {
        self.prior
    }
}

/// A hypothesis that is a disjoint union of simple ones, each with its
/// within-composite weight.
#[derive(Debug, Clone, PartialEq)]
pub struct CompositeHypothesis {
    id: String,
    label: String,
    components: Vec<(Hypothesis, f64)>,
}

impl CompositeHypothesis {
    pub fn new(
        id: impl Into<String>,
        label: impl Into<String>,
        components: Vec<(Hypothesis, f64)>,
    ) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Domain(
                "a composite hypothesis needs at least one component".into(),
            ));
        }
        let mut total = 0.0;
        for (h, w) in &components {
            if !(0.0..=1.0).contains(w) {
                return Err(Error::Domain(format!(
                    "component weight for '{}' must lie in [0,1], got {w}",
                    h.id()
                )));
            }
            total += w;
        }
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::Domain(format!(
                "component weights must sum to 1, got {total}"
            )));
        }
        Ok(Self {
            id: id.into(),
            label: label.into(),
            components,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn components(&self) -> &[(Hypothesis, f64)] {
        &self.components
    }

    /// Sum of component priors, when every component has one.
    pub fn prior(&self) -> Option<f64> {
        self.components
            .iter()
            .map(|(h, _)| h.prior())
            .sum::<Option<f64>>()
    }
}

/// Likelihood of a composite: the weight-mixture of its components,
/// L = Σ wᵢ Lᵢ. Always between the smallest and largest component value.
pub fn mixture_likelihood(comp: &CompositeHypothesis) -> f64 {
    comp.components
        .iter()
        .map(|(h, w)| w * h.likelihood())
        .sum()
}

/// Ratio of two hypothesis likelihoods, L(a)/L(b).
///
/// A zero denominator with a positive numerator yields the infinity
/// sentinel; 0/0 is an error.
pub fn likelihood_ratio(h_a: &Hypothesis, h_b: &Hypothesis) -> Result<f64> {
    let (num, den) = (h_a.likelihood(), h_b.likelihood());
    if num == 0.0 && den == 0.0 {
        return Err(Error::IndeterminateRatio);
    }
    if den == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(num / den)
}

/// Either kind of hypothesis, for ranking.
#[derive(Debug, Clone, PartialEq)]
pub enum ReasoningItem {
    Simple(Hypothesis),
    Composite(CompositeHypothesis),
}

impl ReasoningItem {
    pub fn id(&self) -> &str {
        match self {
            ReasoningItem::Simple(h) => h.id(),
            ReasoningItem::Composite(c) => c.id(),
        }
    }

    pub fn likelihood(&self) -> f64 {
        match self {
            ReasoningItem::Simple(h) => h.likelihood(),
            ReasoningItem::Composite(c) => mixture_likelihood(c),
        }
    }

    /// Posterior score Prob(Data ∧ H): prior·likelihood for a simple
    /// hypothesis, the sum over components for a composite. Ordering by this
    /// score is ordering by posterior probability.
    pub fn posterior_score(&self) -> Option<f64> {
        match self {
            ReasoningItem::Simple(h) => h.prior().map(|p| p * h.likelihood()),
            ReasoningItem::Composite(c) => c
                .components
                .iter()
                .map(|(h, _)| h.prior().map(|p| p * h.likelihood()))
                .sum(),
        }
    }

    fn has_any_prior(&self) -> bool {
        match self {
            ReasoningItem::Simple(h) => h.prior().is_some(),
            ReasoningItem::Composite(c) => c.components.iter().any(|(h, _)| h.prior().is_some()),
        }
    }
}

/// A declared container/contained pair, by id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Containment {
    pub container: String,
    pub contained: String,
}

/// A containment pair on which the two orderings disagree: the likelihood
/// prefers the contained hypothesis even though its posterior probability
/// cannot exceed the container's.
#[derive(Debug, Clone, PartialEq)]
pub struct Divergence {
    pub container: String,
    pub contained: String,
    pub container_likelihood: f64,
    pub contained_likelihood: f64,
}

/// Both orderings plus the flagged disagreements.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    /// (id, likelihood), best first.
    pub likelihood_ranking: Vec<(String, f64)>,
    /// (id, posterior score), best first; present when priors were supplied.
    pub posterior_ranking: Option<Vec<(String, f64)>>,
    pub divergences: Vec<Divergence>,
}

fn rank_desc(mut entries: Vec<(String, f64)>) -> Vec<(String, f64)> {
    entries.sort_by(|a, b| {
        b.1.partial_cmp(&a.1)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then_with(|| a.0.cmp(&b.0))
    });
    entries
}

/// Ranks the items by likelihood and, when priors are given, by posterior
/// score, checking the conjunction rule on each declared containment pair.
///
/// The containment relation is explicit: each `container` id must name a
/// composite in `items` and each `contained` id one of its components.
/// Posterior ordering requires priors on every item; supplying them on only
/// some is an error.
pub fn compare_reasoning(
    items: &[ReasoningItem],
    nesting: &[Containment],
) -> Result<ComparisonReport> {
    if items.is_empty() {
        return Err(Error::IncompleteInput("no hypotheses supplied".into()));
    }
    let mut seen = std::collections::BTreeSet::new();
    for item in items {
        if !seen.insert(item.id()) {
            return Err(Error::Domain(format!(
                "duplicate hypothesis id '{}'",
                item.id()
            )));
        }
    }
    let lookup = |id: &str| items.iter().find(|item| item.id() == id);

    for pair in nesting {
        let container = lookup(&pair.container)
            .ok_or_else(|| Error::Domain(format!("unknown container id '{}'", pair.container)))?;
        let contained = lookup(&pair.contained)
            .ok_or_else(|| Error::Domain(format!("unknown contained id '{}'", pair.contained)))?;
        let ReasoningItem::Composite(comp) = container else {
            return Err(Error::Domain(format!(
                "container '{}' is not a composite hypothesis",
                pair.container
            )));
        };
        let component = comp
            .components
            .iter()
            .map(|(h, _)| h)
            .find(|h| h.id() == pair.contained)
            .ok_or_else(|| {
                Error::Domain(format!(
                    "'{}' is not a component of '{}'",
                    pair.contained, pair.container
                ))
            })?;
        if let ReasoningItem::Simple(listed) = contained {
            if listed.likelihood() != component.likelihood() || listed.prior() != component.prior()
            {
                return Err(Error::Domain(format!(
                    "listed hypothesis '{}' differs from its copy inside '{}'",
                    pair.contained, pair.container
                )));
            }
        }
    }

    let likelihood_ranking = rank_desc(
        items
            .iter()
            .map(|item| (item.id().to_string(), item.likelihood()))
            .collect(),
    );

    let any_prior = items.iter().any(ReasoningItem::has_any_prior);
    let posterior_ranking = if any_prior {
        let mut scored = Vec::with_capacity(items.len());
        for item in items {
            let score = item.posterior_score().ok_or_else(|| {
                Error::IncompleteInput(format!(
                    "posterior ordering requested but '{}' has no prior",
                    item.id()
                ))
            })?;
            scored.push((item.id().to_string(), score));
        }
        Some(rank_desc(scored))
    } else {
        None
    };

    let mut divergences = Vec::new();
    for pair in nesting {
        let container = lookup(&pair.container).expect("validated above");
        let contained = lookup(&pair.contained).expect("validated above");
        if let (Some(cs), Some(hs)) = (container.posterior_score(), contained.posterior_score()) {
            // Conjunction rule: the container's score is a sum of
            // nonnegative terms that includes the contained one.
            debug_assert!(cs >= hs);
        }
        if contained.likelihood() > container.likelihood() {
            divergences.push(Divergence {
                container: pair.container.clone(),
                contained: pair.contained.clone(),
                container_likelihood: container.likelihood(),
                contained_likelihood: contained.likelihood(),
            });
        }
    }

    Ok(ComparisonReport {
        likelihood_ranking,
        posterior_ranking,
        divergences,
    })
}

/// Betting quotients posted on a proposition and its negation: risk `alpha`
/// to win 1-alpha on E, risk `beta` to win 1-beta on not-E.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BettingBook {
    alpha: f64,
    beta: f64,
    stake: f64,
}

impl BettingBook {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        for (name, q) in [("alpha", alpha), ("beta", beta)] {
            if !(0.0..=1.0).contains(&q) {
                return Err(Error::Domain(format!(
                    "betting quotient {name} must lie in [0,1], got {q}"
                )));
            }
        }
        Ok(Self {
            alpha,
            beta,
            stake: 1.0,
        })
    }

    pub fn with_stake(mut self, stake: f64) -> Result<Self> {
        if !stake.is_finite() || stake <= 0.0 {
            return Err(Error::Domain(format!(
                "stake must be positive, got {stake}"
            )));
        }
        self.stake = stake;
        Ok(self)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn stake(&self) -> f64 {
        self.stake
    }

    /// The adversary's total payoff in one world state after taking both
    /// bets in the given role, bet by bet.
    pub fn adversary_payoff(&self, role: AdversaryRole, event_true: bool) -> f64 {
        let s = self.stake;
        let as_player = if event_true {
            // Wins the bet on E, loses the bet on not-E.
            (1.0 - self.alpha) * s - self.beta * s
        } else {
            -self.alpha * s + (1.0 - self.beta) * s
        };
        match role {
            AdversaryRole::Player => as_player,
            AdversaryRole::Bookie => -as_player,
            AdversaryRole::None => 0.0,
        }
    }
}

/// Which side of the book the adversary takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AdversaryRole {
    /// Places both bets against the book.
    Player,
    /// Accepts both bets from the book's owner.
    Bookie,
    /// No sure profit exists; the adversary stays out.
    None,
}

impl AdversaryRole {
    pub fn as_str(&self) -> &'static str {
        match self {
            AdversaryRole::Player => "player",
            AdversaryRole::Bookie => "bookie",
            AdversaryRole::None => "none",
        }
    }
}

impl std::fmt::Display for AdversaryRole {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Verdict of a Dutch-book audit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AuditResult {
    /// True when alpha + beta = 1 (within 1e-12), the additivity condition.
    pub coherent: bool,
    /// Profit the adversary locks in regardless of the world state.
    pub guaranteed_profit: f64,
    pub role: AdversaryRole,
}

/// Checks a betting book for arbitrage.
///
/// When alpha + beta < 1 the adversary plays both bets and wins
/// (1-alpha-beta)·stake whether or not E occurs; when alpha + beta > 1 the
/// adversary books both bets and wins (alpha+beta-1)·stake. The profit is
/// computed by enumerating both world states and taking the minimum, so the
/// guarantee is checked rather than assumed.
pub fn dutch_book_audit(book: &BettingBook) -> AuditResult {
    let excess = book.alpha() + book.beta() - 1.0;
    let coherent = excess.abs() <= 1e-12;
    let role = if coherent {
        AdversaryRole::None
    } else if excess < 0.0 {
        AdversaryRole::Player
    } else {
        AdversaryRole::Bookie
    };
    let guaranteed_profit = book
        .adversary_payoff(role, true)
        .min(book.adversary_payoff(role, false));
    AuditResult {
        coherent,
        guaranteed_profit,
        role,
    }
}

/// The box-sampling setup: a population picture, a sample drawn from it, and
/// the likelihood-ratio cutoff for calling the sample random.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplingScenario {
    blue_fraction: f64,
    sample_size: u32,
    all_sampled_blue_and_squeaky: bool,
    threshold: f64,
}

impl SamplingScenario {
    /// Default likelihood-ratio cutoff, strictly between the two
    /// experimental scenarios' ratios (27/64 and 1/64).
    pub const DEFAULT_THRESHOLD: f64 = 0.1;

    pub fn new(blue_fraction: f64, sample_size: u32, threshold: f64) -> Result<Self> {
        if !(blue_fraction > 0.0 && blue_fraction < 1.0) {
            return Err(Error::Domain(format!(
                "blue_fraction must lie strictly between 0 and 1, got {blue_fraction}"
            )));
        }
        if sample_size == 0 {
            return Err(Error::Domain("sample_size must be at least 1".into()));
        }
        if !(threshold.is_finite() && threshold > 0.0) {
            return Err(Error::Domain(format!(
                "threshold must be positive, got {threshold}"
            )));
        }
        Ok(Self {
            blue_fraction,
            sample_size,
            all_sampled_blue_and_squeaky: true,
            threshold,
        })
    }

    /// Marks the observed sample as not consisting purely of squeaky blue
    /// balls, which falsifies the selective-sampling hypothesis.
    pub fn with_mixed_sample(mut self) -> Self {
        self.all_sampled_blue_and_squeaky = false;
        self
    }

    pub fn blue_fraction(&self) -> f64 {
        self.blue_fraction
    }

    pub fn sample_size(&self) -> u32 {
        self.sample_size
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }
}

/// Outcome of the sampling-generalization decision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralizationDecision {
    /// L(random sampling) / L(selective sampling).
    pub lr: f64,
    /// True when the ratio clears the threshold and the sampled property
    /// generalizes to the rest of the population.
    pub generalize: bool,
}

/// Scores the two sampling hypotheses and applies the threshold rule.
///
/// Under random sampling with replacement the chance of drawing an
/// all-blue sample is blue_fraction^k; under selective sampling it is 1.
/// A sample with any non-blue ball instead falsifies selective sampling and
/// the ratio is the infinity sentinel.
pub fn infant_generalization(sc: &SamplingScenario) -> GeneralizationDecision {
    let lr = if sc.all_sampled_blue_and_squeaky {
        sc.blue_fraction.powi(sc.sample_size as i32)
    } else {
        f64::INFINITY
    };
    GeneralizationDecision {
        lr,
        generalize: lr >= sc.threshold,
    }
}
