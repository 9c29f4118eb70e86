//! Confidence distributions for binomial data.
//!
//! The one-sided P-value function C(x, θ) behaves as a cumulative
//! distribution in θ; its θ-derivative is the confidence density, which has a
//! closed beta form: Beta(x, n-x+1) on the right side and Beta(x+1, n-x) on
//! the left. Dividing the density by the likelihood recovers the induced
//! prior the construction implicitly used, Beta(0, 1) or Beta(1, 0), both
//! improper. Equal-tailed exact intervals invert the two tail probabilities.
//!
//! Where the P-value function is flat (x = 0 on the right side, x = n on the
//! left) the derivative vanishes and the formal beta shape acquires a zero
//! parameter. Those degenerate members are represented as the formal shape
//! and read as a boundary atom, the limit of Beta(·, ε); asking them for a
//! density value is an error. The boundary-atom reading is what produces
//! full confidence in the general proposition from finite all-success data.

use crate::bayes;
use crate::bernoulli::{BernoulliData, GeneralizedBeta, ThetaDistribution};
use crate::error::{Error, Result};
use crate::numerics::{inv_reg_inc_beta, reg_inc_beta};

/// Which one-sided P-value function a confidence object is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PValueSide {
    /// C(x, θ) = P(X >= x | θ), increasing in θ.
    Right,
    /// C(x, θ) = P(X <= x | θ), decreasing in θ.
    Left,
}

impl PValueSide {
    pub fn as_str(&self) -> &'static str {
        match self {
            PValueSide::Right => "right",
            PValueSide::Left => "left",
        }
    }
}

impl std::fmt::Display for PValueSide {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One-sided binomial P-value at θ.
pub fn pvalue(data: BernoulliData, theta: f64, side: PValueSide) -> Result<f64> {
    if !(0.0..=1.0).contains(&theta) {
        return Err(Error::Domain(format!(
            "pvalue requires theta in [0,1], got {theta}"
        )));
    }
    let (n, x) = (data.trials(), data.successes());
    match side {
        PValueSide::Right => {
            if x == 0 {
                Ok(1.0)
            } else {
                // P(X >= x | θ) = I_θ(x, n-x+1).
                reg_inc_beta(x as f64, (n - x + 1) as f64, theta)
            }
        }
        PValueSide::Left => {
            if x == n {
                Ok(1.0)
            } else {
                // P(X <= x | θ) = 1 - P(X >= x+1 | θ).
                Ok(1.0 - reg_inc_beta((x + 1) as f64, (n - x) as f64, theta)?)
            }
        }
    }
}

/// The θ-derivative of a one-sided P-value function, in closed beta form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfidenceDensity {
    data: BernoulliData,
    side: PValueSide,
    shape: GeneralizedBeta,
}

impl ConfidenceDensity {
    pub fn data(&self) -> BernoulliData {
        self.data
    }

    pub fn side(&self) -> PValueSide {
        self.side
    }

    pub fn shape(&self) -> GeneralizedBeta {
        self.shape
    }

    /// True when the P-value function is flat and the shape carries a zero
    /// parameter; the object is then a boundary atom, not a density.
    pub fn is_degenerate(&self) -> bool {
        !self.shape.is_proper()
    }

    /// Location of the boundary atom for degenerate members.
    pub fn boundary_atom(&self) -> Option<f64> {
        if self.shape.a() == 0.0 {
            Some(0.0)
        } else if self.shape.b() == 0.0 {
            Some(1.0)
        } else {
            None
        }
    }

    /// Normalized density value at θ; degenerate members have none.
    pub fn density_at(&self, theta: f64) -> Result<f64> {
        if self.is_degenerate() {
            return Err(Error::DegenerateDensity {
                n: self.data.trials(),
                x: self.data.successes(),
                side: self.side.as_str(),
            });
        }
        self.shape.density_at(theta)
    }
}

/// Confidence density for the data on the chosen side.
///
/// Right side: Beta(x, n-x+1). Left side: Beta(x+1, n-x). The combinations
/// with a flat P-value function (x = 0 right, x = n left) yield the formal
/// shape with a zero parameter, flagged degenerate.
pub fn confidence_density(data: BernoulliData, side: PValueSide) -> Result<ConfidenceDensity> {
    if data.trials() == 0 {
        return Err(Error::NoEvidence);
    }
    let (n, x) = (data.trials() as f64, data.successes() as f64);
    let shape = match side {
        PValueSide::Right => GeneralizedBeta::new(x, n - x + 1.0)?,
        PValueSide::Left => GeneralizedBeta::new(x + 1.0, n - x)?,
    };
    Ok(ConfidenceDensity { data, side, shape })
}

/// An observed equal-tailed interval with its confidence level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfidenceInterval {
    lo: f64,
    hi: f64,
    level: f64,
    data: BernoulliData,
}

impl ConfidenceInterval {
    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn level(&self) -> f64 {
        self.level
    }

    pub fn data(&self) -> BernoulliData {
        self.data
    }

    pub fn contains(&self, theta: f64) -> bool {
        self.lo <= theta && theta <= self.hi
    }

    /// The extended likelihood that the realized interval covers the truth:
    /// the level itself, read as L(t=1) = Prob(T=1) = α for the coverage
    /// indicator T of the observed interval.
    pub fn coverage_likelihood(&self) -> f64 {
        self.level
    }
}

/// Exact equal-tailed interval for θ (the Clopper-Pearson construction).
///
/// The lower endpoint solves P(X >= x | θ) = (1-level)/2 and is clamped to 0
/// when x = 0; the upper endpoint solves P(X <= x | θ) = (1-level)/2 and is
/// clamped to 1 when x = n.
pub fn confidence_interval(data: BernoulliData, level: f64) -> Result<ConfidenceInterval> {
    if data.trials() == 0 {
        return Err(Error::NoEvidence);
    }
    if !(level > 0.0 && level < 1.0) {
        return Err(Error::Domain(format!(
            "confidence level must lie strictly between 0 and 1, got {level}"
        )));
    }
    let (n, x) = (data.trials(), data.successes());
    let tail = (1.0 - level) / 2.0;
    let lo = if x == 0 {
        0.0
    } else {
        // P(X >= x | θ) = I_θ(x, n-x+1) = tail.
        inv_reg_inc_beta(x as f64, (n - x + 1) as f64, tail)?
    };
    let hi = if x == n {
        1.0
    } else {
        // P(X <= x | θ) = tail  <=>  I_θ(x+1, n-x) = 1 - tail.
        inv_reg_inc_beta((x + 1) as f64, (n - x) as f64, 1.0 - tail)?
    };
    Ok(ConfidenceInterval {
        lo,
        hi,
        level,
        data,
    })
}

/// The prior implicitly used by the confidence construction:
/// c0(θ) ∝ c(x, θ) / L(θ; x), which is Beta(0, 1) on the right side and
/// Beta(1, 0) on the left, independent of the data.
pub fn induced_prior(cd: &ConfidenceDensity) -> GeneralizedBeta {
    match cd.side() {
        PValueSide::Right => GeneralizedBeta::new(0.0, 1.0).expect("fixed shape"),
        PValueSide::Left => GeneralizedBeta::new(1.0, 0.0).expect("fixed shape"),
    }
}

/// Confidence updating rule: c[(x1, x2), θ] ∝ c(x1, θ) L(θ; x2).
///
/// The product of a beta shape with a Bernoulli likelihood adds the counts,
/// so the result equals the confidence density built directly from the
/// pooled data.
pub fn update_confidence(
    cd: &ConfidenceDensity,
    data2: BernoulliData,
) -> Result<ConfidenceDensity> {
    confidence_density(cd.data().combined(data2), cd.side())
}

/// Confidence in the general proposition G = [θ=1]: the posterior mass on
/// θ=1 under the side's induced prior.
///
/// Under the left-side convention (induced prior Beta(1, 0)) all-success
/// data yield full confidence and any failure yields zero. The right-side
/// prior Beta(0, 1) can never confirm θ=1; its boundary mass goes to θ=0 in
/// the symmetric all-failure case.
///
/// The value is not necessarily a Kolmogorov probability: it descends from
/// an improper prior.
pub fn confidence_of_general(data: BernoulliData, side: PValueSide) -> Result<f64> {
    if data.trials() == 0 {
        return Err(Error::NoEvidence);
    }
    let cd = confidence_density(data, side)?;
    let prior = ThetaDistribution::from_beta(induced_prior(&cd));
    let post = bayes::posterior(&prior, data)?;
    Ok(bayes::prob_general(&post))
}
