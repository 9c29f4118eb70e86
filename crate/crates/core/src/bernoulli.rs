//! Binary-trial data and the beta-family distributions over the success rate.
//!
//! [`BernoulliData`] carries the counts (n trials, x successes).
//! [`GeneralizedBeta`] is a Beta(a, b) shape that admits a = 0 or b = 0, the
//! improper members needed to represent induced prior confidences.
//! [`ThetaDistribution`] is a mixture over θ in [0,1]: optional point masses
//! at the endpoints plus a weighted beta-shaped continuous part, which is
//! enough to house every prior and posterior used in the inference modules.

use crate::error::{Error, Result};
use crate::numerics::{self, inv_reg_inc_beta, reg_inc_beta};

/// Counts for a sequence of binary trials: `n` trials with `x` successes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BernoulliData {
    n: u64,
    x: u64,
}

impl BernoulliData {
    pub fn new(n: u64, x: u64) -> Result<Self> {
        if x > n {
            return Err(Error::Domain(format!(
                "successes cannot exceed trials: x={x}, n={n}"
            )));
        }
        Ok(Self { n, x })
    }

    /// Data in which every one of `n` trials succeeded.
    pub fn all_successes(n: u64) -> Self {
        Self { n, x: n }
    }

    pub fn trials(&self) -> u64 {
        self.n
    }

    pub fn successes(&self) -> u64 {
        self.x
    }

    pub fn failures(&self) -> u64 {
        self.n - self.x
    }

    /// Pools two independent samples.
    pub fn combined(self, other: Self) -> Self {
        Self {
            n: self.n + other.n,
            x: self.x + other.x,
        }
    }
}

/// θ^k with the convention 0^0 = 1.
fn pow_count(theta: f64, k: u64) -> f64 {
    if k == 0 {
        1.0
    } else {
        theta.powf(k as f64)
    }
}

/// Bernoulli likelihood L(θ) = θ^x (1-θ)^(n-x).
///
/// The boundary convention 0^0 = 1 makes L(1) = 1 for all-success data and
/// L(0) = 1 for all-failure data.
pub fn likelihood(data: BernoulliData, theta: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&theta) {
        return Err(Error::Domain(format!(
            "likelihood requires theta in [0,1], got {theta}"
        )));
    }
    Ok(pow_count(theta, data.x) * pow_count(1.0 - theta, data.n - data.x))
}

/// ln L(θ); returns -inf where the likelihood is exactly zero.
///
/// Stable for trial counts in the millions, where the plain likelihood
/// underflows.
pub fn log_likelihood(data: BernoulliData, theta: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&theta) {
        return Err(Error::Domain(format!(
            "log_likelihood requires theta in [0,1], got {theta}"
        )));
    }
    let (x, failures) = (data.x, data.n - data.x);
    if theta == 0.0 {
        return Ok(if x == 0 { 0.0 } else { f64::NEG_INFINITY });
    }
    if theta == 1.0 {
        return Ok(if failures == 0 {
            0.0
        } else {
            f64::NEG_INFINITY
        });
    }
    let mut ll = 0.0;
    if x > 0 {
        ll += x as f64 * theta.ln();
    }
    if failures > 0 {
        ll += failures as f64 * (-theta).ln_1p();
    }
    Ok(ll)
}

/// Maximum-likelihood estimate x/n.
pub fn mle(data: BernoulliData) -> Result<f64> {
    if data.n == 0 {
        return Err(Error::UndefinedEstimate);
    }
    Ok(data.x as f64 / data.n as f64)
}

/// A Beta(a, b) shape with a >= 0 and b >= 0.
///
/// Only the unnormalized shape θ^(a-1) (1-θ)^(b-1) is stored. The member is
/// proper exactly when both parameters are positive; normalized quantities
/// (mean, moments, density) are errors for improper members, which have
/// infinite measure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralizedBeta {
    a: f64,
    b: f64,
}

impl GeneralizedBeta {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || a < 0.0 || !b.is_finite() || b < 0.0 {
            return Err(Error::Domain(format!(
                "beta shape parameters must be finite and nonnegative, got a={a}, b={b}"
            )));
        }
        Ok(Self { a, b })
    }

    /// The uniform shape Beta(1, 1).
    pub fn uniform() -> Self {
        Self { a: 1.0, b: 1.0 }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn is_proper(&self) -> bool {
        self.a > 0.0 && self.b > 0.0
    }

    fn require_proper(&self) -> Result<()> {
        if self.is_proper() {
            Ok(())
        } else {
            Err(Error::ImproperNormalization)
        }
    }

    /// ln B(a, b), the log normalizing constant.
    pub fn log_norm(&self) -> Result<f64> {
        self.require_proper()?;
        Ok(numerics::log_beta_raw(self.a, self.b))
    }

    /// Mean a / (a + b).
    pub fn mean(&self) -> Result<f64> {
        self.require_proper()?;
        Ok(self.a / (self.a + self.b))
    }

    /// E[θ^m] = B(a+m, b) / B(a, b).
    pub fn moment(&self, m: u64) -> Result<f64> {
        self.require_proper()?;
        if m == 0 {
            return Ok(1.0);
        }
        let m = m as f64;
        let ln_ratio = numerics::log_gamma_raw(self.a + m) - numerics::log_gamma_raw(self.a)
            + numerics::log_gamma_raw(self.a + self.b)
            - numerics::log_gamma_raw(self.a + self.b + m);
        Ok(ln_ratio.exp())
    }

    /// Normalized density at θ.
    pub fn density_at(&self, theta: f64) -> Result<f64> {
        self.require_proper()?;
        Ok(self.unnormalized_density_at(theta)? * (-numerics::log_beta_raw(self.a, self.b)).exp())
    }

    /// The bare shape θ^(a-1) (1-θ)^(b-1), defined for improper members too.
    pub fn unnormalized_density_at(&self, theta: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&theta) {
            return Err(Error::Domain(format!(
                "density requires theta in [0,1], got {theta}"
            )));
        }
        if theta == 0.0 {
            return Ok(boundary_shape(self.a));
        }
        if theta == 1.0 {
            return Ok(boundary_shape(self.b));
        }
        Ok(((self.a - 1.0) * theta.ln() + (self.b - 1.0) * (-theta).ln_1p()).exp())
    }

    /// CDF I_x(a, b).
    pub fn cdf(&self, x: f64) -> Result<f64> {
        self.require_proper()?;
        reg_inc_beta(self.a, self.b, x)
    }

    /// Quantile function, the inverse CDF.
    pub fn quantile(&self, p: f64) -> Result<f64> {
        self.require_proper()?;
        inv_reg_inc_beta(self.a, self.b, p)
    }
}

/// Limit of θ^(c-1) as θ approaches the relevant endpoint.
fn boundary_shape(c: f64) -> f64 {
    if c > 1.0 {
        0.0
    } else if c == 1.0 {
        1.0
    } else {
        f64::INFINITY
    }
}

/// A distribution over θ in [0,1]: point masses at θ=0 and θ=1 plus a
/// weighted beta-shaped continuous part.
///
/// When the continuous part is proper (or carries no weight) the three
/// weights must sum to one. Improper continuous parts are allowed with any
/// weight; they represent prior shapes of infinite measure and cannot be
/// normalized. By convention the continuous shape is Beta(1, 1) whenever its
/// weight is zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaDistribution {
    atom0: f64,
    atom1: f64,
    cont: GeneralizedBeta,
    cont_weight: f64,
}

impl ThetaDistribution {
    pub fn new(atom0: f64, atom1: f64, cont: GeneralizedBeta, cont_weight: f64) -> Result<Self> {
        for (name, w) in [
            ("atom0", atom0),
            ("atom1", atom1),
            ("cont_weight", cont_weight),
        ] {
            if !w.is_finite() || w < 0.0 {
                return Err(Error::Domain(format!(
                    "{name} must be finite and nonnegative, got {w}"
                )));
            }
        }
        let cont = if cont_weight == 0.0 {
            GeneralizedBeta::uniform()
        } else {
            cont
        };
        if (cont_weight == 0.0 || cont.is_proper())
            && (atom0 + atom1 + cont_weight - 1.0).abs() > 1e-12
        {
            return Err(Error::Domain(format!(
                "weights must sum to 1, got {}",
                atom0 + atom1 + cont_weight
            )));
        }
        Ok(Self {
            atom0,
            atom1,
            cont,
            cont_weight,
        })
    }

    /// A purely continuous distribution with the given shape, proper or not.
    pub fn from_beta(cont: GeneralizedBeta) -> Self {
        Self {
            atom0: 0.0,
            atom1: 0.0,
            cont,
            cont_weight: 1.0,
        }
    }

    /// The Bayes-Laplace uniform prior Beta(1, 1).
    pub fn uniform() -> Self {
        Self::from_beta(GeneralizedBeta::uniform())
    }

    /// The objective-Bayes reference prior Beta(1/2, 1/2).
    pub fn jeffreys_beta() -> Self {
        Self::from_beta(GeneralizedBeta { a: 0.5, b: 0.5 })
    }

    /// Half a point mass on θ=1, half spread uniformly: the prior that lets
    /// finite evidence lift the general proposition above any fixed bound.
    pub fn jeffreys_mixture() -> Self {
        Self {
            atom0: 0.0,
            atom1: 0.5,
            cont: GeneralizedBeta::uniform(),
            cont_weight: 0.5,
        }
    }

    /// All mass on θ=1.
    pub fn atom_at_one() -> Self {
        Self {
            atom0: 0.0,
            atom1: 1.0,
            cont: GeneralizedBeta::uniform(),
            cont_weight: 0.0,
        }
    }

    /// All mass on θ=0.
    pub fn atom_at_zero() -> Self {
        Self {
            atom0: 1.0,
            atom1: 0.0,
            cont: GeneralizedBeta::uniform(),
            cont_weight: 0.0,
        }
    }

    pub fn atom0(&self) -> f64 {
        self.atom0
    }

    pub fn atom1(&self) -> f64 {
        self.atom1
    }

    pub fn cont(&self) -> GeneralizedBeta {
        self.cont
    }

    pub fn cont_weight(&self) -> f64 {
        self.cont_weight
    }

    /// True when the distribution is a genuine probability measure.
    pub fn is_proper(&self) -> bool {
        self.cont_weight == 0.0 || self.cont.is_proper()
    }

    /// E[θ].
    pub fn mean(&self) -> Result<f64> {
        if !self.is_proper() {
            return Err(Error::ImproperNormalization);
        }
        let cont_part = if self.cont_weight > 0.0 {
            self.cont_weight * self.cont.mean()?
        } else {
            0.0
        };
        Ok(self.atom1 + cont_part)
    }

    /// E[θ^m] for m >= 1; the atom at θ=0 contributes nothing.
    pub fn moment(&self, m: u64) -> Result<f64> {
        if !self.is_proper() {
            return Err(Error::ImproperNormalization);
        }
        if m == 0 {
            return Ok(self.atom0 + self.atom1 + self.cont_weight);
        }
        let cont_part = if self.cont_weight > 0.0 {
            self.cont_weight * self.cont.moment(m)?
        } else {
            0.0
        };
        Ok(self.atom1 + cont_part)
    }
}
