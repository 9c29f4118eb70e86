//! Special functions and root finding shared by the inference modules.
//!
//! Log-gamma uses the Lanczos approximation (g = 7, nine terms, reflection
//! below 1/2). The regularized incomplete beta function I_x(a,b) is evaluated
//! by Lentz's continued fraction with the symmetry switch at
//! x > (a+1)/(a+b+2), which keeps the fraction in its fast-converging region
//! on both sides of the mode. The root finder interleaves bisection with a
//! secant step, so it accelerates on smooth functions but never leaves the
//! bracket.
//!
//! Everything here is a pure function of its inputs; there is no shared
//! state, so concurrent use is safe.

use crate::error::{Error, Result};

/// Convergence settings for the iterative routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    /// Stop when |f(x)| falls below this.
    pub abs_tol: f64,
    /// Stop when the bracket width falls below `rel_tol * |x|`.
    pub rel_tol: f64,
    /// Iteration cap before reporting non-convergence.
    pub max_iter: usize,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-10,
            max_iter: 200,
        }
    }
}

impl ToleranceConfig {
    pub fn new(abs_tol: f64, rel_tol: f64, max_iter: usize) -> Result<Self> {
        if !(abs_tol.is_finite() && abs_tol > 0.0)
            || !(rel_tol.is_finite() && rel_tol > 0.0)
            || max_iter < 1
        {
            return Err(Error::Domain(format!(
                "tolerances must be positive and max_iter >= 1, got abs_tol={abs_tol}, rel_tol={rel_tol}, max_iter={max_iter}"
            )));
        }
        Ok(Self {
            abs_tol,
            rel_tol,
            max_iter,
        })
    }
}

const LN_SQRT_TWO_PI: f64 = 0.918_938_533_204_672_7;

/// Lanczos coefficients for g = 7, kept at full published precision.
#[allow(clippy::excessive_precision, clippy::inconsistent_digit_grouping)]
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Natural log of the gamma function, ln Γ(x), for x > 0.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("log_gamma requires x > 0, got {x}")));
    }
    Ok(log_gamma_raw(x))
}

pub(crate) fn log_gamma_raw(x: f64) -> f64 {
    if x < 0.5 {
        // Reflection: Γ(x) Γ(1-x) = π / sin(πx).
        let s = (std::f64::consts::PI * x).sin();
        std::f64::consts::PI.ln() - s.ln() - log_gamma_raw(1.0 - x)
    } else {
        let z = x - 1.0;
        let mut acc = LANCZOS[0];
        for (i, c) in LANCZOS.iter().enumerate().skip(1) {
            acc += c / (z + i as f64);
        }
        let t = z + 7.5;
        LN_SQRT_TWO_PI + (z + 0.5) * t.ln() - t + acc.ln()
    }
}

/// ln B(a, b) = ln Γ(a) + ln Γ(b) - ln Γ(a+b), for a > 0, b > 0.
pub fn log_beta(a: f64, b: f64) -> Result<f64> {
    check_shape(a, b)?;
    Ok(log_beta_raw(a, b))
}

pub(crate) fn log_beta_raw(a: f64, b: f64) -> f64 {
    log_gamma_raw(a) + log_gamma_raw(b) - log_gamma_raw(a + b)
}

fn check_shape(a: f64, b: f64) -> Result<()> {
    if !a.is_finite() || a <= 0.0 || !b.is_finite() || b <= 0.0 {
        return Err(Error::Domain(format!(
            "beta shape parameters must be positive, got a={a}, b={b}"
        )));
    }
    Ok(())
}

/// Regularized incomplete beta function I_x(a, b) for a > 0, b > 0, x in [0,1].
pub fn reg_inc_beta(a: f64, b: f64, x: f64) -> Result<f64> {
    check_shape(a, b)?;
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!(
            "reg_inc_beta requires x in [0,1], got {x}"
        )));
    }
    Ok(reg_inc_beta_raw(a, b, x))
}

pub(crate) fn reg_inc_beta_raw(a: f64, b: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    // ln of x^a (1-x)^b / B(a,b); symmetric under (a,x) <-> (b,1-x).
    let ln_front = a * x.ln() + b * (-x).ln_1p() - log_beta_raw(a, b);
    if x < (a + 1.0) / (a + b + 2.0) {
        ln_front.exp() * beta_cf(a, b, x) / a
    } else {
        1.0 - ln_front.exp() * beta_cf(b, a, 1.0 - x) / b
    }
}

/// Lentz's continued fraction for the incomplete beta function.
fn beta_cf(a: f64, b: f64, x: f64) -> f64 {
    const MAX_ITER: usize = 500;
    const EPS: f64 = 1e-16;
    const FPMIN: f64 = 1e-300;

    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;

    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < FPMIN {
        d = FPMIN;
    }
    d = 1.0 / d;
    let mut h = d;

    for m in 1..=MAX_ITER {
        let mf = m as f64;
        let m2 = 2.0 * mf;

        // Even step.
        let aa = mf * (b - mf) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = 1.0 + aa / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        h *= d * c;

        // Odd step.
        let aa = -(a + mf) * (qab + mf) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = 1.0 + aa / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;

        if (del - 1.0).abs() < EPS {
            break;
        }
    }
    h
}

/// Inverse of the regularized incomplete beta function: the x in [0,1] with
/// I_x(a, b) = p.
pub fn inv_reg_inc_beta(a: f64, b: f64, p: f64) -> Result<f64> {
    check_shape(a, b)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain(format!(
            "inv_reg_inc_beta requires p in [0,1], got {p}"
        )));
    }
    if p == 0.0 {
        return Ok(0.0);
    }
    if p == 1.0 {
        return Ok(1.0);
    }
    let root = find_root(
        |x| reg_inc_beta_raw(a, b, x) - p,
        0.0,
        1.0,
        &ToleranceConfig::default(),
    )?;
    Ok(root.clamp(0.0, 1.0))
}

/// Finds a root of `f` on the bracket [lo, hi].
///
/// `f(lo)` and `f(hi)` must straddle zero (or one of them be zero). Each
/// iteration alternates a bisection step with a secant step clipped to the
/// bracket interior, so convergence is guaranteed on monotone brackets and
/// accelerated near simple roots.
pub fn find_root<F>(f: F, lo: f64, hi: f64, cfg: &ToleranceConfig) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(Error::Domain(format!(
            "find_root requires a finite bracket with lo < hi, got [{lo}, {hi}]"
        )));
    }
    let flo = f(lo);
    if flo == 0.0 {
        return Ok(lo);
    }
    let fhi = f(hi);
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::NoSignChange { lo, hi });
    }

    let (mut lo, mut hi, mut flo, mut fhi) = (lo, hi, flo, fhi);
    for iter in 0..cfg.max_iter {
        let mut x = 0.5 * (lo + hi);
        if iter % 2 == 1 {
            let secant = (lo * fhi - hi * flo) / (fhi - flo);
            if secant.is_finite() && secant > lo && secant < hi {
                x = secant;
            }
        }
        let fx = f(x);
        if fx == 0.0 || fx.abs() < cfg.abs_tol {
            return Ok(x);
        }
        if fx.signum() == flo.signum() {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
        let width = hi - lo;
        if width < cfg.rel_tol * x.abs() || width < f64::EPSILON {
            return Ok(0.5 * (lo + hi));
        }
    }
    Err(Error::NoConvergence {
        max_iter: cfg.max_iter,
        lo,
        hi,
    })
}
