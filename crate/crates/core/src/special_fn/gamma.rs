//! Gamma function, its logarithm, and the reciprocal gamma function.

use crate::error::{Error, Result};
use crate::math::{exp, is_integer, sin_pi, ulps4, PI};
use crate::special_fn::FnValue;

/// Γ(a) for real `a` away from the poles at 0, -1, -2, ...
pub fn gamma_fn(a: f64) -> Result<FnValue> {
    if !a.is_finite() {
        return Err(Error::Domain("gamma: argument must be finite"));
    }
    if a <= 0.0 && is_integer(a) {
        return Err(Error::Pole(a));
    }
    let value = libm::tgamma(a);
    if !value.is_finite() || value == 0.0 {
        return Err(Error::Range("gamma"));
    }
    Ok(FnValue::new(value, ulps4(value)))
}

/// ln Γ(a) for `a > 0`. Use this for ratios such as Γ(x+1/2)/Γ(x+1) whose
/// factors overflow separately.
pub fn ln_gamma(a: f64) -> Result<FnValue> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::Domain("ln_gamma: argument must be positive and finite"));
    }
    let value = libm::lgamma_r(a).0;
    Ok(FnValue::new(value, ulps4(value.abs().max(1.0))))
}

/// 1/Γ(a), an entire function: zero at the non-positive integers.
pub(crate) fn rgamma(a: f64) -> f64 {
    if a <= 0.0 && is_integer(a) {
        return 0.0;
    }
    if a > 171.0 {
        return exp(-libm::lgamma_r(a).0);
    }
    if a < -170.0 {
        // 1/Γ(a) = sin(πa) Γ(1-a) / π
        let (lg, _) = libm::lgamma_r(1.0 - a);
        return sin_pi(a) * exp(lg) / PI;
    }
    1.0 / libm::tgamma(a)
}

/// Γ(a)/Γ(b) for positive arguments, through log-gamma once either
/// factor would overflow.
pub(crate) fn gamma_ratio(a: f64, b: f64) -> f64 {
    debug_assert!(a > 0.0 && b > 0.0);
    if a < 170.0 && b < 170.0 {
        libm::tgamma(a) / libm::tgamma(b)
    } else {
        exp(libm::lgamma_r(a).0 - libm::lgamma_r(b).0)
    }
}

/// Γ(x+1/2)/Γ(x+1), the gamma-ratio lower bound for √(2/π)eˣK₀(x).
pub fn gamma_ratio_half(x: f64) -> Result<f64> {
    if !(x > -0.5) || !x.is_finite() {
        return Err(Error::Domain("gamma_ratio_half: requires x > -1/2"));
    }
    Ok(gamma_ratio(x + 0.5, x + 1.0))
}

/// Beta function B(a, b) = Γ(a)Γ(b)/Γ(a+b) for a, b > 0.
pub fn beta_fn(a: f64, b: f64) -> Result<FnValue> {
    if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain("beta_fn: requires a > 0 and b > 0"));
    }
    let value = if a + b < 170.0 {
        libm::tgamma(a) * libm::tgamma(b) / libm::tgamma(a + b)
    } else {
        exp(libm::lgamma_r(a).0 + libm::lgamma_r(b).0 - libm::lgamma_r(a + b).0)
    };
    if !value.is_finite() || value == 0.0 {
        return Err(Error::Range("beta_fn"));
    }
    Ok(FnValue::new(value, 2.0 * ulps4(value)))
}
