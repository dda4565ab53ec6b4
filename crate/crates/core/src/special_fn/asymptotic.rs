//! Leading-order small- and large-argument forms. These are the only entry
//! points that accept the limiting regimes; the evaluators reject x = 0.

use crate::error::{Error, Result};
use crate::math::{exp, ln, sqrt, PI, SQRT_PI};
use crate::special_fn::bessel::xpow;
use crate::special_fn::gamma::rgamma;

/// (x/2)^ν / Γ(ν+1), the x ↓ 0 form of I_ν (ν > -1).
pub fn i_small_x(nu: f64, x: f64) -> Result<f64> {
    if !(nu > -1.0) || !(x >= 0.0) {
        return Err(Error::Domain("i_small_x: requires nu > -1, x >= 0"));
    }
    Ok(xpow(0.5 * x, nu) * rgamma(nu + 1.0))
}

/// x ↓ 0 form of K_ν: 2^{|ν|-1} Γ(|ν|) x^{-|ν|} for ν ≠ 0, -ln x for ν = 0.
pub fn k_small_x(nu: f64, x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain("k_small_x: requires x > 0"));
    }
    let a = nu.abs();
    if a == 0.0 {
        Ok(-ln(x))
    } else {
        Ok(xpow(2.0, a - 1.0) / rgamma(a) * xpow(x, -a))
    }
}

/// Two-term small-x form of K_ν for ν > 1:
/// 2^{ν-1}Γ(ν)x^{-ν} - 2^{ν-3}Γ(ν-1)x^{2-ν}.
pub fn k_small_x_two_term(nu: f64, x: f64) -> Result<f64> {
    if !(nu > 1.0) || !(x > 0.0) {
        return Err(Error::Domain("k_small_x_two_term: requires nu > 1, x > 0"));
    }
    Ok(xpow(2.0, nu - 1.0) / rgamma(nu) * xpow(x, -nu) - xpow(2.0, nu - 3.0) / rgamma(nu - 1.0) * xpow(x, 2.0 - nu))
}

/// √(π/(2x)) e^{-x}, the x → ∞ form of K_ν for every ν.
pub fn k_large_x(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain("k_large_x: requires x > 0"));
    }
    Ok(sqrt(PI / (2.0 * x)) * exp(-x))
}

/// 2 (x/2)^{ν+1} / (√π Γ(ν+3/2)), the x ↓ 0 form of L_ν.
pub fn l_small_x(nu: f64, x: f64) -> Result<f64> {
    if !(nu > -1.5) || !(x >= 0.0) {
        return Err(Error::Domain("l_small_x: requires nu > -3/2, x >= 0"));
    }
    Ok(2.0 * xpow(0.5 * x, nu + 1.0) * rgamma(nu + 1.5) / SQRT_PI)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_limits() {
        assert_eq!(i_small_x(0.0, 0.0).unwrap(), 1.0);
        assert_eq!(i_small_x(1.0, 0.0).unwrap(), 0.0);
        assert_eq!(l_small_x(0.0, 0.0).unwrap(), 0.0);
        assert!(k_small_x(0.0, 0.0).is_err());
    }

    #[test]
    fn struve_leading_term_at_order_zero() {
        let x = 1e-3;
        let l = l_small_x(0.0, x).unwrap();
        assert!((l - 2.0 * x / PI).abs() < 1e-18);
    }

    #[test]
    fn k_forms_symmetric() {
        assert_eq!(k_small_x(-2.5, 0.1).unwrap(), k_small_x(2.5, 0.1).unwrap());
    }
}
