//! Double-precision Γ, I_ν, K_ν and L_ν for real order and positive argument.

pub mod asymptotic;
pub(crate) mod bessel;
pub(crate) mod gamma;
pub(crate) mod struve;

pub use bessel::{bessel_i, bessel_i_scaled, bessel_k, bessel_k_scaled};
pub use gamma::{beta_fn, gamma_fn, gamma_ratio_half, ln_gamma};
pub use struve::{bessel_struve_cross, struve_l, struve_m};

use crate::error::{Error, Result};
use bessel::{i_any, k_val, xpow};

/// A function value with an absolute-error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FnValue {
    pub value: f64,
    pub abs_err: f64,
}

impl FnValue {
    pub fn new(value: f64, abs_err: f64) -> Self {
        FnValue {
            value,
            abs_err: abs_err.abs(),
        }
    }

    pub fn rel_err(&self) -> f64 {
        self.abs_err / self.value.abs()
    }
}

/// A finite real order ν.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Order(f64);

impl Order {
    pub fn new(nu: f64) -> Result<Self> {
        if nu.is_finite() {
            Ok(Order(nu))
        } else {
            Err(Error::Domain("order must be finite"))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// A strictly positive, finite argument x.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ArgPoint(f64);

impl ArgPoint {
    pub fn new(x: f64) -> Result<Self> {
        if x > 0.0 && x.is_finite() {
            Ok(ArgPoint(x))
        } else {
            Err(Error::Domain("argument must be positive and finite"))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Signed relative residuals `(finite difference - formula) / scale` of the
/// five derivative identities.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DerivResiduals {
    /// d/dx (x^ν I_ν) = x^ν I_{ν-1}
    pub i_weighted: f64,
    /// d/dx (x^ν K_ν) = -x^ν K_{ν-1}
    pub k_weighted: f64,
    /// K'_ν = -(K_{ν+1} + K_{ν-1})/2
    pub k_mean: f64,
    /// K'_ν = -K_{ν-1} - (ν/x) K_ν
    pub k_lower: f64,
    /// K'_ν = -K_{ν+1} + (ν/x) K_ν
    pub k_upper: f64,
}

impl DerivResiduals {
    pub fn max_abs(&self) -> f64 {
        [
            self.i_weighted,
            self.k_weighted,
            self.k_mean,
            self.k_lower,
            self.k_upper,
        ]
        .iter()
        .fold(0.0f64, |m, r| m.max(r.abs()))
    }
}

/// Checks the derivative identities for I_ν and K_ν at (ν, x) by central
/// differences with step `1e-5 * min(x, 1)`. Requires ν > -1 and x > 0.
pub fn deriv_checks(nu: f64, x: f64) -> Result<DerivResiduals> {
    if !(nu > -1.0) || !nu.is_finite() {
        return Err(Error::Domain("deriv_checks: requires nu > -1"));
    }
    ArgPoint::new(x)?;
    let h = 1e-5 * x.min(1.0);
    let central = |f: &dyn Fn(f64) -> f64| (f(x + h) - f(x - h)) / (2.0 * h);
    let resid = |fd: f64, exact: f64| (fd - exact) / exact.abs().max(fd.abs());

    let xn = xpow(x, nu);
    let (k_lo, k_mid, k_hi) = (k_val(nu - 1.0, x), k_val(nu, x), k_val(nu + 1.0, x));
    if !(k_mid > 0.0 && k_mid.is_finite() && k_hi.is_finite()) {
        return Err(Error::Range("deriv_checks"));
    }

    let d_xi = central(&|t| xpow(t, nu) * i_any(nu, t));
    let d_xk = central(&|t| xpow(t, nu) * k_val(nu, t));
    let d_k = central(&|t| k_val(nu, t));

    Ok(DerivResiduals {
        i_weighted: resid(d_xi, xn * i_any(nu - 1.0, x)),
        k_weighted: resid(d_xk, -xn * k_lo),
        k_mean: resid(d_k, -0.5 * (k_hi + k_lo)),
        k_lower: resid(d_k, -k_lo - nu / x * k_mid),
        k_upper: resid(d_k, -k_hi + nu / x * k_mid),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residuals_small_at_order_one() {
        let r = deriv_checks(1.0, 2.0).unwrap();
        assert!(r.max_abs() < 1e-8, "{r:?}");
    }

    #[test]
    fn spherical_derivative() {
        // K'_{1/2}(x) = -K_{1/2}(x)(1 + 1/(2x))
        let x = 1.0;
        let k = bessel_k(0.5, x).unwrap().value;
        let h = 1e-5;
        let fd = (bessel_k(0.5, x + h).unwrap().value - bessel_k(0.5, x - h).unwrap().value) / (2.0 * h);
        let exact = -k * (1.0 + 0.5 / x);
        assert!(((fd - exact) / exact).abs() < 1e-9);
        let r = deriv_checks(0.5, x).unwrap();
        assert!(r.k_lower.abs() < 1e-9 && r.k_mean.abs() < 1e-9);
    }

    #[test]
    fn k_forms_share_residual() {
        let r = deriv_checks(0.0, 3.0).unwrap();
        assert!((r.k_mean - r.k_lower).abs() < 1e-12);
        assert!((r.k_mean - r.k_upper).abs() < 1e-12);
    }

    #[test]
    fn wrappers_validate() {
        assert!(Order::new(f64::NAN).is_err());
        assert!(ArgPoint::new(0.0).is_err());
        assert_eq!(ArgPoint::new(2.0).unwrap().get(), 2.0);
    }
}
