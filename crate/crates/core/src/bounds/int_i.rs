//! Bounds on ∫₀ˣ t^ν I_ν(t) dt, its shifted-order variant and the
//! repeated-integral tower.

use super::{BoundReport, InequalityId, Side, Val};
use crate::error::{Error, Result};
use crate::integrals::{integral_i_exp, integral_i_shifted, repeated_integral_i, DEFAULT_TOL, MAX_TOWER_DEPTH};
use crate::math::exp;
use crate::special_fn::bessel::xpow;
use crate::special_fn::bessel_i;

fn need(ok: bool, msg: &'static str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(msg))
    }
}

fn check_x(x: f64) -> Result<()> {
    need(x > 0.0 && x.is_finite(), "x must be positive and finite")
}

/// x^a I_b(x) with error.
pub(crate) fn xpow_i(a: f64, b: f64, x: f64) -> Result<Val> {
    Ok(Val::from(bessel_i(b, x)?).scale(xpow(x, a)))
}

/// ∏_{k=1}^n (2ν+2k)/(2ν+k).
pub fn tower_product(nu: f64, n: u32) -> f64 {
    (1..=n)
        .map(|k| {
            let k = f64::from(k);
            (2.0 * nu + 2.0 * k) / (2.0 * nu + k)
        })
        .product()
}

pub(crate) fn int_i_lower_val(nu: f64, x: f64) -> Result<Val> {
    need(nu > -0.5, "int_i_lower: requires nu > -1/2")?;
    check_x(x)?;
    xpow_i(nu, nu + 1.0, x)
}

/// x^ν I_{ν+1}(x), a strict lower bound for ∫₀ˣ t^ν I_ν(t) dt when ν > -1/2.
pub fn int_i_lower(nu: f64, x: f64) -> Result<f64> {
    int_i_lower_val(nu, x).map(|v| v.v)
}

pub(crate) fn int_i_upper_val(nu: f64, x: f64) -> Result<Val> {
    need(nu >= 0.5, "int_i_upper_halfplus: requires nu >= 1/2")?;
    check_x(x)?;
    xpow_i(nu, nu, x)
}

/// x^ν I_ν(x), a strict upper bound for ∫₀ˣ t^ν I_ν(t) dt when ν ≥ 1/2.
pub fn int_i_upper_halfplus(nu: f64, x: f64) -> Result<f64> {
    int_i_upper_val(nu, x).map(|v| v.v)
}

pub(crate) fn shifted_upper_val(nu: f64, n: f64, x: f64) -> Result<Val> {
    need(
        nu > -0.5 && n >= 0.0,
        "int_i_shifted_upper: requires nu > -1/2 and n >= 0",
    )?;
    check_x(x)?;
    let c = 2.0 * (nu + n + 1.0) / (2.0 * nu + n + 1.0);
    Ok(xpow_i(nu, nu + n + 1.0, x)?.scale(c))
}

/// (2(ν+n+1)/(2ν+n+1)) x^ν I_{ν+n+1}(x), bounding ∫₀ˣ t^ν I_{ν+n}(t) dt
/// from above for ν > -1/2 and real n ≥ 0.
pub fn int_i_shifted_upper(nu: f64, n: f64, x: f64) -> Result<f64> {
    shifted_upper_val(nu, n, x).map(|v| v.v)
}

fn check_tower(gamma: f64, n: u32, x: f64, nu_ok: bool, msg: &'static str) -> Result<()> {
    need(nu_ok, msg)?;
    need((0.0..1.0).contains(&gamma), "requires 0 <= gamma < 1")?;
    if n > MAX_TOWER_DEPTH {
        return Err(Error::UnsupportedDepth(n));
    }
    check_x(x)
}

pub(crate) fn exp_bound_val(nu: f64, gamma: f64, n: u32, x: f64, tol: f64) -> Result<Val> {
    check_tower(gamma, n, x, nu >= 0.5, "repeated_i_exp_bound: requires nu >= 1/2")?;
    let base = Val::from(repeated_integral_i(nu, 0.0, n, x, tol)?);
    Ok(base.scale(exp(-gamma * x) / libm::pow(1.0 - gamma, f64::from(n))))
}

/// (1-γ)^{-n} e^{-γx} I_(ν,0,n)(x), bounding the damped tower I_(ν,-γ,n)(x).
pub fn repeated_i_exp_bound(nu: f64, gamma: f64, n: u32, x: f64) -> Result<f64> {
    exp_bound_val(nu, gamma, n, x, DEFAULT_TOL).map(|v| v.v)
}

pub(crate) fn product_upper_val(nu: f64, n: u32, x: f64) -> Result<Val> {
    check_tower(0.0, n, x, nu >= 0.0, "repeated_i_product_upper: requires nu >= 0")?;
    need(n >= 1, "repeated_i_product_upper: requires n >= 1")?;
    Ok(xpow_i(nu, nu + f64::from(n), x)?.scale(tower_product(nu, n)))
}

/// {∏ (2ν+2k)/(2ν+k)} x^ν I_{ν+n}(x), bounding I_(ν,0,n)(x); ν ≥ 0, n ≥ 1.
pub fn repeated_i_product_upper(nu: f64, n: u32, x: f64) -> Result<f64> {
    product_upper_val(nu, n, x).map(|v| v.v)
}

pub(crate) fn exp_product_upper_val(nu: f64, gamma: f64, n: u32, x: f64) -> Result<Val> {
    check_tower(
        gamma,
        n,
        x,
        nu >= 0.5,
        "repeated_i_exp_product_upper: requires nu >= 1/2",
    )?;
    need(n >= 1, "repeated_i_exp_product_upper: requires n >= 1")?;
    let c = tower_product(nu, n) * exp(-gamma * x) / libm::pow(1.0 - gamma, f64::from(n));
    Ok(xpow_i(nu, nu + f64::from(n), x)?.scale(c))
}

/// The damped form of [`repeated_i_product_upper`]; ν ≥ 1/2, 0 ≤ γ < 1, n ≥ 1.
pub fn repeated_i_exp_product_upper(nu: f64, gamma: f64, n: u32, x: f64) -> Result<f64> {
    exp_product_upper_val(nu, gamma, n, x).map(|v| v.v)
}

/// Bounds on ∫₀ˣ t^ν I_ν(t) dt, with the integral itself as the quantity.
pub fn int_i_bounds(nu: f64, x: f64) -> Result<BoundReport> {
    need(nu > -0.5, "int_i_bounds: requires nu > -1/2")?;
    check_x(x)?;
    let q = integral_i_exp(nu, 0.0, x, DEFAULT_TOL)?;
    let mut r = BoundReport::new("lower bound for nu > -1/2; upper bound for nu >= 1/2");
    r.quantity = Some(Val::from(q).fn_value());
    r.push(InequalityId::IntILower, Side::Lower, int_i_lower(nu, x)?, true);
    if nu >= 0.5 {
        r.push(InequalityId::IntIUpper, Side::Upper, int_i_upper_halfplus(nu, x)?, true);
    }
    Ok(r)
}

/// Upper bound on ∫₀ˣ t^ν I_{ν+n}(t) dt with the integral as the quantity.
pub fn int_i_shifted_bounds(nu: f64, n: f64, x: f64) -> Result<BoundReport> {
    let upper = int_i_shifted_upper(nu, n, x)?;
    let q = integral_i_shifted(nu, n, x, DEFAULT_TOL)?;
    let mut r = BoundReport::new("nu > -1/2, real n >= 0");
    r.quantity = Some(Val::from(q).fn_value());
    r.push(InequalityId::IntIShiftedUpper, Side::Upper, upper, true);
    Ok(r)
}

/// Upper bounds on the damped tower I_(ν,-γ,n)(x), which is the quantity.
pub fn tower_bounds(nu: f64, gamma: f64, n: u32, x: f64) -> Result<BoundReport> {
    check_tower(gamma, n, x, nu > -0.5, "tower_bounds: requires nu > -1/2")?;
    let q = repeated_integral_i(nu, gamma, n, x, DEFAULT_TOL)?;
    let mut r = BoundReport::new(
        "exponential bound for nu >= 1/2; product bound for n >= 1 with nu >= 0 (gamma = 0) or nu >= 1/2",
    );
    r.quantity = Some(Val::from(q).fn_value());
    if nu >= 0.5 {
        r.push(
            InequalityId::TowerExpBound,
            Side::Upper,
            repeated_i_exp_bound(nu, gamma, n, x)?,
            false,
        );
    }
    if n >= 1 {
        if gamma == 0.0 && nu >= 0.0 {
            r.push(
                InequalityId::TowerProductUpper,
                Side::Upper,
                repeated_i_product_upper(nu, n, x)?,
                true,
            );
        }
        if nu >= 0.5 {
            let b = repeated_i_exp_product_upper(nu, gamma, n, x)?;
            r.push(InequalityId::TowerExpProductUpper, Side::Upper, b, true);
        }
    }
    if r.entries.is_empty() {
        return Err(Error::Domain("tower_bounds: no bound applies for these parameters"));
    }
    Ok(r)
}
