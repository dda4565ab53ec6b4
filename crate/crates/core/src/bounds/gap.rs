//! The K-gap 1/x² - x^{ν-2}K_ν(x)/(2^{ν-1}Γ(ν)), the envelope of x^νK_ν(x),
//! and the K_0 bounds.

use super::{BoundReport, InequalityId, Side, Val};
use crate::error::{Error, Result};
use crate::integrals::power_weighted;
use crate::math::{exp, sqrt, PI};
use crate::special_fn::bessel::{k_scaled, xpow};
use crate::special_fn::gamma::gamma_ratio;
use crate::special_fn::{bessel_k_scaled, gamma_fn, FnValue};

const GAP_TOL: f64 = 1e-13;

fn check(nu: f64, x: f64) -> Result<()> {
    if !(nu > 0.0) || !nu.is_finite() {
        return Err(Error::Domain("requires nu > 0"));
    }
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain("x must be positive and finite"));
    }
    Ok(())
}

/// 2^{ν-1}Γ(ν), the x → 0 limit of x^νK_ν(x).
fn limit_const(nu: f64) -> Result<Val> {
    let g = gamma_fn(nu)?;
    Ok(Val::from(g).scale(xpow(2.0, nu - 1.0)))
}

/// x^ν K_ν(x) with error.
pub(crate) fn xnu_k_val(nu: f64, x: f64) -> Result<Val> {
    Ok(Val::from(bessel_k_scaled(nu, x)?).scale(exp(-x) * xpow(x, nu)))
}

pub(crate) fn k_gap_val(nu: f64, x: f64) -> Result<Val> {
    check(nu, x)?;
    let c = limit_const(nu)?;
    if x < 2.0f64.max(0.5 * nu) {
        // 2^{ν-1}Γ(ν) - x^νK_ν(x) = ∫₀ˣ t^ν K_{ν-1}(t) dt
        let a = (nu - 1.0).abs();
        let g = |t: f64| exp(-t) * xpow(t, a) * k_scaled(nu - 1.0, t);
        let q = power_weighted(nu - a, g, x, GAP_TOL)?;
        return Ok(Val::from(q).div(c).scale(1.0 / (x * x)));
    }
    let tail = xnu_k_val(nu, x)?.div(c).scale(1.0 / (x * x));
    Ok(Val::exact(1.0 / (x * x)).sub(tail))
}

/// 1/x² - x^{ν-2}K_ν(x)/(2^{ν-1}Γ(ν)) for ν > 0, x > 0.
pub fn k_gap(nu: f64, x: f64) -> Result<f64> {
    k_gap_val(nu, x).map(|v| v.v)
}

/// [`k_gap`] with its error estimate.
pub fn k_gap_value(nu: f64, x: f64) -> Result<FnValue> {
    k_gap_val(nu, x).map(Val::fn_value)
}

/// The x → 0 limit of the gap, 1/(4(ν-1)); finite only for ν > 1.
pub fn k_gap_at_zero(nu: f64) -> Result<f64> {
    if nu > 1.0 && nu.is_finite() {
        Ok(0.25 / (nu - 1.0))
    } else {
        Err(Error::Domain("k_gap_at_zero: limit is finite only for nu > 1"))
    }
}

/// 0 < gap (ν > 0) and gap ≤ 1/(4(ν-1)) (ν > 1), uniformly in x.
pub fn k_gap_bounds(nu: f64) -> Result<BoundReport> {
    if !(nu > 0.0) || !nu.is_finite() {
        return Err(Error::Domain("k_gap_bounds: requires nu > 0"));
    }
    let mut r = BoundReport::new("lower bound for nu > 0; upper bound for nu > 1; both hold for every x > 0");
    r.push(InequalityId::KGapLower, Side::Lower, 0.0, true);
    if nu > 1.0 {
        r.push(InequalityId::KGapUpper, Side::Upper, k_gap_at_zero(nu)?, false);
    }
    Ok(r)
}

pub(crate) fn certificate_val(nu: f64, x: f64) -> Result<(Val, Val)> {
    check(nu, x)?;
    let a = Val::from(bessel_k_scaled(nu - 1.0, x)?).scale(exp(-x) * xpow(x, nu + 1.0));
    let lhs = a.add(xnu_k_val(nu, x)?.scale(2.0));
    Ok((lhs, limit_const(nu)?.scale(2.0)))
}

/// (x^{ν+1}K_{ν-1}(x) + 2x^νK_ν(x), 2^νΓ(ν)); the first is below the second
/// for all ν > 0, x > 0, which makes the gap decreasing.
pub fn k_gap_certificate(nu: f64, x: f64) -> Result<(f64, f64)> {
    certificate_val(nu, x).map(|(l, r)| (l.v, r.v))
}

pub(crate) fn ismail_val(nu: f64, x: f64) -> Result<Val> {
    Ok(limit_const(nu)?.scale(exp(-x)))
}

pub(crate) fn baricz_val(nu: f64, x: f64) -> Result<Val> {
    Ok(limit_const(nu)?.mul(xnu_k_val(1.0, x)?))
}

pub(crate) fn xnu_upper_val(nu: f64) -> Result<Val> {
    limit_const(nu)
}

/// Two-sided bounds on x^νK_ν(x), which is the quantity.
///
/// The e^{-x} lower bound is reported for ν > 1/2, the xK_1(x) refinement for
/// ν ≥ 1 and the constant upper bound for every ν > 0.
pub fn xnu_k_envelope(nu: f64, x: f64) -> Result<BoundReport> {
    check(nu, x)?;
    let mut r =
        BoundReport::new("upper bound for nu > 0; e^{-x} lower bound for nu > 1/2; x K_1 lower bound for nu >= 1");
    r.quantity = Some(xnu_k_val(nu, x)?.fn_value());
    if nu > 0.5 {
        r.push(InequalityId::XnuKIsmailLower, Side::Lower, ismail_val(nu, x)?.v, true);
    }
    if nu >= 1.0 {
        r.push(InequalityId::XnuKBariczLower, Side::Lower, baricz_val(nu, x)?.v, false);
    }
    r.push(InequalityId::XnuKUpper, Side::Upper, xnu_upper_val(nu)?.v, true);
    Ok(r)
}

/// √(2/π) e^x K_0(x).
pub(crate) fn k0_scaled_val(x: f64) -> Result<Val> {
    Ok(Val::from(bessel_k_scaled(0.0, x)?).scale(sqrt(2.0 / PI)))
}

/// The five K_0 bounds at x, as (id, side, value).
pub(crate) fn k0_candidates(x: f64) -> [(InequalityId, Side, f64); 5] {
    let s = sqrt(x);
    [
        (
            InequalityId::K0GammaRatioLower,
            Side::Lower,
            gamma_ratio(x + 0.5, x + 1.0),
        ),
        (InequalityId::K0SqrtLower, Side::Lower, 1.0 / sqrt(x + 0.5)),
        (InequalityId::K0LukeLower, Side::Lower, 8.0 * s / (8.0 * x + 1.0)),
        (InequalityId::K0SqrtUpper, Side::Upper, 1.0 / s),
        (
            InequalityId::K0LukeUpper,
            Side::Upper,
            (16.0 * x + 7.0) / ((16.0 * x + 9.0) * s),
        ),
    ]
}

/// Bounds on √(2/π) e^x K_0(x), which is the quantity.
pub fn k0_bounds(x: f64) -> Result<BoundReport> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain("k0_bounds: x must be positive and finite"));
    }
    let mut r = BoundReport::new("all x > 0");
    r.quantity = Some(k0_scaled_val(x)?.fn_value());
    for (id, side, v) in k0_candidates(x) {
        r.push(id, side, v, true);
    }
    Ok(r)
}
