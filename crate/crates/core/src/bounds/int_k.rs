//! Upper bounds on ∫ₓ^∞ e^{βt} t^ν K_ν(t) dt, the proof diagnostics u and v,
//! and the Struve-Bessel cross-term sandwich.

use super::{BoundReport, InequalityId, Side, Val};
use crate::error::{Error, Result};
use crate::integrals::{integral_k_exp, DEFAULT_TOL};
use crate::math::{exp, powf, SQRT_PI};
use crate::quadrature::{self, QuadOptions};
use crate::special_fn::bessel::{k_scaled, xpow};
use crate::special_fn::gamma::{gamma_ratio, rgamma};
use crate::special_fn::{bessel_i, bessel_k_scaled, bessel_struve_cross};

/// M = √π Γ(ν+1/2)/Γ(ν), ν > 0.
pub fn m_const(nu: f64) -> Result<f64> {
    if !(nu > 0.0) || !nu.is_finite() {
        return Err(Error::Domain("m_const: requires nu > 0"));
    }
    Ok(SQRT_PI * gamma_ratio(nu + 0.5, nu))
}

/// N = 2√π Γ(ν+1/2) / ((1-β²)^{ν+1/2} Γ(ν)), ν > 0, |β| < 1.
pub fn n_const(nu: f64, beta: f64) -> Result<f64> {
    if !(beta > -1.0 && beta < 1.0) {
        return Err(Error::Domain("n_const: requires -1 < beta < 1"));
    }
    Ok(2.0 * m_const(nu)? / powf(1.0 - beta * beta, nu + 0.5))
}

/// e^{βx} x^ν K_ν(x) with error, from the scaled K.
pub(crate) fn weighted_k(nu: f64, beta: f64, x: f64) -> Result<Val> {
    let k = bessel_k_scaled(nu, x)?;
    Ok(Val::from(k).scale(exp((beta - 1.0) * x) * xpow(x, nu)))
}

fn check(nu: f64, beta: f64, x: f64) -> Result<()> {
    if !nu.is_finite() || !(beta > -1.0 && beta < 1.0) || !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain("requires finite nu, -1 < beta < 1, x > 0"));
    }
    Ok(())
}

/// Every applicable upper bound for ∫ₓ^∞ e^{βt} t^ν K_ν(t) dt, with the
/// integral itself as the quantity.
pub fn int_k_bounds(nu: f64, beta: f64, x: f64) -> Result<BoundReport> {
    check(nu, beta, x)?;
    let q = integral_k_exp(nu, beta, x, DEFAULT_TOL)?;
    let w = weighted_k(nu, beta, x)?.v;
    let mut r = BoundReport::new(
        "beta = 0: next-order bound for all nu; nu < 1/2: 1/(1-|beta|) family; nu >= 1/2: M and N constants",
    );
    r.quantity = Some(Val::from(q).fn_value());
    if beta == 0.0 {
        let next = Val::from(bessel_k_scaled(nu + 1.0, x)?).scale(exp(-x) * xpow(x, nu));
        r.push(InequalityId::IntKNextOrder, Side::Upper, next.v, true);
    }
    if nu < 0.5 {
        if beta == 0.0 {
            r.push(InequalityId::IntKSmallOrder, Side::Upper, w, true);
        }
        r.push(
            InequalityId::IntKExpSmallOrder,
            Side::Upper,
            w / (1.0 - beta.abs()),
            true,
        );
    } else {
        if beta == 0.0 {
            r.push(InequalityId::IntKGammaConst, Side::Upper, m_const(nu)? * w, false);
        }
        r.push(
            InequalityId::IntKExpGammaConst,
            Side::Upper,
            n_const(nu, beta)? * w,
            false,
        );
    }
    Ok(r)
}

pub(crate) fn u_diag_val(nu: f64, x: f64, tol: f64) -> Result<Val> {
    if !(nu > 0.5) || !nu.is_finite() {
        return Err(Error::Domain("u_diag: requires nu > 1/2"));
    }
    check(nu, 0.0, x)?;
    let m = m_const(nu)?;
    if x <= 1.0 {
        // u(x) = ∫₀ˣ t^ν (K_ν - M K_{ν-1}) dt, free of the cancellation
        // between M x^ν K_ν and the tail near x = 0.
        let f = |t: f64| exp(-t) * xpow(t, nu) * (k_scaled(nu, t) - m * k_scaled(nu - 1.0, t));
        let q = quadrature::integrate(f, 0.0, x, &QuadOptions::relative(tol))?;
        return Ok(Val::from(q));
    }
    let bound = weighted_k(nu, 0.0, x)?.scale(m);
    Ok(bound.sub(Val::from(integral_k_exp(nu, 0.0, x, tol)?)))
}

/// u(x) = M x^ν K_ν(x) - ∫ₓ^∞ t^ν K_ν(t) dt for ν > 1/2.
pub fn u_diag(nu: f64, x: f64) -> Result<f64> {
    u_diag_val(nu, x, DEFAULT_TOL).map(|v| v.v)
}

pub(crate) fn v_diag_val(nu: f64, beta: f64, x: f64, tol: f64) -> Result<Val> {
    if !(nu > 0.5) || !nu.is_finite() || !(beta > 0.0 && beta < 1.0) {
        return Err(Error::Domain("v_diag: requires nu > 1/2 and 0 < beta < 1"));
    }
    check(nu, beta, x)?;
    let bound = weighted_k(nu, beta, x)?.scale(n_const(nu, beta)?);
    Ok(bound.sub(Val::from(integral_k_exp(nu, beta, x, tol)?)))
}

/// v(x) = N e^{βx} x^ν K_ν(x) - ∫ₓ^∞ e^{βt} t^ν K_ν(t) dt for ν > 1/2, 0 < β < 1.
pub fn v_diag(nu: f64, beta: f64, x: f64) -> Result<f64> {
    v_diag_val(nu, beta, x, DEFAULT_TOL).map(|v| v.v)
}

/// Lower and upper bounds for the cross term x^{ν-1}I_{ν+1} scaled by
/// 1/(√π 2^{ν-1} Γ(ν+1/2)) and (ν+1)/(√π 2^{ν-1} Γ(ν+3/2)).
pub(crate) fn struve_cross_pair(nu: f64, x: f64) -> Result<(Val, Val)> {
    let base = Val::from(bessel_i(nu + 1.0, x)?).scale(xpow(x, nu - 1.0) / (SQRT_PI * xpow(2.0, nu - 1.0)));
    let lower = base.scale(rgamma(nu + 0.5));
    let upper = base.scale((nu + 1.0) * rgamma(nu + 1.5));
    Ok((lower, upper))
}

/// Two-sided bounds on I_ν(x)L_{ν-1}(x) - I_{ν-1}(x)L_ν(x) for ν > -1/2,
/// with the cross term as the quantity.
pub fn struve_cross_bounds(nu: f64, x: f64) -> Result<BoundReport> {
    if !(nu > -0.5) || !nu.is_finite() || !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain("struve_cross_bounds: requires nu > -1/2 and x > 0"));
    }
    let c = bessel_struve_cross(nu, x)?;
    let (lo, hi) = struve_cross_pair(nu, x)?;
    let mut r = BoundReport::new("nu > -1/2; upper/lower = (nu+1)/(nu+1/2)");
    r.quantity = Some(c);
    r.push(InequalityId::StruveCrossLower, Side::Lower, lo.v, true);
    r.push(InequalityId::StruveCrossUpper, Side::Upper, hi.v, true);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::PI;

    #[test]
    fn constants() {
        assert!((m_const(0.5).unwrap() - 1.0).abs() < 1e-15);
        assert!((m_const(1.0).unwrap() - PI / 2.0).abs() < 1e-15);
        assert!((n_const(0.5, 0.0).unwrap() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn spherical_order_is_an_equality() {
        let r = int_k_bounds(0.5, 0.0, 1.5).unwrap();
        let e = r.entry(InequalityId::IntKGammaConst, Side::Upper).unwrap();
        assert!(e.margin.unwrap().abs() < 1e-12);
    }

    #[test]
    fn order_two_reports_both() {
        let r = int_k_bounds(2.0, 0.0, 1.0).unwrap();
        assert!(r.entry(InequalityId::IntKNextOrder, Side::Upper).is_some());
        assert!(r.entry(InequalityId::IntKGammaConst, Side::Upper).is_some());
        assert!(r.entries.iter().all(|e| e.margin.unwrap() > 0.0));
        let tight = r.upper.unwrap();
        assert!(r.entries.iter().all(|e| e.value >= tight));
    }

    #[test]
    fn diagnostics_positive() {
        assert!(v_diag(1.0, 0.5, 1.0).unwrap() > 0.0);
        for &x in &[1e-3, 0.5, 1.0, 1.01, 5.0] {
            assert!(u_diag(1.0, x).unwrap() > 0.0, "x = {x}");
        }
        // both forms agree at the switch
        let a = u_diag_val(2.0, 1.0, 1e-12).unwrap().v;
        let m = m_const(2.0).unwrap();
        let b = m * weighted_k(2.0, 0.0, 1.0).unwrap().v - integral_k_exp(2.0, 0.0, 1.0, 1e-12).unwrap().value;
        assert!(((a - b) / a).abs() < 1e-9);
    }

    #[test]
    fn cross_ratio() {
        let r = struve_cross_bounds(1.0, 1.0).unwrap();
        assert!((r.upper.unwrap() / r.lower.unwrap() - 4.0 / 3.0).abs() < 1e-14);
        assert!(r.entries.iter().all(|e| e.margin.unwrap() > 0.0));
    }
}
