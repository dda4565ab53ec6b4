//! Modified Struve function `L_ν(x)`, the difference `M_ν = L_ν - I_ν`, and
//! the Struve-Bessel cross term `I_ν L_{ν-1} - I_{ν-1} L_ν`.
//!
//! `L_ν` is summed from its power series (all terms positive for ν > -3/2)
//! while `x <= max(12, |ν|)`. Past that point `L_ν = I_ν + M_ν`, where `M_ν`
//! grows only algebraically and is taken from its large-x expansion when that
//! converges to machine precision, from the integral
//!
//! ```text
//! M_ν(x) = -(2 (x/2)^ν / (√π Γ(ν+1/2))) ∫₀¹ e^{-xt} (1-t²)^{ν-1/2} dt,   ν > -1/2
//! ```
//!
//! otherwise, and from the three-term recurrence below ν = -1/2.

use crate::error::{Error, Result};
use crate::math::{exp, ln, powf, ulps4, EPS, PI, SQRT_PI};
use crate::quadrature::{self, QuadOptions};
use crate::special_fn::bessel::{i_any, i_scaled_any, xpow, SERIES_X};
use crate::special_fn::gamma::rgamma;
use crate::special_fn::FnValue;

const ASYMPTOTIC_X: f64 = 40.0;
const M_QUAD_TOL: f64 = 1e-14;

#[derive(Debug, Clone, Copy)]
struct Raw {
    value: f64,
    err: f64,
}

/// Series region for `L_ν`.
fn in_series_region(nu: f64, x: f64) -> bool {
    x <= SERIES_X.max(nu.abs())
}

fn l_series(nu: f64, x: f64) -> Raw {
    let h = 0.5 * x;
    let a = nu + 1.5;
    let direct = xpow(h, nu + 1.0) * rgamma(1.5) * rgamma(a);
    let (lead, lead_err) = if direct.is_finite() && direct > 1e-290 && a < 170.0 {
        (direct, 4.0 * EPS)
    } else {
        let l = (nu + 1.0) * ln(h) - libm::lgamma_r(1.5).0 - libm::lgamma_r(a).0;
        (exp(l), EPS * (4.0 + l.abs()))
    };
    let q = h * h;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    for k in 1..100_000 {
        let fk = k as f64;
        term *= q / ((fk + 0.5) * (fk + nu + 0.5));
        sum += term;
        if term < 0.5 * EPS * sum {
            break;
        }
    }
    let value = lead * sum;
    Raw {
        value,
        err: ulps4(value) + lead_err * value,
    }
}

/// Large-x expansion of M_ν; `None` when it cannot reach full precision.
fn m_asymptotic(nu: f64, x: f64) -> Option<Raw> {
    if x < ASYMPTOTIC_X {
        return None;
    }
    let h = 0.5 * x;
    let r = 1.0 / (h * h);
    let mut term = -xpow(h, nu - 1.0) * SQRT_PI * rgamma(nu + 0.5) / PI;
    let mut sum = term;
    let mut prev = term.abs();
    for k in 0..500 {
        let fk = k as f64;
        term *= -(fk + 0.5) * (nu - 0.5 - fk) * r;
        sum += term;
        if term == 0.0 || term.abs() < 0.5 * EPS * sum.abs() {
            return Some(Raw {
                value: sum,
                err: ulps4(sum) + 2.0 * EPS * prev,
            });
        }
        if term.abs() > prev {
            return None;
        }
        prev = term.abs();
    }
    None
}

/// M_ν from its integral representation, ν > -1/2.
///
/// With a = ν + 1/2, s = 1 - t and s = v^{1/a}, the weight (1-t)^{ν-1/2}
/// is absorbed and the integrand is bounded on [0, 1].
fn m_integral(nu: f64, x: f64) -> Result<Raw> {
    let a = nu + 0.5;
    let inv_a = 1.0 / a;
    let f = |v: f64| {
        let s = powf(v, inv_a);
        exp(-x * (1.0 - s)) * powf(2.0 - s, a - 1.0)
    };
    let opts = QuadOptions::relative(M_QUAD_TOL);
    let q = quadrature::integrate(f, 0.0, 1.0, &opts)?;
    let pre = 2.0 * xpow(0.5 * x, nu) * rgamma(a) / SQRT_PI * inv_a;
    let value = -pre * q.value;
    Ok(Raw {
        value,
        err: pre * q.abs_err + ulps4(value),
    })
}

fn m_raw(nu: f64, x: f64) -> Result<Raw> {
    if let Some(r) = m_asymptotic(nu, x) {
        return Ok(r);
    }
    if nu > -0.5 {
        return m_integral(nu, x);
    }
    // M_{μ-1} = M_{μ+1} + (2μ/x) M_μ + (x/2)^μ / (√π Γ(μ+3/2)), μ = ν + 1
    let mu = nu + 1.0;
    let m1 = m_integral(mu, x)?;
    let m2 = m_integral(mu + 1.0, x)?;
    let inhom = xpow(0.5 * x, mu) * rgamma(mu + 1.5) / SQRT_PI;
    let c = 2.0 * mu / x;
    let value = m2.value + c * m1.value + inhom;
    Ok(Raw {
        value,
        err: m2.err + c.abs() * m1.err + ulps4(inhom) + ulps4(value),
    })
}

fn check(nu: f64, x: f64, op: &'static str) -> Result<()> {
    if !(nu > -1.5) || !nu.is_finite() || !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(op));
    }
    Ok(())
}

/// Modified Struve function L_ν(x) for ν > -3/2 and x > 0.
pub fn struve_l(nu: f64, x: f64) -> Result<FnValue> {
    check(nu, x, "struve_l: requires nu > -3/2 and x > 0")?;
    let r = if in_series_region(nu, x) {
        l_series(nu, x)
    } else {
        let m = m_raw(nu, x)?;
        let i = i_any(nu, x);
        let value = i + m.value;
        Raw {
            value,
            err: m.err + 16.0 * EPS * i.abs() + ulps4(value),
        }
    };
    if !r.value.is_finite() {
        return Err(Error::Range("struve_l"));
    }
    Ok(FnValue::new(r.value, r.err))
}

/// M_ν(x) = L_ν(x) - I_ν(x) for ν > -3/2 and x > 0. Negative on ν > -1/2.
pub fn struve_m(nu: f64, x: f64) -> Result<FnValue> {
    check(nu, x, "struve_m: requires nu > -3/2 and x > 0")?;
    let r = m_raw(nu, x)?;
    Ok(FnValue::new(r.value, r.err.max(ulps4(r.value))))
}

/// The cross term I_ν(x) L_{ν-1}(x) - I_{ν-1}(x) L_ν(x) for ν > -1/2, x > 0.
///
/// Two algebraically equal forms are available: the direct product form, and
/// I_ν M_{ν-1} - I_{ν-1} M_ν in which the exponentially large parts of the
/// products have already cancelled. The better-conditioned one is used.
pub fn bessel_struve_cross(nu: f64, x: f64) -> Result<FnValue> {
    if !(nu > -0.5) || !nu.is_finite() || !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain("bessel_struve_cross: requires nu > -1/2 and x > 0"));
    }
    // Condition number of a - b.
    fn kappa(a: f64, b: f64) -> f64 {
        a.abs().max(b.abs()) / (a - b).abs()
    }
    let mut best: Option<(f64, Raw)> = None;
    if in_series_region(nu - 1.0, x) && in_series_region(nu, x) {
        let l_lo = l_series(nu - 1.0, x);
        let l_hi = l_series(nu, x);
        let (i_hi, i_lo) = (i_any(nu, x), i_any(nu - 1.0, x));
        let a = i_hi * l_lo.value;
        let b = i_lo * l_hi.value;
        let k = kappa(a, b);
        let err =
            a.abs() * (l_lo.err / l_lo.value.abs() + 16.0 * EPS) + b.abs() * (l_hi.err / l_hi.value.abs() + 16.0 * EPS);
        best = Some((k, Raw { value: a - b, err }));
    }
    if best.map_or(true, |(k, _)| !(k <= 1e3)) {
        // Scaled by e^{-x} until the end so that nothing overflows.
        let m_lo = m_raw(nu - 1.0, x)?;
        let m_hi = m_raw(nu, x)?;
        let (i_hi, i_lo) = (i_scaled_any(nu, x), i_scaled_any(nu - 1.0, x));
        let a = i_hi * m_lo.value;
        let b = i_lo * m_hi.value;
        let k = kappa(a, b);
        if best.map_or(true, |(kb, _)| k < kb || !kb.is_finite()) {
            let s = exp(x);
            let err = (i_hi.abs() * m_lo.err + i_lo.abs() * m_hi.err + 16.0 * EPS * (a.abs() + b.abs())) * s;
            best = Some((
                k,
                Raw {
                    value: (a - b) * s,
                    err,
                },
            ));
        }
    }
    let (_, r) = best.expect("at least one form evaluated");
    if !r.value.is_finite() {
        return Err(Error::Range("bessel_struve_cross"));
    }
    Ok(FnValue::new(r.value, r.err.max(ulps4(r.value))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::{cosh, sinh, sqrt};

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn half_integer_closed_forms() {
        // L_{1/2}(x) = √(2/(πx)) (cosh x - 1), L_{-1/2}(x) = √(2/(πx)) sinh x
        for &x in &[0.3, 1.0, 5.0, 11.0, 15.0, 30.0, 45.0] {
            let c = sqrt(2.0 / (PI * x));
            let lp = struve_l(0.5, x).unwrap().value;
            assert!(rel(lp, c * (cosh(x) - 1.0)) < 1e-13, "x = {x}");
            let lm = struve_l(-0.5, x).unwrap().value;
            assert!(rel(lm, c * sinh(x)) < 1e-13, "x = {x}");
        }
    }

    #[test]
    fn m_forms_agree() {
        for &nu in &[-0.25, 0.0, 0.5, 1.0, 2.5, 4.0] {
            let x = 45.0;
            let a = m_asymptotic(nu, x).unwrap().value;
            let q = m_integral(nu, x).unwrap().value;
            assert!(rel(a, q) < 1e-12, "nu = {nu}: {a} vs {q}");
        }
        // recurrence below -1/2 against the expansion
        let a = m_asymptotic(-1.25, 45.0).unwrap().value;
        let mu = -0.25;
        let x = 45.0;
        let rec = m_integral(mu + 1.0, x).unwrap().value
            + 2.0 * mu / x * m_integral(mu, x).unwrap().value
            + xpow(0.5 * x, mu) * rgamma(mu + 1.5) / SQRT_PI;
        assert!(rel(rec, a) < 1e-10);
    }

    #[test]
    fn series_and_split_agree_near_the_seam() {
        for &nu in &[-1.25, -0.5, 0.0, 1.0, 3.5] {
            let x = 11.5;
            let s = l_series(nu, x).value;
            let split = i_any(nu, x) + m_raw(nu, x).unwrap().value;
            assert!(rel(split, s) < 1e-13, "nu = {nu}");
        }
    }

    #[test]
    fn rejects_out_of_domain() {
        assert!(struve_l(-1.5, 1.0).is_err());
        assert!(struve_l(0.0, 0.0).is_err());
        assert!(bessel_struve_cross(-0.5, 1.0).is_err());
    }
}
