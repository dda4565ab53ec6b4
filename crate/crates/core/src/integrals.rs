//! Exponentially weighted Bessel integrals, the repeated-integral tower, and
//! the closed forms used as oracles.
//!
//! All integrands are evaluated from exponentially scaled Bessel values, so
//! `e^{βt} t^ν I_ν(t)` becomes `e^{(β+1)t} t^ν (e^{-t} I_ν(t))` and nothing
//! overflows before the weight is applied. Tolerances are relative.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::{exp, powf, ulps4, SQRT_PI};
use crate::quadrature::{self, QuadOptions, QuadratureResult};
use crate::special_fn::bessel::{i_scaled_any, k_scaled, xpow};
use crate::special_fn::gamma::{gamma_ratio, rgamma};
use crate::special_fn::{bessel_struve_cross, FnValue};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const MAX_TOWER_DEPTH: u32 = 6;

/// Exponential weight `e^{βt}`. K-integrals need |β| < 1; the tower uses a
/// decay rate γ in [0, 1) with β = -γ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpWeight {
    pub beta: f64,
}

impl ExpWeight {
    pub fn tilt(beta: f64) -> Result<Self> {
        if beta > -1.0 && beta < 1.0 {
            Ok(ExpWeight { beta })
        } else {
            Err(Error::Domain("exponential tilt must satisfy -1 < beta < 1"))
        }
    }

    pub fn decay(gamma: f64) -> Result<Self> {
        if (0.0..1.0).contains(&gamma) {
            Ok(ExpWeight { beta: -gamma })
        } else {
            Err(Error::Domain("decay rate must satisfy 0 <= gamma < 1"))
        }
    }

    pub fn gamma(&self) -> f64 {
        -self.beta
    }
}

/// e^{βt} t^ν I_μ(t) from scaled values.
fn i_weighted(nu: f64, mu: f64, beta: f64, t: f64) -> f64 {
    exp((beta + 1.0) * t) * xpow(t, nu) * i_scaled_any(mu, t)
}

/// e^{βt} t^ν K_ν(t) from scaled values.
fn k_weighted(nu: f64, beta: f64, t: f64) -> f64 {
    exp((beta - 1.0) * t) * xpow(t, nu) * k_scaled(nu, t)
}

fn check_x(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain("integration limit x must be positive and finite"))
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain("tolerance must lie in (0, 1)"))
    }
}

/// ∫₀ˣ t^p g(t) dt for p > -1 with g smooth at 0. For p < 0 the substitution
/// u = t^{p+1} removes the endpoint singularity.
pub(crate) fn power_weighted<G: Fn(f64) -> f64>(p: f64, g: G, x: f64, tol: f64) -> Result<QuadratureResult> {
    let opts = QuadOptions::relative(tol);
    if p >= 0.0 {
        return quadrature::integrate(|t| xpow(t, p) * g(t), 0.0, x, &opts);
    }
    let q = p + 1.0;
    let inv_q = 1.0 / q;
    let r = quadrature::integrate(|u| g(powf(u, inv_q)), 0.0, powf(x, q), &opts)?;
    Ok(QuadratureResult {
        value: r.value * inv_q,
        abs_err: r.abs_err * inv_q,
        ..r
    })
}

/// ∫₀ˣ e^{βt} t^ν I_ν(t) dt for ν > -1/2, β ≤ 1, x > 0.
pub fn integral_i_exp(nu: f64, beta: f64, x: f64, tol: f64) -> Result<QuadratureResult> {
    if !(nu > -0.5) || !nu.is_finite() {
        return Err(Error::Domain("integral_i_exp: requires nu > -1/2"));
    }
    if !(beta <= 1.0) {
        return Err(Error::Domain("integral_i_exp: requires beta <= 1"));
    }
    check_x(x)?;
    check_tol(tol)?;
    // t^{2ν} · (e^{βt} t^{-ν} I_ν(t))
    power_weighted(2.0 * nu, |t| i_weighted(-nu, nu, beta, t), x, tol)
}

/// ∫₀ˣ t^ν I_{ν+n}(t) dt for ν > -1/2, real n ≥ 0.
pub fn integral_i_shifted(nu: f64, n: f64, x: f64, tol: f64) -> Result<QuadratureResult> {
    if !(nu > -0.5) || !nu.is_finite() {
        return Err(Error::Domain("integral_i_shifted: requires nu > -1/2"));
    }
    if !(n >= 0.0) || !n.is_finite() {
        return Err(Error::Domain("integral_i_shifted: requires n >= 0"));
    }
    check_x(x)?;
    check_tol(tol)?;
    let mu = nu + n;
    power_weighted(nu + mu, |t| i_weighted(-mu, mu, 0.0, t), x, tol)
}

/// The n-fold repeated integral of e^{-γt} t^ν I_ν(t) from 0, via Cauchy's
/// formula (1/(n-1)!) ∫₀ˣ (x-t)^{n-1} f(t) dt. For n = 0 it is the integrand.
///
/// Accepts ν > -1/2, the range on which the tower exists; the monotonicity
/// results that use it assume ν ≥ 1/2 or ν ≥ 0.
pub fn repeated_integral_i(nu: f64, gamma: f64, n: u32, x: f64, tol: f64) -> Result<QuadratureResult> {
    if !(nu > -0.5) || !nu.is_finite() {
        return Err(Error::Domain("repeated_integral_i: requires nu > -1/2"));
    }
    ExpWeight::decay(gamma)?;
    if n > MAX_TOWER_DEPTH {
        return Err(Error::UnsupportedDepth(n));
    }
    check_x(x)?;
    check_tol(tol)?;
    if n == 0 {
        let value = i_weighted(nu, nu, -gamma, x);
        if !value.is_finite() {
            return Err(Error::Range("repeated_integral_i"));
        }
        return Ok(QuadratureResult {
            value,
            abs_err: 4.0 * ulps4(value),
            subdivisions: 0,
            truncation_point: None,
        });
    }
    let k = (n - 1) as i32;
    let fact: f64 = (1..n).map(f64::from).product();
    let r = power_weighted(
        2.0 * nu,
        |t| libm::pow(x - t, k as f64) * i_weighted(-nu, nu, -gamma, t),
        x,
        tol,
    )?;
    Ok(QuadratureResult {
        value: r.value / fact,
        abs_err: r.abs_err / fact,
        ..r
    })
}

/// √π 2^{ν-1} Γ(ν+1/2) x (I_ν L_{ν-1} - I_{ν-1} L_ν), which equals
/// ∫₀ˣ t^ν I_ν(t) dt. Requires ν > -1/2.
pub fn closed_form_int_i(nu: f64, x: f64) -> Result<FnValue> {
    if !(nu > -0.5) || !nu.is_finite() {
        return Err(Error::Domain("closed_form_int_i: requires nu > -1/2"));
    }
    check_x(x)?;
    let c = bessel_struve_cross(nu, x)?;
    let pre = SQRT_PI * xpow(2.0, nu - 1.0) / rgamma(nu + 0.5) * x;
    let value = pre * c.value;
    if !value.is_finite() {
        return Err(Error::Range("closed_form_int_i"));
    }
    Ok(FnValue::new(value, pre.abs() * c.abs_err + ulps4(value)))
}

/// Values of ∫ e^{βt} |t|^ν K_ν(|t|) dt over the whole line and, for β = 0,
/// over the half line (0, ∞).
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct KOracle {
    pub full_line: FnValue,
    pub half_line: Option<FnValue>,
}

/// Closed-form whole-line integral √π Γ(ν+1/2) 2^ν / (1-β²)^{ν+1/2}, and the
/// half-line value √π Γ(ν+1/2) 2^{ν-1} when β = 0.
pub fn definite_k_oracle(nu: f64, beta: f64) -> Result<KOracle> {
    if !(nu > -0.5) || !nu.is_finite() {
        return Err(Error::Domain("definite_k_oracle: requires nu > -1/2"));
    }
    ExpWeight::tilt(beta)?;
    let half = SQRT_PI * xpow(2.0, nu - 1.0) / rgamma(nu + 0.5);
    let full = 2.0 * half / powf(1.0 - beta * beta, nu + 0.5);
    if !full.is_finite() {
        return Err(Error::Range("definite_k_oracle"));
    }
    Ok(KOracle {
        full_line: FnValue::new(full, 8.0 * ulps4(full)),
        half_line: (beta == 0.0).then(|| FnValue::new(half, 8.0 * ulps4(half))),
    })
}

/// Analytic bound on ∫_T^∞ e^{βt} t^ν K_ν(t) dt: (1/(1-|β|)) e^{βT}T^νK_ν(T)
/// for ν < 1/2, and the N-constant bound for ν ≥ 1/2.
pub(crate) fn k_tail_bound(nu: f64, beta: f64, t: f64) -> f64 {
    let base = k_weighted(nu, beta, t);
    if nu < 0.5 {
        base / (1.0 - beta.abs())
    } else {
        n_const(nu, beta) * base
    }
}

/// N = 2√π Γ(ν+1/2) / ((1-β²)^{ν+1/2} Γ(ν)), ν ≥ 1/2, |β| < 1.
pub(crate) fn n_const(nu: f64, beta: f64) -> f64 {
    2.0 * SQRT_PI * gamma_ratio(nu + 0.5, nu) / powf(1.0 - beta * beta, nu + 0.5)
}

fn geometric_points(lo: f64, hi: f64) -> Vec<f64> {
    let mut pts = alloc::vec![lo];
    let mut p = lo * 10.0;
    while p < hi.min(1.0) {
        pts.push(p);
        p *= 10.0;
    }
    pts.push(hi);
    pts
}

/// ∫ₓ^∞ e^{βt} t^ν K_ν(t) dt for real ν, |β| < 1, x > 0.
///
/// The range is cut at T, starting from max(2x, 30 + 2|ν|) and doubling until
/// twice the analytic tail bound at T is below `tol/2` of the computed part.
pub fn integral_k_exp(nu: f64, beta: f64, x: f64, tol: f64) -> Result<QuadratureResult> {
    if !nu.is_finite() {
        return Err(Error::Domain("integral_k_exp: order must be finite"));
    }
    ExpWeight::tilt(beta)?;
    check_x(x)?;
    check_tol(tol)?;
    let opts = QuadOptions::relative(0.25 * tol);
    let f = |t: f64| k_weighted(nu, beta, t);
    let mut t_cut = (2.0 * x).max(30.0 + 2.0 * nu.abs());
    let first = quadrature::integrate_points(f, &geometric_points(x, t_cut), &opts)?;
    let (mut value, mut err, mut subs) = (first.value, first.abs_err, first.subdivisions);
    loop {
        let tail = k_tail_bound(nu, beta, t_cut);
        if 2.0 * tail <= 0.5 * tol * value {
            err += tail;
            break;
        }
        if t_cut > 1e6 {
            return Err(Error::Accuracy {
                estimate: value,
                abs_err: err + tail,
            });
        }
        let next = quadrature::integrate(f, t_cut, 2.0 * t_cut, &opts)?;
        value += next.value;
        err += next.abs_err;
        subs += next.subdivisions;
        t_cut *= 2.0;
    }
    Ok(QuadratureResult {
        value,
        abs_err: err,
        subdivisions: subs,
        truncation_point: Some(t_cut),
    })
}

/// ∫₀ˣ e^{βt} t^ν K_ν(t) dt for ν > -1/2, |β| < 1: the piece that
/// [`integral_k_exp`] leaves out of the half-line integral.
pub fn integral_k_head(nu: f64, beta: f64, x: f64, tol: f64) -> Result<QuadratureResult> {
    if !(nu > -0.5) || !nu.is_finite() {
        return Err(Error::Domain("integral_k_head: requires nu > -1/2"));
    }
    ExpWeight::tilt(beta)?;
    check_x(x)?;
    check_tol(tol)?;
    if nu < 0.0 {
        // t^{2ν} · (e^{βt} t^{-ν} K_ν(t)), the bracket being bounded at 0.
        return power_weighted(2.0 * nu, |t| k_weighted(-nu, beta, t), x, tol);
    }
    let opts = QuadOptions::relative(tol);
    let mut pts = alloc::vec![0.0];
    if nu == 0.0 {
        // Logarithmic singularity: seed a geometric partition towards 0.
        let mut p = x * 1e-12;
        while p < x {
            pts.push(p);
            p *= 1e3;
        }
    }
    pts.push(x);
    quadrature::integrate_points(|t| k_weighted(nu, beta, t), &pts, &opts)
}

/// ∫₀^∞ e^{βt} t^ν K_ν(t) dt assembled from the head on (0, 1] and the tail.
pub fn integral_k_half_line(nu: f64, beta: f64, tol: f64) -> Result<QuadratureResult> {
    let head = integral_k_head(nu, beta, 1.0, tol)?;
    let tail = integral_k_exp(nu, beta, 1.0, tol)?;
    Ok(QuadratureResult {
        value: head.value + tail.value,
        abs_err: head.abs_err + tail.abs_err,
        subdivisions: head.subdivisions + tail.subdivisions,
        truncation_point: tail.truncation_point,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::PI;
    use crate::special_fn::{bessel_i, bessel_k};

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn spherical_tail_is_exact() {
        // ∫ₓ^∞ t^{1/2}K_{1/2} dt = x^{1/2}K_{1/2}(x) = √(π/2) e^{-x}
        let r = integral_k_exp(0.5, 0.0, 1.0, 1e-12).unwrap();
        assert!(rel(r.value, (PI / 2.0).sqrt() * (-1.0f64).exp()) < 1e-11);
        assert!(r.truncation_point.unwrap() >= 31.0);
    }

    #[test]
    fn half_line_order_zero() {
        let r = integral_k_half_line(0.0, 0.0, 1e-11).unwrap();
        assert!(rel(r.value, PI / 2.0) < 1e-10);
    }

    #[test]
    fn closed_form_matches_quadrature() {
        for &(nu, x) in &[(1.0, 1.0), (0.5, 2.0), (-0.25, 5.0), (2.0, 20.0)] {
            let q = integral_i_exp(nu, 0.0, x, 1e-12).unwrap().value;
            let c = closed_form_int_i(nu, x).unwrap().value;
            assert!(rel(q, c) < 1e-10, "nu = {nu}, x = {x}: {q} vs {c}");
        }
    }

    #[test]
    fn small_x_series() {
        // ν = 1/2: ∫₀ˣ t^{1/2}I_{1/2} = √(2/π) (cosh x - 1)
        let x = 1e-2;
        let q = integral_i_exp(0.5, 0.0, x, 1e-12).unwrap().value;
        let exact = (2.0 / PI).sqrt() * 2.0 * libm::sinh(0.5 * x).powi(2);
        assert!(rel(q, exact) < 1e-10, "{q} {exact}");
    }

    #[test]
    fn tower_levels() {
        let n0 = repeated_integral_i(1.0, 0.3, 0, 2.0, 1e-12).unwrap().value;
        let direct = (-0.6f64).exp() * 2.0 * bessel_i(1.0, 2.0).unwrap().value;
        assert!(rel(n0, direct) < 1e-14);
        let n1 = repeated_integral_i(0.5, 0.0, 1, 1.0, 1e-12).unwrap().value;
        let i1 = integral_i_exp(0.5, 0.0, 1.0, 1e-12).unwrap().value;
        assert!(rel(n1, i1) < 1e-11);
        assert_eq!(
            repeated_integral_i(1.0, 0.0, 7, 1.0, 1e-10),
            Err(Error::UnsupportedDepth(7))
        );
    }

    #[test]
    fn shifted_reduces_to_plain() {
        let a = integral_i_shifted(0.25, 0.0, 3.0, 1e-12).unwrap().value;
        let b = integral_i_exp(0.25, 0.0, 3.0, 1e-12).unwrap().value;
        assert!(rel(a, b) < 1e-12);
        let c = integral_i_shifted(0.25, 0.5, 3.0, 1e-12).unwrap().value;
        assert!(c > 0.0 && c < b);
    }

    #[test]
    fn oracle_values() {
        let o = definite_k_oracle(0.5, 0.0).unwrap();
        assert!(rel(o.full_line.value, (2.0 * PI).sqrt()) < 1e-15);
        assert!(rel(o.half_line.unwrap().value, (2.0 * PI).sqrt() / 2.0) < 1e-15);
        let o = definite_k_oracle(0.5, 0.6).unwrap();
        assert!(rel(o.full_line.value, PI.sqrt() * 2f64.sqrt() / 0.64) < 1e-15);
        assert!(o.half_line.is_none());
        assert!(definite_k_oracle(-0.5, 0.0).is_err());
        assert!(definite_k_oracle(1.0, 1.0).is_err());
    }

    #[test]
    fn tilted_tail_below_bound() {
        // ν = 3/2, β = 1/2, x = 2
        let q = integral_k_exp(1.5, 0.5, 2.0, 1e-10).unwrap().value;
        let k = bessel_k(1.5, 2.0).unwrap().value;
        let bound = 2.0 * PI.sqrt() / (0.75f64.powi(2) * PI.sqrt() / 2.0) * 1f64.exp() * 2f64.powf(1.5) * k;
        assert!(q < bound);
    }
}
