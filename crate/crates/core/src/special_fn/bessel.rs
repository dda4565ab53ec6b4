//! Modified Bessel functions `I_ν(x)` and `K_ν(x)` of real order.
//!
//! Evaluation regimes:
//!
//! * `K_ν`: the order is reduced to `μ = ν - round(ν)` in `[-1/2, 1/2)`.
//!   `K_μ` and `K_{μ+1}` come from Temme's series for `x <= 2` and from
//!   Steed's continued fraction (CF2) for `x > 2`; forward recurrence in the
//!   order is stable for `K` and carries them up to `ν`.
//! * `I_ν`, `ν >= 0`: power series for `x <= max(12, ν)`. Beyond that, the
//!   Hankel expansion when `x` is large enough for it to reach machine
//!   precision, otherwise the continued fraction for `I'_ν/I_ν` (CF1),
//!   backward recurrence to `μ`, and the Wronskian with `K_μ`.
//! * Negative orders: `K_{-ν} = K_ν` and `I_{-ν} = I_ν + (2/π) sin(νπ) K_ν`.
//!
//! Every routine works on exponentially scaled values (`e^{-x} I`, `e^{x} K`)
//! so that nothing overflows before the caller decides how to combine them.

use crate::error::{Error, Result};
use crate::math::{cosh, exp, floor, is_integer, ln, powf, sin, sin_pi, sinh, sqrt, ulps4, EPS, PI};
use crate::special_fn::gamma::rgamma;
use crate::special_fn::FnValue;

const MAX_ITER: usize = 200_000;

/// Upper end of the power-series region for `I_ν` (together with `x <= ν`).
pub(crate) const SERIES_X: f64 = 12.0;

const HANKEL_X: f64 = 100.0;

/// Taylor coefficients of 1/Γ(1+z) at z = 0.
const RGAMMA1P: [f64; 29] = [
    1.0,
    0.577_215_664_901_532_9,
    -0.655_878_071_520_253_9,
    -0.042_002_635_034_095_24,
    0.166_538_611_382_291_48,
    -0.042_197_734_555_544_33,
    -0.009_621_971_527_876_973,
    0.007_218_943_246_663_1,
    -0.001_165_167_591_859_065_2,
    -0.000_215_241_674_114_950_98,
    0.000_128_050_282_388_116_2,
    -2.013_485_478_078_824e-5,
    -1.250_493_482_142_670_6e-6,
    1.133_027_231_981_696e-6,
    -2.056_338_416_977_607e-7,
    6.116_095_104_481_416e-9,
    5.002_007_644_469_223e-9,
    -1.181_274_570_487_02e-9,
    1.043_426_711_691_100_5e-10,
    7.782_263_439_905_071e-12,
    -3.696_805_618_642_206e-12,
    5.100_370_287_454_476e-13,
    -2.058_326_053_566_506_6e-14,
    -5.348_122_539_423_018e-15,
    1.226_778_628_238_260_8e-15,
    -1.181_259_301_697_458_8e-16,
    1.186_692_254_751_600_4e-18,
    1.412_380_655_318_031_9e-18,
    -2.298_745_684_435_37e-19,
];

/// A value with its absolute error estimate.
#[derive(Debug, Clone, Copy)]
struct Raw {
    value: f64,
    err: f64,
}

fn check_x(x: f64, op: &'static str) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(op))
    }
}

/// (Γ₁(μ), Γ₂(μ), 1/Γ(1+μ), 1/Γ(1-μ)) for |μ| <= 1/2, with
/// Γ₁ = (1/Γ(1-μ) - 1/Γ(1+μ)) / 2μ and Γ₂ = (1/Γ(1-μ) + 1/Γ(1+μ)) / 2.
fn temme_gammas(mu: f64) -> (f64, f64, f64, f64) {
    // even = Σ c_{2j} μ^{2j}, odd = Σ c_{2j+1} μ^{2j}
    let m2 = mu * mu;
    let mut even = 0.0;
    let mut odd = 0.0;
    let mut p = 1.0;
    for pair in RGAMMA1P.chunks(2) {
        even += pair[0] * p;
        if let Some(c) = pair.get(1) {
            odd += c * p;
        }
        p *= m2;
    }
    let gampl = even + mu * odd;
    let gammi = even - mu * odd;
    (-odd, even, gampl, gammi)
}

/// Temme's series: unscaled (K_μ, K_{μ+1}) for |μ| <= 1/2, 0 < x <= 2.
fn k_temme(mu: f64, x: f64) -> (f64, f64) {
    let (gam1, gam2, gampl, gammi) = temme_gammas(mu);
    let x2 = 0.5 * x;
    let pimu = PI * mu;
    let fact = if pimu.abs() < EPS { 1.0 } else { pimu / sin(pimu) };
    let d = -ln(x2);
    let e = mu * d;
    let fact2 = if e.abs() < EPS { 1.0 } else { sinh(e) / e };
    let mut ff = fact * (gam1 * cosh(e) + gam2 * fact2 * d);
    let mut sum = ff;
    let e = exp(e);
    let mut p = 0.5 * e / gampl;
    let mut q = 0.5 / (e * gammi);
    let mut c = 1.0;
    let d = x2 * x2;
    let mut sum1 = p;
    let mu2 = mu * mu;
    for i in 1..MAX_ITER {
        let fi = i as f64;
        ff = (fi * ff + p + q) / (fi * fi - mu2);
        c *= d / fi;
        p /= fi - mu;
        q /= fi + mu;
        let del = c * ff;
        sum += del;
        sum1 += c * (p - fi * ff);
        if del.abs() < sum.abs() * EPS {
            break;
        }
    }
    (sum, sum1 * 2.0 / x)
}

/// Steed's CF2: scaled (eˣK_μ, eˣK_{μ+1}) for |μ| <= 1/2, x > 2.
fn k_steed(mu: f64, x: f64) -> (f64, f64) {
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25 - mu * mu;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..MAX_ITER {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS {
            break;
        }
    }
    h *= a1;
    let kmu = sqrt(PI / (2.0 * x)) / s;
    let k1 = kmu * (mu + x + 0.5 - h) / x;
    (kmu, k1)
}

/// Scaled (eˣK_μ, eˣK_{μ+1}) for |μ| <= 1/2.
fn k_pair_reduced_scaled(mu: f64, x: f64) -> (f64, f64) {
    if x <= 2.0 {
        let (k0, k1) = k_temme(mu, x);
        let ex = exp(x);
        (k0 * ex, k1 * ex)
    } else {
        k_steed(mu, x)
    }
}

/// Scaled eˣK_ν(x) for ν >= 0.
fn k_scaled_nonneg(nu: f64, x: f64) -> Raw {
    let nl = floor(nu + 0.5);
    let mu = nu - nl;
    let (mut kmu, mut k1) = k_pair_reduced_scaled(mu, x);
    let steps = nl as usize;
    for i in 1..=steps {
        let next = (mu + i as f64) * (2.0 / x) * k1 + kmu;
        kmu = k1;
        k1 = next;
    }
    Raw {
        value: kmu,
        err: (6.0 + steps as f64) * EPS * kmu.abs(),
    }
}

/// Power series for e^{-x}I_ν(x) (or I_ν(x) when `scaled` is false), ν >= 0.
fn i_series(nu: f64, x: f64, scaled: bool) -> Raw {
    let h = 0.5 * x;
    let shift = if scaled { x } else { 0.0 };
    // (x/2)^ν / Γ(ν+1), through logarithms only when the direct form leaves range
    let direct = xpow(h, nu) * rgamma(nu + 1.0) * exp(-shift);
    let (lead, lead_err) = if direct.is_finite() && direct > 1e-290 && nu < 170.0 {
        (direct, 4.0 * EPS)
    } else {
        let log_lead = if nu == 0.0 { 0.0 } else { nu * ln(h) } - libm::lgamma_r(nu + 1.0).0 - shift;
        (exp(log_lead), EPS * (4.0 + log_lead.abs()))
    };
    let q = h * h;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..MAX_ITER {
        let fk = k as f64;
        term *= q / (fk * (fk + nu));
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

/// Hankel's large-x expansion for e^{-x}I_ν(x); `None` unless it reaches
/// full precision.
fn i_hankel_scaled(nu: f64, x: f64) -> Option<Raw> {
    if x < HANKEL_X || nu * nu >= x {
        return None;
    }
    let mu4 = 4.0 * nu * nu;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        let prev = term.abs();
        term *= -(mu4 - odd * odd) / (8.0 * k as f64 * x);
        sum += term;
        if term.abs() < 0.5 * EPS * sum.abs() {
            let value = sum / sqrt(2.0 * PI * x);
            return Some(Raw {
                value,
                err: ulps4(value),
            });
        }
        if term.abs() > prev {
            return None;
        }
    }
    None
}

/// CF1 + backward recurrence + Wronskian: e^{-x}I_ν(x), ν >= 0. Needs x > 0;
/// efficient once x is at least comparable to ν.
fn i_wronskian_scaled(nu: f64, x: f64) -> Raw {
    let nl = floor(nu + 0.5);
    let mu = nu - nl;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    // CF1 for f_ν = I'_ν/I_ν, modified Lentz.
    let tiny = 1e-300;
    let mut h = (nu * xi).max(tiny);
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    for _ in 1..MAX_ITER {
        b += xi2;
        d = 1.0 / (b + d);
        c = b + 1.0 / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < EPS {
            break;
        }
    }
    // Backward recurrence from ν to μ with arbitrary normalisation.
    let mut ril = 1.0;
    let mut ripl = h * ril;
    let ril1 = ril;
    let mut fact = nu * xi;
    let steps = nl as usize;
    for _ in 0..steps {
        let ritemp = fact * ril + ripl;
        fact -= xi;
        ripl = fact * ritemp + ril;
        ril = ritemp;
    }
    let f = ripl / ril;
    let (kmu, k1) = k_pair_reduced_scaled(mu, x);
    let kmup = mu * xi * kmu - k1;
    // Wronskian I_μ K'_μ - I'_μ K_μ = -1/x, with the e^{±x} scalings cancelling.
    let imu = xi / (f * kmu - kmup);
    let value = imu * ril1 / ril;
    Raw {
        value,
        err: (8.0 + 2.0 * steps as f64) * EPS * value.abs(),
    }
}

/// e^{-x}I_ν(x) for ν >= 0.
fn i_scaled_nonneg(nu: f64, x: f64) -> Raw {
    if x <= SERIES_X.max(nu) {
        return i_series(nu, x, true);
    }
    if let Some(r) = i_hankel_scaled(nu, x) {
        return r;
    }
    i_wronskian_scaled(nu, x)
}

/// e^{-x}I_ν(x) for any real order.
fn i_scaled_raw(nu: f64, x: f64) -> Raw {
    if nu >= 0.0 {
        return i_scaled_nonneg(nu, x);
    }
    let a = -nu;
    let ip = i_scaled_nonneg(a, x);
    if is_integer(a) {
        return ip;
    }
    // I_{-a} = I_a + (2/π) sin(aπ) K_a
    let kp = k_scaled_nonneg(a, x);
    let coef = 2.0 / PI * sin_pi(a) * exp(-2.0 * x);
    let value = ip.value + coef * kp.value;
    Raw {
        value,
        err: ip.err + coef.abs() * kp.err + ulps4(value),
    }
}

/// e^{-x}I_ν(x) for any real order, no domain checks.
pub(crate) fn i_scaled_any(nu: f64, x: f64) -> f64 {
    i_scaled_raw(nu, x).value
}

/// I_ν(x) for any real order, no domain checks; may overflow to infinity.
pub(crate) fn i_any(nu: f64, x: f64) -> f64 {
    if nu >= 0.0 && x <= SERIES_X.max(nu) {
        return i_series(nu, x, false).value;
    }
    i_scaled_any(nu, x) * exp(x)
}

/// eˣK_ν(x), no domain checks.
pub(crate) fn k_scaled(nu: f64, x: f64) -> f64 {
    k_scaled_nonneg(nu.abs(), x).value
}

/// K_ν(x), no domain checks; may under- or overflow.
pub(crate) fn k_val(nu: f64, x: f64) -> f64 {
    k_scaled(nu, x) * exp(-x)
}

/// Modified Bessel function of the first kind, I_ν(x), for ν > -1 and x > 0.
///
/// Strictly positive on this domain. Returns [`Error::Range`] when the value
/// overflows; [`bessel_i_scaled`] stays finite.
pub fn bessel_i(nu: f64, x: f64) -> Result<FnValue> {
    check_i_domain(nu, x)?;
    if nu >= 0.0 && x <= SERIES_X.max(nu) {
        let r = i_series(nu, x, false);
        return finite(r, "bessel_i");
    }
    let r = i_scaled_raw(nu, x);
    let s = exp(x);
    finite(
        Raw {
            value: r.value * s,
            err: r.err * s,
        },
        "bessel_i",
    )
}

/// Exponentially scaled e^{-x}I_ν(x), ν > -1, x > 0.
pub fn bessel_i_scaled(nu: f64, x: f64) -> Result<FnValue> {
    check_i_domain(nu, x)?;
    finite(i_scaled_raw(nu, x), "bessel_i_scaled")
}

/// Modified Bessel function of the second kind, K_ν(x), for real ν and x > 0.
///
/// Symmetric in ν. Returns [`Error::Range`] when the value leaves the `f64`
/// range (large x underflows, small x with large ν overflows).
pub fn bessel_k(nu: f64, x: f64) -> Result<FnValue> {
    check_k_domain(nu, x)?;
    let r = k_scaled_nonneg(nu.abs(), x);
    let s = exp(-x);
    finite(
        Raw {
            value: r.value * s,
            err: r.err * s,
        },
        "bessel_k",
    )
}

/// Exponentially scaled eˣK_ν(x).
pub fn bessel_k_scaled(nu: f64, x: f64) -> Result<FnValue> {
    check_k_domain(nu, x)?;
    finite(k_scaled_nonneg(nu.abs(), x), "bessel_k_scaled")
}

fn check_i_domain(nu: f64, x: f64) -> Result<()> {
    if !(nu > -1.0) || !nu.is_finite() {
        return Err(Error::Domain("bessel_i: order must be finite and exceed -1"));
    }
    check_x(x, "bessel_i: argument must be positive and finite")
}

fn check_k_domain(nu: f64, x: f64) -> Result<()> {
    if !nu.is_finite() {
        return Err(Error::Domain("bessel_k: order must be finite"));
    }
    check_x(x, "bessel_k: argument must be positive and finite")
}

fn finite(r: Raw, op: &'static str) -> Result<FnValue> {
    if r.value.is_finite() && r.value != 0.0 {
        Ok(FnValue::new(r.value, r.err.max(ulps4(r.value))))
    } else {
        Err(Error::Range(op))
    }
}

/// x^ν, written out so that x^0 is exactly 1.
#[inline]
pub(crate) fn xpow(x: f64, nu: f64) -> f64 {
    if nu == 0.0 {
        1.0
    } else {
        powf(x, nu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn temme_gammas_match_direct_formula() {
        for &mu in &[-0.5, -0.3, -0.1, 0.2, 0.45] {
            let (g1, g2, gp, gm) = temme_gammas(mu);
            let rp = rgamma(1.0 + mu);
            let rm = rgamma(1.0 - mu);
            assert!(rel(gp, rp) < 1e-15);
            assert!(rel(gm, rm) < 1e-15);
            assert!(rel(g2, 0.5 * (rm + rp)) < 1e-15);
            assert!(rel(g1, (rm - rp) / (2.0 * mu)) < 1e-12);
        }
        // Γ₁(0) = -c₁ = -γ_E
        assert!((temme_gammas(0.0).0 + 0.577_215_664_901_532_9).abs() < 1e-16);
    }

    #[test]
    fn temme_and_steed_agree_at_the_seam() {
        for &mu in &[-0.5, -0.25, 0.0, 0.3] {
            let (t0, t1) = k_temme(mu, 2.0);
            let (s0, s1) = k_steed(mu, 2.0);
            let e = exp(-2.0);
            assert!(rel(t0, s0 * e) < 1e-14, "mu = {mu}");
            assert!(rel(t1, s1 * e) < 1e-14, "mu = {mu}");
        }
    }

    #[test]
    fn series_and_wronskian_agree() {
        for &nu in &[0.0, 0.3, 1.0, 2.5, 7.0] {
            for &x in &[3.0, 8.0, 12.0] {
                let s = i_series(nu, x, true).value;
                let w = i_wronskian_scaled(nu, x).value;
                assert!(rel(w, s) < 1e-14, "nu = {nu}, x = {x}: {w} vs {s}");
            }
        }
    }

    #[test]
    fn hankel_and_wronskian_agree() {
        for &nu in &[0.0, 0.5, 3.0, 9.0] {
            let x = 150.0;
            let h = i_hankel_scaled(nu, x).unwrap().value;
            let w = i_wronskian_scaled(nu, x).value;
            assert!(rel(h, w) < 1e-14, "nu = {nu}");
        }
        assert!(i_hankel_scaled(20.0, 150.0).is_none());
    }

    #[test]
    fn negative_integer_order_i() {
        assert_eq!(i_scaled_any(-2.0, 1.5), i_scaled_any(2.0, 1.5));
    }
}
