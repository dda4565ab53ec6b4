use crate::error::{Error, Result};
use crate::math::EPS;
use crate::roots::brent;
use crate::special_fn::bessel::{k_scaled, k_val};

/// The root of K_ν(x) = α K_{ν-1}(x).
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RootResult {
    pub x_star: f64,
    /// |K_ν(x*) - α K_{ν-1}(x*)| / K_ν(x*).
    pub residual: f64,
    /// Final interval straddling the sign change.
    pub bracket: (f64, f64),
}

fn check_x(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain("x must be positive and finite"))
    }
}

/// K_{ν-1}(x)/K_ν(x).
pub fn k_ratio(nu: f64, x: f64) -> Result<f64> {
    if !nu.is_finite() {
        return Err(Error::Domain("k_ratio: order must be finite"));
    }
    check_x(x)?;
    let r = k_scaled(nu - 1.0, x) / k_scaled(nu, x);
    if r.is_finite() {
        Ok(r)
    } else {
        Err(Error::Range("k_ratio"))
    }
}

/// Δ_ν(x) = K_ν(x)² - K_{ν-1}(x) K_{ν+1}(x).
pub fn turanian(nu: f64, x: f64) -> Result<f64> {
    if !nu.is_finite() {
        return Err(Error::Domain("turanian: order must be finite"));
    }
    check_x(x)?;
    let k = k_val(nu, x);
    let d = k * k - k_val(nu - 1.0, x) * k_val(nu + 1.0, x);
    if d.is_finite() {
        Ok(d)
    } else {
        Err(Error::Range("turanian"))
    }
}

/// Solves K_ν(x) = α K_{ν-1}(x) for ν > 1/2, α > 1.
///
/// K_{ν-1}/K_ν rises from 0 to 1 on (0, ∞), so it crosses 1/α exactly once.
/// The bracket grows from [1e-6, 1] by halving/doubling its ends, then
/// Brent's method narrows it to max(1e-12, 4 eps x).
pub fn solve_k_ratio_root(nu: f64, alpha: f64) -> Result<RootResult> {
    if !(nu > 0.5) || !nu.is_finite() {
        return Err(Error::Domain("solve_k_ratio_root: requires nu > 1/2"));
    }
    if !(alpha > 1.0) || !alpha.is_finite() {
        return Err(Error::Domain("solve_k_ratio_root: requires alpha > 1"));
    }
    let target = 1.0 / alpha;
    let g = |x: f64| k_scaled(nu - 1.0, x) / k_scaled(nu, x) - target;
    let (mut lo, mut hi) = (1e-6, 1.0);
    while g(lo) > 0.0 {
        lo *= 0.5;
        if lo < 1e-300 {
            return Err(Error::NoBracket);
        }
    }
    while g(hi) < 0.0 {
        hi *= 2.0;
        if hi > 1e15 {
            return Err(Error::NoBracket);
        }
    }
    let xtol = 1e-12f64.max(4.0 * EPS * hi);
    let b = brent(g, lo, hi, xtol)?;
    let x = b.root;
    let residual = (1.0 - alpha * k_scaled(nu - 1.0, x) / k_scaled(nu, x)).abs();
    Ok(RootResult {
        x_star: x,
        residual,
        bracket: (b.lo, b.hi),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::{exp, PI};

    #[test]
    fn spherical_ratio_constant() {
        for &x in &[0.01, 1.0, 30.0] {
            assert!((k_ratio(0.5, x).unwrap() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn spherical_turanian() {
        let d = turanian(0.5, 1.0).unwrap();
        let exact = -PI / 2.0 * exp(-2.0);
        assert!(((d - exact) / exact).abs() < 1e-13);
        assert_eq!(turanian(0.5, 2.0).unwrap(), turanian(-0.5, 2.0).unwrap());
    }

    #[test]
    fn ratio_derivative_identity() {
        // d/dx (K_{ν-1}/K_ν) = (Δ_{ν-1} - Δ_ν) / (2 K_ν²)
        for &(nu, x) in &[(1.0, 0.7), (2.5, 3.0), (0.25, 1.5)] {
            let h = 1e-5 * x;
            let fd = (k_ratio(nu, x + h).unwrap() - k_ratio(nu, x - h).unwrap()) / (2.0 * h);
            let k = k_val(nu, x);
            let id = (turanian(nu - 1.0, x).unwrap() - turanian(nu, x).unwrap()) / (2.0 * k * k);
            assert!(((fd - id) / id).abs() < 1e-6, "nu = {nu}: {fd} vs {id}");
        }
    }

    #[test]
    fn root_residual_and_growth() {
        let r = solve_k_ratio_root(1.0, 2.0).unwrap();
        assert!(r.residual < 1e-10);
        let k1 = k_val(1.0, r.x_star);
        let k0 = k_val(0.0, r.x_star);
        assert!(((k1 - 2.0 * k0) / k1).abs() < 1e-10);
        assert!(solve_k_ratio_root(1.0, 1.001).unwrap().x_star > 50.0);
        assert!(solve_k_ratio_root(0.5, 2.0).is_err());
        assert!(solve_k_ratio_root(1.0, 1.0).is_err());
    }
}
