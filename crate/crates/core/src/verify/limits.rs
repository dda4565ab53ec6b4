use alloc::string::String;
use alloc::vec::Vec;

use crate::bounds::{k_gap, k_ratio, u_diag, v_diag};
use crate::error::Result;
use crate::math::sqrt;
use crate::roots::bisect;
use crate::special_fn::asymptotic::{i_small_x, k_large_x, k_small_x, k_small_x_two_term, l_small_x};
use crate::special_fn::gamma::gamma_ratio;
use crate::special_fn::{bessel_i_scaled, bessel_k, bessel_k_scaled, struve_l};

/// Where Γ(x+1/2)/Γ(x+1) and 8√x/(8x+1) cross, by bisection on [0.1, 1]
/// to 1e-6. Below the crossing the gamma ratio is the larger lower bound
/// for √(2/π)e^xK_0(x).
pub fn luke_crossover() -> f64 {
    let g = |x: f64| gamma_ratio(x + 0.5, x + 1.0) - 8.0 * sqrt(x) / (8.0 * x + 1.0);
    match bisect(g, 0.1, 1.0, 1e-6) {
        Ok(b) => b.root,
        Err(_) => f64::NAN,
    }
}

/// One limit or asymptotic claim checked at a sentinel point.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LimitRecord {
    pub claim: String,
    pub nu: Option<f64>,
    pub x: f64,
    pub value: f64,
    pub target: f64,
    /// |value/target - 1| for ratio checks, |value - target| otherwise.
    pub deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

fn ratio(claim: &str, nu: Option<f64>, x: f64, value: f64, target: f64) -> LimitRecord {
    let deviation = (value / target - 1.0).abs();
    LimitRecord {
        claim: String::from(claim),
        nu,
        x,
        value,
        target,
        deviation,
        tolerance: 0.01,
        pass: deviation <= 0.01,
    }
}

fn absolute(claim: &str, nu: Option<f64>, x: f64, value: f64, target: f64, tolerance: f64) -> LimitRecord {
    let deviation = (value - target).abs();
    LimitRecord {
        claim: String::from(claim),
        nu,
        x,
        value,
        target,
        deviation,
        tolerance,
        pass: deviation <= tolerance,
    }
}

/// Small- and large-argument forms and the limits used in the bound proofs,
/// each at a sentinel point: ratio checks within 1%, limits at zero within
/// the stated absolute tolerance.
pub fn limit_checks() -> Result<Vec<LimitRecord>> {
    let mut out = Vec::new();
    let tiny = 1e-6;
    out.push(ratio(
        "K_0(x) ~ -ln x as x -> 0",
        Some(0.0),
        tiny,
        bessel_k(0.0, tiny)?.value,
        k_small_x(0.0, tiny)?,
    ));
    for nu in [0.25, 1.0, 3.5] {
        out.push(ratio(
            "K_nu(x) ~ 2^{nu-1} Gamma(nu) x^-nu as x -> 0",
            Some(nu),
            tiny,
            bessel_k(nu, tiny)?.value,
            k_small_x(nu, tiny)?,
        ));
        out.push(ratio(
            "I_nu(x) ~ (x/2)^nu / Gamma(nu+1) as x -> 0",
            Some(nu),
            tiny,
            bessel_i_scaled(nu, tiny)?.value * libm::exp(tiny),
            i_small_x(nu, tiny)?,
        ));
        out.push(ratio(
            "L_nu(x) ~ 2 (x/2)^{nu+1} / (sqrt(pi) Gamma(nu+3/2)) as x -> 0",
            Some(nu),
            tiny,
            struve_l(nu, tiny)?.value,
            l_small_x(nu, tiny)?,
        ));
    }
    let x = 0.01;
    out.push(ratio(
        "K_nu(x) ~ 2^{nu-1}Gamma(nu)x^-nu - 2^{nu-3}Gamma(nu-1)x^{2-nu} as x -> 0",
        Some(2.5),
        x,
        bessel_k(2.5, x)?.value,
        k_small_x_two_term(2.5, x)?,
    ));
    let big = 1e4;
    for nu in [0.0, 2.0, 7.5] {
        out.push(ratio(
            "e^x K_nu(x) ~ sqrt(pi/(2x)) as x -> inf",
            Some(nu),
            big,
            bessel_k_scaled(nu, big)?.value,
            sqrt(crate::math::PI / (2.0 * big)),
        ));
        out.push(ratio(
            "e^-x I_nu(x) ~ 1/sqrt(2 pi x) as x -> inf",
            Some(nu),
            big,
            bessel_i_scaled(nu, big)?.value,
            1.0 / sqrt(2.0 * crate::math::PI * big),
        ));
    }
    out.push(ratio(
        "K_nu(x) ~ sqrt(pi/(2x)) e^-x as x -> inf",
        Some(1.0),
        200.0,
        bessel_k(1.0, 200.0)?.value,
        k_large_x(200.0)?,
    ));
    out.push(ratio(
        "K_{nu-1}/K_nu -> 1 as x -> inf",
        Some(3.0),
        big,
        k_ratio(3.0, big)?,
        1.0,
    ));
    out.push(absolute(
        "gap_nu(x) -> 1/(4(nu-1)) as x -> 0",
        Some(2.0),
        1e-4,
        k_gap(2.0, 1e-4)?,
        0.25,
        1e-3,
    ));
    out.push(ratio(
        "x^2 gap_nu(x) -> 1 as x -> inf",
        Some(2.0),
        40.0,
        1600.0 * k_gap(2.0, 40.0)?,
        1.0,
    ));
    out.push(absolute(
        "u(x) -> 0 as x -> inf",
        Some(1.0),
        60.0,
        u_diag(1.0, 60.0)?,
        0.0,
        1e-10,
    ));
    out.push(absolute(
        "u(x) -> 0 as x -> 0",
        Some(1.0),
        1e-8,
        u_diag(1.0, 1e-8)?,
        0.0,
        1e-6,
    ));
    out.push(absolute(
        "v(x) -> 0 as x -> inf",
        Some(1.0),
        60.0,
        v_diag(1.0, 0.5, 60.0)?,
        0.0,
        1e-10,
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossover_location() {
        let c = luke_crossover();
        assert!((c - 0.394).abs() <= 1e-3, "{c}");
        let g = |x: f64| gamma_ratio(x + 0.5, x + 1.0) - 8.0 * sqrt(x) / (8.0 * x + 1.0);
        assert!(g(0.1) > 0.0);
        assert!(g(1.0) < 0.0);
    }

    #[test]
    fn limits_hold() {
        for r in limit_checks().unwrap() {
            assert!(r.pass, "{r:?}");
        }
    }
}
