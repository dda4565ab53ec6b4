//! Thin wrappers over `libm` so call sites read like `std` float code.

pub(crate) const EPS: f64 = f64::EPSILON;
pub(crate) const PI: f64 = core::f64::consts::PI;
pub(crate) const SQRT_PI: f64 = 1.772_453_850_905_516;

#[inline]
pub(crate) fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub(crate) fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

#[inline]
pub(crate) fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline]
pub(crate) fn sinh(x: f64) -> f64 {
    libm::sinh(x)
}

#[inline]
pub(crate) fn cosh(x: f64) -> f64 {
    libm::cosh(x)
}

#[inline]
pub(crate) fn floor(x: f64) -> f64 {
    libm::floor(x)
}

/// `sin(πv)` with the argument reduced before multiplying by π, so that
/// integer `v` gives an exact zero.
pub(crate) fn sin_pi(v: f64) -> f64 {
    let r = v - 2.0 * floor(v / 2.0);
    // r in [0, 2)
    let (s, r) = if r >= 1.0 { (-1.0, r - 1.0) } else { (1.0, r) };
    let r = if r > 0.5 { 1.0 - r } else { r };
    s * sin(PI * r)
}

pub(crate) fn is_integer(v: f64) -> bool {
    v == floor(v)
}

/// Four units in the last place of `v`.
pub(crate) fn ulps4(v: f64) -> f64 {
    4.0 * EPS * v.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sin_pi_exact_at_integers() {
        for k in -6..=6 {
            assert_eq!(sin_pi(k as f64), 0.0);
        }
        assert!((sin_pi(0.5) - 1.0).abs() < 1e-16);
        assert!((sin_pi(-0.5) + 1.0).abs() < 1e-16);
        assert!((sin_pi(1.25) - sin(1.25 * PI)).abs() < 1e-15);
    }
}
