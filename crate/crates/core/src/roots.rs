//! Bracketing root finders.

use crate::error::{Error, Result};
use crate::math::EPS;

/// A root located inside a bracket whose endpoints straddle a sign change.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracketed {
    pub root: f64,
    pub lo: f64,
    pub hi: f64,
}

/// Brent's method on `[a, b]`; stops once the bracket is narrower than
/// `xtol + 4 eps |x|`.
pub fn brent<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, xtol: f64) -> Result<Bracketed> {
    let (mut a, mut b) = (a, b);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(Bracketed { root: a, lo: a, hi: a });
    }
    if fb == 0.0 {
        return Ok(Bracketed { root: b, lo: b, hi: b });
    }
    if fa.signum() == fb.signum() || fa.is_nan() || fb.is_nan() {
        return Err(Error::NoBracket);
    }
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for _ in 0..500 {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = 2.0 * EPS * b.abs() + 0.5 * xtol;
        let m = 0.5 * (c - b);
        if fb == 0.0 {
            return Ok(Bracketed { root: b, lo: b, hi: b });
        }
        if m.abs() <= tol {
            let (lo, hi) = if b < c { (b, c) } else { (c, b) };
            return Ok(Bracketed { root: b, lo, hi });
        }
        if e.abs() >= tol && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol { d } else { tol.copysign(m) };
        fb = f(b);
    }
    let (lo, hi) = if b < c { (b, c) } else { (c, b) };
    Ok(Bracketed { root: b, lo, hi })
}

/// Plain bisection to an absolute bracket width `xtol`.
pub fn bisect<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, xtol: f64) -> Result<Bracketed> {
    let (mut lo, mut hi) = if a < b { (a, b) } else { (b, a) };
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo.signum() == fhi.signum() || flo.is_nan() || fhi.is_nan() {
        return Err(Error::NoBracket);
    }
    while hi - lo > xtol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(Bracketed {
                root: mid,
                lo: mid,
                hi: mid,
            });
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(Bracketed {
        root: 0.5 * (lo + hi),
        lo,
        hi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brent_finds_sqrt2() {
        let r = brent(|x| x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert!((r.root - core::f64::consts::SQRT_2).abs() < 1e-13);
        assert!(r.lo <= r.root && r.root <= r.hi);
    }

    #[test]
    fn bisect_width() {
        let r = bisect(libm::cos, 1.0, 2.0, 1e-9).unwrap();
        assert!(r.hi - r.lo <= 1e-9);
        assert!((r.root - core::f64::consts::FRAC_PI_2).abs() < 1e-9);
    }

    #[test]
    fn no_bracket() {
        assert_eq!(brent(|x| x * x + 1.0, -1.0, 1.0, 1e-12), Err(Error::NoBracket));
    }
}
