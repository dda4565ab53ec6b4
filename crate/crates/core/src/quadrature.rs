//! Globally adaptive Gauss-Kronrod (7/15) quadrature on finite intervals.
//!
//! The interval with the largest error estimate is bisected until the summed
//! estimate meets `max(abs_tol, rel_tol * |value|)`. The final sum runs over
//! intervals sorted by left endpoint, so results do not depend on the order
//! in which intervals were refined.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::math::EPS;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Smallest relative tolerance the rule can honour: each panel's estimate
/// is floored at `50 eps` times its absolute integral.
pub const MIN_REL_TOL: f64 = 100.0 * EPS;

/// Outcome of a quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_err: f64,
    /// Number of panels in the final partition.
    pub subdivisions: u32,
    /// Upper cut-off for semi-infinite integrals, `None` otherwise.
    pub truncation_point: Option<f64>,
}

impl QuadratureResult {
    pub fn rel_err(&self) -> f64 {
        self.abs_err / self.value.abs()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct QuadOptions {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
}

impl QuadOptions {
    pub fn relative(rel_tol: f64) -> Self {
        QuadOptions {
            rel_tol,
            abs_tol: 0.0,
            max_subdivisions: 2000,
        }
    }

    pub fn with_abs(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        // Largest error first; ties broken by position for determinism.
        self.err.total_cmp(&other.err).then_with(|| other.a.total_cmp(&self.a))
    }
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Panel> {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut rk = WGK[7] * fc;
    let mut rg = WG[3] * fc;
    let mut resabs = rk.abs();
    let mut fv = [0.0f64; 14];
    for j in 0..7 {
        let dx = h * XGK[j];
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        rk += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            rg += WG[j / 2] * (f1 + f2);
        }
    }
    if !rk.is_finite() {
        return Err(Error::Domain("integrand is not finite on the integration range"));
    }
    let mean = 0.5 * rk;
    let mut resasc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        resasc += WGK[j] * ((fv[2 * j] - mean).abs() + (fv[2 * j + 1] - mean).abs());
    }
    let value = rk * h;
    let resabs = resabs * h.abs();
    let resasc = resasc * h.abs();
    let mut err = ((rk - rg) * h).abs();
    if resasc != 0.0 && err != 0.0 {
        let s = libm::pow(200.0 * err / resasc, 1.5);
        err = resasc * s.min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * EPS) {
        err = err.max(50.0 * EPS * resabs);
    }
    Ok(Panel { a, b, value, err })
}

/// Integrates `f` over `[a, b]`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, opts: &QuadOptions) -> Result<QuadratureResult> {
    integrate_points(f, &[a, b], opts)
}

/// Integrates `f` over `[points[0], points[last]]`, with the interior points
/// as initial panel boundaries. Points must be increasing.
pub fn integrate_points<F: Fn(f64) -> f64>(f: F, points: &[f64], opts: &QuadOptions) -> Result<QuadratureResult> {
    if points.len() < 2 || points.iter().any(|p| !p.is_finite()) {
        return Err(Error::Domain("quadrature: need at least two finite points"));
    }
    if points.windows(2).any(|w| !(w[1] > w[0])) {
        if points.len() == 2 && points[0] == points[1] {
            return Ok(QuadratureResult {
                value: 0.0,
                abs_err: 0.0,
                subdivisions: 0,
                truncation_point: None,
            });
        }
        return Err(Error::Domain("quadrature: points must be increasing"));
    }
    let rel = opts.rel_tol.max(MIN_REL_TOL);
    let mut heap = BinaryHeap::new();
    for w in points.windows(2) {
        heap.push(gk15(&f, w[0], w[1])?);
    }
    let totals = |heap: &BinaryHeap<Panel>| heap.iter().fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.err));
    let (mut value, mut err) = totals(&heap);
    while err > opts.abs_tol.max(rel * value.abs()) {
        if heap.len() >= opts.max_subdivisions {
            let (value, abs_err) = sorted_sum(heap.into_vec());
            return Err(Error::Accuracy {
                estimate: value,
                abs_err,
            });
        }
        let worst = heap.pop().expect("non-empty");
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) {
            heap.push(worst);
            let (value, abs_err) = sorted_sum(heap.into_vec());
            return Err(Error::Accuracy {
                estimate: value,
                abs_err,
            });
        }
        let left = gk15(&f, worst.a, mid)?;
        let right = gk15(&f, mid, worst.b)?;
        value += left.value + right.value - worst.value;
        err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        // Re-total occasionally to stop drift in the running sums.
        if heap.len() % 64 == 0 {
            (value, err) = totals(&heap);
        }
    }
    let n = heap.len() as u32;
    let (value, abs_err) = sorted_sum(heap.into_vec());
    Ok(QuadratureResult {
        value,
        abs_err,
        subdivisions: n,
        truncation_point: None,
    })
}

fn sorted_sum(mut panels: Vec<Panel>) -> (f64, f64) {
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    panels.iter().fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.err))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::{exp, sqrt, PI};

    #[test]
    fn polynomial_exact() {
        let r = integrate(|t| t * t * t, 0.0, 2.0, &QuadOptions::relative(1e-12)).unwrap();
        assert!((r.value - 4.0).abs() < 1e-14);
        assert_eq!(r.subdivisions, 1);
    }

    #[test]
    fn endpoint_singularity() {
        // ∫₀¹ t^{-1/2} dt = 2
        let r = integrate(|t| 1.0 / sqrt(t), 0.0, 1.0, &QuadOptions::relative(1e-10)).unwrap();
        assert!((r.value - 2.0).abs() < 1e-9);
        assert!(r.abs_err <= 1e-10 * r.value);
    }

    #[test]
    fn breakpoints_and_gaussian() {
        let f = |t: f64| exp(-t * t);
        let r = integrate_points(f, &[-10.0, -1.0, 0.0, 1.0, 10.0], &QuadOptions::relative(1e-13)).unwrap();
        assert!((r.value - sqrt(PI)).abs() < 1e-13);
    }

    #[test]
    fn budget_exhaustion_reports_estimate() {
        let opts = QuadOptions {
            rel_tol: 1e-12,
            abs_tol: 0.0,
            max_subdivisions: 3,
        };
        match integrate(|t| 1.0 / sqrt(t), 0.0, 1.0, &opts) {
            Err(Error::Accuracy { estimate, .. }) => assert!((estimate - 2.0).abs() < 0.1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn deterministic() {
        let f = |t: f64| exp(-t) * libm::sin(10.0 * t);
        let a = integrate(f, 0.0, 7.0, &QuadOptions::relative(1e-12)).unwrap();
        let b = integrate(f, 0.0, 7.0, &QuadOptions::relative(1e-12)).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
    }
}
