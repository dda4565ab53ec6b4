//! Grid sweeps that check every inequality against independent oracles.
//!
//! Each [`InequalityId`] reads as `lhs < rhs` (or `<=`). A record stores both
//! sides, `margin = rhs - lhs` and the oracle's error estimate. The point
//! passes when `margin > -slack`, with `slack = max(1e-12 * scale, oracle_err)`
//! and `scale = max(|lhs|, |rhs|)`. A margin inside `±slack` or an oracle
//! failure yields [`Outcome::Indeterminate`] rather than pass or fail.
//!
//! Sweeps here run sequentially. Points are independent, so callers can
//! evaluate [`points`] concurrently with [`evaluate`] and hand the records to
//! [`Report::new`], which sorts them.

mod eval;
mod limits;

use alloc::vec::Vec;
use core::cmp::Ordering;

pub use limits::{limit_checks, luke_crossover, LimitRecord};

use crate::bounds::InequalityId;
use crate::error::{Error, Result};
use crate::integrals::DEFAULT_TOL;

/// Relative part of the pass/fail slack.
pub const REL_SLACK: f64 = 1e-12;

/// Sweep description for one inequality. Dimensions the inequality does not
/// use must be empty; the rest are sorted, deduplicated and checked against
/// the inequality's domain.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GridSpec {
    inequality_id: InequalityId,
    nu_values: Vec<f64>,
    beta_or_gamma_values: Vec<f64>,
    n_values: Vec<u32>,
    x_values: Vec<f64>,
    tol: f64,
}

fn clean(mut v: Vec<f64>) -> Result<Vec<f64>> {
    if v.iter().any(|a| a.is_nan()) {
        return Err(Error::Grid("grid values must not be NaN"));
    }
    v.sort_by(f64::total_cmp);
    v.dedup();
    Ok(v)
}

impl GridSpec {
    pub fn new(
        inequality_id: InequalityId,
        nu_values: Vec<f64>,
        beta_or_gamma_values: Vec<f64>,
        n_values: Vec<u32>,
        x_values: Vec<f64>,
        tol: f64,
    ) -> Result<Self> {
        if !(tol > 0.0 && tol < 1.0) {
            return Err(Error::Grid("tol must lie in (0, 1)"));
        }
        let d = inequality_id.domain();
        let nu_values = clean(nu_values)?;
        let beta_or_gamma_values = clean(beta_or_gamma_values)?;
        let x_values = clean(x_values)?;
        let mut n_values = n_values;
        n_values.sort_unstable();
        n_values.dedup();

        match d.nu {
            Some(p) if !nu_values.iter().all(|&v| (p.test)(v)) => {
                return Err(Error::Grid("nu value outside the domain"))
            }
            None if !nu_values.is_empty() => return Err(Error::Grid("inequality has no nu parameter")),
            _ => {}
        }
        match d.bg {
            Some(p) if !beta_or_gamma_values.iter().all(|&v| (p.test)(v)) => {
                return Err(Error::Grid("beta/gamma value outside the domain"))
            }
            None if !beta_or_gamma_values.is_empty() => {
                return Err(Error::Grid("inequality has no beta/gamma parameter"))
            }
            _ => {}
        }
        match d.n {
            Some(p) if !n_values.iter().all(|&v| (p.test)(v)) => return Err(Error::Grid("n value outside the domain")),
            None if !n_values.is_empty() => return Err(Error::Grid("inequality has no n parameter")),
            _ => {}
        }
        if d.x {
            if !x_values.iter().all(|&v| v > 0.0 && v.is_finite()) {
                return Err(Error::Grid("x values must be positive and finite"));
            }
        } else if !x_values.is_empty() {
            return Err(Error::Grid("inequality has no x parameter"));
        }
        Ok(GridSpec {
            inequality_id,
            nu_values,
            beta_or_gamma_values,
            n_values,
            x_values,
            tol,
        })
    }

    pub fn inequality_id(&self) -> InequalityId {
        self.inequality_id
    }
    pub fn nu_values(&self) -> &[f64] {
        &self.nu_values
    }
    pub fn beta_or_gamma_values(&self) -> &[f64] {
        &self.beta_or_gamma_values
    }
    pub fn n_values(&self) -> &[u32] {
        &self.n_values
    }
    pub fn x_values(&self) -> &[f64] {
        &self.x_values
    }
    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Number of points, the product of the active dimensions' lengths.
    pub fn len(&self) -> usize {
        let d = self.inequality_id.domain();
        let f = |active: bool, n: usize| if active { n } else { 1 };
        f(d.nu.is_some(), self.nu_values.len())
            * f(d.bg.is_some(), self.beta_or_gamma_values.len())
            * f(d.n.is_some(), self.n_values.len())
            * f(d.x, self.x_values.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// One parameter tuple. `None` marks a dimension the inequality does not use.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Point {
    pub nu: Option<f64>,
    pub beta_or_gamma: Option<f64>,
    pub n: Option<u32>,
    pub x: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Outcome {
    Pass,
    Fail,
    Indeterminate,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct VerificationRecord {
    pub inequality_id: InequalityId,
    pub nu: Option<f64>,
    pub beta_or_gamma: Option<f64>,
    pub n: Option<u32>,
    pub x: Option<f64>,
    pub lhs: f64,
    pub rhs: f64,
    /// rhs - lhs; NaN when the oracle failed.
    pub margin: f64,
    /// margin > -max(1e-12 scale, oracle_err).
    pub pass: bool,
    pub oracle_err: f64,
    pub outcome: Outcome,
}

impl VerificationRecord {
    pub fn point(&self) -> Point {
        Point {
            nu: self.nu,
            beta_or_gamma: self.beta_or_gamma,
            n: self.n,
            x: self.x,
        }
    }

    /// margin / max(|lhs|, |rhs|).
    pub fn rel_margin(&self) -> f64 {
        self.margin / self.lhs.abs().max(self.rhs.abs())
    }

    fn sort_key_cmp(&self, o: &Self) -> Ordering {
        fn opt(a: Option<f64>, b: Option<f64>) -> Ordering {
            match (a, b) {
                (Some(a), Some(b)) => a.total_cmp(&b),
                (a, b) => a.is_some().cmp(&b.is_some()),
            }
        }
        self.inequality_id
            .cmp(&o.inequality_id)
            .then(opt(self.nu, o.nu))
            .then(opt(self.beta_or_gamma, o.beta_or_gamma))
            .then(self.n.cmp(&o.n))
            .then(opt(self.x, o.x))
    }
}

/// Evaluates one inequality at one point.
pub fn evaluate(id: InequalityId, p: Point, tol: f64) -> VerificationRecord {
    let mut r = VerificationRecord {
        inequality_id: id,
        nu: p.nu,
        beta_or_gamma: p.beta_or_gamma,
        n: p.n,
        x: p.x,
        lhs: f64::NAN,
        rhs: f64::NAN,
        margin: f64::NAN,
        pass: false,
        oracle_err: f64::NAN,
        outcome: Outcome::Indeterminate,
    };
    let Ok((lhs, rhs)) = eval::sides(id, &p, tol) else {
        return r;
    };
    r.lhs = lhs.v;
    r.rhs = rhs.v;
    r.margin = rhs.v - lhs.v;
    r.oracle_err = lhs.e + rhs.e;
    if !(r.margin.is_finite() && r.oracle_err.is_finite()) {
        return r;
    }
    let slack = (REL_SLACK * lhs.v.abs().max(rhs.v.abs())).max(r.oracle_err);
    r.pass = r.margin > -slack;
    r.outcome = if r.margin.abs() <= slack {
        Outcome::Indeterminate
    } else if r.pass {
        Outcome::Pass
    } else {
        Outcome::Fail
    };
    r
}

/// Every point of a grid, in sorted order.
pub fn points(grid: &GridSpec) -> Vec<Point> {
    let d = grid.inequality_id.domain();
    fn axis<T: Copy>(active: bool, v: &[T]) -> Vec<Option<T>> {
        if active {
            v.iter().copied().map(Some).collect()
        } else {
            alloc::vec![None]
        }
    }
    let nus = axis(d.nu.is_some(), &grid.nu_values);
    let bgs = axis(d.bg.is_some(), &grid.beta_or_gamma_values);
    let ns = axis(d.n.is_some(), &grid.n_values);
    let xs = axis(d.x, &grid.x_values);
    let mut out = Vec::with_capacity(grid.len());
    for &nu in &nus {
        for &beta_or_gamma in &bgs {
            for &n in &ns {
                for &x in &xs {
                    out.push(Point {
                        nu,
                        beta_or_gamma,
                        n,
                        x,
                    });
                }
            }
        }
    }
    out
}

/// One record per grid point.
pub fn sweep(grid: &GridSpec) -> Vec<VerificationRecord> {
    points(grid)
        .into_iter()
        .map(|p| evaluate(grid.inequality_id, p, grid.tol))
        .collect()
}

/// Default ν values before domain filtering.
pub const DEFAULT_NU: [f64; 9] = [-0.25, 0.0, 0.25, 0.5, 0.75, 1.0, 2.0, 5.0, 10.0];
/// Default β or γ values before domain filtering.
pub const DEFAULT_BG: [f64; 4] = [0.0, 0.25, 0.5, 0.9];
/// Default n values before domain filtering.
pub const DEFAULT_N: [u32; 4] = [0, 1, 2, 3];

/// `count` log-spaced points from `lo` to `hi` inclusive.
pub fn log_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => alloc::vec![lo],
        _ => {
            let (a, b) = (libm::log(lo), libm::log(hi));
            (0..count)
                .map(|i| {
                    if i + 1 == count {
                        hi
                    } else {
                        libm::exp(a + (b - a) * i as f64 / (count - 1) as f64)
                    }
                })
                .collect()
        }
    }
}

/// The built-in grid for an id, intersected with its domain.
pub fn default_grid(id: InequalityId, tol: f64) -> Result<GridSpec> {
    let d = id.domain();
    let nus = d.nu.map_or(Vec::new(), |p| {
        DEFAULT_NU.iter().copied().filter(|&v| (p.test)(v)).collect()
    });
    let bgs = d.bg.map_or(Vec::new(), |p| {
        DEFAULT_BG.iter().copied().filter(|&v| (p.test)(v)).collect()
    });
    let ns = d.n.map_or(Vec::new(), |p| {
        DEFAULT_N.iter().copied().filter(|&v| (p.test)(v)).collect()
    });
    let xs = if d.x { log_grid(1e-3, 50.0, 12) } else { Vec::new() };
    GridSpec::new(id, nus, bgs, ns, xs, tol)
}

/// Per-id totals.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SummaryRow {
    pub id: InequalityId,
    pub records: usize,
    /// Smallest finite margin; `None` if there is none.
    pub min_margin: Option<f64>,
    /// Smallest finite margin relative to max(|lhs|, |rhs|).
    pub min_rel_margin: Option<f64>,
    pub fails: usize,
    pub indeterminate: usize,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ReportMeta {
    pub tol: f64,
    pub rel_slack: f64,
    pub grids: Vec<GridSpec>,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Report {
    pub meta: ReportMeta,
    pub summary: Vec<SummaryRow>,
    pub records: Vec<VerificationRecord>,
}

fn min_opt(a: Option<f64>, b: f64) -> Option<f64> {
    if !b.is_finite() {
        return a;
    }
    Some(a.map_or(b, |a| a.min(b)))
}

impl Report {
    /// Sorts the records and builds one summary row per grid id, in grid order.
    pub fn new(tol: f64, grids: Vec<GridSpec>, mut records: Vec<VerificationRecord>) -> Self {
        records.sort_by(|a, b| a.sort_key_cmp(b));
        let mut summary: Vec<SummaryRow> = Vec::new();
        for g in &grids {
            if summary.iter().all(|s| s.id != g.inequality_id) {
                summary.push(SummaryRow {
                    id: g.inequality_id,
                    records: 0,
                    min_margin: None,
                    min_rel_margin: None,
                    fails: 0,
                    indeterminate: 0,
                });
            }
        }
        for r in &records {
            let Some(s) = summary.iter_mut().find(|s| s.id == r.inequality_id) else {
                continue;
            };
            s.records += 1;
            s.min_margin = min_opt(s.min_margin, r.margin);
            s.min_rel_margin = min_opt(s.min_rel_margin, r.rel_margin());
            match r.outcome {
                Outcome::Fail => s.fails += 1,
                Outcome::Indeterminate => s.indeterminate += 1,
                Outcome::Pass => {}
            }
        }
        Report {
            meta: ReportMeta {
                tol,
                rel_slack: REL_SLACK,
                grids,
            },
            summary,
            records,
        }
    }

    pub fn fails(&self) -> usize {
        self.summary.iter().map(|s| s.fails).sum()
    }

    pub fn indeterminate(&self) -> usize {
        self.summary.iter().map(|s| s.indeterminate).sum()
    }
}

/// Default grids for the selected ids (all ids when `only` is `None`).
pub fn default_grids(only: Option<&[InequalityId]>, tol: f64) -> Result<Vec<GridSpec>> {
    InequalityId::ALL
        .iter()
        .copied()
        .filter(|id| only.map_or(true, |o| o.contains(id)))
        .map(|id| default_grid(id, tol))
        .collect()
}

/// Sweeps the default grids of the selected ids.
pub fn verify_all(only: Option<&[InequalityId]>, tol: f64) -> Result<Report> {
    let grids = default_grids(only, tol)?;
    let records = grids.iter().flat_map(sweep).collect();
    Ok(Report::new(tol, grids, records))
}

/// [`verify_all`] at the default integral tolerance.
pub fn verify_all_default() -> Result<Report> {
    verify_all(None, DEFAULT_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use InequalityId::*;

    #[test]
    fn grid_validation() {
        assert!(GridSpec::new(
            IntIUpper,
            alloc::vec![0.25],
            alloc::vec![],
            alloc::vec![],
            alloc::vec![1.0],
            1e-10
        )
        .is_err());
        assert!(GridSpec::new(
            IntIUpper,
            alloc::vec![1.0],
            alloc::vec![0.5],
            alloc::vec![],
            alloc::vec![1.0],
            1e-10
        )
        .is_err());
        assert!(GridSpec::new(
            IntIUpper,
            alloc::vec![1.0],
            alloc::vec![],
            alloc::vec![],
            alloc::vec![0.0],
            1e-10
        )
        .is_err());
        assert!(GridSpec::new(
            NConstExceedsOne,
            alloc::vec![1.0],
            alloc::vec![0.5],
            alloc::vec![],
            alloc::vec![1.0],
            1e-10
        )
        .is_err());
        let g = GridSpec::new(
            IntILower,
            alloc::vec![5.0, 0.0, 1.0, 1.0],
            alloc::vec![],
            alloc::vec![],
            alloc::vec![10.0, 0.1, 1.0],
            1e-10,
        )
        .unwrap();
        assert_eq!(g.nu_values(), &[0.0, 1.0, 5.0]);
        assert_eq!(g.len(), 9);
    }

    #[test]
    fn small_sweep_passes() {
        let g = GridSpec::new(
            IntILower,
            alloc::vec![0.0, 1.0, 5.0],
            alloc::vec![],
            alloc::vec![],
            alloc::vec![0.1, 1.0, 10.0],
            1e-10,
        )
        .unwrap();
        let r = sweep(&g);
        assert_eq!(r.len(), 9);
        assert!(r.iter().all(|r| r.outcome == Outcome::Pass));
    }

    #[test]
    fn empty_x_is_vacuous() {
        let g = GridSpec::new(
            IntILower,
            alloc::vec![1.0],
            alloc::vec![],
            alloc::vec![],
            alloc::vec![],
            1e-10,
        )
        .unwrap();
        assert!(sweep(&g).is_empty());
    }

    #[test]
    fn spherical_order_is_indeterminate() {
        for id in [IntKGammaConst, KRatioMonotone, TuranianOrdering, KOrderIncreasing] {
            let g = GridSpec::new(
                id,
                alloc::vec![0.5],
                alloc::vec![],
                alloc::vec![],
                alloc::vec![0.3, 2.0],
                1e-10,
            )
            .unwrap();
            for r in sweep(&g) {
                assert_eq!(r.outcome, Outcome::Indeterminate, "{id} at x = {:?}", r.x);
                assert!(r.pass);
            }
        }
    }

    #[test]
    fn inactive_dimensions_are_none() {
        let g = default_grid(NConstExceedsOne, 1e-10).unwrap();
        let r = sweep(&g);
        assert_eq!(r.len(), g.nu_values().len() * g.beta_or_gamma_values().len());
        assert!(r
            .iter()
            .all(|r| r.x.is_none() && r.n.is_none() && r.outcome == Outcome::Pass));
    }

    #[test]
    fn report_sorts_and_counts() {
        let g = default_grid(K0LukeLower, 1e-10).unwrap();
        let mut recs = sweep(&g);
        recs.reverse();
        let rep = Report::new(1e-10, alloc::vec![g], recs);
        assert!(rep.records.windows(2).all(|w| w[0].x < w[1].x));
        assert_eq!(rep.summary[0].records, 12);
        assert_eq!(rep.fails(), 0);
    }
}
