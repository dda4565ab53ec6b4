//! Parallel evaluation of verification grids. Points are independent; the
//! records are sorted by [`Report::new`], so the result does not depend on
//! scheduling.

use std::time::{Duration, Instant};

use besselbound_core::bounds::InequalityId;
use besselbound_core::verify::{default_grids, evaluate, points, GridSpec, Report, VerificationRecord};
use besselbound_core::Result;
use rayon::prelude::*;

/// Records for every point of every grid, evaluated in parallel.
pub fn sweep_all(grids: &[GridSpec]) -> Vec<VerificationRecord> {
    let jobs: Vec<_> = grids
        .iter()
        .flat_map(|g| points(g).into_iter().map(move |p| (g.inequality_id(), p, g.tol())))
        .collect();
    jobs.into_par_iter().map(|(id, p, tol)| evaluate(id, p, tol)).collect()
}

/// Report over explicit grids, plus the elapsed wall time.
pub fn run_grids(grids: Vec<GridSpec>, tol: f64) -> (Report, Duration) {
    let t = Instant::now();
    let records = sweep_all(&grids);
    let report = Report::new(tol, grids, records);
    (report, t.elapsed())
}

/// Parallel counterpart of `verify_all`.
pub fn verify(only: Option<&[InequalityId]>, tol: f64) -> Result<(Report, Duration)> {
    Ok(run_grids(default_grids(only, tol)?, tol))
}
