use besselbound_core::bounds::InequalityId;
use besselbound_core::verify::{default_grid, limit_checks, sweep, verify_all, GridSpec, Outcome};

#[test]
fn reruns_are_identical() {
    let a = verify_all(None, 1e-10).unwrap();
    let b = verify_all(None, 1e-10).unwrap();
    assert_eq!(format!("{a:?}"), format!("{b:?}"));
}

#[test]
fn every_id_is_covered_without_skips() {
    let r = verify_all(None, 1e-10).unwrap();
    assert_eq!(r.summary.len(), InequalityId::ALL.len());
    for (id, row) in InequalityId::ALL.iter().zip(&r.summary) {
        assert_eq!(*id, row.id);
        let g = default_grid(*id, 1e-10).unwrap();
        assert_eq!(row.records, g.len(), "{id}");
        assert!(row.records > 0, "{id}");
    }
    assert_eq!(r.records.len(), r.summary.iter().map(|s| s.records).sum::<usize>());
    assert_eq!(r.fails(), 0);
}

#[test]
fn filter_keeps_one_id() {
    let r = verify_all(Some(&[InequalityId::TuranianOrdering]), 1e-10).unwrap();
    assert_eq!(r.summary.len(), 1);
    assert!(r
        .records
        .iter()
        .all(|r| r.inequality_id == InequalityId::TuranianOrdering));
}

#[test]
fn pass_flag_matches_margin_rule() {
    let r = verify_all(None, 1e-10).unwrap();
    for rec in &r.records {
        if rec.margin.is_nan() {
            assert!(!rec.pass && rec.outcome == Outcome::Indeterminate);
            continue;
        }
        let slack = (1e-12 * rec.lhs.abs().max(rec.rhs.abs())).max(rec.oracle_err);
        assert_eq!(rec.pass, rec.margin > -slack);
        assert_eq!(rec.outcome == Outcome::Fail, !rec.pass);
    }
}

#[test]
fn spherical_k_constant_is_an_equality() {
    let g = GridSpec::new(
        InequalityId::IntKGammaConst,
        vec![0.5],
        vec![],
        vec![],
        vec![0.1, 1.0, 10.0],
        1e-10,
    )
    .unwrap();
    for r in sweep(&g) {
        assert_eq!(r.outcome, Outcome::Indeterminate);
        assert!(r.margin.abs() <= r.oracle_err);
    }
}

#[test]
fn tight_tolerance_surfaces_indeterminate_points() {
    let r = verify_all(Some(&[InequalityId::IntIUpper, InequalityId::IntKExpGammaConst]), 1e-14).unwrap();
    assert_eq!(r.fails(), 0);
    assert!(r.indeterminate() > 0);
}

#[test]
fn out_of_domain_points_are_rejected() {
    use InequalityId::*;
    assert!(GridSpec::new(UDiagNonneg, vec![0.5], vec![], vec![], vec![1.0], 1e-10).is_err());
    assert!(GridSpec::new(TowerExpBound, vec![1.0], vec![1.0], vec![1], vec![1.0], 1e-10).is_err());
    assert!(GridSpec::new(TowerMonotone, vec![1.0], vec![], vec![6], vec![1.0], 1e-10).is_err());
    assert!(GridSpec::new(K0LukeLower, vec![1.0], vec![], vec![], vec![1.0], 1e-10).is_err());
}

#[test]
fn limits() {
    let l = limit_checks().unwrap();
    assert!(l.len() >= 10);
    assert!(l.iter().all(|r| r.pass), "{l:#?}");
}
