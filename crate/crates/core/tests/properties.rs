use besselbound_core::bounds::{int_i_bounds, int_k_bounds, k_gap, k_ratio, turanian, xnu_k_envelope};
use besselbound_core::special_fn::{bessel_i, bessel_k, gamma_fn, struve_l};
use proptest::prelude::*;

fn close(a: f64, b: f64, scale: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * scale
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn k_is_even_in_order(nu in -20.0f64..20.0, x in 1e-3f64..60.0) {
        let a = bessel_k(nu, x).unwrap().value;
        let b = bessel_k(-nu, x).unwrap().value;
        prop_assert!(close(a, b, a.abs(), 1e-14));
    }

    #[test]
    fn k_recurrence(nu in -10.0f64..10.0, x in 1e-2f64..60.0) {
        // K_{ν+1} - K_{ν-1} = (2ν/x) K_ν
        let (lo, mid, hi) = (bessel_k(nu - 1.0, x).unwrap().value, bessel_k(nu, x).unwrap().value, bessel_k(nu + 1.0, x).unwrap().value);
        prop_assert!(close(hi - lo, 2.0 * nu / x * mid, hi.abs().max(lo.abs()), 1e-12));
    }

    #[test]
    fn i_recurrence(nu in 0.0f64..10.0, x in 1e-2f64..60.0) {
        // I_{ν-1} - I_{ν+1} = (2ν/x) I_ν
        let (lo, mid, hi) = (bessel_i(nu - 1.0, x).unwrap().value, bessel_i(nu, x).unwrap().value, bessel_i(nu + 1.0, x).unwrap().value);
        prop_assert!(close(lo - hi, 2.0 * nu / x * mid, lo.abs(), 1e-12));
    }

    #[test]
    fn wronskian(nu in -0.9f64..15.0, x in 1e-2f64..100.0) {
        // I_ν K_{ν+1} + I_{ν+1} K_ν = 1/x
        let w = bessel_i(nu, x).unwrap().value * bessel_k(nu + 1.0, x).unwrap().value
            + bessel_i(nu + 1.0, x).unwrap().value * bessel_k(nu, x).unwrap().value;
        prop_assert!(close(w * x, 1.0, 1.0, 1e-12));
    }

    #[test]
    fn struve_recurrence(nu in -0.4f64..8.0, x in 1e-2f64..30.0) {
        // L_{ν-1} - L_{ν+1} = (2ν/x) L_ν + (x/2)^ν / (√π Γ(ν+3/2))
        let l = |m: f64| struve_l(m, x).unwrap().value;
        let src = (0.5 * x).powf(nu) / (std::f64::consts::PI.sqrt() * gamma_fn(nu + 1.5).unwrap().value);
        let lhs = l(nu - 1.0) - l(nu + 1.0);
        let rhs = 2.0 * nu / x * l(nu) + src;
        prop_assert!(close(lhs, rhs, l(nu - 1.0).abs().max(rhs.abs()), 1e-10));
    }

    #[test]
    fn positivity(nu in -0.99f64..20.0, x in 1e-3f64..100.0) {
        prop_assert!(bessel_i(nu, x).unwrap().value > 0.0);
        prop_assert!(bessel_k(nu, x).unwrap().value > 0.0);
    }

    #[test]
    fn int_i_sandwich(nu in -0.45f64..8.0, x in 1e-2f64..40.0) {
        let r = int_i_bounds(nu, x).unwrap();
        let q = r.quantity.unwrap();
        for e in &r.entries {
            prop_assert!(e.margin.unwrap() > -(1e-12 * q.value.abs()).max(q.abs_err), "{:?}", e);
        }
    }

    #[test]
    fn int_k_upper(nu in -2.0f64..8.0, beta in 0.0f64..0.95, x in 1e-2f64..40.0) {
        let r = int_k_bounds(nu, beta, x).unwrap();
        let q = r.quantity.unwrap();
        for e in &r.entries {
            prop_assert!(e.margin.unwrap() > -(1e-12 * q.value.abs()).max(q.abs_err), "{:?}", e);
        }
    }

    #[test]
    fn ratio_regimes(nu in 0.0f64..6.0, x in 1e-2f64..40.0) {
        let (a, b) = (k_ratio(nu, x).unwrap(), k_ratio(nu, 1.1 * x).unwrap());
        if nu > 0.55 {
            prop_assert!(b > a);
        } else if nu < 0.45 {
            prop_assert!(b < a);
        }
        let d = turanian(nu, x).unwrap() - turanian(nu - 1.0, x).unwrap();
        if nu > 0.55 {
            prop_assert!(d < 0.0);
        } else if nu < 0.45 {
            prop_assert!(d > 0.0);
        }
    }

    #[test]
    fn gap_in_range(nu in 1.05f64..12.0, x in 1e-3f64..50.0) {
        let g = k_gap(nu, x).unwrap();
        prop_assert!(g > 0.0 && g <= 0.25 / (nu - 1.0) + 1e-12);
    }

    #[test]
    fn envelope_holds(nu in 0.55f64..12.0, x in 1e-3f64..50.0) {
        let r = xnu_k_envelope(nu, x).unwrap();
        let q = r.quantity.unwrap().value;
        for e in &r.entries {
            prop_assert!(e.margin.unwrap() >= -1e-13 * q, "{:?}", e);
        }
    }
}
