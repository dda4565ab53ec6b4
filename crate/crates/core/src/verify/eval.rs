use super::Point;
use crate::bounds::gap::{
    baricz_val, certificate_val, ismail_val, k0_candidates, k0_scaled_val, k_gap_val, xnu_k_val, xnu_upper_val,
};
use crate::bounds::int_i::{
    exp_bound_val, exp_product_upper_val, int_i_lower_val, int_i_upper_val, product_upper_val, shifted_upper_val,
};
use crate::bounds::int_k::{n_const, struve_cross_pair, u_diag_val, v_diag_val, weighted_k};
use crate::bounds::{m_const, InequalityId, Val};
use crate::error::{Error, Result};
use crate::integrals::{integral_i_exp, integral_i_shifted, integral_k_exp, repeated_integral_i};
use crate::math::{exp, sqrt};
use crate::special_fn::bessel::xpow;
use crate::special_fn::gamma::gamma_ratio;
use crate::special_fn::{bessel_i, bessel_k, bessel_k_scaled, bessel_struve_cross};

/// Step used by the ids that compare a quantity at x and at 1.05 x.
pub(crate) const STEP: f64 = 1.05;

fn req<T>(v: Option<T>) -> Result<T> {
    v.ok_or(Error::Grid("point is missing a dimension the inequality needs"))
}

fn k_ratio_val(nu: f64, x: f64) -> Result<Val> {
    Ok(Val::from(bessel_k_scaled(nu - 1.0, x)?).div(Val::from(bessel_k_scaled(nu, x)?)))
}

fn turanian_val(nu: f64, x: f64) -> Result<Val> {
    let k = |m: f64| bessel_k(m, x).map(Val::from);
    let mid = k(nu)?;
    Ok(mid.mul(mid).sub(k(nu - 1.0)?.mul(k(nu + 1.0)?)))
}

/// Orders a pair so that the first element is expected to be the smaller.
fn ordered(nu: f64, a: Val, b: Val) -> (Val, Val) {
    if nu < 0.5 {
        (b, a)
    } else {
        (a, b)
    }
}

fn k0_side(id: InequalityId, x: f64) -> Result<(Val, Val)> {
    let q = k0_scaled_val(x)?;
    let (_, side, v) = k0_candidates(x)
        .into_iter()
        .find(|c| c.0 == id)
        .ok_or(Error::Grid("not a K_0 bound"))?;
    let b = Val::exact(v);
    Ok(match side {
        crate::bounds::Side::Lower => (b, q),
        crate::bounds::Side::Upper => (q, b),
    })
}

/// (lhs, rhs) of the statement `lhs < rhs` (or `<=`) for one id at one point.
pub(crate) fn sides(id: InequalityId, p: &Point, tol: f64) -> Result<(Val, Val)> {
    use InequalityId::*;
    let nu = || req(p.nu);
    let x = || req(p.x);
    let bg = || req(p.beta_or_gamma);
    let n = || req(p.n);
    let zero = Val::exact(0.0);
    Ok(match id {
        IntILower => (
            int_i_lower_val(nu()?, x()?)?,
            integral_i_exp(nu()?, 0.0, x()?, tol)?.into(),
        ),
        IntIUpper => (
            integral_i_exp(nu()?, 0.0, x()?, tol)?.into(),
            int_i_upper_val(nu()?, x()?)?,
        ),
        TowerMonotone => {
            let (nu, n, x) = (nu()?, n()?, x()?);
            (
                repeated_integral_i(nu, 0.0, n + 1, x, tol)?.into(),
                repeated_integral_i(nu, 0.0, n, x, tol)?.into(),
            )
        }
        TowerExpBound => {
            let (nu, g, n, x) = (nu()?, bg()?, n()?, x()?);
            (
                repeated_integral_i(nu, g, n, x, tol)?.into(),
                exp_bound_val(nu, g, n, x, tol)?,
            )
        }
        IntIShiftedUpper => {
            let (nu, n, x) = (nu()?, f64::from(n()?), x()?);
            (integral_i_shifted(nu, n, x, tol)?.into(), shifted_upper_val(nu, n, x)?)
        }
        TowerProductUpper => {
            let (nu, n, x) = (nu()?, n()?, x()?);
            (
                repeated_integral_i(nu, 0.0, n, x, tol)?.into(),
                product_upper_val(nu, n, x)?,
            )
        }
        TowerExpProductUpper => {
            let (nu, g, n, x) = (nu()?, bg()?, n()?, x()?);
            (
                repeated_integral_i(nu, g, n, x, tol)?.into(),
                exp_product_upper_val(nu, g, n, x)?,
            )
        }
        IntKNextOrder => {
            let (nu, x) = (nu()?, x()?);
            let b = Val::from(bessel_k_scaled(nu + 1.0, x)?).scale(exp(-x) * xpow(x, nu));
            (integral_k_exp(nu, 0.0, x, tol)?.into(), b)
        }
        IntKSmallOrder => (
            integral_k_exp(nu()?, 0.0, x()?, tol)?.into(),
            weighted_k(nu()?, 0.0, x()?)?,
        ),
        IntKExpSmallOrder => {
            let (nu, b, x) = (nu()?, bg()?, x()?);
            let w = weighted_k(nu, b, x)?.scale(1.0 / (1.0 - b.abs()));
            (integral_k_exp(nu, b, x, tol)?.into(), w)
        }
        IntKGammaConst => {
            let (nu, x) = (nu()?, x()?);
            (
                integral_k_exp(nu, 0.0, x, tol)?.into(),
                weighted_k(nu, 0.0, x)?.scale(m_const(nu)?),
            )
        }
        IntKExpGammaConst => {
            let (nu, b, x) = (nu()?, bg()?, x()?);
            (
                integral_k_exp(nu, b, x, tol)?.into(),
                weighted_k(nu, b, x)?.scale(n_const(nu, b)?),
            )
        }
        UDiagNonneg => (zero, u_diag_val(nu()?, x()?, tol)?),
        VDiagNonneg => (zero, v_diag_val(nu()?, bg()?, x()?, tol)?),
        NConstExceedsOne => {
            let b = bg()?;
            (Val::exact(1.0), Val::exact(n_const(nu()?, b)?).scale(1.0 - b))
        }
        StruveCrossLower => {
            let (lo, _) = struve_cross_pair(nu()?, x()?)?;
            (lo, bessel_struve_cross(nu()?, x()?)?.into())
        }
        StruveCrossUpper => {
            let (_, hi) = struve_cross_pair(nu()?, x()?)?;
            (bessel_struve_cross(nu()?, x()?)?.into(), hi)
        }
        KRatioMonotone => {
            let (nu, x) = (nu()?, x()?);
            ordered(nu, k_ratio_val(nu, x)?, k_ratio_val(nu, STEP * x)?)
        }
        TuranianOrdering => {
            let (nu, x) = (nu()?, x()?);
            ordered(nu, turanian_val(nu, x)?, turanian_val(nu - 1.0, x)?)
        }
        KGapMonotone => {
            let (nu, x) = (nu()?, x()?);
            (k_gap_val(nu, STEP * x)?, k_gap_val(nu, x)?)
        }
        KGapLower => (zero, k_gap_val(nu()?, x()?)?),
        KGapUpper => (k_gap_val(nu()?, x()?)?, Val::exact(0.25 / (nu()? - 1.0))),
        KGapCertificate => certificate_val(nu()?, x()?)?,
        XnuKIsmailLower => (ismail_val(nu()?, x()?)?, xnu_k_val(nu()?, x()?)?),
        XnuKBariczLower => (baricz_val(nu()?, x()?)?, xnu_k_val(nu()?, x()?)?),
        XnuKUpper => (xnu_k_val(nu()?, x()?)?, xnu_upper_val(nu()?)?),
        K0GammaRatioLower | K0SqrtLower | K0SqrtUpper | K0LukeLower | K0LukeUpper => k0_side(id, x()?)?,
        GammaRatioSqrt => {
            let x = x()?;
            (
                Val::exact(1.0 / sqrt(x + 0.5)),
                Val::exact(gamma_ratio(x + 0.5, x + 1.0)),
            )
        }
        IOrderMonotone => (bessel_i(nu()?, x()?)?.into(), bessel_i(nu()? - 1.0, x()?)?.into()),
        KOrderDecreasing => (bessel_k(nu()?, x()?)?.into(), bessel_k(nu()? - 1.0, x()?)?.into()),
        KOrderIncreasing => (bessel_k(nu()? - 1.0, x()?)?.into(), bessel_k(nu()?, x()?)?.into()),
        IPositive => (zero, bessel_i(nu()?, x()?)?.into()),
        KPositive => (zero, bessel_k(nu()?, x()?)?.into()),
    })
}
