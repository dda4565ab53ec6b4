use core::fmt;
use core::str::FromStr;

use crate::error::Error;

/// Every inequality, ordering and positivity statement the crate checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum InequalityId {
    IntILower,
    IntIUpper,
    TowerMonotone,
    TowerExpBound,
    IntIShiftedUpper,
    TowerProductUpper,
    TowerExpProductUpper,
    IntKNextOrder,
    IntKSmallOrder,
    IntKExpSmallOrder,
    IntKGammaConst,
    IntKExpGammaConst,
    UDiagNonneg,
    VDiagNonneg,
    NConstExceedsOne,
    StruveCrossLower,
    StruveCrossUpper,
    KRatioMonotone,
    TuranianOrdering,
    KGapMonotone,
    KGapLower,
    KGapUpper,
    KGapCertificate,
    XnuKIsmailLower,
    XnuKBariczLower,
    XnuKUpper,
    K0GammaRatioLower,
    K0SqrtLower,
    K0SqrtUpper,
    GammaRatioSqrt,
    K0LukeLower,
    K0LukeUpper,
    IOrderMonotone,
    KOrderDecreasing,
    KOrderIncreasing,
    IPositive,
    KPositive,
}

/// Which report operation covers an id, for ids that bound a quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundFamily {
    IntI,
    IntIShifted,
    Tower,
    IntK,
    StruveCross,
    KGap,
    XnuK,
    K0,
}

/// A predicate on one grid dimension with a human-readable description.
#[derive(Clone, Copy)]
pub struct Pred<T> {
    pub test: fn(T) -> bool,
    pub text: &'static str,
}

impl<T> fmt::Debug for Pred<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.text)
    }
}

/// Validity region of an id. `None` marks a dimension the id does not use.
#[derive(Debug, Clone, Copy)]
pub struct ParamDomain {
    pub nu: Option<Pred<f64>>,
    /// β for K-integral ids, γ for tower ids.
    pub bg: Option<Pred<f64>>,
    pub bg_name: &'static str,
    pub n: Option<Pred<u32>>,
    pub x: bool,
}

const ANY_NU: Pred<f64> = Pred {
    test: |v| v.is_finite(),
    text: "nu finite",
};
const NU_GT_MHALF: Pred<f64> = Pred {
    test: |v| v > -0.5 && v.is_finite(),
    text: "nu > -1/2",
};
const NU_GT_MONE: Pred<f64> = Pred {
    test: |v| v > -1.0 && v.is_finite(),
    text: "nu > -1",
};
const NU_GE_HALF: Pred<f64> = Pred {
    test: |v| v >= 0.5 && v.is_finite(),
    text: "nu >= 1/2",
};
const NU_GT_HALF: Pred<f64> = Pred {
    test: |v| v > 0.5 && v.is_finite(),
    text: "nu > 1/2",
};
const NU_LT_HALF: Pred<f64> = Pred {
    test: |v| v < 0.5 && v.is_finite(),
    text: "nu < 1/2",
};
const NU_GE_ZERO: Pred<f64> = Pred {
    test: |v| v >= 0.0 && v.is_finite(),
    text: "nu >= 0",
};
const NU_POS: Pred<f64> = Pred {
    test: |v| v > 0.0 && v.is_finite(),
    text: "nu > 0",
};
const NU_GT_ONE: Pred<f64> = Pred {
    test: |v| v > 1.0 && v.is_finite(),
    text: "nu > 1",
};
const NU_GE_ONE: Pred<f64> = Pred {
    test: |v| v >= 1.0 && v.is_finite(),
    text: "nu >= 1",
};
const BETA_OPEN: Pred<f64> = Pred {
    test: |b| b > -1.0 && b < 1.0,
    text: "-1 < beta < 1",
};
const BETA_POS: Pred<f64> = Pred {
    test: |b| b > 0.0 && b < 1.0,
    text: "0 < beta < 1",
};
const GAMMA_RANGE: Pred<f64> = Pred {
    test: |g| (0.0..1.0).contains(&g),
    text: "0 <= gamma < 1",
};
const N_ANY: Pred<u32> = Pred {
    test: |n| n <= 6,
    text: "0 <= n <= 6",
};
const N_STEP: Pred<u32> = Pred {
    test: |n| n <= 5,
    text: "0 <= n <= 5",
};
const N_POS: Pred<u32> = Pred {
    test: |n| (1..=6).contains(&n),
    text: "1 <= n <= 6",
};

const fn dom(
    nu: Option<Pred<f64>>,
    bg: Option<Pred<f64>>,
    bg_name: &'static str,
    n: Option<Pred<u32>>,
    x: bool,
) -> ParamDomain {
    ParamDomain { nu, bg, bg_name, n, x }
}

impl InequalityId {
    pub const ALL: [InequalityId; 37] = {
        use InequalityId::*;
        [
            IntILower,
            IntIUpper,
            TowerMonotone,
            TowerExpBound,
            IntIShiftedUpper,
            TowerProductUpper,
            TowerExpProductUpper,
            IntKNextOrder,
            IntKSmallOrder,
            IntKExpSmallOrder,
            IntKGammaConst,
            IntKExpGammaConst,
            UDiagNonneg,
            VDiagNonneg,
            NConstExceedsOne,
            StruveCrossLower,
            StruveCrossUpper,
            KRatioMonotone,
            TuranianOrdering,
            KGapMonotone,
            KGapLower,
            KGapUpper,
            KGapCertificate,
            XnuKIsmailLower,
            XnuKBariczLower,
            XnuKUpper,
            K0GammaRatioLower,
            K0SqrtLower,
            K0SqrtUpper,
            GammaRatioSqrt,
            K0LukeLower,
            K0LukeUpper,
            IOrderMonotone,
            KOrderDecreasing,
            KOrderIncreasing,
            IPositive,
            KPositive,
        ]
    };

    pub fn as_str(self) -> &'static str {
        use InequalityId::*;
        match self {
            IntILower => "int_i_lower",
            IntIUpper => "int_i_upper",
            TowerMonotone => "tower_monotone",
            TowerExpBound => "tower_exp_bound",
            IntIShiftedUpper => "int_i_shifted_upper",
            TowerProductUpper => "tower_product_upper",
            TowerExpProductUpper => "tower_exp_product_upper",
            IntKNextOrder => "int_k_next_order",
            IntKSmallOrder => "int_k_small_order",
            IntKExpSmallOrder => "int_k_exp_small_order",
            IntKGammaConst => "int_k_gamma_const",
            IntKExpGammaConst => "int_k_exp_gamma_const",
            UDiagNonneg => "u_diag_nonneg",
            VDiagNonneg => "v_diag_nonneg",
            NConstExceedsOne => "n_const_exceeds_one",
            StruveCrossLower => "struve_cross_lower",
            StruveCrossUpper => "struve_cross_upper",
            KRatioMonotone => "k_ratio_monotone",
            TuranianOrdering => "turanian_ordering",
            KGapMonotone => "k_gap_monotone",
            KGapLower => "k_gap_lower",
            KGapUpper => "k_gap_upper",
            KGapCertificate => "k_gap_certificate",
            XnuKIsmailLower => "xnu_k_ismail_lower",
            XnuKBariczLower => "xnu_k_baricz_lower",
            XnuKUpper => "xnu_k_upper",
            K0GammaRatioLower => "k0_gamma_ratio_lower",
            K0SqrtLower => "k0_sqrt_lower",
            K0SqrtUpper => "k0_sqrt_upper",
            GammaRatioSqrt => "gamma_ratio_sqrt",
            K0LukeLower => "k0_luke_lower",
            K0LukeUpper => "k0_luke_upper",
            IOrderMonotone => "i_order_monotone",
            KOrderDecreasing => "k_order_decreasing",
            KOrderIncreasing => "k_order_increasing",
            IPositive => "i_positive",
            KPositive => "k_positive",
        }
    }

    /// The checked statement, in the form `lhs < rhs` or `lhs <= rhs`.
    pub fn statement(self) -> &'static str {
        use InequalityId::*;
        match self {
            IntILower => "x^nu I_{nu+1}(x) < int_0^x t^nu I_nu(t) dt",
            IntIUpper => "int_0^x t^nu I_nu(t) dt < x^nu I_nu(x)",
            TowerMonotone => "I_(nu,0,n+1)(x) < I_(nu,0,n)(x)",
            TowerExpBound => "I_(nu,-gamma,n)(x) <= (1-gamma)^-n e^{-gamma x} I_(nu,0,n)(x)",
            IntIShiftedUpper => "int_0^x t^nu I_{nu+n}(t) dt < 2(nu+n+1)/(2nu+n+1) x^nu I_{nu+n+1}(x)",
            TowerProductUpper => "I_(nu,0,n)(x) < prod_k (2nu+2k)/(2nu+k) x^nu I_{nu+n}(x)",
            TowerExpProductUpper => {
                "I_(nu,-gamma,n)(x) < (1-gamma)^-n prod_k (2nu+2k)/(2nu+k) e^{-gamma x} x^nu I_{nu+n}(x)"
            }
            IntKNextOrder => "int_x^inf t^nu K_nu(t) dt < x^nu K_{nu+1}(x)",
            IntKSmallOrder => "int_x^inf t^nu K_nu(t) dt < x^nu K_nu(x)",
            IntKExpSmallOrder => "int_x^inf e^{beta t} t^nu K_nu(t) dt < e^{beta x} x^nu K_nu(x) / (1-|beta|)",
            IntKGammaConst => "int_x^inf t^nu K_nu(t) dt <= M x^nu K_nu(x)",
            IntKExpGammaConst => "int_x^inf e^{beta t} t^nu K_nu(t) dt <= N e^{beta x} x^nu K_nu(x)",
            UDiagNonneg => "0 <= u(x) = M x^nu K_nu(x) - int_x^inf t^nu K_nu(t) dt",
            VDiagNonneg => "0 <= v(x) = N e^{beta x} x^nu K_nu(x) - int_x^inf e^{beta t} t^nu K_nu(t) dt",
            NConstExceedsOne => "1 < N (1-beta)",
            StruveCrossLower => "x^{nu-1} I_{nu+1} / (sqrt(pi) 2^{nu-1} Gamma(nu+1/2)) < I_nu L_{nu-1} - I_{nu-1} L_nu",
            StruveCrossUpper => {
                "I_nu L_{nu-1} - I_{nu-1} L_nu < (nu+1) x^{nu-1} I_{nu+1} / (sqrt(pi) 2^{nu-1} Gamma(nu+3/2))"
            }
            KRatioMonotone => "K_{nu-1}/K_nu increasing in x for nu > 1/2, constant at 1/2, decreasing below",
            TuranianOrdering => "Delta_nu < Delta_{nu-1} for nu > 1/2, equal at 1/2, reversed below",
            KGapMonotone => "gap_nu(1.05 x) < gap_nu(x)",
            KGapLower => "0 < gap_nu(x) = 1/x^2 - x^{nu-2} K_nu(x) / (2^{nu-1} Gamma(nu))",
            KGapUpper => "gap_nu(x) <= 1/(4(nu-1))",
            KGapCertificate => "x^{nu+1} K_{nu-1}(x) + 2 x^nu K_nu(x) < 2^nu Gamma(nu)",
            XnuKIsmailLower => "2^{nu-1} Gamma(nu) e^{-x} < x^nu K_nu(x)",
            XnuKBariczLower => "2^{nu-1} Gamma(nu) x K_1(x) <= x^nu K_nu(x)",
            XnuKUpper => "x^nu K_nu(x) < 2^{nu-1} Gamma(nu)",
            K0GammaRatioLower => "Gamma(x+1/2)/Gamma(x+1) < sqrt(2/pi) e^x K_0(x)",
            K0SqrtLower => "1/sqrt(x+1/2) < sqrt(2/pi) e^x K_0(x)",
            K0SqrtUpper => "sqrt(2/pi) e^x K_0(x) < 1/sqrt(x)",
            GammaRatioSqrt => "1/sqrt(x+1/2) < Gamma(x+1/2)/Gamma(x+1)",
            K0LukeLower => "8 sqrt(x)/(8x+1) < sqrt(2/pi) e^x K_0(x)",
            K0LukeUpper => "sqrt(2/pi) e^x K_0(x) < (16x+7)/((16x+9) sqrt(x))",
            IOrderMonotone => "I_nu(x) < I_{nu-1}(x)",
            KOrderDecreasing => "K_nu(x) < K_{nu-1}(x)",
            KOrderIncreasing => "K_{nu-1}(x) <= K_nu(x)",
            IPositive => "0 < I_nu(x)",
            KPositive => "0 < K_nu(x)",
        }
    }

    /// Whether the statement is strict.
    pub fn strict(self) -> bool {
        use InequalityId::*;
        !matches!(
            self,
            TowerExpBound
                | IntKGammaConst
                | IntKExpGammaConst
                | UDiagNonneg
                | VDiagNonneg
                | KGapUpper
                | XnuKBariczLower
                | KOrderIncreasing
        )
    }

    pub fn domain(self) -> ParamDomain {
        use InequalityId::*;
        let g = Some(GAMMA_RANGE);
        match self {
            IntILower => dom(Some(NU_GT_MHALF), None, "", None, true),
            IntIUpper => dom(Some(NU_GE_HALF), None, "", None, true),
            TowerMonotone => dom(Some(NU_GE_HALF), None, "", Some(N_STEP), true),
            TowerExpBound => dom(Some(NU_GE_HALF), g, "gamma", Some(N_ANY), true),
            IntIShiftedUpper => dom(Some(NU_GT_MHALF), None, "", Some(N_ANY), true),
            TowerProductUpper => dom(Some(NU_GE_ZERO), None, "", Some(N_POS), true),
            TowerExpProductUpper => dom(Some(NU_GE_HALF), g, "gamma", Some(N_POS), true),
            IntKNextOrder => dom(Some(ANY_NU), None, "", None, true),
            IntKSmallOrder => dom(Some(NU_LT_HALF), None, "", None, true),
            IntKExpSmallOrder => dom(Some(NU_LT_HALF), Some(BETA_OPEN), "beta", None, true),
            IntKGammaConst => dom(Some(NU_GE_HALF), None, "", None, true),
            IntKExpGammaConst => dom(Some(NU_GE_HALF), Some(BETA_OPEN), "beta", None, true),
            UDiagNonneg => dom(Some(NU_GT_HALF), None, "", None, true),
            VDiagNonneg => dom(Some(NU_GT_HALF), Some(BETA_POS), "beta", None, true),
            NConstExceedsOne => dom(Some(NU_GT_HALF), Some(BETA_POS), "beta", None, false),
            StruveCrossLower | StruveCrossUpper => dom(Some(NU_GT_MHALF), None, "", None, true),
            KRatioMonotone | TuranianOrdering | KPositive => dom(Some(ANY_NU), None, "", None, true),
            KGapMonotone | KGapLower | KGapCertificate | XnuKUpper => dom(Some(NU_POS), None, "", None, true),
            KGapUpper => dom(Some(NU_GT_ONE), None, "", None, true),
            XnuKIsmailLower => dom(Some(NU_GT_HALF), None, "", None, true),
            XnuKBariczLower => dom(Some(NU_GE_ONE), None, "", None, true),
            K0GammaRatioLower | K0SqrtLower | K0SqrtUpper | GammaRatioSqrt | K0LukeLower | K0LukeUpper => {
                dom(None, None, "", None, true)
            }
            IOrderMonotone => dom(Some(NU_GE_HALF), None, "", None, true),
            KOrderDecreasing => dom(Some(NU_LT_HALF), None, "", None, true),
            KOrderIncreasing => dom(Some(NU_GE_HALF), None, "", None, true),
            IPositive => dom(Some(NU_GT_MONE), None, "", None, true),
        }
    }

    pub fn family(self) -> Option<BoundFamily> {
        use InequalityId::*;
        Some(match self {
            IntILower | IntIUpper => BoundFamily::IntI,
            IntIShiftedUpper => BoundFamily::IntIShifted,
            TowerMonotone | TowerExpBound | TowerProductUpper | TowerExpProductUpper => BoundFamily::Tower,
            IntKNextOrder | IntKSmallOrder | IntKExpSmallOrder | IntKGammaConst | IntKExpGammaConst | UDiagNonneg
            | VDiagNonneg | NConstExceedsOne => BoundFamily::IntK,
            StruveCrossLower | StruveCrossUpper => BoundFamily::StruveCross,
            KGapMonotone | KGapLower | KGapUpper | KGapCertificate => BoundFamily::KGap,
            XnuKIsmailLower | XnuKBariczLower | XnuKUpper => BoundFamily::XnuK,
            K0GammaRatioLower | K0SqrtLower | K0SqrtUpper | GammaRatioSqrt | K0LukeLower | K0LukeUpper => {
                BoundFamily::K0
            }
            KRatioMonotone | TuranianOrdering | IOrderMonotone | KOrderDecreasing | KOrderIncreasing | IPositive
            | KPositive => return None,
        })
    }
}

impl fmt::Display for InequalityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InequalityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        InequalityId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or(Error::Domain("unknown inequality id"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip_and_are_unique() {
        for (i, id) in InequalityId::ALL.iter().enumerate() {
            assert_eq!(id.as_str().parse::<InequalityId>().unwrap(), *id);
            for other in &InequalityId::ALL[i + 1..] {
                assert_ne!(id.as_str(), other.as_str());
            }
        }
        assert!("nope".parse::<InequalityId>().is_err());
    }

    #[test]
    fn all_lists_every_variant_once() {
        for (i, id) in InequalityId::ALL.iter().enumerate() {
            assert_eq!(*id as usize, i);
        }
        assert_eq!(InequalityId::ALL.len(), InequalityId::KPositive as usize + 1);
    }
}
