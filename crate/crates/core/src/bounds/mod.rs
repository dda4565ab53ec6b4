//! Analytic bounds on Bessel integrals and on `K_ν` itself, the ratio and
//! Turánian monotonicity results, and the diagnostics used in their proofs.
//!
//! Scalar bound functions return the bound value alone. The `*_bounds`
//! operations return a [`BoundReport`] that lists every bound applicable to
//! the query, each tagged with its [`InequalityId`], and marks the tightest.

pub(crate) mod gap;
mod ids;
pub(crate) mod int_i;
pub(crate) mod int_k;
pub(crate) mod ratio;

use alloc::string::String;
use alloc::vec::Vec;

pub use gap::{k0_bounds, k_gap, k_gap_at_zero, k_gap_bounds, k_gap_certificate, k_gap_value, xnu_k_envelope};
pub use ids::{BoundFamily, InequalityId, ParamDomain};
pub use int_i::{
    int_i_bounds, int_i_lower, int_i_shifted_bounds, int_i_shifted_upper, int_i_upper_halfplus, repeated_i_exp_bound,
    repeated_i_exp_product_upper, repeated_i_product_upper, tower_bounds, tower_product,
};
pub use int_k::{int_k_bounds, m_const, n_const, struve_cross_bounds, u_diag, v_diag};
pub use ratio::{k_ratio, solve_k_ratio_root, turanian, RootResult};

use crate::math::EPS;
use crate::quadrature::QuadratureResult;
use crate::special_fn::FnValue;

/// One bound in a report.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundEntry {
    pub id: InequalityId,
    pub side: Side,
    pub value: f64,
    pub strict: bool,
    /// Signed distance from the bounded quantity, positive when the bound
    /// holds; present when the report carries the quantity.
    pub margin: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Side {
    Lower,
    Upper,
}

/// Applicable bounds for one query. `lower`/`upper` are the tightest entries.
#[derive(Debug, Clone, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundReport {
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    pub strict_lower: bool,
    pub strict_upper: bool,
    pub inequality_ids: Vec<InequalityId>,
    pub domain_note: String,
    pub entries: Vec<BoundEntry>,
    /// The bounded quantity, when the report computed it.
    pub quantity: Option<FnValue>,
}

impl BoundReport {
    pub(crate) fn new(note: &str) -> Self {
        BoundReport {
            domain_note: String::from(note),
            ..Default::default()
        }
    }

    pub(crate) fn push(&mut self, id: InequalityId, side: Side, value: f64, strict: bool) {
        let margin = self.quantity.map(|q| match side {
            Side::Lower => q.value - value,
            Side::Upper => value - q.value,
        });
        self.entries.push(BoundEntry {
            id,
            side,
            value,
            strict,
            margin,
        });
        if !self.inequality_ids.contains(&id) {
            self.inequality_ids.push(id);
        }
        match side {
            Side::Lower if self.lower.map_or(true, |l| value > l) => {
                self.lower = Some(value);
                self.strict_lower = strict;
            }
            Side::Upper if self.upper.map_or(true, |u| value < u) => {
                self.upper = Some(value);
                self.strict_upper = strict;
            }
            _ => {}
        }
    }

    /// Attaches the bounded quantity and fills in every entry's margin.
    pub fn with_quantity(mut self, q: FnValue) -> Self {
        self.quantity = Some(q);
        for e in &mut self.entries {
            e.margin = Some(match e.side {
                Side::Lower => q.value - e.value,
                Side::Upper => e.value - q.value,
            });
        }
        self
    }

    /// The entry with the given id and side, if present.
    pub fn entry(&self, id: InequalityId, side: Side) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.id == id && e.side == side)
    }
}

/// A value with an absolute error estimate, with propagating arithmetic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Val {
    pub v: f64,
    pub e: f64,
}

impl Val {
    pub fn exact(v: f64) -> Val {
        Val {
            v,
            e: 2.0 * EPS * v.abs(),
        }
    }

    pub fn scale(self, c: f64) -> Val {
        let v = self.v * c;
        Val {
            v,
            e: self.e * c.abs() + EPS * v.abs(),
        }
    }

    pub fn mul(self, o: Val) -> Val {
        let v = self.v * o.v;
        Val {
            v,
            e: self.v.abs() * o.e + o.v.abs() * self.e + EPS * v.abs(),
        }
    }

    pub fn div(self, o: Val) -> Val {
        let v = self.v / o.v;
        Val {
            v,
            e: (self.e + v.abs() * o.e) / o.v.abs() + EPS * v.abs(),
        }
    }

    pub fn add(self, o: Val) -> Val {
        let v = self.v + o.v;
        Val {
            v,
            e: self.e + o.e + EPS * v.abs(),
        }
    }

    pub fn sub(self, o: Val) -> Val {
        self.add(o.scale(-1.0))
    }

    pub fn fn_value(self) -> FnValue {
        FnValue::new(self.v, self.e)
    }
}

impl From<FnValue> for Val {
    fn from(f: FnValue) -> Val {
        Val {
            v: f.value,
            e: f.abs_err,
        }
    }
}

impl From<QuadratureResult> for Val {
    fn from(q: QuadratureResult) -> Val {
        Val {
            v: q.value,
            e: q.abs_err,
        }
    }
}
