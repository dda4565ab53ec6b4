//! Modified Bessel functions `I_ν`, `K_ν`, the modified Struve function `L_ν`,
//! exponentially weighted Bessel integrals, and a catalogue of analytic bounds
//! on those integrals, together with a grid-sweep harness that checks every
//! bound numerically.
//!
//! The crate is `no_std` and only needs `alloc`. Elementary functions come
//! from [`libm`]. IO, report formats and the command-line front end live in
//! the companion `besselbound` crate.
//!
//! ```
//! use besselbound_core::special_fn::bessel_k;
//!
//! let k = bessel_k(0.5, 1.0).unwrap();
//! let exact = (core::f64::consts::PI / 2.0).sqrt() * (-1.0f64).exp();
//! assert!((k.value - exact).abs() < 1e-15);
//! ```

#![no_std]
// `!(a > b)` is the NaN-rejecting form used for argument checks.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod bounds;
pub mod error;
pub mod integrals;
pub(crate) mod math;
pub mod quadrature;
pub mod roots;
pub mod special_fn;
pub mod verify;

pub use error::{Error, Result};
pub use special_fn::FnValue;
