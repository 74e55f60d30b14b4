//! Isothermic quadrics, their Christoffel duals and the Jacobi elliptic
//! machinery behind them.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod duals;
pub mod elliptic;
pub mod error;
pub mod geometry;
pub mod grid;
pub mod lelliptic;
pub mod paracomplex;
pub mod quadrics;
pub mod reinbek;
pub mod verify;

pub use error::{Error, Result};
