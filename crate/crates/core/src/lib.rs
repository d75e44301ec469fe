//! Multiplicative construction of superoscillating functions.
//!
//! A superoscillating function is built as a product of low-bandlimit
//! factors, each contributing zeros; the product inherits every zero while
//! its bandlimit is only the sum of the factor bandlimits. This crate holds
//! the pure numerics:
//!
//! - [`signal`]: factor and product representations, exact evaluation and
//!   harmonic expansion of periodic products.
//! - [`constructors`]: the translated-sine, antisymmetric, translated-sinc and
//!   varied-bandwidth families.
//! - [`additive`]: the conventional minimum-energy kernel interpolant used as
//!   a baseline, solved at selectable precision.
//! - [`analysis`]: sampling, spectra, zeros, local frequencies, dynamic range
//!   and its analytic bounds.
//! - [`quantum`]: lifting a periodic wave function, reverse-engineering the
//!   Schrödinger potential and verifying the ground state.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

extern crate alloc;

pub mod additive;
pub mod analysis;
pub mod constructors;
mod error;
mod linalg;
pub mod math;
pub mod quantum;
pub mod scalar;
pub mod signal;

pub use error::{Error, Result};
pub use signal::{FactorKind, FactorSpec, HarmonicSum, HarmonicTerm, ProductSignalSpec, Signal};
