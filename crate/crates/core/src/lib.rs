//! Finite-scale toolkit for uniformly locally finite (ulf) coarse geometry.
//!
//! The crate is organised around five layers:
//!
//! * [`coarse`]: ulf graphs, entourages, filtrations and extended metrics.
//! * [`actions`]: partial translations, Schreier graphs, box spaces, the
//!   edge-coloring decomposition into involutions and the 2×2 trick.
//! * [`roe`]: finite-propagation operators, ball compressions, ghost
//!   profiles, sparse-diagonal assembly and the `h^γ` correction.
//! * [`prop_a`]: probability smoothing and finite property-A witnesses.
//! * [`rep_check`]: exact finite-dimensional versions of the left-right
//!   representation identities and the compression-state identity.
//!
//! Everything is deterministic; randomness only enters through
//! [`generators`], which takes explicit seeds.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod actions;
pub mod coarse;
pub mod error;
pub mod generators;
pub mod prop_a;
pub mod rep_check;
pub mod roe;

pub use error::{Error, Result};
pub use num_complex::Complex64;
