// Copyright 2026 qfrel Contributors
// SPDX-License-Identifier: Apache-2.0

//! Finite-dimensional models of energy-conserving quantum dynamics and the
//! fluctuation relations they satisfy.
//!
//! The crate builds dense operators on labeled tensor-product spaces, linear
//! time-reversals, Gibbs/partition maps, completely positive maps in Kraus
//! form, energy-ladder models with censored energy-conserving unitaries, and a
//! discretized spin-half particle. On top of those it provides residual
//! checkers for the Crooks-type channel identities, Jarzynski families, work
//! bounds, detailed balance, Petz recovery, and the approximate fluctuation
//! relations with their quantitative error bounds.

pub mod channel;
pub mod error;
pub mod gibbs;
pub mod ladder;
pub mod linalg;
pub mod operator;
pub mod particle;
pub mod report;
pub mod reversal;
pub mod scenarios;
pub mod space;
pub mod verifier;

pub use channel::Cpm;
pub use error::{Error, Result};
pub use gibbs::ThermalContext;
pub use operator::Operator;
pub use reversal::TimeReversal;
pub use space::TensorSpace;

/// Default tolerance for Hermiticity/unitarity predicates (max-abs deviation).
pub const DEFAULT_TOL: f64 = 1e-10;
