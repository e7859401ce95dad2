// Copyright 2026 qfrel Contributors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("label collision: {0}")]
    LabelCollision(String),
    #[error("unknown label: {0}")]
    UnknownLabel(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("space mismatch: {0}")]
    SpaceMismatch(String),
    #[error("not Hermitian: max |A - A^dag| = {0:.3e}")]
    NotHermitian(f64),
    #[error("not unitary: max |U^dag U - 1| = {0:.3e}")]
    NotUnitary(f64),
    #[error("not a state: {0}")]
    NotAState(String),
    #[error("not an effect: {0}")]
    NotAnEffect(String),
    #[error("invalid time-reversal twist: {0}")]
    InvalidTwist(String),
    #[error("singular map: {0}")]
    Singular(String),
    #[error("degenerate spectrum: {0}")]
    DegenerateSpectrum(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
