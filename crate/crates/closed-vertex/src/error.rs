//! Error types, one enum per subsystem.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("invalid line pair ({j},{k}): need 1 <= j < k <= 4")]
    InvalidPair { j: u8, k: u8 },
    #[error("invalid pair key {0:?}: expected two digits \"jk\" with 1 <= j < k <= 4")]
    InvalidPairKey(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("degrees must not all be zero")]
    AllDegreesZero,
    #[error("degree must be positive for the single-curve formula")]
    ZeroDegree,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ToricError {
    #[error("target class has negative h coefficient {0}")]
    NegativeHDegree(i64),
    #[error("vertex support check needs all degrees >= 1, got ({0}, {1}, {2})")]
    ZeroVertexDegree(u64, u64, u64),
    #[error("bad graph data: {0}")]
    BadGraphData(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NefError {
    #[error("surface classes have different numbers of exceptional coordinates ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("expected a surface class with {expected} exceptional coordinates, got {got}")]
    WrongDimension { expected: usize, got: usize },
    #[error("curve class lies outside the effective constraint of the certificate: {0}")]
    OutsideEffectiveCone(String),
}
