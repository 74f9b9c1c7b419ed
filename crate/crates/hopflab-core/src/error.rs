//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum HopfError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("mu* undefined: 2*mu = kappa")]
    MuStarUndefined,
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("family/space mismatch: {0}")]
    FamilyMismatch(String),
    #[error("not on quadric N^(2m+1): {0}")]
    NotOnQuadric(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("nabla A unavailable for family {0}")]
    NablaAUnavailable(String),
    #[error("per-block Laplace action underdetermined for {0}; use the block engine (A2) or the classifier (C/D/E)")]
    FrameModuleUnavailable(String),
    #[error("not a basic function: monomial {0} is not circle-invariant")]
    NotBasic(String),
    #[error("incompatible scalar kinds: {0}")]
    ScalarKind(String),
    #[error("radical tower limit: {0}")]
    TowerDepth(String),
    #[error("negative radicand: {0}")]
    NegativeRadicand(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("inconsistent frame labels: {0}")]
    BadLabels(String),
    #[error("engines disagree: {0}")]
    EngineMismatch(String),
}

pub type Result<T> = std::result::Result<T, HopfError>;
