use thiserror::Error;

use crate::vector::Vector;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root system kind {0}")]
    UnsupportedKind(String),
    #[error("cannot parse root system kind {0:?}")]
    BadKind(String),
    #[error("{0} is not a root")]
    NotARoot(Vector),
    #[error("{0} is not a vertex of the affine Coxeter complex")]
    NotAVertex(Vector),
    #[error("{0} is not a special vertex of type 0 (root-lattice point)")]
    NotTypeZero(Vector),
    #[error("{0} is not dominant")]
    NotDominant(Vector),
    #[error("dimension mismatch: expected rank {expected}, got {got}")]
    Rank { expected: usize, got: usize },
    #[error("gallery is negatively folded at step {0}")]
    NegativeFold(usize),
    #[error("fold script entry at step {0} is invalid: {1}")]
    BadScript(usize, String),
    #[error("malformed gallery: {0}")]
    MalformedGallery(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
