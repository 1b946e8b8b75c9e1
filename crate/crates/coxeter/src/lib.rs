//! Finite Coxeter groups as permutation groups on their root systems.

pub mod datum;
pub mod group;
pub mod zphi;

pub use datum::{CoxeterDatum, Kind};
pub use group::{CoxeterGroup, Element, Reflection};
pub use zphi::Zphi;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("unsupported type {0}")]
    UnsupportedType(String),
    #[error("group {0} is larger than supported")]
    RankTooLarge(String),
    #[error("unknown generator label {0:?}")]
    BadLabel(String),
}
