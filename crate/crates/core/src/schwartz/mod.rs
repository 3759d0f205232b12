//! Compact perturbations of Fredholm operators on sequence space, their
//! Galerkin reduction and Schwartz index, and the cocycle operations.

mod algebra;
mod cocycle;
pub mod fixtures;
mod index;
mod operator;

pub use algebra::{cup_product, inverse, picture_convert, sum, suspension, ConvertOptions};
pub use cocycle::{Cocycle, CocycleJson, GroupData, GroupDataJson, Picture};
pub use index::{
    degree_of_cocycle_at_point, galerkin_at, galerkin_subspace, linear_ls_oracle, minimal_truncation, reduced_map,
    schwartz_index, schwartz_index_at, stabilization_check, GalerkinData, SchwartzIndex, SpanWitness,
    StabilizationEntry, StabilizationReport, GALERKIN_CAP,
};
pub use operator::{CompactPerturbation, FredholmOperator, OperatorJson, PerturbationJson, TailJson};

use crate::burnside::BurnsideError;
use crate::degree::DegreeError;
use crate::poly::PolyError;
use crate::rational::ParseRationalError;
use crate::rep::RepError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SchwartzError {
    #[error("InvalidOperator: {0}")]
    InvalidOperator(String),
    #[error("InvalidPerturbation: {0}")]
    InvalidPerturbation(String),
    #[error("InvalidCocycle: {0}")]
    InvalidCocycle(String),
    #[error("NotEquivariant: {0}")]
    NotEquivariant(String),
    #[error("NotSpanned: {0}")]
    NotSpanned(String),
    #[error("TruncationTooSmall: N = {n} is not admissible (least admissible N is {minimum})")]
    TruncationTooSmall { n: usize, minimum: usize },
    #[error("UnsupportedIndex: the reduced map is square only for Fredholm index 0, found {0}")]
    UnsupportedIndex(i64),
    #[error("InadmissibleRadius: radius {radius}: {reason}")]
    InadmissibleRadius { radius: String, reason: String },
    #[error("NoAdmissibleRadius: certification failed at every radius tried: {0:?}")]
    NoAdmissibleRadius(Vec<String>),
    #[error("OperatorMismatch: {0}")]
    OperatorMismatch(String),
    #[error("GroupMismatch: {0}")]
    GroupMismatch(String),
    #[error("PictureMismatch: {0}")]
    PictureMismatch(String),
    #[error("EigenvalueOnOne: 1 is an eigenvalue of the linear perturbation")]
    EigenvalueOnOne,
    #[error(transparent)]
    Degree(#[from] DegreeError),
    #[error(transparent)]
    Burnside(#[from] BurnsideError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Parse(#[from] ParseRationalError),
}

impl SchwartzError {
    /// Whether the failure is a certification failure rather than bad input.
    pub fn is_certification_failure(&self) -> bool {
        match self {
            SchwartzError::InadmissibleRadius { .. } | SchwartzError::NoAdmissibleRadius(_) => true,
            SchwartzError::Degree(e) => e.is_certification_failure(),
            _ => false,
        }
    }
}
