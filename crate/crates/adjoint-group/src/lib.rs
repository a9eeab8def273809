//! Elementary Chevalley groups over finite rings, as matrix groups in the adjoint module (or
//! any [`Representation`] supplied by another crate).

mod bfs;
mod group;
mod mat;
mod rep;
mod steinberg;

pub use bfs::{closure, commutator_closure, normal_closure, ElementSet, DEFAULT_BUDGET};
pub use group::{CaseReport, Character, Chevalley};
pub use mat::Mat;
pub use rep::{RepKind, Representation, Sparse};
pub use steinberg::{Sampling, SteinbergReport};

use ring_core::RingError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("parameter must be a unit")]
    NotAUnit,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("x_α and x_−α do not satisfy a commutator relation")]
    OppositeRoots,
    #[error("enumeration exceeded the budget of {0} elements")]
    Budget(usize),
    #[error("unexpected result: {0}")]
    Mismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
}
