//! Congruence subgroups of twisted Chevalley groups at a `θ`-invariant level `J`.
//!
//! All membership tests assume the adjoint module, where the center is trivial and the full
//! congruence subgroup `G_σ(R,J)` coincides with the principal one.

mod level;
mod theorems;
mod uhv;

pub use level::LevelData;
pub use theorems::{
    center_of, commutator_theorem_instance, elementary_level, generator_level, normal_closure_level_check, sandwich_check,
    CommutatorTheoremReport, NormalClosureReport, SandwichReport, Subgroups,
};
pub use uhv::{big_cell, InUhv, Letter, TorusReport, Utv};

use adjoint_group::GroupError;
use ring_core::RingError;
use twisted_group::TwistedGroupError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CongruenceError {
    #[error(transparent)]
    Twisted(#[from] TwistedGroupError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("congruence subgroups are only implemented in the adjoint module")]
    NotAdjoint,
    #[error("the level ideal is not contained in the radical")]
    NotInRadical,
    #[error("element does not reduce to the identity modulo the level")]
    NotInKernel,
    #[error("element is outside the big cell")]
    OutsideBigCell,
    #[error("{0}")]
    Domain(String),
}

impl CongruenceError {
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            CongruenceError::Group(GroupError::Budget(_))
                | CongruenceError::Twisted(TwistedGroupError::Group(GroupError::Budget(_)))
        )
    }
}
