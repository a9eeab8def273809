//! Twisted Chevalley groups `E′_σ(R)` realized inside a representation of the untwisted
//! group, with `σ` acting as a monomial conjugation composed with `θ` entrywise.

mod bruhat;
mod commutator;
mod conj;
mod sigma;
mod untwist;

pub use bruhat::{bruhat_count, BruhatCell, BruhatReport};
pub use commutator::{Candidate, CommutatorReport, Factor};
pub use conj::ConjReport;
pub use sigma::{Param, SigmaContext};
pub use untwist::{untwist_isomorphism, UntwistReport};

use adjoint_group::GroupError;
use chevalley_basis::ChevalleyError;
use ring_core::RingError;
use root_systems::RootError;
use twisted_roots::TwistError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TwistedGroupError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Twist(#[from] TwistError),
    #[error(transparent)]
    Chevalley(#[from] ChevalleyError),
    #[error("ring automorphism has order {0}, diagram automorphism has order {1}")]
    ThetaOrder(u8, u8),
    #[error("parameter outside the domain of class {0}: {1}")]
    Domain(usize, String),
    #[error("no monomial matrix realizes the graph automorphism in this representation")]
    NoSigma,
    #[error("character is not self-conjugate")]
    NotSelfConjugate,
    #[error("{0} requires a finite field")]
    NotAField(&'static str),
}

impl TwistedGroupError {
    /// Whether the error is an exhausted enumeration budget.
    pub fn is_budget(&self) -> bool {
        matches!(self, TwistedGroupError::Group(GroupError::Budget(_)))
    }
}
