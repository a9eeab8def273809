//! The natural `(n+1)`-dimensional module of type `A_n` and the matrix computations that
//! live there: the `E₃(R)` identities, recovery of `π(X_α)` from twisted generators, algebra
//! generation, and tangent identities in the adjoint module.

mod algebra;
mod context;
mod e3;
mod key;
mod tangent;

pub use algebra::{algebra_generation_check, hermitian_forms, AlgebraReport, FormReport};
pub use context::{natural_representation, NatContext};
pub use e3::{e3_lemma_checks, E3Report, E3};
pub use key::{key_recover, product_relations, Recovered, RelationReport};
pub use tangent::{tangent_identity_checks, untwisted_tangent_checks, TangentCase, TangentReport};

use adjoint_group::GroupError;
use chevalley_basis::ChevalleyError;
use ring_core::RingError;
use root_systems::RootError;
use twisted_group::TwistedGroupError;
use twisted_roots::TwistError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NatError {
    #[error(transparent)]
    Twisted(#[from] TwistedGroupError),
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
    #[error("the natural module is only built for type A")]
    NotTypeA,
    #[error("no sign choice of matrix units reproduces the structure constants")]
    Signs,
    #[error("needs {0}")]
    Hypothesis(&'static str),
    #[error("residue-field rank needs a local ring")]
    NotLocal,
    #[error("span closure exceeded the budget of {0} products")]
    Budget(usize),
    #[error("class {0} has the wrong kind for this operation")]
    Kind(usize),
}
