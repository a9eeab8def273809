//! Finite commutative rings carrying an automorphism θ of order 1, 2 or 3,
//! theta-invariant ideals, and the twisted parameter group 𝒜(R).

mod apair;
mod descriptor;
mod ideal;
mod ring;

pub use apair::APair;
pub use descriptor::{make_ring, ring_from_name, RingDescriptor};
pub use ideal::{Quotient, ThetaIdeal};
pub use ring::{Elem, FiniteRing, MAX_RING_SIZE};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("ring axiom failed: {0}")]
    Axiom(String),
    #[error("ring of size {0} is outside the supported range")]
    TooLarge(usize),
    #[error("unsupported ring: {0}")]
    Unsupported(String),
    #[error("cannot parse ring descriptor: {0}")]
    Parse(String),
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("{0} must be a unit in this ring")]
    NeedsUnit(&'static str),
    #[error("({0}, {1}) does not satisfy t·θ(t) = u + θ(u)")]
    NotAPair(String, String),
    #[error("element is not in the required ideal")]
    NotInIdeal,
    #[error("combination is not fixed by theta")]
    NotFixed,
}
