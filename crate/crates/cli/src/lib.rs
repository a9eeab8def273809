//! Library side of the `twchev` command: configs, reports, suite runners, enumeration and
//! descriptions of root data.

pub mod config;
pub mod describe;
pub mod report;
pub mod suites;

use std::sync::Arc;

use adjoint_group::GroupError;
use chevalley_basis::ChevalleyError;
use congruence::CongruenceError;
use natural_rep::{NatContext, NatError};
use ring_core::{make_ring, FiniteRing, RingError};
use root_systems::{CartanType, RootError, RootSystem};
use twisted_group::{SigmaContext, TwistedGroupError};
use twisted_roots::{build_twisted, TwistError};

pub use config::{RepChoice, SuiteConfig, TypeSpec};
pub use describe::describe;
pub use report::{Case, Report, Status, Summary};
pub use suites::{enumerate, run_suite, Enumeration, SUITES};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("enumeration budget exceeded: {0}")]
    Budget(String),
    #[error("{0}")]
    Failed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Budget(_) => EXIT_BUDGET,
            _ => EXIT_USAGE,
        }
    }

    fn wrap(budget: bool, e: impl std::fmt::Display) -> CliError {
        if budget {
            CliError::Budget(e.to_string())
        } else {
            CliError::Failed(e.to_string())
        }
    }
}

impl From<RingError> for CliError {
    fn from(e: RingError) -> CliError {
        CliError::Usage(e.to_string())
    }
}

impl From<RootError> for CliError {
    fn from(e: RootError) -> CliError {
        CliError::Usage(e.to_string())
    }
}

impl From<TwistError> for CliError {
    fn from(e: TwistError) -> CliError {
        CliError::Usage(e.to_string())
    }
}

impl From<ChevalleyError> for CliError {
    fn from(e: ChevalleyError) -> CliError {
        CliError::Failed(e.to_string())
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> CliError {
        CliError::wrap(matches!(e, GroupError::Budget(_)), e)
    }
}

impl From<TwistedGroupError> for CliError {
    fn from(e: TwistedGroupError) -> CliError {
        CliError::wrap(e.is_budget(), e)
    }
}

impl From<CongruenceError> for CliError {
    fn from(e: CongruenceError) -> CliError {
        CliError::wrap(e.is_budget(), e)
    }
}

impl From<NatError> for CliError {
    fn from(e: NatError) -> CliError {
        let budget = matches!(
            e,
            NatError::Budget(_)
                | NatError::Group(GroupError::Budget(_))
                | NatError::Twisted(TwistedGroupError::Group(GroupError::Budget(_)))
        );
        CliError::wrap(budget, e)
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

pub fn ring(cfg: &SuiteConfig) -> Result<Arc<FiniteRing>> {
    Ok(Arc::new(make_ring(&cfg.ring)?))
}

pub fn root_system(t: TypeSpec) -> Result<RootSystem> {
    Ok(RootSystem::new(t.typ, t.rank)?)
}

fn require_twisted(t: TypeSpec) -> Result<()> {
    if !t.is_twisted() {
        return Err(CliError::Usage(format!("{t} has no twist; use e.g. 2{t}")));
    }
    Ok(())
}

/// The adjoint twisted group for the configured type and ring.
pub fn adjoint_context(cfg: &SuiteConfig) -> Result<SigmaContext> {
    let t = cfg.twisted_type;
    require_twisted(t)?;
    let sys = root_system(t)?;
    let rho = sys.standard_twist(t.order)?;
    let tw = Arc::new(build_twisted(&sys, &rho)?);
    Ok(SigmaContext::adjoint(ring(cfg)?, tw)?)
}

/// The natural-module context for `²A_n`.
pub fn natural_context(cfg: &SuiteConfig) -> Result<NatContext> {
    let t = cfg.twisted_type;
    if t.typ != CartanType::A || t.order != 2 {
        return Err(CliError::Usage(format!(
            "the natural module is only built for 2A_n, not {t}"
        )));
    }
    Ok(NatContext::twisted(ring(cfg)?, t.rank)?)
}

/// A context over the module chosen by [`SuiteConfig::effective_rep`].
pub enum Context {
    Adjoint(SigmaContext),
    Natural(NatContext),
}

impl Context {
    pub fn build(cfg: &SuiteConfig) -> Result<Context> {
        match cfg.effective_rep() {
            RepChoice::Adjoint => Ok(Context::Adjoint(adjoint_context(cfg)?)),
            RepChoice::Natural => Ok(Context::Natural(natural_context(cfg)?)),
        }
    }

    pub fn sigma(&self) -> Result<&SigmaContext> {
        match self {
            Context::Adjoint(c) => Ok(c),
            Context::Natural(n) => Ok(n.sigma()?),
        }
    }
}
