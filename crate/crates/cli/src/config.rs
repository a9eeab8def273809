use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use ring_core::RingDescriptor;
use root_systems::CartanType;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// A root system label with an optional twist order: `A3`, `2A3`, `3D4`, `2E6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct TypeSpec {
    pub order: u8,
    pub typ: CartanType,
    pub rank: usize,
}

impl TypeSpec {
    pub fn is_twisted(&self) -> bool {
        self.order > 1
    }
}

impl FromStr for TypeSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<TypeSpec, CliError> {
        let bad = || CliError::Usage(format!("bad type {s:?}; expected e.g. A3, 2A3, 3D4"));
        let s = s.trim();
        let (order, rest) = match s.chars().next() {
            Some(c @ '1'..='9') => (c.to_digit(10).unwrap() as u8, &s[1..]),
            _ => (1, s),
        };
        let mut chars = rest.chars();
        let typ = match chars.next().ok_or_else(bad)?.to_ascii_uppercase() {
            'A' => CartanType::A,
            'D' => CartanType::D,
            'E' => CartanType::E,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        if !(1..=3).contains(&order) || rank == 0 {
            return Err(bad());
        }
        Ok(TypeSpec { order, typ, rank })
    }
}

impl fmt::Display for TypeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order > 1 {
            write!(f, "{}", self.order)?;
        }
        write!(f, "{}{}", self.typ, self.rank)
    }
}

impl TryFrom<String> for TypeSpec {
    type Error = CliError;

    fn try_from(s: String) -> Result<TypeSpec, CliError> {
        s.parse()
    }
}

impl From<TypeSpec> for String {
    fn from(t: TypeSpec) -> String {
        t.to_string()
    }
}

/// Which module the group acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum RepChoice {
    Adjoint,
    Natural,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub twisted_type: TypeSpec,
    pub ring: RingDescriptor,
    pub seed: u64,
    pub samples: usize,
    pub budget: usize,
    #[serde(default)]
    pub exhaustive: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rep: Option<RepChoice>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
}

impl SuiteConfig {
    pub fn new(twisted_type: &str, ring: &str) -> Result<SuiteConfig, CliError> {
        Ok(SuiteConfig {
            twisted_type: twisted_type.parse()?,
            ring: RingDescriptor::parse(ring)?,
            seed: 0,
            samples: 5,
            budget: adjoint_group::DEFAULT_BUDGET,
            exhaustive: false,
            rep: None,
            out: None,
        })
    }

    pub fn with_seed(mut self, seed: u64) -> SuiteConfig {
        self.seed = seed;
        self
    }

    pub fn with_samples(mut self, samples: usize) -> SuiteConfig {
        self.samples = samples;
        self
    }

    pub fn with_budget(mut self, budget: usize) -> SuiteConfig {
        self.budget = budget;
        self
    }

    pub fn with_rep(mut self, rep: RepChoice) -> SuiteConfig {
        self.rep = Some(rep);
        self
    }

    pub fn exhaustive(mut self) -> SuiteConfig {
        self.exhaustive = true;
        self
    }

    /// The natural module for `²A_n`, the adjoint module otherwise, unless overridden.
    pub fn effective_rep(&self) -> RepChoice {
        self.rep.unwrap_or(match self.twisted_type {
            TypeSpec {
                order: 2,
                typ: CartanType::A,
                ..
            } => RepChoice::Natural,
            _ => RepChoice::Adjoint,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("config serializes")
    }

    pub fn from_json(s: &str) -> Result<SuiteConfig, CliError> {
        serde_json::from_str(s).map_err(|e| CliError::Usage(format!("bad config: {e}")))
    }
}
