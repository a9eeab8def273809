mod agroup;
mod congruence;
mod enumeration;
mod natural;
mod twisted;
mod untwisted;

pub use enumeration::{enumerate, Enumeration};
pub use twisted::tag_counts;

use crate::{Case, CliError, Report, Result, SuiteConfig};

/// Every suite name accepted by [`run_suite`], in the order `all` runs them.
pub const SUITES: &[&str] = &[
    "steinberg",
    "commutators",
    "twisted-commutators",
    "conjugation",
    "whlemmas",
    "congruence-uhv",
    "levels",
    "bruhat",
    "key-lemma",
    "tangent",
    "untwist",
    "agroup",
];

/// Suites that enumerate the whole group; `all` only runs them over rings of at most this size.
const ENUMERATING: &[&str] = &["levels", "bruhat"];
const ALL_ENUMERATION_RING: u64 = 4;

fn dispatch(suite: &str, cfg: &SuiteConfig) -> Result<Vec<Case>> {
    match suite {
        "steinberg" => untwisted::steinberg(cfg),
        "commutators" => untwisted::commutators(cfg),
        "twisted-commutators" => twisted::twisted_commutators(cfg),
        "conjugation" => twisted::conjugation(cfg),
        "whlemmas" => twisted::whlemmas(cfg),
        "congruence-uhv" => congruence::uhv(cfg),
        "levels" => congruence::levels(cfg),
        "bruhat" => enumeration::bruhat(cfg),
        "key-lemma" => natural::key_lemma(cfg),
        "tangent" => natural::tangent(cfg),
        "untwist" => twisted::untwist(cfg),
        "agroup" => agroup::agroup(cfg),
        _ => Err(CliError::Usage(format!(
            "unknown suite {suite:?}; expected one of {} or all",
            SUITES.join(", ")
        ))),
    }
}

/// Runs one suite, or every applicable suite for `all`.
pub fn run_suite(suite: &str, cfg: &SuiteConfig) -> Result<Report> {
    if suite != "all" {
        return Ok(Report::new(suite, cfg, dispatch(suite, cfg)?));
    }
    let mut cases = Vec::new();
    for &s in SUITES {
        if ENUMERATING.contains(&s) && cfg.ring.size() > ALL_ENUMERATION_RING {
            cases.push(Case::skip(
                format!("{s}/"),
                format!(
                    "enumeration is run by `all` only over rings of size ≤ {ALL_ENUMERATION_RING}"
                ),
            ));
            continue;
        }
        match dispatch(s, cfg) {
            Ok(cs) => cases.extend(cs.into_iter().map(|mut c| {
                c.id = format!("{s}/{}", c.id);
                c
            })),
            Err(CliError::Budget(e)) => return Err(CliError::Budget(e)),
            Err(e) => cases.push(Case::skip(format!("{s}/"), format!("not applicable: {e}"))),
        }
    }
    Ok(Report::new("all", cfg, cases))
}
