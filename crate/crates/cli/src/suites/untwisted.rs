use std::sync::Arc;

use adjoint_group::{Chevalley, Sampling};
use chevalley_basis::ChevalleyData;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ring_core::Elem;

use crate::{ring, root_system, Case, Result, SuiteConfig};

pub(crate) fn group(cfg: &SuiteConfig) -> Result<Chevalley> {
    let sys = root_system(cfg.twisted_type)?;
    Ok(Chevalley::adjoint(
        ring(cfg)?,
        Arc::new(ChevalleyData::new(&sys)),
    ))
}

fn sampling(cfg: &SuiteConfig) -> Sampling {
    if cfg.exhaustive {
        Sampling::Exhaustive
    } else {
        Sampling::Seeded {
            seed: cfg.seed,
            n: cfg.samples,
        }
    }
}

pub(crate) fn steinberg(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let g = group(cfg)?;
    let rep = g.verify_steinberg(sampling(cfg))?;
    let mut cases: Vec<Case> = rep
        .cases
        .iter()
        .enumerate()
        .map(|(i, c)| Case::check(format!("{i:06} {}", c.case), c.equal))
        .collect();
    cases.push(Case::check("c-table", rep.c_table_consistent));
    Ok(cases)
}

/// `[x_α(t), x_β(u)]` against the commutator formula for every root pair `α ≠ ±β`.
pub(crate) fn commutators(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let g = group(cfg)?;
    let r = g.ring();
    let sys = g.system();
    let m = sys.num_roots();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let all: Vec<Elem> = r.elements().collect();
    let mut cases = Vec::new();
    for a in 0..m {
        for b in (0..m).filter(|&b| b != a && b != sys.neg(a)) {
            let inst: Vec<(Elem, Elem)> = if cfg.exhaustive {
                all.iter()
                    .flat_map(|&t| all.iter().map(move |&u| (t, u)))
                    .collect()
            } else {
                (0..cfg.samples)
                    .map(|_| {
                        (
                            all[rng.gen_range(0..all.len())],
                            all[rng.gen_range(0..all.len())],
                        )
                    })
                    .collect()
            };
            for (t, u) in inst {
                let c = g.verify_commutator(a, b, t, u)?;
                cases.push(Case::check(c.case, c.equal));
            }
        }
    }
    Ok(cases)
}
