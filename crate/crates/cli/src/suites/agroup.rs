use rayon::prelude::*;
use ring_core::{APair, FiniteRing, RingError, ThetaIdeal};
use serde_json::json;

use crate::{ring, Case, CliError, Result, SuiteConfig};

fn needs_two(id: &str, e: RingError) -> Result<Case> {
    match e {
        RingError::NeedsUnit(_) => Ok(Case::skip(id, e.to_string())),
        e => Err(e.into()),
    }
}

/// The θ-invariant ideals of `r`, each one generated by a single element or by everything.
fn invariant_ideals(r: &FiniteRing) -> Vec<ThetaIdeal> {
    let mut out: Vec<ThetaIdeal> = Vec::new();
    for a in r.elements() {
        let j = ThetaIdeal::generated(r, &[a]);
        if !out.iter().any(|k| k.elements() == j.elements()) {
            out.push(j);
        }
    }
    out
}

/// Group laws of `𝒜(R)`, its central subgroup, and the decomposition helpers, over every
/// element of the configured ring.
pub(crate) fn agroup(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let r = ring(cfg)?;
    let r = &*r;
    if r.theta_order() != 2 {
        return Err(CliError::Usage(format!(
            "𝒜(R) needs θ of order 2; {} has order {}",
            r.label(),
            r.theta_order()
        )));
    }
    let all = r.a_pairs();
    let mut cases = Vec::new();

    let closed = all
        .par_iter()
        .all(|&x| all.iter().all(|&y| r.is_apair(r.a_op(x, y))));
    let identity = all
        .iter()
        .all(|&x| r.a_op(x, APair::ZERO) == x && r.a_op(APair::ZERO, x) == x);
    let inverse = all.iter().all(|&x| {
        r.is_apair(r.a_inv(x))
            && r.a_op(x, r.a_inv(x)) == APair::ZERO
            && r.a_op(r.a_inv(x), x) == APair::ZERO
    });
    let assoc = all.par_iter().all(|&x| {
        all.iter().all(|&y| {
            let xy = r.a_op(x, y);
            all.iter()
                .all(|&z| r.a_op(xy, z) == r.a_op(x, r.a_op(y, z)))
        })
    });
    cases.push(Case::check("closure", closed).detail(json!({ "order": all.len() })));
    cases.push(Case::check("identity", identity));
    cases.push(Case::check("inverse", inverse));
    cases.push(Case::check("associative", assoc));

    let central: Vec<APair> = r
        .elements()
        .filter(|&u| r.theta(u) == r.neg(u))
        .map(|u| APair::new(r.zero(), u))
        .collect();
    let sub = central
        .iter()
        .all(|&c| r.is_apair(c) && central.iter().all(|&d| central.contains(&r.a_op(c, d))));
    let commutes = central
        .par_iter()
        .all(|&c| all.iter().all(|&x| r.a_op(c, x) == r.a_op(x, c)));
    cases.push(
        Case::check("central-subgroup", sub && commutes).detail(json!({ "order": central.len() })),
    );

    let mut decompose = true;
    let mut skipped = None;
    for &x in &all {
        match r.a_decompose(x) {
            Ok((k, h)) => {
                decompose &= r.is_apair(k)
                    && r.is_apair(h)
                    && h.t == r.zero()
                    && r.theta(h.u) == r.neg(h.u)
                    && r.a_op(k, h) == x;
            }
            Err(e) => {
                skipped = Some(e);
                break;
            }
        }
    }
    cases.push(match skipped {
        Some(e) => needs_two("a-decompose", e)?,
        None => Case::check("a-decompose", decompose),
    });

    let ideals = invariant_ideals(r);
    let mut split = true;
    let mut skipped = None;
    'outer: for i in &ideals {
        for j in &ideals {
            for x in i.sum(r, j).a_pairs(r) {
                match r.a_ideal_split(x, i, j) {
                    Ok((p, q, c)) => {
                        split &= i.contains_pair(p)
                            && j.contains_pair(q)
                            && r.is_apair(p)
                            && r.is_apair(q)
                            && r.is_apair(c)
                            && c.t == r.zero()
                            && r.a_op(r.a_op(p, q), c) == x;
                    }
                    Err(e) => {
                        skipped = Some(e);
                        break 'outer;
                    }
                }
            }
        }
    }
    cases.push(match skipped {
        Some(e) => needs_two("a-ideal-split", e)?,
        None => Case::check("a-ideal-split", split).detail(json!({ "ideals": ideals.len() })),
    });

    // Every admissible (r, r₂, z): z a unit and r z + r₂ θ(z) fixed.
    let fixed = r.fixed_elements();
    let units = r.units();
    let mut sym = true;
    let mut count = 0usize;
    let mut skipped = None;
    'sym: for a in r.elements() {
        for &z in &units {
            for &f in &fixed {
                let b = r.div(r.sub(f, r.mul(a, z)), r.theta(z))?;
                match r.theta_symmetrize(a, b, None, z) {
                    Ok(t) => {
                        let tz = r.mul(t, z);
                        sym &= r.add(tz, r.theta(tz)) == f;
                        count += 1;
                    }
                    Err(e) => {
                        skipped = Some(e);
                        break 'sym;
                    }
                }
            }
        }
    }
    cases.push(match skipped {
        Some(e) => needs_two("theta-symmetrize", e)?,
        None => Case::check("theta-symmetrize", sym).detail(json!({ "instances": count })),
    });
    Ok(cases)
}
