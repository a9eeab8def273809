use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ring_core::{APair, Elem, RingDescriptor};
use serde_json::json;
use twisted_group::{untwist_isomorphism, Param, SigmaContext};
use twisted_roots::ClassKind;

use crate::{adjoint_context, natural_context, root_system, Case, CliError, Result, SuiteConfig};

/// Every ordered class pair `[α] ≠ ±[β]` with seeded payloads, annotated with the matching branch.
pub(crate) fn twisted_commutators(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let ctx = adjoint_context(cfg)?;
    let reps = ctx.verify_all_commutators(cfg.samples, cfg.seed)?;
    Ok(reps
        .into_iter()
        .map(|c| {
            let id = format!("[{}]x[{}] {} {}", c.alpha, c.beta, c.p, c.q);
            let ok = c.passed();
            Case::check(id, ok)
                .branch(c.matched.clone())
                .detail(json!({ "tag": c.tag, "swapped": c.swapped, "branches": c.branches }))
        })
        .collect())
}

/// The pair-type tags seen in a commutator report, with their case counts.
pub fn tag_counts(cases: &[Case]) -> BTreeMap<String, usize> {
    let mut m = BTreeMap::new();
    for c in cases {
        if let Some(t) = c.detail.as_ref().and_then(|d| d["tag"].as_str()) {
            *m.entry(t.to_string()).or_insert(0) += 1;
        }
    }
    m
}

/// Units allowed as Weyl and torus parameters of class `c`.
fn class_units(ctx: &SigmaContext, c: usize) -> Vec<Elem> {
    let r = ctx.ring();
    let a1 = ctx.twisted().class(c).kind == ClassKind::A1;
    r.units()
        .into_iter()
        .filter(|&u| !a1 || r.is_fixed(u))
        .collect()
}

fn pick<T: Copy>(all: Vec<T>, cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Vec<T> {
    if cfg.exhaustive || all.len() <= cfg.samples {
        all
    } else {
        (0..cfg.samples)
            .map(|_| *all.choose(rng).expect("nonempty"))
            .collect()
    }
}

/// `w`-conjugation with the `d`-sign and torus conjugation, over every class pair.
pub(crate) fn conjugation(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let ctx = adjoint_context(cfg)?;
    let n = ctx.twisted().num_classes();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut cases = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for _ in 0..cfg.samples.max(1) {
                let t = ctx.sample_unit(a, &mut rng);
                let u = ctx.sample_param(b, &mut rng);
                let rep = ctx.conj_by_w(a, t, b, u)?;
                cases.push(Case::check(rep.case, rep.passed));
            }
        }
    }
    let all = ctx.self_conjugate_characters();
    for k in pick((0..all.len()).collect(), cfg, &mut rng) {
        for b in 0..n {
            let u = ctx.sample_param(b, &mut rng);
            let rep = ctx.conj_by_torus(&all[k], b, u)?;
            cases.push(Case::check(format!("χ{k} {}", rep.case), rep.passed));
        }
    }
    Ok(cases)
}

/// σ-fixedness of the generators, the `w`-inverse and `h`-multiplicativity lemmas, and the
/// `E₃` identities for the rank-one unitary group over the same ring.
pub(crate) fn whlemmas(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let ctx = adjoint_context(cfg)?;
    let r = ctx.ring();
    let g = ctx.group();
    let tw = ctx.twisted();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut cases = Vec::new();
    for c in 0..tw.num_classes() {
        let cl = tw.class(c).clone();
        let params = pick(ctx.domain(c), cfg, &mut rng);
        let units = pick(class_units(&ctx, c), cfg, &mut rng);
        let mut fixed = true;
        for &p in &params {
            fixed &= ctx.is_sigma_fixed(&ctx.x_class(c, p)?)?;
        }
        for &u in &units {
            fixed &= ctx.is_sigma_fixed(&ctx.w_unit(c, u)?)?
                && ctx.is_sigma_fixed(&ctx.h_class(c, u)?)?;
        }
        cases.push(
            Case::check(format!("sigma-fixed [{c}]"), fixed)
                .detail(json!({ "params": params.len(), "units": units.len() })),
        );

        let mut inverse = true;
        let mut product = true;
        if cl.kind == ClassKind::A2 {
            let pairs: Vec<APair> = pick(
                r.a_pairs().into_iter().filter(|p| r.is_unit(p.u)).collect(),
                cfg,
                &mut rng,
            );
            for &p in &pairs {
                let w = ctx.w_class(c, Param::Pair(p))?;
                let ubar_inv = r.inv(r.theta(p.u))?;
                let inv = APair::new(r.neg(r.product([p.t, p.u, ubar_inv])), r.theta(p.u));
                inverse &= ctx.inverse(&w)? == ctx.w_class(c, Param::Pair(inv))?;
                product &= w == ctx.w_class_unit(c, p.u)?;
            }
            let w1 = ctx.w_class_unit(c, r.one())?;
            for &u in &units {
                let w = ctx.w_class_unit(c, u)?;
                inverse &= ctx.inverse(&w)? == ctx.w_class_unit(c, r.theta(u))?;
                product &= ctx.h_class(c, u)? == g.mul(&ctx.w_class_unit(c, r.theta(u))?, &w1);
            }
            cases.push(Case::check(format!("w-to-h [{c}]"), product));
        } else {
            for &u in &units {
                let w = ctx.w_class(c, Param::Scalar(u))?;
                let mut prod = ctx.identity();
                for (i, &a) in cl.orbit.iter().enumerate() {
                    prod = g.mul(&prod, &g.w(a, r.theta_pow(u, i as u32))?);
                }
                product &= w == prod;
                inverse &= ctx.inverse(&w)? == ctx.w_class(c, Param::Scalar(r.neg(u)))?;
            }
            cases.push(Case::check(format!("w-orbit-product [{c}]"), product));
        }
        cases.push(Case::check(format!("w-inverse [{c}]"), inverse));

        let mut mult = true;
        for &u in &units {
            let h = ctx.h_class(c, u)?;
            mult &= ctx.inverse(&h)? == ctx.h_class(c, r.inv(u)?)?;
            for &v in &units {
                mult &= g.mul(&h, &ctx.h_class(c, v)?) == ctx.h_class(c, r.mul(u, v))?;
            }
        }
        cases.push(Case::check(format!("h-multiplicative [{c}]"), mult));
    }

    // The E₃ lemmas live in the natural module of the rank-one unitary group.
    if tw.rho().order() == 2 && r.theta_order() == 2 {
        let small = SuiteConfig {
            twisted_type: "2A2".parse()?,
            ..cfg.clone()
        };
        match natural_context(&small) {
            Ok(nat) => {
                let units = pick(r.units(), cfg, &mut rng);
                let rep = natural_rep::e3_lemma_checks(&nat, &units)?;
                cases.push(Case::check("e3-identities", rep.passed()).detail(&rep));
            }
            Err(e) => cases.push(Case::skip("e3-identities", e.to_string())),
        }
    }
    Ok(cases)
}

/// `G(R) → G_σ(R × ⋯ × R)` over the configured base ring.
pub(crate) fn untwist(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let t = cfg.twisted_type;
    crate::require_twisted(t)?;
    if matches!(cfg.ring, RingDescriptor::Product { .. }) {
        return Err(CliError::Usage(
            "untwist takes the base ring; the product is formed internally".into(),
        ));
    }
    let sys = root_system(t)?;
    let rho = sys.standard_twist(t.order)?;
    let rep = untwist_isomorphism(&sys, &rho, &cfg.ring, cfg.samples, cfg.seed)?;
    Ok(vec![
        Case::check("identity", rep.identity),
        Case::check("generator-images", rep.generator_images),
        Case::check("homomorphism", rep.homomorphism).detail(json!({ "words": rep.words })),
        Case::check("sigma-fixed", rep.sigma_fixed),
        Case::check("fixed-point-shape", rep.fixed_shape).detail(json!({ "ring": rep.ring })),
    ])
}
