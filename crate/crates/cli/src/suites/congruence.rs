use congruence::{
    center_of, commutator_theorem_instance, generator_level, normal_closure_level_check,
    sandwich_check, Letter, LevelData, Subgroups,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ring_core::{Elem, FiniteRing, ThetaIdeal};
use serde_json::json;

use crate::{adjoint_context, Case, CliError, Result, SuiteConfig};

fn is_nilpotent(r: &FiniteRing, e: Elem) -> bool {
    let mut x = e;
    for _ in 0..r.size() {
        if x == r.zero() {
            return true;
        }
        x = r.mul(x, e);
    }
    false
}

/// The level generated by every nilpotent element.
fn nil_level(cfg: &SuiteConfig) -> Result<LevelData> {
    let ctx = adjoint_context(cfg)?;
    let r = ctx.ring();
    let nil: Vec<Elem> = r
        .elements()
        .filter(|&e| e != r.zero() && is_nilpotent(r, e))
        .collect();
    if nil.is_empty() {
        return Err(CliError::Usage(format!(
            "{} has no nonzero nilpotent level",
            r.label()
        )));
    }
    Ok(LevelData::generated(ctx, &nil)?)
}

fn random_letter(lv: &LevelData, rng: &mut ChaCha8Rng) -> Letter {
    let ctx = lv.ctx();
    let n = ctx.twisted().num_classes();
    let c = rng.gen_range(0..n);
    match rng.gen_range(0..3) {
        0 => Letter::Elementary {
            class: c,
            t: lv.sample_j_param(c, rng),
        },
        1 => Letter::Relative {
            class: c,
            r: ctx.sample_param(c, rng),
            u: lv.sample_j_param(c, rng),
        },
        _ => {
            let o = rng.gen_range(0..n);
            Letter::Conjugate {
                outer: o,
                r: ctx.sample_param(o, rng),
                inner: c,
                t: lv.sample_j_param(c, rng),
            }
        }
    }
}

/// The `U·H·V` constructions at the nilpotent level of the ring.
pub(crate) fn uhv(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let lv = nil_level(cfg)?;
    let ctx = lv.ctx();
    let g = ctx.group();
    let pos = ctx.positive_order();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut cases = Vec::new();
    for i in 0..cfg.samples {
        let c = pos[rng.gen_range(0..pos.len())];
        let sol = lv.in_uhv_solve(
            c,
            ctx.sample_param(c, &mut rng),
            lv.sample_j_param(c, &mut rng),
        )?;
        cases.push(Case::check(
            format!("in-uhv {i:04} [{c}]"),
            lv.in_uhv_holds(&sol)?,
        ));
    }
    for i in 0..cfg.samples {
        let word: Vec<Letter> = (0..6).map(|_| random_letter(&lv, &mut rng)).collect();
        let m = word.iter().try_fold(ctx.identity(), |acc, l| {
            Ok::<_, CliError>(g.mul(&acc, &l.matrix(&lv)?))
        })?;
        let f = lv.uhv_membership(&word)?;
        let d = lv.g_sigma_j_decompose(&m)?;
        let ok = g.product([&f.u_mat, &f.h_mat, &f.v_mat]) == m
            && (&d.u, &d.chi, &d.v) == (&f.u, &f.chi, &f.v);
        cases.push(Case::check(format!("uhv-word {i:04}"), ok));
    }
    for i in 0..cfg.samples {
        let len = rng.gen_range(1..=8);
        let word: Vec<Letter> = (0..len).map(|_| random_letter(&lv, &mut rng)).collect();
        let m = word.iter().try_fold(ctx.identity(), |acc, l| {
            Ok::<_, CliError>(g.mul(&acc, &l.matrix(&lv)?))
        })?;
        let d = lv.g_sigma_j_decompose(&m)?;
        let ok = lv.in_g_sigma_rj(&m) && g.product([&d.u_mat, &d.h_mat, &d.v_mat]) == m;
        cases.push(Case::check(format!("decompose {i:04}"), ok));
    }
    let t = lv.torus_report()?;
    cases.push(Case::check("torus", t.agree).detail(&t));
    Ok(cases)
}

/// Perfectness, normal closures, the sandwich, the center, and a proper level when the ring
/// is not a field.
pub(crate) fn levels(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let ctx = adjoint_context(cfg)?;
    let r = ctx.ring();
    let subs = Subgroups::new(&ctx, cfg.budget)?;
    let e = subs.ambient()?;
    let gens: Vec<_> = subs.generators().iter().map(|p| p.0.clone()).collect();
    let mut cases = Vec::new();
    let comm = subs.commutator_subgroup(&gens, &gens)?;
    cases.push(
        Case::check("perfect", comm.len() == e.len())
            .detail(json!({ "order": e.len(), "commutator": comm.len() })),
    );

    let nontrivial = |c: usize| {
        ctx.domain(c)
            .into_iter()
            .find(|&p| !ctx.x_class(c, p).map(|m| m.is_identity(r)).unwrap_or(true))
    };
    for c in ctx.positive_order() {
        let Some(z) = nontrivial(c) else { continue };
        let rep = normal_closure_level_check(&ctx, c, z, cfg.budget)?;
        let ok = rep.equal && (rep.proper || rep.closure_order == e.len());
        cases.push(Case::check(format!("normal-closure [{c}]"), ok).detail(&rep));
    }

    let s = sandwich_check(&ctx, &e, cfg.budget)?;
    cases.push(Case::check("sandwich", s.passed() && s.level_size == r.size()).detail(&s));
    let z = center_of(&ctx, &e)?;
    cases.push(Case::check("center-trivial", z.len() == 1).detail(json!({ "center": z.len() })));
    let unit = LevelData::new(ctx.clone(), ThetaIdeal::unit(r))?;
    let ct = commutator_theorem_instance(&unit, cfg.budget, None)?;
    cases.push(Case::check("commutator-theorem", ct.passed).detail(&ct));

    if !r.is_field() {
        let found = ctx.positive_order().into_iter().find_map(|c| {
            ctx.domain(c)
                .into_iter()
                .find(|&p| {
                    let j = generator_level(&ctx, p);
                    !j.is_zero() && !j.is_unit_ideal()
                })
                .map(|p| (c, p))
        });
        match found {
            Some((c, p)) => {
                let rep = normal_closure_level_check(&ctx, c, p, cfg.budget)?;
                cases.push(Case::check("proper-level", rep.equal && rep.proper).detail(&rep));
            }
            None => cases.push(
                Case::check("proper-level", false)
                    .detail("no generator has a proper nonzero θ-invariant level"),
            ),
        }
    }
    Ok(cases)
}
