use natural_rep::{
    algebra_generation_check, hermitian_forms, key_recover, product_relations,
    tangent_identity_checks, untwisted_tangent_checks,
};
use ring_core::{Elem, FiniteRing};
use serde_json::json;

use super::untwisted;
use crate::{adjoint_context, natural_context, Case, CliError, Result, SuiteConfig};

fn antisymmetric(r: &FiniteRing) -> Result<Elem> {
    r.antisymmetric_unit()
        .ok_or_else(|| CliError::Usage(format!("{} has no unit a with θ(a) = −a", r.label())))
}

/// Matrix-unit recovery, vanishing products, algebra generation and the invariant form in the
/// natural module of `²A_n`.
pub(crate) fn key_lemma(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let nat = natural_context(cfg)?;
    let r = nat.ring();
    let a = antisymmetric(r)?;
    let ctx = nat.sigma()?;
    let mut cases = Vec::new();
    for c in 0..ctx.twisted().num_classes() {
        let rec = key_recover(&nat, c, a)?;
        cases.push(
            Case::check(format!("recover [{c}]"), rec.matches)
                .detail(json!({ "kind": rec.kind, "roots": rec.roots })),
        );
        let rel = product_relations(&nat, c)?;
        for (name, ok) in &rel.relations {
            cases.push(Case::check(format!("products [{c}] {name}"), *ok));
        }
    }
    let gens = ctx.all_generators()?;
    let alg = algebra_generation_check(r, &gens, cfg.budget)?;
    cases.push(Case::check("algebra-generation", alg.full).detail(&alg));
    if r.is_field() {
        let f = hermitian_forms(ctx, &gens)?;
        cases.push(Case::check("hermitian-form", f.hermitian && f.nondegenerate).detail(&f));
    }
    Ok(cases)
}

/// The tangent identities in the adjoint module, twisted and untwisted.
pub(crate) fn tangent(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let ctx = adjoint_context(cfg)?;
    let a = antisymmetric(ctx.ring())?;
    let mut cases = Vec::new();
    for t in tangent_identity_checks(&ctx, a)?.cases {
        cases.push(Case::check(
            format!("[{}] {}", t.class, t.identity),
            t.holds,
        ));
    }
    for t in untwisted_tangent_checks(&untwisted::group(cfg)?)?.cases {
        cases.push(Case::check(
            format!("root {} {}", t.class, t.identity),
            t.holds,
        ));
    }
    Ok(cases)
}
