use std::sync::Arc;

use adjoint_group::Chevalley;
use chevalley_basis::ChevalleyData;
use natural_rep::{tangent_identity_checks, untwisted_tangent_checks, NatContext, NatError};
use ring_core::ring_from_name;
use root_systems::{CartanType, RootSystem};
use twisted_group::SigmaContext;

#[test]
fn untwisted_identity_over_z5() {
    let sys = RootSystem::new(CartanType::A, 2).unwrap();
    let grp = Chevalley::adjoint(Arc::new(ring_from_name("z5").unwrap()), Arc::new(ChevalleyData::new(&sys)));
    let rep = untwisted_tangent_checks(&grp).unwrap();
    assert_eq!(rep.cases.len(), 6);
    assert!(rep.passed());
}

#[test]
fn a1_types_over_gf9() {
    let ctx = SigmaContext::standard(CartanType::A, 3, 2, "gf9").unwrap();
    for a in ctx.ring().antisymmetric_units().into_iter().take(2) {
        let rep = tangent_identity_checks(&ctx, a).unwrap();
        // Four A₁ classes with one identity each, four A₁² classes with two.
        assert_eq!(rep.cases.len(), 12);
        assert!(rep.passed(), "{rep:?}");
    }
}

#[test]
fn a2_classes_over_gf25() {
    let ctx = SigmaContext::standard(CartanType::A, 4, 2, "gf25").unwrap();
    for a in ctx.ring().antisymmetric_units().into_iter().take(2) {
        let rep = tangent_identity_checks(&ctx, a).unwrap();
        assert_eq!(rep.cases.len(), 16);
        assert!(rep.passed(), "{rep:?}");
    }
}

#[test]
fn hypotheses_are_enforced() {
    let ctx = SigmaContext::standard(CartanType::A, 4, 2, "gf9").unwrap();
    let a = ctx.ring().antisymmetric_unit().unwrap();
    assert!(matches!(tangent_identity_checks(&ctx, a), Err(NatError::Hypothesis(_))));
    assert!(matches!(tangent_identity_checks(&ctx, ctx.ring().one()), Err(NatError::Hypothesis(_))));
    let nat = NatContext::from_name(3, "gf9").unwrap();
    assert!(matches!(tangent_identity_checks(nat.sigma().unwrap(), a), Err(NatError::Hypothesis(_))));
}
