use natural_rep::{algebra_generation_check, hermitian_forms, NatContext, NatError};
use root_systems::CartanType;
use twisted_group::SigmaContext;

fn generators(nat: &NatContext) -> Vec<adjoint_group::Mat> {
    nat.sigma().unwrap().all_generators().unwrap()
}

#[test]
fn natural_generators_span_the_full_matrix_algebra() {
    for (n, ring) in [(2, "gf4"), (3, "gf9"), (3, "dual-gf9"), (4, "gf25")] {
        let nat = NatContext::from_name(n, ring).unwrap();
        let rep = algebra_generation_check(nat.ring(), &generators(&nat), 100_000).unwrap();
        assert_eq!(rep.dim, n + 1);
        assert!(rep.full, "{ring}: {rep:?}");
        assert_eq!(rep.rank, (n + 1) * (n + 1));
    }
}

#[test]
fn the_adjoint_module_is_also_generated() {
    let ctx = SigmaContext::standard(CartanType::A, 3, 2, "gf9").unwrap();
    let rep = algebra_generation_check(ctx.ring(), &ctx.all_generators().unwrap(), 1_000_000).unwrap();
    assert_eq!(rep.rank, 225);
    assert!(rep.full);
}

#[test]
fn a_single_generator_spans_little() {
    let nat = NatContext::from_name(2, "gf4").unwrap();
    let one = generators(&nat)[0].clone();
    let rep = algebra_generation_check(nat.ring(), &[one], 1000).unwrap();
    assert!(!rep.full);
    assert!(rep.rank <= 3);
}

#[test]
fn budget_and_ring_restrictions() {
    let nat = NatContext::from_name(3, "gf9").unwrap();
    assert!(matches!(algebra_generation_check(nat.ring(), &generators(&nat), 5), Err(NatError::Budget(5))));
    let split = NatContext::from_name(2, "z3xz3").unwrap();
    assert!(matches!(algebra_generation_check(split.ring(), &generators(&split), 1000), Err(NatError::NotLocal)));
}

#[test]
fn generators_preserve_a_hermitian_form() {
    for (n, ring) in [(2, "gf4"), (3, "gf9"), (4, "gf9")] {
        let nat = NatContext::from_name(n, ring).unwrap();
        let ctx = nat.sigma().unwrap();
        let gens = generators(&nat);
        let rep = hermitian_forms(ctx, &gens).unwrap();
        assert_eq!(rep.invariant_dim, 1);
        assert!(rep.hermitian && rep.nondegenerate);
        let r = nat.ring();
        let f = rep.form.unwrap();
        // The form pairs e_i with e_{n+2−i} only.
        for i in 0..=n {
            for j in 0..=n {
                assert_eq!(f.get(i, j) != r.zero(), i + j == n);
            }
        }
        for g in &gens {
            assert_eq!(g.theta(r).transpose().mul(r, &f).mul(r, g), f);
        }
    }
    let local = NatContext::from_name(3, "dual-gf9").unwrap();
    assert!(hermitian_forms(local.sigma().unwrap(), &generators(&local)).is_err());
}
