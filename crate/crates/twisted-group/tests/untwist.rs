use ring_core::RingDescriptor;
use root_systems::{CartanType, RootSystem};
use twisted_group::untwist_isomorphism;

#[test]
fn product_ring_untwisting() {
    let base = RingDescriptor::parse("z3").unwrap();
    for (t, n, o) in [(CartanType::A, 3, 2), (CartanType::D, 4, 2), (CartanType::D, 4, 3)] {
        let sys = RootSystem::new(t, n).unwrap();
        let rho = sys.standard_twist(o).unwrap();
        let rep = untwist_isomorphism(&sys, &rho, &base, 100, 7).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.ring, if o == 2 { "z3xz3" } else { "z3xz3xz3" });
    }
}

#[test]
fn product_ring_needs_trivial_base_automorphism() {
    let sys = RootSystem::new(CartanType::A, 3).unwrap();
    let rho = sys.standard_twist(2).unwrap();
    let base = RingDescriptor::parse("gf9").unwrap();
    assert!(untwist_isomorphism(&sys, &rho, &base, 1, 0).is_err());
}
