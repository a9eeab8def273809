use proptest::prelude::*;
use ring_core::{ring_from_name, Elem, FiniteRing, ThetaIdeal};
use std::sync::OnceLock;

const NAMES: [&str; 8] = ["gf4", "gf9", "gf25", "gf343", "dual-gf9", "z3xz3", "quad-z5-2", "z36"];

fn rings() -> &'static Vec<FiniteRing> {
    static R: OnceLock<Vec<FiniteRing>> = OnceLock::new();
    R.get_or_init(|| NAMES.iter().map(|n| ring_from_name(n).unwrap()).collect())
}

fn ring_and_elems(k: usize) -> impl Strategy<Value = (usize, Vec<Elem>)> {
    (0..NAMES.len()).prop_flat_map(move |i| {
        let n = rings()[i].size() as u16;
        (Just(i), proptest::collection::vec((0..n).prop_map(Elem), k))
    })
}

proptest! {
    #[test]
    fn theta_is_an_automorphism_of_the_requested_order((i, v) in ring_and_elems(2)) {
        let r = &rings()[i];
        let (a, b) = (v[0], v[1]);
        prop_assert_eq!(r.theta(r.add(a, b)), r.add(r.theta(a), r.theta(b)));
        prop_assert_eq!(r.theta(r.mul(a, b)), r.mul(r.theta(a), r.theta(b)));
        prop_assert_eq!(r.theta_pow(a, r.theta_order() as u32), a);
        prop_assert_eq!(r.theta(r.one()), r.one());
    }

    #[test]
    fn fixed_subring_is_closed((i, v) in ring_and_elems(2)) {
        let r = &rings()[i];
        let fa = r.orbit_trace(v[0]);
        let fb = r.orbit_product(v[1]);
        prop_assert!(r.is_fixed(fa) && r.is_fixed(fb));
        prop_assert!(r.is_fixed(r.add(fa, fb)));
        prop_assert!(r.is_fixed(r.mul(fa, fb)));
    }

    #[test]
    fn theta_preserves_units((i, v) in ring_and_elems(2)) {
        let r = &rings()[i];
        let (a, b) = (v[0], v[1]);
        prop_assert_eq!(r.is_unit(a), r.is_unit(r.theta(a)));
        if r.is_unit(a) && r.is_unit(b) {
            let ab = r.mul(a, b);
            prop_assert!(r.is_unit(ab));
            prop_assert_eq!(r.theta(r.inv(ab).unwrap()), r.inv(r.theta(ab)).unwrap());
        }
    }

    #[test]
    fn ring_axioms_on_samples((i, v) in ring_and_elems(3)) {
        let r = &rings()[i];
        let (a, b, c) = (v[0], v[1], v[2]);
        prop_assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
        prop_assert_eq!(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
        prop_assert_eq!(r.sub(r.add(a, b), b), a);
    }

    #[test]
    fn apair_operations_stay_in_the_group((i, v) in ring_and_elems(3)) {
        let r = &rings()[i];
        prop_assume!(r.theta_order() == 2);
        let pairs = r.a_pairs();
        let x = pairs[v[0].idx() % pairs.len()];
        let y = pairs[v[1].idx() % pairs.len()];
        prop_assert!(r.is_apair(r.a_op(x, y)));
        prop_assert!(r.is_apair(r.a_inv(x)));
        prop_assert!(r.is_apair(r.a_act(v[2], x)));
        prop_assert_eq!(r.a_act(v[2], r.a_op(x, y)), r.a_op(r.a_act(v[2], x), r.a_act(v[2], y)));
    }

    #[test]
    fn generated_ideals_are_theta_invariant((i, v) in ring_and_elems(3)) {
        let r = &rings()[i];
        let j = ThetaIdeal::generated(r, &v[..1]);
        prop_assert!(j.contains(v[0]));
        for &a in j.elements() {
            prop_assert!(j.contains(r.theta(a)));
            prop_assert!(j.contains(r.mul(v[1], a)));
            prop_assert!(j.contains(r.add(a, r.mul(v[2], v[0]))));
        }
    }
}
