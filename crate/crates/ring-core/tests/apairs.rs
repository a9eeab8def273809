use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ring_core::{ring_from_name, APair, Elem, FiniteRing, ThetaIdeal};

fn pick(r: &FiniteRing, rng: &mut ChaCha8Rng) -> Elem {
    Elem(rng.gen_range(0..r.size()) as u16)
}

#[test]
fn gf4_pair_doubling() {
    let r = ring_from_name("gf4").unwrap();
    let w = r.from_coords(&[0, 1]).unwrap();
    let x = APair::new(r.one(), w);
    assert!(r.is_apair(x));
    // u + u' + θ(t)t' = w + w + 1 = 1 in characteristic two.
    assert_eq!(r.a_op(x, x), APair::new(r.zero(), r.one()));
    assert!(r.is_apair(r.a_op(x, x)));
}

#[test]
fn scalar_action_over_quadratic_z5() {
    let r = ring_from_name("quad-z5-2").unwrap();
    let w = r.from_coords(&[0, 1]).unwrap();
    for x in r.a_pairs().into_iter().filter(|p| p.t == r.one()) {
        let y = r.a_act(w, x);
        assert_eq!(y.t, w);
        assert_eq!(y.u, r.mul(r.from_int(-2), x.u));
        assert!(r.is_apair(y));
    }
    let x = r.a_pairs()[3];
    assert_eq!(r.a_act(r.one(), x), x);
    assert_eq!(r.a_act(r.zero(), x), APair::ZERO);
}

#[test]
fn group_laws_exhaustive_small_rings() {
    for name in ["gf4", "gf9", "gf16", "z2xz2", "z3xz3"] {
        let r = ring_from_name(name).unwrap();
        let all = r.a_pairs();
        assert!(all.iter().all(|&p| r.is_apair(p)));
        for &x in &all {
            assert_eq!(r.a_op(x, APair::ZERO), x);
            assert_eq!(r.a_op(APair::ZERO, x), x);
            assert_eq!(r.a_op(x, r.a_inv(x)), APair::ZERO, "{name}");
            assert_eq!(r.a_op(r.a_inv(x), x), APair::ZERO, "{name}");
            for &y in &all {
                let xy = r.a_op(x, y);
                assert!(r.is_apair(xy));
                for &z in &all {
                    assert_eq!(r.a_op(xy, z), r.a_op(x, r.a_op(y, z)));
                }
            }
        }
    }
}

#[test]
fn group_laws_sampled_dual_gf9() {
    let r = ring_from_name("dual-gf9").unwrap();
    let all = r.a_pairs();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..2000 {
        let x = all[rng.gen_range(0..all.len())];
        let y = all[rng.gen_range(0..all.len())];
        let z = all[rng.gen_range(0..all.len())];
        assert_eq!(r.a_op(r.a_op(x, y), z), r.a_op(x, r.a_op(y, z)));
        assert_eq!(r.a_op(x, r.a_inv(x)), APair::ZERO);
    }
}

#[test]
fn antisymmetric_pairs_are_central() {
    for name in ["gf9", "gf25", "dual-gf9", "z3xz3"] {
        let r = ring_from_name(name).unwrap();
        let all = r.a_pairs();
        let central: Vec<APair> = r
            .elements()
            .filter(|&u| r.theta(u) == r.neg(u))
            .map(|u| APair::new(r.zero(), u))
            .collect();
        for &c in &central {
            assert!(r.is_apair(c));
            for &x in &all {
                assert_eq!(r.a_op(c, x), r.a_op(x, c));
            }
        }
    }
}

#[test]
fn decomposition_recomposes() {
    for name in ["gf9", "gf25", "dual-gf9"] {
        let r = ring_from_name(name).unwrap();
        let all = r.a_pairs();
        for &x in &all {
            let (k, h) = r.a_decompose(x).unwrap();
            assert!(r.is_apair(k) && r.is_apair(h));
            assert_eq!(h.t, r.zero());
            assert_eq!(r.theta(h.u), r.neg(h.u));
            assert_eq!(r.a_op(k, h), x);
        }
        let sym = all.iter().find(|p| p.t != r.zero() && r.theta(p.u) == p.u).copied();
        if let Some(x) = sym {
            assert_eq!(r.a_decompose(x).unwrap(), (x, APair::ZERO));
        }
    }
    let r = ring_from_name("gf4").unwrap();
    assert!(r.a_decompose(APair::ZERO).is_err());
}

#[test]
fn ideal_split_recomposes() {
    let r = ring_from_name("dual-gf9").unwrap();
    let e = r.from_coords(&[0, 0, 1, 0]).unwrap();
    let unit = ThetaIdeal::unit(&r);
    let zero = ThetaIdeal::zero(&r);
    let eps = ThetaIdeal::generated(&r, &[e]);
    assert_eq!(eps.size(), 9);
    for (i, j) in [(&unit, &unit), (&eps, &zero), (&eps, &unit), (&zero, &eps), (&eps, &eps)] {
        let ij = i.sum(&r, j);
        for x in ij.a_pairs(&r) {
            let (p, q, c) = r.a_ideal_split(x, i, j).unwrap();
            assert!(i.contains_pair(p) && r.is_apair(p));
            assert!(j.contains_pair(q) && r.is_apair(q));
            assert_eq!(c.t, r.zero());
            assert!(r.is_apair(c));
            assert_eq!(r.a_op(r.a_op(p, q), c), x);
            if i.contains_pair(x) {
                assert_eq!(r.a_op(p, c), x);
            }
        }
    }
    let outside = r.a_pairs().into_iter().find(|p| !eps.contains_pair(*p)).unwrap();
    assert!(r.a_ideal_split(outside, &eps, &zero).is_err());
}

#[test]
fn theta_symmetrize_order_two() {
    let r = ring_from_name("gf25").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let fixed = r.fixed_elements();
    let mut checked = 0;
    while checked < 100 {
        let rr = pick(&r, &mut rng);
        let z = pick(&r, &mut rng);
        if !r.is_unit(z) {
            continue;
        }
        let f = fixed[rng.gen_range(0..fixed.len())];
        let r2 = r.div(r.sub(f, r.mul(rr, z)), r.theta(z)).unwrap();
        let t = r.theta_symmetrize(rr, r2, None, z).unwrap();
        let tz = r.mul(t, z);
        assert_eq!(r.add(tz, r.theta(tz)), f);
        checked += 1;
    }
    let z = r.fixed_elements()[2];
    assert_eq!(r.theta_symmetrize(r.one(), r.one(), None, z).unwrap(), r.one());
    let not_fixed = r.elements().find(|&x| !r.is_fixed(x)).unwrap();
    assert!(r.theta_symmetrize(not_fixed, r.zero(), None, r.one()).is_err());
}

#[test]
fn theta_symmetrize_order_three() {
    let r = ring_from_name("gf343").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let fixed = r.fixed_elements();
    for _ in 0..100 {
        let (a, b) = (pick(&r, &mut rng), pick(&r, &mut rng));
        let z = loop {
            let z = pick(&r, &mut rng);
            if r.is_unit(z) {
                break z;
            }
        };
        let f = fixed[rng.gen_range(0..fixed.len())];
        let z1 = r.theta(z);
        let z2 = r.theta(z1);
        let c = r.div(r.sub(r.sub(f, r.mul(a, z)), r.mul(b, z1)), z2).unwrap();
        let t = r.theta_symmetrize(a, b, Some(c), z).unwrap();
        assert_eq!(r.orbit_trace(r.mul(t, z)), f);
    }
}

#[test]
fn ideals_are_theta_invariant() {
    let r = ring_from_name("dual-gf9").unwrap();
    let fixed = r.fixed_elements();
    for g in r.elements().step_by(7) {
        let j = ThetaIdeal::generated(&r, &[g]);
        for &a in j.elements() {
            assert!(j.contains(r.theta(a)));
            for x in r.elements() {
                assert!(j.contains(r.mul(x, a)));
            }
        }
        let jt = j.fixed_part(&r);
        for &a in &jt {
            for &s in &fixed {
                assert!(jt.contains(&r.mul(a, s)));
            }
        }
    }
    let e = r.from_coords(&[0, 0, 1, 0]).unwrap();
    let j = ThetaIdeal::generated(&r, &[e]);
    assert!(j.in_radical(&r));
    assert!(!ThetaIdeal::unit(&r).in_radical(&r));
    let q = j.quotient(&r).unwrap();
    assert_eq!(q.ring.size(), 9);
    assert!(q.ring.is_field());
    assert_eq!(q.ring.theta_order(), 2);
    let x = r.add(r.one(), e);
    assert_eq!(q.project(x), q.ring.one());
    assert_eq!(j.a_pairs(&r).len(), 9 * 3);
}

#[test]
fn swap_product_has_only_trivial_invariant_ideals() {
    let r = ring_from_name("z2xz2").unwrap();
    let mut sizes: Vec<usize> = r.elements().map(|g| ThetaIdeal::generated(&r, &[g]).size()).collect();
    sizes.sort();
    sizes.dedup();
    assert_eq!(sizes, vec![1, 4]);
}
