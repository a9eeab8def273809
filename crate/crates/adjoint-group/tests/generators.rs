use std::sync::Arc;

use adjoint_group::{Chevalley, Mat};
use chevalley_basis::ChevalleyData;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ring_core::{ring_from_name, Elem};
use root_systems::{CartanType, RootSystem};

fn group(t: CartanType, n: usize, ring: &str) -> Chevalley {
    let sys = RootSystem::new(t, n).unwrap();
    Chevalley::adjoint(Arc::new(ring_from_name(ring).unwrap()), Arc::new(ChevalleyData::new(&sys)))
}

#[test]
fn root_elements_are_additive_unipotents() {
    let g = group(CartanType::A, 3, "gf5");
    let r = g.ring();
    for a in 0..g.system().num_roots() {
        assert_eq!(g.x(a, r.zero()), g.identity());
        for t in r.elements() {
            let x = g.x(a, t);
            assert_eq!(g.mul(&x, &g.x(a, r.neg(t))), g.identity());
            let n = x.sub(r, &g.identity());
            assert!(n.mul(r, &n).mul(r, &n).is_zero());
        }
    }
}

#[test]
fn a2_commutator_over_z5() {
    let g = group(CartanType::A, 2, "z5");
    let r = g.ring();
    let s = g.system();
    let (a, b) = (s.simple(0), s.simple(1));
    let c = g.commutator(&g.x(a, r.one()), &g.x(b, r.one())).unwrap();
    let ab = s.sum(a, b).unwrap();
    assert_eq!(c, g.x(ab, r.from_int(g.data().n(a, b) as i64)));
    // (α, −α−β) sums to −β.
    let nab = s.neg(ab);
    let (t, u) = (r.from_int(2), r.from_int(3));
    let c = g.commutator(&g.x(a, t), &g.x(nab, u)).unwrap();
    assert_eq!(c, g.x(s.neg(b), r.from_int(6 * g.data().n(a, nab) as i64)));
    let orth = g.verify_commutator(a, a, t, u).unwrap();
    assert!(orth.equal);
}

#[test]
fn commutators_d4_over_z36() {
    let g = group(CartanType::D, 4, "z36");
    let r = g.ring();
    let s = g.system();
    let mut rng = ChaCha8Rng::seed_from_u64(36);
    for a in 0..s.num_roots() {
        for b in 0..s.num_roots() {
            if s.sum(a, b).is_none() {
                continue;
            }
            for _ in 0..5 {
                let t = Elem(rng.gen_range(0..36));
                let u = Elem(rng.gen_range(0..36));
                assert!(g.verify_commutator(a, b, t, u).unwrap().equal);
            }
        }
    }
    assert!(g.verify_commutator(0, s.neg(0), r.one(), r.one()).is_err());
}

#[test]
fn w_and_h_identities() {
    let g = group(CartanType::A, 3, "gf7");
    let r = g.ring();
    let s = g.system();
    let units = r.units();
    for a in [s.simple(0), s.highest_root(), 0] {
        assert_eq!(g.h(a, r.one()).unwrap(), g.identity());
        for &t in &units {
            let ti = r.inv(t).unwrap();
            assert_eq!(g.mul(&g.h(a, t).unwrap(), &g.h(a, ti).unwrap()), g.identity());
            assert_eq!(g.inverse(&g.w(a, t).unwrap()).unwrap(), g.w(a, r.neg(t)).unwrap());
            assert_eq!(g.w(a, t).unwrap(), g.inverse(&g.w(s.neg(a), ti).unwrap()).unwrap());
            assert_eq!(g.inverse(&g.h(a, t).unwrap()).unwrap(), g.h(s.neg(a), t).unwrap());
            for &u in &units {
                let ui = r.inv(u).unwrap();
                assert_eq!(g.mul(&g.h(a, t).unwrap(), &g.h(a, u).unwrap()), g.h(a, r.mul(t, u)).unwrap());
                assert_eq!(
                    g.mul(&g.w(a, t).unwrap(), &g.w(a, u).unwrap()),
                    g.h(a, r.neg(r.mul(t, ui))).unwrap()
                );
            }
        }
    }
    assert!(g.w(0, r.zero()).is_err());
}

#[test]
fn torus_characters() {
    let g = group(CartanType::A, 3, "gf5");
    let r = g.ring();
    let s = g.system();
    let triv = adjoint_group::Character::trivial(r, 3);
    assert_eq!(g.h_chi(&triv).unwrap(), g.identity());
    for a in 0..s.num_roots() {
        for t in r.units() {
            let chi = g.chi_alpha(a, t).unwrap();
            assert_eq!(g.h_chi(&chi).unwrap(), g.h(a, t).unwrap());
        }
    }
    let chi = adjoint_group::Character { values: vec![r.from_int(2), r.from_int(3), r.from_int(4)] };
    let hc = g.h_chi(&chi).unwrap();
    for b in 0..s.num_roots() {
        for z in r.elements() {
            let lhs = g.conjugate(&hc, &g.x(b, z)).unwrap();
            assert_eq!(lhs, g.x(b, r.mul(g.chi_root(&chi, b).unwrap(), z)));
        }
    }
    let bad = adjoint_group::Character { values: vec![r.zero(), r.one(), r.one()] };
    assert!(g.h_chi(&bad).is_err());
}

#[test]
fn unipotent_payloads_are_recovered() {
    for (t, n, ring) in [(CartanType::A, 3, "z36"), (CartanType::D, 4, "gf9"), (CartanType::A, 2, "dual-gf9")] {
        let g = group(t, n, ring);
        let r = g.ring();
        let s = g.system();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let mut pos: Vec<usize> = s.positive_roots().collect();
        let mut neg: Vec<usize> = pos.iter().map(|&a| s.neg(a)).collect();
        for trial in 0..20 {
            if trial % 2 == 1 {
                pos.reverse();
                let k = neg.len() - 1;
                neg.swap(0, k);
            }
            for order in [&pos, &neg] {
                let ts: Vec<Elem> = order.iter().map(|_| Elem(rng.gen_range(0..r.size() as u16))).collect();
                let u = g.product(order.iter().zip(&ts).map(|(&a, &x)| g.x(a, x)).collect::<Vec<Mat>>().iter());
                assert_eq!(g.recover_unipotent(&u, order).unwrap(), ts);
            }
        }
        let w = g.w(s.simple(0), r.one()).unwrap();
        assert!(g.recover_unipotent(&w, &pos).is_err());
    }
}

#[test]
fn inverse_handles_product_rings() {
    let g = group(CartanType::A, 2, "z2xz2");
    let r = g.ring();
    let s = g.system();
    let e1 = r.from_coords(&[1, 0]).unwrap();
    let e2 = r.from_coords(&[0, 1]).unwrap();
    let m = g.product([&g.x(s.simple(0), e1), &g.x(s.neg(s.simple(0)), e2), &g.x(s.simple(1), r.one())]);
    let mi = g.inverse(&m).unwrap();
    assert_eq!(g.mul(&m, &mi), g.identity());
    let sing = Mat::zeros(g.dim());
    assert!(sing.inverse(r).is_none());
}
