use adjoint_group::{commutator_closure, DEFAULT_BUDGET};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use root_systems::CartanType;
use twisted_group::{bruhat_count, Param, SigmaContext, TwistedGroupError};

fn ctx(n: usize, ring: &str) -> SigmaContext {
    SigmaContext::standard(CartanType::A, n, 2, ring).unwrap()
}

#[test]
fn bruhat_cells_unitary_a3_gf4() {
    let c = ctx(3, "gf4");
    let rep = bruhat_count(&c, DEFAULT_BUDGET).unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert_eq!(rep.group_order, 25920);
    assert_eq!(rep.cells.len(), 8);
    assert_eq!((rep.u_order, rep.h_order, rep.b_order), (64, 3, 192));
    let id = rep.cells.iter().find(|c| c.word.is_empty()).unwrap();
    assert_eq!(id.size, rep.b_order);
    let sum: usize = rep.cells.iter().map(|c| c.size).sum();
    assert_eq!(sum, 25920);
}

#[test]
fn bruhat_cells_rank_one_adjoint() {
    // The adjoint image of the rank-one unitary group over GF(4) is PSU₃(2).
    let c = ctx(2, "gf4");
    let rep = bruhat_count(&c, DEFAULT_BUDGET).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.group_order, 72);
    assert_eq!(rep.cells.len(), 2);
}

#[test]
fn bruhat_needs_a_field() {
    let c = SigmaContext::standard(CartanType::A, 3, 2, "dual-gf4").unwrap();
    assert!(matches!(bruhat_count(&c, 10), Err(TwistedGroupError::NotAField(_))));
}

#[test]
fn budget_is_reported() {
    let c = ctx(3, "gf4");
    let err = bruhat_count(&c, 100).unwrap_err();
    assert!(err.is_budget());
}

#[test]
fn unitary_a3_gf4_is_perfect() {
    let c = ctx(3, "gf4");
    let r = c.ring();
    let gens: Vec<_> = c
        .twisted()
        .simple_classes()
        .iter()
        .flat_map(|&k| {
            let neg = c.twisted().class(k).negation;
            [k, neg]
        })
        .flat_map(|k| c.domain(k).into_iter().map(move |p| (k, p)))
        .map(|(k, p)| c.x_class(k, p).unwrap())
        .filter(|m| !m.is_identity(r))
        .map(|m| {
            let mi = c.inverse(&m).unwrap();
            (m, mi)
        })
        .collect();
    let derived = commutator_closure(r, &gens, DEFAULT_BUDGET).unwrap();
    assert_eq!(derived.len(), 25920);
}

#[test]
fn unipotent_payloads_are_recovered() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for (t, n, o, ring) in [
        (CartanType::A, 3, 2, "gf9"),
        (CartanType::A, 4, 2, "gf9"),
        (CartanType::D, 4, 3, "gf8"),
    ] {
        let c = SigmaContext::standard(t, n, o, ring).unwrap();
        let mut order = c.positive_order();
        for _ in 0..20 {
            // Shuffle the class order as well as the payloads.
            for i in (1..order.len()).rev() {
                order.swap(i, rng.gen_range(0..=i));
            }
            let params: Vec<Param> = order.iter().map(|&k| c.sample_param(k, &mut rng)).collect();
            let mut g = c.identity();
            for (&k, &p) in order.iter().zip(&params) {
                g = c.group().mul(&g, &c.x_class(k, p).unwrap());
            }
            assert_eq!(c.recover_u(&g, &order).unwrap(), params);
        }
    }
}

fn class_vector(c: &SigmaContext, k: usize) -> Vec<i32> {
    let tw = c.twisted();
    let sys = tw.system();
    let rep = tw.class(k).rep;
    let mut v = vec![0; sys.rank()];
    for i in 0..tw.rho().order() as u32 {
        for (x, y) in v.iter_mut().zip(sys.coords(tw.rho().apply_pow(rep, i))) {
            *x += y;
        }
    }
    v
}

#[test]
fn commutators_lie_in_the_combination_subgroup() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for (t, n, o, ring) in [(CartanType::A, 4, 2, "gf9"), (CartanType::A, 5, 2, "gf9"), (CartanType::D, 4, 3, "gf8")] {
        let c = SigmaContext::standard(t, n, o, ring).unwrap();
        let order = c.positive_order();
        let vecs: Vec<Vec<i32>> = (0..c.twisted().num_classes()).map(|k| class_vector(&c, k)).collect();
        for &a in &order {
            for &b in &order {
                if a == b {
                    continue;
                }
                // S: classes whose doubled vector is i·v(a) + j·v(b) with i, j ≥ 1.
                let in_s = |k: usize| {
                    (1..=6).any(|i| {
                        (1..=6).any(|j| {
                            vecs[k].iter().zip(&vecs[a]).zip(&vecs[b]).all(|((&z, &x), &y)| 2 * z == i * x + j * y)
                        })
                    })
                };
                for _ in 0..3 {
                    let (p, q) = (c.sample_param(a, &mut rng), c.sample_param(b, &mut rng));
                    let g = c.commutator(&c.x_class(a, p).unwrap(), &c.x_class(b, q).unwrap()).unwrap();
                    let pay = c.recover_u(&g, &order).unwrap();
                    for (&k, pk) in order.iter().zip(&pay) {
                        if !in_s(k) {
                            assert_eq!(*pk, Param::zero(c.twisted().class(k).kind));
                        }
                    }
                }
            }
        }
    }
}
