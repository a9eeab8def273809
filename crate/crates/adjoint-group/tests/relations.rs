use std::sync::Arc;

use adjoint_group::{closure, commutator_closure, Chevalley, Sampling};
use chevalley_basis::ChevalleyData;
use ring_core::ring_from_name;
use root_systems::{CartanType, RootSystem};

fn group(t: CartanType, n: usize, ring: &str) -> Chevalley {
    let sys = RootSystem::new(t, n).unwrap();
    Chevalley::adjoint(Arc::new(ring_from_name(ring).unwrap()), Arc::new(ChevalleyData::new(&sys)))
}

fn assert_report(g: &Chevalley, sampling: Sampling) {
    let rep = g.verify_steinberg(sampling).unwrap();
    let bad: Vec<_> = rep.cases.iter().filter(|c| !c.equal).take(5).collect();
    assert!(bad.is_empty(), "{bad:?}");
    assert!(rep.c_table_consistent);
    for k in 1..=8 {
        assert!(rep.cases.iter().any(|c| c.case.starts_with(&format!("R{k} "))));
    }
}

#[test]
fn steinberg_exhaustive_a2_z4() {
    assert_report(&group(CartanType::A, 2, "z4"), Sampling::Exhaustive);
}

#[test]
fn steinberg_seeded_a3_gf5_and_gf7() {
    assert_report(&group(CartanType::A, 3, "gf5"), Sampling::Seeded { seed: 1, n: 200 });
    assert_report(&group(CartanType::A, 3, "gf7"), Sampling::Seeded { seed: 2, n: 100 });
}

#[test]
fn steinberg_seeded_d4() {
    assert_report(&group(CartanType::D, 4, "z36"), Sampling::Seeded { seed: 3, n: 200 });
    assert_report(&group(CartanType::D, 4, "gf5"), Sampling::Seeded { seed: 4, n: 50 });
}

#[test]
fn seeded_reports_are_reproducible() {
    let g = group(CartanType::A, 2, "gf5");
    let a = g.verify_steinberg(Sampling::Seeded { seed: 9, n: 10 }).unwrap();
    let b = g.verify_steinberg(Sampling::Seeded { seed: 9, n: 10 }).unwrap();
    assert_eq!(a.cases, b.cases);
}

fn simple_generators(g: &Chevalley) -> Vec<(adjoint_group::Mat, adjoint_group::Mat)> {
    let r = g.ring();
    let s = g.system();
    let mut out = Vec::new();
    for &a in s.simple_roots() {
        for root in [a, s.neg(a)] {
            for t in r.elements().filter(|&t| t != r.zero()) {
                out.push((g.x(root, t), g.x(root, r.neg(t))));
            }
        }
    }
    out
}

#[test]
fn a2_over_gf2_is_perfect() {
    let g = group(CartanType::A, 2, "gf2");
    let r = g.ring();
    let gens = simple_generators(&g);
    let plain: Vec<_> = gens.iter().map(|p| p.0.clone()).collect();
    let e = closure(r, &plain, 1_000).unwrap();
    assert_eq!(e.len(), 168);
    let d = commutator_closure(r, &gens, 1_000).unwrap();
    assert_eq!(d.len(), e.len());
    assert!(plain.iter().all(|x| d.contains(x)));
}

#[test]
fn adjoint_a2_over_gf4_has_trivial_centre() {
    let g = group(CartanType::A, 2, "gf4");
    let r = g.ring();
    let plain: Vec<_> = simple_generators(&g).into_iter().map(|p| p.0).collect();
    let e = closure(r, &plain, 100_000).unwrap();
    // PSL₃(4): the scalar centre of SL₃(4) acts trivially in the adjoint module.
    assert_eq!(e.len(), 20160);
    assert!(e.is_closed_under(r, &plain));
    let z = e.centralizer_of(r, &plain);
    assert_eq!(z.len(), 1);
    assert!(z[0].is_identity(r));
    assert!(closure(r, &plain, 100).is_err());
}
