use std::collections::{BTreeMap, HashSet};

use chevalley_basis::ChevalleyData;
use root_systems::{CartanType, RootSystem};
use twisted_roots::{build_twisted, ClassKind, PairTag, ParamDomain, TwistedSystem};

fn twisted(t: CartanType, n: usize, order: u8) -> TwistedSystem {
    let sys = RootSystem::new(t, n).unwrap();
    let rho = sys.standard_twist(order).unwrap();
    build_twisted(&sys, &rho).unwrap()
}

fn families() -> Vec<TwistedSystem> {
    vec![
        twisted(CartanType::A, 3, 2),
        twisted(CartanType::A, 4, 2),
        twisted(CartanType::D, 4, 2),
        twisted(CartanType::D, 4, 3),
        twisted(CartanType::E, 6, 2),
    ]
}

#[test]
fn table_rows() {
    use ClassKind::*;
    let rows = [
        (CartanType::A, 5, 2, "C3", "C3", vec![A1], vec![A1x2]),
        (CartanType::A, 3, 2, "C2", "C2", vec![A1], vec![A1x2]),
        (CartanType::A, 4, 2, "B2", "BC2", vec![A1x2], vec![A2]),
        (CartanType::A, 6, 2, "B3", "BC3", vec![A1x2], vec![A2]),
        (CartanType::D, 4, 2, "B3", "B3", vec![A1], vec![A1x2]),
        (CartanType::D, 5, 2, "B4", "B4", vec![A1], vec![A1x2]),
        (CartanType::D, 4, 3, "G2", "G2", vec![A1], vec![A1x3]),
        (CartanType::E, 6, 2, "F4", "F4", vec![A1], vec![A1x2]),
    ];
    for (t, n, o, reduced, full, long, short) in rows {
        let tw = twisted(t, n, o);
        assert_eq!(tw.twisted_type().to_string(), reduced, "{}", tw.label());
        assert_eq!(tw.twisted_type().full_label(), full);
        assert_eq!(tw.length_kinds(), (long, short), "{}", tw.label());
    }
    let rank_one = twisted(CartanType::A, 2, 2);
    assert_eq!(rank_one.twisted_type().full_label(), "BC1");
    assert_eq!(rank_one.num_classes(), 2);
    assert_eq!(rank_one.class(1).kind, ClassKind::A2);
}

#[test]
fn untwistable_inputs_are_rejected() {
    let sys = RootSystem::new(CartanType::D, 5).unwrap();
    let rho = sys.standard_twist(2).unwrap();
    let tw = build_twisted(&sys, &rho).unwrap();
    assert_eq!(tw.rho().order(), 2);
    let a3 = RootSystem::new(CartanType::A, 3).unwrap();
    // An automorphism of D4 does not act on A3.
    let d4 = RootSystem::new(CartanType::D, 4).unwrap();
    let tri = d4.standard_twist(3).unwrap();
    assert!(a3.standard_twist(3).is_err());
    assert!(build_twisted(&d4, &tri).is_ok());
}

#[test]
fn classes_partition_the_roots() {
    for tw in families() {
        let sys = tw.system();
        let mut seen = HashSet::new();
        for c in tw.classes() {
            for &a in &c.orbit {
                assert!(seen.insert(a), "{}", tw.label());
                assert_eq!(tw.class_of(a), c.id);
            }
            let shape = match c.kind {
                ClassKind::A1 => c.orbit.len() == 1 && tw.rho().apply(c.rep) == c.rep,
                ClassKind::A1x2 => c.orbit.len() == 2 && sys.sum(c.orbit[0], c.orbit[1]).is_none(),
                ClassKind::A1x3 => c.orbit.len() == 3,
                ClassKind::A2 => sys.sum(c.orbit[0], c.orbit[1]) == Some(c.orbit[2]),
            };
            assert!(shape, "{} class {}", tw.label(), c.id);
            let smallest = *c.orbit.iter().filter(|&&a| tw.rho().apply(a) != a || c.kind == ClassKind::A1).min().unwrap();
            assert_eq!(c.rep, smallest);
            let neg = tw.class(c.negation);
            assert_eq!(neg.negation, c.id);
            assert_eq!(neg.positive, !c.positive);
            assert_eq!(c.kind, neg.kind);
            let domain = match c.kind {
                ClassKind::A1 => ParamDomain::Fixed,
                ClassKind::A2 => ParamDomain::Pairs,
                _ => ParamDomain::Ring,
            };
            assert_eq!(c.domain(), domain);
        }
        assert_eq!(seen.len(), sys.num_roots());
        assert_eq!(tw.positive_classes().count() * 2, tw.num_classes());
    }
}

#[test]
fn negative_orbit_convention() {
    let tw = twisted(CartanType::A, 4, 2);
    let sys = tw.system();
    for c in tw.classes().iter().filter(|c| c.positive) {
        let lead = tw.neg_lead(c.id);
        let orbit = tw.ordered_orbit(lead);
        let bar = tw.rho().apply(c.rep);
        match c.kind {
            ClassKind::A2 => {
                assert_eq!(orbit[0], sys.neg(bar));
                assert_eq!(orbit[1], sys.neg(c.rep));
                assert_eq!(lead, tw.class(c.negation).rep);
            }
            _ => assert_eq!(lead, sys.neg(c.rep)),
        }
    }
}

#[test]
fn twisted_weyl_orders() {
    let cases = [
        (CartanType::A, 2, 2, 2),
        (CartanType::A, 3, 2, 8),
        (CartanType::A, 4, 2, 8),
        (CartanType::A, 5, 2, 48),
        (CartanType::D, 4, 2, 48),
        (CartanType::D, 4, 3, 12),
        (CartanType::E, 6, 2, 1152),
    ];
    for (t, n, o, order) in cases {
        let tw = twisted(t, n, o);
        let w = tw.twisted_weyl();
        assert_eq!(w.order(), order, "{}", tw.label());
        assert!(w.words.iter().zip(&w.elements).all(|(word, e)| {
            let mut p: Vec<usize> = (0..tw.num_classes()).collect();
            for &s in word {
                let r = tw.class_reflection(s);
                p = r.iter().map(|&x| p[x]).collect();
            }
            &p == e
        }));
    }
}

#[test]
fn class_reflections_respect_classes() {
    for tw in families() {
        for c in 0..tw.num_classes() {
            let p = tw.class_reflection_roots(c);
            for d in tw.classes() {
                let image = tw.class_of(p[d.rep]);
                assert!(d.orbit.iter().all(|&a| tw.class_of(p[a]) == image));
                assert_eq!(tw.class(image).kind, d.kind);
            }
            assert_eq!(tw.class_reflection(c)[c], tw.class(c).negation);
        }
    }
}

fn tag_census(tw: &TwistedSystem) -> BTreeMap<PairTag, usize> {
    let mut m = BTreeMap::new();
    for a in 0..tw.num_classes() {
        for b in 0..tw.num_classes() {
            if a == b || tw.class(a).negation == b {
                assert!(tw.classify_pair(a, b).is_err());
                continue;
            }
            let p = tw.classify_pair(a, b).unwrap_or_else(|e| panic!("{}: {e}", tw.label()));
            *m.entry(p.tag).or_insert(0) += 1;
        }
    }
    m
}

#[test]
fn taxonomy_is_total() {
    let mut all = HashSet::new();
    for tw in families() {
        let census = tag_census(&tw);
        let triality = tw.rho().order() == 3;
        for tag in census.keys() {
            let exotic = matches!(tag, PairTag::E | PairTag::F | PairTag::G);
            assert_eq!(exotic, exotic && triality, "{} gives {tag}", tw.label());
            all.insert(*tag);
        }
        if triality {
            for t in [PairTag::E, PairTag::F, PairTag::G] {
                assert!(census.contains_key(&t));
            }
        }
    }
    assert_eq!(all.len(), PairTag::ALL.len());
}

#[test]
fn taxonomy_examples() {
    let tw = twisted(CartanType::A, 5, 2);
    let sys = tw.system();
    // α = e₂−e₃ and β = e₂−e₄: α + β̄ = e₂−e₅ is fixed by ρ.
    let a = tw.class_of(sys.root_id(&[0, 1, 0, 0, 0]).unwrap());
    let b = tw.class_of(sys.root_id(&[0, 1, 1, 0, 0]).unwrap());
    let p = tw.classify_pair(a, b).unwrap();
    assert_eq!(p.tag, PairTag::Ci);
    let s = tw.combine(a, b, 1, 1).unwrap();
    assert_eq!(tw.class(s).kind, ClassKind::A1);

    let tw = twisted(CartanType::A, 4, 2);
    let sys = tw.system();
    let long = tw.class_of(sys.simple(0));
    let short = tw.class_of(sys.simple(1));
    assert_eq!(tw.class(long).kind, ClassKind::A1x2);
    assert_eq!(tw.class(short).kind, ClassKind::A2);
    let p = tw.classify_pair(long, short).unwrap();
    assert_eq!((p.tag, p.swapped), (PairTag::Dii, false));
    let q = tw.classify_pair(short, long).unwrap();
    assert_eq!((q.tag, q.swapped), (PairTag::Dii, true));
}

#[test]
fn d_sign_properties() {
    for tw in families().into_iter().chain([twisted(CartanType::A, 6, 2)]) {
        let data = ChevalleyData::new(tw.system()).normalize_signs(tw.rho()).unwrap();
        let c = data.c_table();
        let sys = tw.system();
        for cl in tw.classes() {
            for b in 0..sys.num_roots() {
                let d = tw.d_sign(&c, cl.id, b);
                assert!(d == 1 || d == -1);
                assert_eq!(d, tw.d_sign(&c, cl.id, tw.rho().apply(b)), "{} {} {b}", tw.label(), cl.id);
                let a = cl.rep;
                if cl.kind == ClassKind::A1 {
                    if b == a {
                        assert_eq!(d, -1);
                    }
                    if b != a && b != sys.neg(a) && sys.sum(a, b).is_none() && sys.diff(a, b).is_none() {
                        assert_eq!(d, 1);
                    }
                }
                let bb = tw.rho().apply(b);
                if tw.class(tw.class_of(b)).kind == ClassKind::A2 && bb != b {
                    let mid = sys.sum(b, bb).unwrap();
                    // The reflection here is the class reflection s_[α].
                    let p = tw.class_reflection_roots(cl.id);
                    let want = data.n(p[bb], p[b]) * data.n(bb, b);
                    assert_eq!(tw.d_sign(&c, cl.id, mid), want, "{} {a} {b}", tw.label());
                }
            }
        }
    }
}

#[test]
fn json_lists_classes() {
    let tw = twisted(CartanType::A, 4, 2);
    let j = tw.to_json();
    assert_eq!(j["twisted_type"], "B2");
    assert_eq!(j["full_type"], "BC2");
    assert_eq!(j["classes"].as_array().unwrap().len(), 8);
    let a2 = tw.classes().iter().find(|c| c.kind == ClassKind::A2).unwrap().id;
    assert_eq!(j["classes"][a2]["orbit"].as_array().unwrap().len(), 3);
    assert_eq!(j["classes"][a2]["kind"], "A2");
}

