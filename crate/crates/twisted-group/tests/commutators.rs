use std::collections::{BTreeMap, BTreeSet};

use root_systems::CartanType;
use twisted_group::{CommutatorReport, Param, SigmaContext};
use twisted_roots::PairTag;

fn ctx(t: CartanType, n: usize, o: u8, ring: &str) -> SigmaContext {
    SigmaContext::standard(t, n, o, ring).unwrap()
}

/// Matched reports per tag; panics on any unmatched case.
fn all_matched(c: &SigmaContext, samples: usize, seed: u64) -> BTreeMap<String, BTreeSet<String>> {
    let reports: Vec<CommutatorReport> = c.verify_all_commutators(samples, seed).unwrap();
    let mut tags: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for rep in &reports {
        assert!(rep.passed(), "{}: unmatched {rep:?}", c.twisted().label());
        tags.entry(rep.tag.clone()).or_default().insert(rep.matched.clone().unwrap());
    }
    tags
}

#[test]
fn unitary_families_match() {
    let mut seen: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for (n, ring) in [(4, "gf9"), (4, "gf25"), (5, "gf9"), (5, "gf25")] {
        let c = ctx(CartanType::A, n, 2, ring);
        for (tag, branches) in all_matched(&c, 5, 1 + n as u64) {
            seen.entry(tag).or_default().extend(branches);
        }
    }
    // The listed a2-ii and d-ii expressions need the sign-corrected variants for some pairs.
    assert!(seen["a2-ii"].contains("a2-ii:1-corrected"));
    assert!(seen["d-ii"].iter().any(|b| b.ends_with("-corrected")));
    for tag in ["a1", "a2-i", "a2-ii", "b-ii", "c-i", "c-ii", "d-i", "d-ii"] {
        assert!(seen.contains_key(tag), "{tag} not exercised");
    }
}

#[test]
fn orthogonal_family_matches_b_i() {
    let c = ctx(CartanType::D, 4, 2, "gf9");
    let tags = all_matched(&c, 5, 3);
    assert!(tags.contains_key("b-i"));
}

#[test]
fn triality_matches_e_f_g() {
    let c = ctx(CartanType::D, 4, 3, "gf343");
    let tags = all_matched(&c, 5, 17);
    for tag in ["e", "f", "g"] {
        assert!(tags.contains_key(tag), "{tag} not exercised");
    }
    // Both orderings of the g-type sum occur among the classes.
    assert_eq!(tags["g"].len(), 2);
}

#[test]
fn zero_payloads_give_identity() {
    let c = ctx(CartanType::A, 4, 2, "gf9");
    let tw = c.twisted();
    for a in 0..tw.num_classes() {
        for b in 0..tw.num_classes() {
            if a == b || tw.class(a).negation == b {
                continue;
            }
            let p = Param::zero(tw.class(a).kind);
            let q = Param::zero(tw.class(b).kind);
            let rep = c.verify_commutator(a, p, b, q).unwrap();
            assert!(rep.passed());
        }
    }
}

#[test]
fn candidate_lists() {
    let c = ctx(CartanType::A, 4, 2, "gf9");
    let r = c.ring();
    let tw = c.twisted();
    let mut found = BTreeSet::new();
    for a in 0..tw.num_classes() {
        for b in 0..tw.num_classes() {
            if a == b || tw.class(a).negation == b {
                continue;
            }
            let pt = tw.classify_pair(a, b).unwrap();
            let p = c.domain(a)[1];
            let q = c.domain(b)[1];
            let (_, cands) = c.commutator_candidates(a, p, b, q).unwrap();
            match pt.tag {
                PairTag::A1 => {
                    assert_eq!(cands.len(), 1);
                    assert!(c.evaluate(&cands[0]).unwrap().is_identity(r));
                }
                PairTag::Cii => {
                    let names: Vec<&str> = cands.iter().map(|k| k.branch.as_str()).collect();
                    assert_eq!(names, ["c-ii:1", "c-ii:2"]);
                }
                _ => {}
            }
            found.insert(pt.tag);
        }
    }
    assert!(found.contains(&PairTag::Cii));
}
