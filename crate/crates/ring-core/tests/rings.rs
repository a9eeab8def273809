use ring_core::{make_ring, ring_from_name, Elem, FiniteRing, RingDescriptor, RingError};

fn gf(q: u32) -> FiniteRing {
    make_ring(&RingDescriptor::gf(q).unwrap()).unwrap()
}

#[test]
fn gf4_has_frobenius_of_order_two() {
    let r = gf(4);
    assert_eq!(r.size(), 4);
    assert_eq!(r.theta_order(), 2);
    assert!(r.is_field());
    for a in r.elements() {
        assert_eq!(r.theta(a), r.mul(a, a));
    }
}

#[test]
fn gf4_matches_hand_table() {
    // Independent model: w^2 = w + 1 with elements encoded as bit pairs (b0 + b1 w).
    let r = gf(4);
    let model_mul = |x: u32, y: u32| -> u32 {
        let (a0, a1, b0, b1) = (x & 1, x >> 1, y & 1, y >> 1);
        let c0 = (a0 * b0 + a1 * b1) % 2;
        let c1 = (a0 * b1 + a1 * b0 + a1 * b1) % 2;
        c0 | (c1 << 1)
    };
    let enc = |e: Elem| -> u32 {
        let c = r.coords(e);
        c[0] | (c[1] << 1)
    };
    for a in r.elements() {
        for b in r.elements() {
            assert_eq!(enc(r.mul(a, b)), model_mul(enc(a), enc(b)));
            assert_eq!(enc(r.add(a, b)), enc(a) ^ enc(b));
        }
    }
}

#[test]
fn field_sizes_and_orders() {
    for (q, o) in [(2, 1), (5, 1), (9, 2), (25, 2), (8, 3), (27, 3), (343, 3), (16, 2)] {
        let r = gf(q);
        assert_eq!(r.size(), q as usize);
        assert!(r.is_field(), "GF({q}) is not a field");
        assert_eq!(r.theta_order(), o, "GF({q})");
        // The unit group of a finite field is cyclic.
        let has_generator = r.units().iter().any(|&g| {
            let mut x = g;
            let mut k = 1;
            while x != r.one() {
                x = r.mul(x, g);
                k += 1;
            }
            k == q as usize - 1
        });
        assert!(has_generator, "GF({q}) unit group not cyclic");
    }
}

#[test]
fn galois_theta_is_requested_frobenius_power() {
    let r = make_ring(&RingDescriptor::Gf { p: 7, k: 3, theta_power: 2 }).unwrap();
    for a in r.elements() {
        assert_eq!(r.theta(a), r.pow(a, 49));
    }
    assert_eq!(r.theta_order(), 3);
}

#[test]
fn quadratic_extension_of_z5() {
    let r = make_ring(&RingDescriptor::Quad { base: Box::new(RingDescriptor::Zmod { n: 5 }), d: 2 }).unwrap();
    assert_eq!(r.size(), 25);
    assert_eq!(r.theta_order(), 2);
    let w = r.from_coords(&[0, 1]).unwrap();
    assert_eq!(r.mul(w, w), r.from_int(2));
    assert_eq!(r.theta(w), r.neg(w));
    assert!(r.is_unit(w));
    let a = r.antisymmetric_unit().unwrap();
    assert_eq!(r.theta(a), r.neg(a));
    assert!(r.is_unit(a));
}

#[test]
fn product_of_z3_with_swap() {
    let r = ring_from_name("z3xz3").unwrap();
    assert_eq!(r.theta_order(), 2);
    let fixed = r.fixed_elements();
    assert_eq!(fixed.len(), 3);
    for a in fixed {
        let c = r.coords(a);
        assert_eq!(c[0], c[1]);
    }
    let r3 = ring_from_name("z2xz2xz2").unwrap();
    assert_eq!(r3.theta_order(), 3);
    assert_eq!(r3.fixed_elements().len(), 2);
}

#[test]
fn dual_numbers_are_local() {
    let r = ring_from_name("dual-gf9").unwrap();
    assert_eq!(r.size(), 81);
    assert_eq!(r.theta_order(), 2);
    assert!(r.is_local());
    assert!(!r.is_field());
    let e = r.from_coords(&[0, 0, 1, 0]).unwrap();
    assert_eq!(r.mul(e, e), r.zero());
    assert_eq!(r.theta(e), e);
    assert_eq!(r.units().len(), 72);
}

#[test]
fn integers_mod_n() {
    let r = ring_from_name("z36").unwrap();
    assert_eq!(r.characteristic(), 36);
    assert_eq!(r.theta_order(), 1);
    assert_eq!(r.units().len(), 12);
    assert!(!r.is_local());
    assert_eq!(r.from_int(-1), r.from_int(35));
}

#[test]
fn descriptor_json_round_trip() {
    let names = ["gf4", "gf343", "gf9:1", "z36", "z3xz3", "dual-gf9", "quad-z5-2", "dual-quad-z5-2"];
    for n in names {
        let d = RingDescriptor::parse(n).unwrap();
        let js = serde_json::to_string(&d).unwrap();
        let back: RingDescriptor = serde_json::from_str(&js).unwrap();
        assert_eq!(back, d);
        assert_eq!(serde_json::to_string(&back).unwrap(), js);
        assert_eq!(RingDescriptor::parse(&d.short_name()).unwrap(), d);
        assert_eq!(RingDescriptor::parse(&js).unwrap(), d);
    }
    let d = RingDescriptor::parse(r#"{"kind":"gf","p":2,"k":2,"theta_power":1}"#).unwrap();
    assert_eq!(d, RingDescriptor::Gf { p: 2, k: 2, theta_power: 1 });
    assert_eq!(
        serde_json::to_string(&d).unwrap(),
        r#"{"kind":"gf","p":2,"k":2,"theta_power":1}"#
    );
}

#[test]
fn rejects_bad_descriptors() {
    assert!(RingDescriptor::parse("gf6").is_err());
    assert!(RingDescriptor::parse("banana").is_err());
    assert!(matches!(make_ring(&RingDescriptor::Zmod { n: 1 }), Err(RingError::Unsupported(_))));
    assert!(matches!(
        make_ring(&RingDescriptor::Gf { p: 2, k: 4, theta_power: 1 }),
        Err(RingError::Axiom(_))
    ));
    assert!(matches!(make_ring(&RingDescriptor::Zmod { n: 5000 }), Err(RingError::TooLarge(_))));
}

#[test]
fn from_tables_names_the_failed_axiom() {
    // Z/3 with the map x -> x + 1, which is not a ring automorphism.
    let n = 3usize;
    let coords = (0..3).map(|i| vec![i]).collect();
    let add = (0..9).map(|i| ((i / 3 + i % 3) % 3) as u16).collect();
    let mul = (0..9).map(|i| ((i / 3) * (i % 3) % 3) as u16).collect();
    let theta = (0..n as u16).map(|i| (i + 1) % 3).collect();
    let err = FiniteRing::from_tables("bad", coords, add, mul, theta, Elem(1)).unwrap_err();
    match err {
        RingError::Axiom(msg) => assert!(msg.contains("theta"), "{msg}"),
        e => panic!("unexpected error {e}"),
    }
}

#[test]
fn inverse_reports_non_units() {
    let r = ring_from_name("z4").unwrap();
    assert!(r.inv(r.from_int(2)).is_err());
    assert_eq!(r.inv(r.from_int(3)).unwrap(), r.from_int(3));
    assert_eq!(r.zpow(r.from_int(3), -3).unwrap(), r.from_int(3));
}
