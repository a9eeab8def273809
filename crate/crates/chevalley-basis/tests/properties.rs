use chevalley_basis::ChevalleyData;
use proptest::prelude::*;
use root_systems::{CartanType, RootSystem};

fn jacobi_ok(d: &ChevalleyData) -> bool {
    let dim = d.dim();
    let inner = |i: usize, j: usize, k: usize| {
        let mut out = vec![0i32; dim];
        for (x, v) in d.bracket_basis(j, k) {
            for (y, w) in d.bracket_basis(i, x) {
                out[y] += v * w;
            }
        }
        out
    };
    (0..dim).all(|i| {
        (0..dim).all(|j| {
            (j + 1..dim).all(|k| {
                let (a, b, c) = (inner(i, j, k), inner(j, k, i), inner(k, i, j));
                (0..dim).all(|z| a[z] + b[z] + c[z] == 0)
            })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn resigning_keeps_a_lie_algebra(bits in proptest::collection::vec(any::<bool>(), 10)) {
        let s = RootSystem::new(CartanType::A, 4).unwrap();
        let d = ChevalleyData::new(&s);
        let mut c = vec![1i8; s.num_roots()];
        for (k, a) in s.positive_roots().enumerate() {
            if bits[k] {
                c[a] = -1;
                c[s.neg(a)] = -1;
            }
        }
        let e = d.resigned(&c).unwrap();
        for a in 0..s.num_roots() {
            for b in 0..s.num_roots() {
                prop_assert_eq!(e.n(a, b).abs(), d.n(a, b).abs());
                if s.sum(a, b).is_some() {
                    prop_assert_eq!(e.n(a, b), -e.n(b, a));
                    prop_assert_eq!(e.n(a, b) * e.n(s.neg(a), s.neg(b)), -1);
                }
            }
        }
        prop_assert!(jacobi_ok(&e));
    }

    #[test]
    fn odd_sign_vectors_are_rejected(k in 0usize..20) {
        let s = RootSystem::new(CartanType::A, 4).unwrap();
        let d = ChevalleyData::new(&s);
        let mut c = vec![1i8; s.num_roots()];
        c[k] = -1;
        prop_assert!(d.resigned(&c).is_err());
    }
}
