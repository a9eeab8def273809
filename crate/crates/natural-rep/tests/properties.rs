use std::sync::OnceLock;

use natural_rep::{hermitian_forms, NatContext, E3};
use proptest::prelude::*;
use ring_core::Elem;

fn nat() -> &'static (NatContext, adjoint_group::Mat) {
    static CTX: OnceLock<(NatContext, adjoint_group::Mat)> = OnceLock::new();
    CTX.get_or_init(|| {
        let nat = NatContext::from_name(3, "gf9").unwrap();
        let ctx = nat.sigma().unwrap();
        let form = hermitian_forms(ctx, &ctx.all_generators().unwrap()).unwrap().form.unwrap();
        (nat, form)
    })
}

proptest! {
    #[test]
    fn words_preserve_the_form(word in prop::collection::vec((0usize..16, 0usize..1000), 1..6)) {
        let (nat, f) = nat();
        let ctx = nat.sigma().unwrap();
        let r = nat.ring();
        let mut g = ctx.identity();
        for (c, k) in word {
            let c = c % ctx.twisted().num_classes();
            let dom = ctx.domain(c);
            g = g.mul(r, &ctx.x_class(c, dom[k % dom.len()]).unwrap());
        }
        prop_assert_eq!(&g.theta(r).transpose().mul(r, f).mul(r, &g), f);
        prop_assert!(ctx.is_sigma_fixed(&g).unwrap());
        prop_assert_eq!(nat.det(&g), r.one());
    }

    #[test]
    fn e3_weyl_element_depends_only_on_u(k in 0usize..1000) {
        let (nat, _) = nat();
        let r = nat.ring();
        let pairs: Vec<_> = r.a_pairs().into_iter().filter(|p| r.is_unit(p.u)).collect();
        let p = pairs[k % pairs.len()];
        let e = E3::new(r);
        prop_assert_eq!(e.w_pair(p).unwrap(), e.anti_diagonal(p.u).unwrap());
    }

    #[test]
    fn nat_x_is_additive(a in 0usize..12, s in 0u16..9, t in 0u16..9) {
        let (nat, _) = nat();
        let r = nat.ring();
        let (s, t) = (Elem(s), Elem(t));
        prop_assert_eq!(nat.nat_x(a, s).mul(r, &nat.nat_x(a, t)), nat.nat_x(a, r.add(s, t)));
    }
}
