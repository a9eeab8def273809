#![allow(dead_code)]

use congruence::{LevelData, Letter};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use root_systems::CartanType;
use twisted_group::SigmaContext;

/// `²A_n` over `GF(9)[ε]` at level `(ε)`.
pub fn dual_level(n: usize) -> LevelData {
    let ctx = SigmaContext::standard(CartanType::A, n, 2, "dual-gf9").unwrap();
    let r = ctx.ring();
    let eps = r.elements().find(|&e| e != r.zero() && !r.is_unit(e) && r.mul(e, e) == r.zero()).unwrap();
    LevelData::generated(ctx, &[eps]).unwrap()
}

pub fn random_letter(lv: &LevelData, rng: &mut ChaCha8Rng) -> Letter {
    let ctx = lv.ctx();
    let n = ctx.twisted().num_classes();
    let c = rng.gen_range(0..n);
    match rng.gen_range(0..3) {
        0 => Letter::Elementary { class: c, t: lv.sample_j_param(c, rng) },
        1 => Letter::Relative { class: c, r: ctx.sample_param(c, rng), u: lv.sample_j_param(c, rng) },
        _ => {
            let o = rng.gen_range(0..n);
            Letter::Conjugate { outer: o, r: ctx.sample_param(o, rng), inner: c, t: lv.sample_j_param(c, rng) }
        }
    }
}
