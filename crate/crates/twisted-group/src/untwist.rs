use std::sync::Arc;

use adjoint_group::{Chevalley, Mat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ring_core::{make_ring, Elem, FiniteRing, RingDescriptor};
use root_systems::{DiagramAutomorphism, RootSystem};
use serde::Serialize;
use twisted_roots::build_twisted;

use crate::sigma::SigmaContext;
use crate::TwistedGroupError;

#[derive(Clone, Debug, Serialize)]
pub struct UntwistReport {
    pub system: String,
    pub ring: String,
    pub words: usize,
    pub identity: bool,
    pub generator_images: bool,
    pub homomorphism: bool,
    pub sigma_fixed: bool,
    pub fixed_shape: bool,
}

impl UntwistReport {
    pub fn passed(&self) -> bool {
        self.identity && self.generator_images && self.homomorphism && self.sigma_fixed && self.fixed_shape
    }
}

struct Untwist {
    base: Chevalley,
    ctx: SigmaContext,
    p: Mat,
    order: u32,
}

impl Untwist {
    fn component(&self, e: Elem, i: u32) -> Elem {
        let nb = self.base.ring().size();
        Elem(((e.idx() / nb.pow(i)) % nb) as u16)
    }

    fn split(&self, g: &Mat) -> Vec<Mat> {
        (0..self.order).map(|i| g.map(|e| self.component(e, i))).collect()
    }

    fn join(&self, parts: &[Mat]) -> Mat {
        let nb = self.base.ring().size();
        let d = parts[0].dim();
        let mut out = Mat::zeros(d);
        for i in 0..d {
            for j in 0..d {
                let idx = parts.iter().rev().fold(0usize, |acc, m| acc * nb + m.get(i, j).idx());
                out.set(i, j, Elem(idx as u16));
            }
        }
        out
    }

    /// `ρ(x) = P x P⁻¹` in `G(R)`.
    fn rho(&self, x: &Mat) -> Result<Mat, TwistedGroupError> {
        Ok(self.base.conjugate(&self.p, x)?)
    }

    fn phi(&self, x: &Mat) -> Result<Mat, TwistedGroupError> {
        let mut parts = vec![x.clone()];
        for _ in 1..self.order {
            let next = self.rho(parts.last().unwrap())?;
            parts.push(next);
        }
        Ok(self.join(&parts))
    }

    fn has_fixed_shape(&self, g: &Mat) -> Result<bool, TwistedGroupError> {
        let parts = self.split(g);
        for w in parts.windows(2) {
            if self.rho(&w[0])? != w[1] {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Checks that `x ↦ (x, ρ(x), …)` maps `G(R)` into the `σ`-fixed points of `G(R × ⋯ × R)` with
/// the coordinate shift, and that sampled `σ`-fixed elements have that shape.
pub fn untwist_isomorphism(
    sys: &RootSystem,
    rho: &DiagramAutomorphism,
    base: &RingDescriptor,
    words: usize,
    seed: u64,
) -> Result<UntwistReport, TwistedGroupError> {
    let order = rho.order() as u32;
    let prod_desc = RingDescriptor::Product { base: Box::new(base.clone()), copies: order };
    let prod: Arc<FiniteRing> = Arc::new(make_ring(&prod_desc)?);
    let base_ring: Arc<FiniteRing> = Arc::new(make_ring(base)?);
    let tw = Arc::new(build_twisted(sys, rho)?);
    let ctx = SigmaContext::adjoint(prod, tw)?;
    let grp = Chevalley::adjoint(base_ring.clone(), ctx.group().data_arc().clone());
    let ip = ctx.data().rho_algebra_matrix()?;
    let r = &*base_ring;
    let mut p = Mat::zeros(ip.dim());
    for i in 0..ip.dim() {
        for j in 0..ip.dim() {
            p.set(i, j, r.from_int(ip.get(i, j) as i64));
        }
    }
    let u = Untwist { base: grp, ctx, p, order };
    let g = &u.base;
    let m = sys.num_roots();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_word = |rng: &mut ChaCha8Rng| -> Mat {
        let mut acc = g.identity();
        for _ in 0..6 {
            let a = rng.gen_range(0..m);
            let t = Elem(rng.gen_range(0..r.size()) as u16);
            acc = g.mul(&acc, &g.x(a, t));
        }
        acc
    };

    let identity = u.phi(&g.identity())? == u.ctx.identity();
    let mut generator_images = true;
    for a in 0..m {
        for t in r.elements() {
            let img = u.phi(&g.x(a, t))?;
            let parts = u.split(&img);
            let eps = u.ctx.data().eps(a) as i64;
            generator_images &= parts[0] == g.x(a, t)
                && parts[1] == g.x(rho.apply(a), r.scale(eps, t))
                && u.ctx.is_sigma_fixed(&img)?;
        }
    }
    let (mut homomorphism, mut sigma_fixed, mut fixed_shape) = (true, true, true);
    for _ in 0..words {
        let x = random_word(&mut rng);
        let y = random_word(&mut rng);
        let (px, py) = (u.phi(&x)?, u.phi(&y)?);
        homomorphism &= u.phi(&g.mul(&x, &y))? == u.ctx.group().mul(&px, &py);
        sigma_fixed &= u.ctx.is_sigma_fixed(&px)?;
        // A σ-fixed element built from twisted generators of the product ring.
        let mut z = u.ctx.identity();
        for _ in 0..6 {
            let c = rng.gen_range(0..u.ctx.twisted().num_classes());
            let pc = u.ctx.sample_param(c, &mut rng);
            z = u.ctx.group().mul(&z, &u.ctx.x_class(c, pc)?);
        }
        fixed_shape &= u.ctx.is_sigma_fixed(&z)? && u.has_fixed_shape(&z)?;
    }
    Ok(UntwistReport {
        system: sys.label(),
        ring: prod_desc.short_name(),
        words,
        identity,
        generator_images,
        homomorphism,
        sigma_fixed,
        fixed_shape,
    })
}
