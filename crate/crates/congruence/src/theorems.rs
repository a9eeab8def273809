use adjoint_group::{closure, ElementSet, Mat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ring_core::{Elem, FiniteRing, ThetaIdeal};
use serde::Serialize;
use twisted_group::{Param, SigmaContext};

use crate::{CongruenceError, LevelData};

/// Subgroups of an enumerable twisted group, grown one generator at a time.
pub struct Subgroups<'a> {
    ctx: &'a SigmaContext,
    gens: Vec<(Mat, Mat)>,
    budget: usize,
}

fn with_inverses(ctx: &SigmaContext, ms: &[Mat]) -> Result<Vec<(Mat, Mat)>, CongruenceError> {
    ms.iter().map(|m| Ok((m.clone(), ctx.inverse(m)?))).collect()
}

impl<'a> Subgroups<'a> {
    pub fn new(ctx: &'a SigmaContext, budget: usize) -> Result<Subgroups<'a>, CongruenceError> {
        let gens = with_inverses(ctx, &ctx.all_generators()?)?;
        Ok(Subgroups { ctx, gens, budget })
    }

    /// Generators of `E′_σ(R)` paired with their inverses.
    pub fn generators(&self) -> &[(Mat, Mat)] {
        &self.gens
    }

    pub fn ambient(&self) -> Result<ElementSet, CongruenceError> {
        let gs: Vec<Mat> = self.gens.iter().map(|p| p.0.clone()).collect();
        Ok(closure(self.ctx.ring(), &gs, self.budget)?)
    }

    /// Subgroup generated by `cands`, with the irredundant generators that were kept.
    pub fn generate(&self, cands: impl IntoIterator<Item = Mat>) -> Result<(ElementSet, Vec<Mat>), CongruenceError> {
        let r = self.ctx.ring();
        let mut kept: Vec<Mat> = Vec::new();
        let mut set = closure(r, &[self.ctx.identity()], self.budget)?;
        for c in cands {
            if !set.contains(&c) {
                kept.push(c);
                set = closure(r, &kept, self.budget)?;
            }
        }
        Ok((set, kept))
    }

    /// Smallest subgroup containing `seeds` and normalized by every matrix in `conj`.
    pub fn normal_closure(
        &self,
        seeds: impl IntoIterator<Item = Mat>,
        conj: &[(Mat, Mat)],
    ) -> Result<(ElementSet, Vec<Mat>), CongruenceError> {
        let r = self.ctx.ring();
        let (mut set, mut kept) = self.generate(seeds)?;
        let mut k = 0;
        while k < kept.len() {
            let g = kept[k].clone();
            for (e, ei) in conj {
                let c = e.mul(r, &g).mul(r, ei);
                if !set.contains(&c) {
                    kept.push(c);
                    set = closure(r, &kept, self.budget)?;
                }
            }
            k += 1;
        }
        Ok((set, kept))
    }

    /// `E′_σ(R,J)`: the normal closure of `E′_σ(J)` in `E′_σ(R)`.
    pub fn relative(&self, level: &LevelData) -> Result<(ElementSet, Vec<Mat>), CongruenceError> {
        self.normal_closure(level.elementary_generators()?, &self.gens)
    }

    /// `[⟨xs⟩, ⟨ys⟩]` as the normal closure of the generator commutators in `⟨xs, ys⟩`.
    pub fn commutator_subgroup(&self, xs: &[Mat], ys: &[Mat]) -> Result<ElementSet, CongruenceError> {
        let r = self.ctx.ring();
        let xi = with_inverses(self.ctx, xs)?;
        let yi = with_inverses(self.ctx, ys)?;
        let mut seeds = Vec::new();
        for (x, xinv) in &xi {
            for (y, yinv) in &yi {
                let c = x.mul(r, y).mul(r, xinv).mul(r, yinv);
                if !c.is_identity(r) {
                    seeds.push(c);
                }
            }
        }
        let mut conj = xi;
        conj.extend(yi);
        Ok(self.normal_closure(seeds, &conj)?.0)
    }
}

fn same_set(a: &ElementSet, b: &ElementSet) -> bool {
    a.len() == b.len() && a.elements().iter().all(|m| b.contains(m))
}

fn is_subset(a: &ElementSet, b: &ElementSet) -> bool {
    a.elements().iter().all(|m| b.contains(m))
}

/// A small generating list for an ideal, chosen greedily from `cands`.
fn irredundant(r: &FiniteRing, cands: &[Elem]) -> ThetaIdeal {
    let mut gens: Vec<Elem> = Vec::new();
    let mut cur = ThetaIdeal::zero(r);
    for &c in cands {
        if !cur.contains(c) {
            gens.push(c);
            cur = ThetaIdeal::generated(r, &gens);
        }
    }
    cur
}

/// The level of a subgroup: the ideal generated by all `J_[α](H)`.
///
/// For `A2` classes both coordinates of every `x_[α](t,u) ∈ H` contribute.
pub fn elementary_level(ctx: &SigmaContext, h: &ElementSet) -> Result<ThetaIdeal, CongruenceError> {
    let mut found = Vec::new();
    for c in 0..ctx.twisted().num_classes() {
        for p in ctx.domain(c) {
            if h.contains(&ctx.x_class(c, p)?) {
                match p {
                    Param::Scalar(t) => found.push(t),
                    Param::Pair(x) => found.extend([x.t, x.u]),
                }
            }
        }
    }
    found.sort();
    found.dedup();
    Ok(irredundant(ctx.ring(), &found))
}

fn show_ideal(r: &FiniteRing, j: &ThetaIdeal) -> Vec<String> {
    j.generators().iter().map(|&g| r.show(g)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SandwichReport {
    /// `H` is normalized by `E′_σ(R)`; otherwise the remaining fields are not meaningful.
    pub normalized: bool,
    pub level: Vec<String>,
    pub level_size: usize,
    pub subgroup_order: usize,
    pub relative_order: usize,
    /// `E′_σ(R,J) ⊆ H`.
    pub lower: bool,
    /// `H ⊆ G_σ(R,J)`.
    pub upper: bool,
}

impl SandwichReport {
    pub fn passed(&self) -> bool {
        self.normalized && self.lower && self.upper
    }
}

/// Computes the level `J` of `H` and checks `E′_σ(R,J) ⊆ H ⊆ G_σ(R,J)`.
pub fn sandwich_check(ctx: &SigmaContext, h: &ElementSet, budget: usize) -> Result<SandwichReport, CongruenceError> {
    let r = ctx.ring();
    let subs = Subgroups::new(ctx, budget)?;
    let normalized = h
        .elements()
        .iter()
        .all(|x| subs.generators().iter().all(|(g, gi)| h.contains(&g.mul(r, x).mul(r, gi))));
    let j = elementary_level(ctx, h)?;
    let level = LevelData::new(ctx.clone(), j.clone())?;
    let (rel, _) = subs.relative(&level)?;
    Ok(SandwichReport {
        normalized,
        level: show_ideal(r, &j),
        level_size: j.size(),
        subgroup_order: h.len(),
        relative_order: rel.len(),
        lower: is_subset(&rel, h),
        upper: h.elements().iter().all(|x| level.in_g_sigma_rj(x)),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalClosureReport {
    pub class: usize,
    pub z: String,
    pub level: Vec<String>,
    pub level_size: usize,
    pub proper: bool,
    pub closure_order: usize,
    pub relative_order: usize,
    pub equal: bool,
}

/// The ideal `Rz`, `Rz + Rz̄ (+ Rz̄̄)` or `Rz₁ + Rz̄₁ + R(z₂ − z̄₂)` attached to `x_[α](z)`.
pub fn generator_level(ctx: &SigmaContext, z: Param) -> ThetaIdeal {
    let r = ctx.ring();
    match z {
        Param::Scalar(t) => ThetaIdeal::generated(r, &[t]),
        Param::Pair(p) => ThetaIdeal::generated(r, &[p.t, r.sub(p.u, r.theta(p.u))]),
    }
}

/// Compares the normal closure of `x_[α](z)` in `E′_σ(R)` with `E′_σ(R, J(z))`.
pub fn normal_closure_level_check(
    ctx: &SigmaContext,
    c: usize,
    z: Param,
    budget: usize,
) -> Result<NormalClosureReport, CongruenceError> {
    let r = ctx.ring();
    let subs = Subgroups::new(ctx, budget)?;
    let (h, _) = subs.normal_closure([ctx.x_class(c, z)?], subs.generators())?;
    let j = generator_level(ctx, z);
    let level = LevelData::new(ctx.clone(), j.clone())?;
    let (rel, _) = subs.relative(&level)?;
    Ok(NormalClosureReport {
        class: c,
        z: z.show(r),
        level: show_ideal(r, &j),
        level_size: j.size(),
        proper: !j.is_zero() && !j.is_unit_ideal(),
        closure_order: h.len(),
        relative_order: rel.len(),
        equal: same_set(&h, &rel),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutatorTheoremReport {
    pub mode: &'static str,
    pub level: Vec<String>,
    /// Orders of `E′_σ(R,J)`, `[E′_σ(R), E′_σ(J)]`, `[E′_σ(R), G_σ(R,J)]` and
    /// `[G_σ(R), E′_σ(R,J)]` when enumerated.
    pub orders: Vec<usize>,
    pub samples: usize,
    pub passed: bool,
}

/// Checks the four-way equality of relative commutator subgroups.
///
/// In the enumerated mode `G_σ(R)` is taken to be `⟨E′_σ(R), T_σ(R)⟩`, which is the whole
/// group over a field. In containment mode `samples` commutators `[g, e]` with `g` a word in
/// relative generators and `e` a generator of `E′_σ(R)` are factored in `G_σ(J)` with
/// `J`-payloads.
pub fn commutator_theorem_instance(
    level: &LevelData,
    budget: usize,
    containment: Option<(usize, u64)>,
) -> Result<CommutatorTheoremReport, CongruenceError> {
    let ctx = level.ctx();
    let r = ctx.ring();
    if let Some((samples, seed)) = containment {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens = ctx.all_generators()?;
        let n = ctx.twisted().num_classes();
        let mut passed = true;
        for _ in 0..samples {
            let mut g = ctx.identity();
            for _ in 0..4 {
                let c = rng.gen_range(0..n);
                let m = level.relative_generator(c, ctx.sample_param(c, &mut rng), level.sample_j_param(c, &mut rng))?;
                g = ctx.group().mul(&g, &m);
            }
            let e = &gens[rng.gen_range(0..gens.len())];
            let k = ctx.commutator(&g, e)?;
            passed &= level.in_g_sigma_rj(&k) && level.g_sigma_j_decompose(&k).is_ok();
        }
        return Ok(CommutatorTheoremReport {
            mode: "containment",
            level: show_ideal(r, level.ideal()),
            orders: Vec::new(),
            samples,
            passed,
        });
    }
    let subs = Subgroups::new(ctx, budget)?;
    let e_gens: Vec<Mat> = subs.generators().iter().map(|p| p.0.clone()).collect();
    let torus: Vec<Mat> =
        ctx.self_conjugate_characters().iter().map(|chi| ctx.h_chi(chi)).collect::<Result<_, _>>()?;
    let (big, big_gens) = subs.generate(e_gens.iter().cloned().chain(torus))?;
    let (rel, rel_gens) = subs.relative(level)?;
    let ej = level.elementary_generators()?;
    let b = subs.commutator_subgroup(&e_gens, &ej)?;
    let (_, k_gens) = subs.generate(big.elements().iter().filter(|m| level.in_g_sigma_rj(m)).cloned())?;
    let c = subs.commutator_subgroup(&e_gens, &k_gens)?;
    let d = subs.commutator_subgroup(&big_gens, &rel_gens)?;
    let passed = same_set(&rel, &b) && same_set(&rel, &c) && same_set(&rel, &d);
    Ok(CommutatorTheoremReport {
        mode: "enumerated",
        level: show_ideal(r, level.ideal()),
        orders: vec![rel.len(), b.len(), c.len(), d.len()],
        samples: 0,
        passed,
    })
}

/// Elements of `group` commuting with every generator of `E′_σ(R)`.
pub fn center_of(ctx: &SigmaContext, group: &ElementSet) -> Result<Vec<Mat>, CongruenceError> {
    Ok(group.centralizer_of(ctx.ring(), &ctx.all_generators()?))
}
