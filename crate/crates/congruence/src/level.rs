use std::sync::Arc;

use adjoint_group::{Mat, RepKind};
use rand::Rng;
use ring_core::{Elem, FiniteRing, Quotient, ThetaIdeal};
use twisted_group::{Param, SigmaContext};
use twisted_roots::ClassKind;

use crate::CongruenceError;

/// A twisted group together with a `θ`-invariant level `J` and the reduction `R → R/J`.
#[derive(Clone)]
pub struct LevelData {
    ctx: SigmaContext,
    ideal: ThetaIdeal,
    quotient: Quotient,
    reduced: Option<SigmaContext>,
    fixed: Vec<Elem>,
    ring_elems: Vec<Elem>,
    pairs: Vec<ring_core::APair>,
}

impl LevelData {
    pub fn new(ctx: SigmaContext, ideal: ThetaIdeal) -> Result<LevelData, CongruenceError> {
        if ctx.group().kind() != RepKind::Adjoint {
            return Err(CongruenceError::NotAdjoint);
        }
        let r = ctx.ring();
        if ideal.elements().iter().any(|&j| !ideal.contains(r.theta(j))) {
            return Err(CongruenceError::Domain("ideal is not θ-invariant".into()));
        }
        let quotient = ideal.quotient(r)?;
        // R/J has the same automorphism order unless J = R or θ becomes trivial modulo J.
        let reduced = if quotient.ring.theta_order() == r.theta_order() {
            let qr = Arc::new(quotient.ring.clone());
            Some(SigmaContext::new(
                qr,
                ctx.twisted_arc().clone(),
                ctx.group().data_arc().clone(),
                ctx.group().rep_arc().clone(),
            )?)
        } else {
            None
        };
        let fixed = ideal.fixed_part(r);
        let ring_elems = ideal.elements().to_vec();
        let pairs = if r.theta_order() == 2 { ideal.a_pairs(r) } else { Vec::new() };
        Ok(LevelData { ctx, ideal, quotient, reduced, fixed, ring_elems, pairs })
    }

    /// Builds the level generated by `gens`.
    pub fn generated(ctx: SigmaContext, gens: &[Elem]) -> Result<LevelData, CongruenceError> {
        let ideal = ThetaIdeal::generated(ctx.ring(), gens);
        LevelData::new(ctx, ideal)
    }

    pub fn ctx(&self) -> &SigmaContext {
        &self.ctx
    }

    pub fn ring(&self) -> &FiniteRing {
        self.ctx.ring()
    }

    pub fn ideal(&self) -> &ThetaIdeal {
        &self.ideal
    }

    pub fn quotient_ring(&self) -> &FiniteRing {
        &self.quotient.ring
    }

    /// The twisted group over `R/J`, when `θ` keeps its order there.
    pub fn reduced_ctx(&self) -> Option<&SigmaContext> {
        self.reduced.as_ref()
    }

    pub fn project(&self, a: Elem) -> Elem {
        self.quotient.project(a)
    }

    /// Entrywise image of `g` over `R/J`.
    pub fn reduce_mod(&self, g: &Mat) -> Mat {
        g.map(|e| self.quotient.project(e))
    }

    /// Membership in `G_σ(R,J)`, decided by reduction to the identity (adjoint center is trivial).
    pub fn in_g_sigma_rj(&self, g: &Mat) -> bool {
        let one = self.project(self.ring().one());
        let zero = self.project(Elem::ZERO);
        let d = g.dim();
        (0..d).all(|i| (0..d).all(|j| self.project(g.get(i, j)) == if i == j { one } else { zero }))
    }

    /// `J_[α]`: `J ∩ R_θ`, `J` or `𝒜(J)` depending on the class.
    pub fn j_domain(&self, c: usize) -> Vec<Param> {
        match self.ctx.twisted().class(c).kind {
            ClassKind::A1 => self.fixed.iter().map(|&t| Param::Scalar(t)).collect(),
            ClassKind::A2 => self.pairs.iter().map(|&p| Param::Pair(p)).collect(),
            _ => self.ring_elems.iter().map(|&t| Param::Scalar(t)).collect(),
        }
    }

    pub fn in_j_domain(&self, c: usize, p: Param) -> bool {
        let r = self.ring();
        match (self.ctx.twisted().class(c).kind, p) {
            (ClassKind::A1, Param::Scalar(t)) => r.is_fixed(t) && self.ideal.contains(t),
            (ClassKind::A2, Param::Pair(x)) => r.is_apair(x) && self.ideal.contains_pair(x),
            (ClassKind::A2, _) | (_, Param::Pair(_)) => false,
            (_, Param::Scalar(t)) => self.ideal.contains(t),
        }
    }

    pub fn sample_j_param(&self, c: usize, rng: &mut impl Rng) -> Param {
        match self.ctx.twisted().class(c).kind {
            ClassKind::A1 => Param::Scalar(self.fixed[rng.gen_range(0..self.fixed.len())]),
            ClassKind::A2 => Param::Pair(self.pairs[rng.gen_range(0..self.pairs.len())]),
            _ => Param::Scalar(self.ring_elems[rng.gen_range(0..self.ring_elems.len())]),
        }
    }

    /// Non-identity generators `x_[α](t)`, `t ∈ J_[α]`, of `E′_σ(J)`.
    pub fn elementary_generators(&self) -> Result<Vec<Mat>, CongruenceError> {
        let r = self.ring();
        let mut out = Vec::new();
        for c in 0..self.ctx.twisted().num_classes() {
            for p in self.j_domain(c) {
                let m = self.ctx.x_class(c, p)?;
                if !m.is_identity(r) {
                    out.push(m);
                }
            }
        }
        Ok(out)
    }

    /// `x_[α](r) x_{−[α]}(u) x_[α](r)⁻¹` with `u ∈ J_[α]`.
    pub fn relative_generator(&self, c: usize, r: Param, u: Param) -> Result<Mat, CongruenceError> {
        if !self.in_j_domain(c, u) {
            return Err(CongruenceError::Domain(format!("payload of class {c} is not in J")));
        }
        let x = self.ctx.x_class(c, r)?;
        Ok(self.ctx.conjugate(&x, &self.ctx.x_neg(c, u)?)?)
    }
}
