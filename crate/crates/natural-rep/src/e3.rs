use std::sync::Arc;

use adjoint_group::Mat;
use ring_core::{APair, Elem, FiniteRing, RingError};
use serde::Serialize;
use twisted_group::SigmaContext;
use twisted_roots::ClassKind;

use crate::{NatContext, NatError};

/// The 3×3 model `E₃(R)` of a rank-one `A₂` class: `x′_α = 1 + tE₂₃`, `x′_ᾱ = 1 + tE₁₂`,
/// `x′_{α+ᾱ} = 1 + tE₁₃`, and the transposed positions for the negatives.
pub struct E3<'a> {
    r: &'a FiniteRing,
}

impl<'a> E3<'a> {
    pub fn new(r: &'a FiniteRing) -> E3<'a> {
        E3 { r }
    }

    fn unit(&self, i: usize, j: usize, t: Elem) -> Mat {
        let mut m = Mat::identity(self.r, 3);
        m.set(i, j, t);
        m
    }

    fn mul(&self, ms: &[&Mat]) -> Mat {
        ms.iter().skip(1).fold(ms[0].clone(), |acc, m| acc.mul(self.r, m))
    }

    pub fn x_alpha(&self, t: Elem) -> Mat {
        self.unit(1, 2, t)
    }

    pub fn x_alpha_bar(&self, t: Elem) -> Mat {
        self.unit(0, 1, t)
    }

    pub fn x_neg_alpha(&self, t: Elem) -> Mat {
        self.unit(2, 1, t)
    }

    pub fn x_neg_alpha_bar(&self, t: Elem) -> Mat {
        self.unit(1, 0, t)
    }

    /// `x′_[α](t,u)`, upper unitriangular with entries `t̄, u, t`.
    pub fn x_pair(&self, p: APair) -> Mat {
        let r = self.r;
        let z = r.zero();
        let o = r.one();
        Mat::from_rows(vec![vec![o, r.theta(p.t), p.u], vec![z, o, p.t], vec![z, z, o]])
    }

    /// `x′_{−[α]}(t,u)`, lower unitriangular with entries `t, u, t̄`.
    pub fn x_neg_pair(&self, p: APair) -> Mat {
        let r = self.r;
        let z = r.zero();
        let o = r.one();
        Mat::from_rows(vec![vec![o, z, z], vec![p.t, o, z], vec![p.u, r.theta(p.t), o]])
    }

    pub fn w_alpha(&self, t: Elem) -> Result<Mat, RingError> {
        let ti = self.r.neg(self.r.inv(t)?);
        let x = self.x_alpha(t);
        Ok(self.mul(&[&x, &self.x_neg_alpha(ti), &x]))
    }

    pub fn w_alpha_bar(&self, t: Elem) -> Result<Mat, RingError> {
        let ti = self.r.neg(self.r.inv(t)?);
        let x = self.x_alpha_bar(t);
        Ok(self.mul(&[&x, &self.x_neg_alpha_bar(ti), &x]))
    }

    /// `w′_[α](t) = w′_α(t̄) w′_ᾱ(1) w′_α(t)`.
    pub fn w_class(&self, t: Elem) -> Result<Mat, RingError> {
        let r = self.r;
        Ok(self.mul(&[&self.w_alpha(r.theta(t))?, &self.w_alpha_bar(r.one())?, &self.w_alpha(t)?]))
    }

    /// `x′(t,u) x′_{−}(−ū⁻¹·(t,u)) x′(uū⁻¹·(t,u))`.
    pub fn w_pair(&self, p: APair) -> Result<Mat, RingError> {
        let r = self.r;
        let ubi = r.inv(r.theta(p.u))?;
        let a = self.x_pair(p);
        let b = self.x_neg_pair(r.a_act(r.neg(ubi), p));
        let c = self.x_pair(r.a_act(r.mul(p.u, ubi), p));
        Ok(self.mul(&[&a, &b, &c]))
    }

    /// The anti-diagonal matrix with entries `t, −t⁻¹t̄, t̄⁻¹`.
    pub fn anti_diagonal(&self, t: Elem) -> Result<Mat, RingError> {
        let r = self.r;
        let z = r.zero();
        let tb = r.theta(t);
        let mid = r.neg(r.mul(r.inv(t)?, tb));
        Ok(Mat::from_rows(vec![vec![z, z, t], vec![z, mid, z], vec![r.inv(tb)?, z, z]]))
    }

    /// `h′(t) = diag(t̄, t t̄⁻¹, t⁻¹)`.
    pub fn h(&self, t: Elem) -> Result<Mat, RingError> {
        let r = self.r;
        let tb = r.theta(t);
        Ok(Mat::diagonal(&[tb, r.mul(t, r.inv(tb)?), r.inv(t)?]))
    }

    pub fn h_alpha(&self, c: Elem) -> Result<Mat, RingError> {
        Ok(Mat::diagonal(&[self.r.one(), c, self.r.inv(c)?]))
    }

    pub fn h_alpha_bar(&self, c: Elem) -> Result<Mat, RingError> {
        Ok(Mat::diagonal(&[c, self.r.inv(c)?, self.r.one()]))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct E3Report {
    pub units: usize,
    pub pairs: usize,
    /// `w′(t) w′(t̄) = I`.
    pub w_inverse: bool,
    /// `w′(t̄) w′(1) = h′(t)`.
    pub w_to_h: bool,
    /// `w′_α(ū) w′_ᾱ(1) w′_α(u)` is the anti-diagonal matrix.
    pub w_product: bool,
    /// `w′(t,u)` depends only on `u` and equals the same anti-diagonal matrix.
    pub w_pair: bool,
    /// `w′(t,u) w′(t′,u′)` is the displayed diagonal and splits as `h′_α h′_ᾱ`.
    pub h_collapse: bool,
    /// The same `w`/`h` identities hold for the `A₂` class in the natural and adjoint groups.
    pub natural_agrees: bool,
    pub adjoint_agrees: bool,
}

impl E3Report {
    pub fn passed(&self) -> bool {
        self.w_inverse
            && self.w_to_h
            && self.w_product
            && self.w_pair
            && self.h_collapse
            && self.natural_agrees
            && self.adjoint_agrees
    }
}

/// The `w`/`h` identities in a twisted group for its `A₂` classes.
fn group_wh(ctx: &SigmaContext, units: &[Elem]) -> Result<bool, NatError> {
    let r = ctx.ring();
    let tw = ctx.twisted();
    let mut ok = true;
    for c in (0..tw.num_classes()).filter(|&c| tw.class(c).kind == ClassKind::A2) {
        let w1 = ctx.w_class_unit(c, r.one())?;
        for &t in units {
            let w = ctx.w_class_unit(c, t)?;
            let wb = ctx.w_class_unit(c, r.theta(t))?;
            ok &= ctx.group().mul(&w, &wb).is_identity(r);
            ok &= ctx.group().mul(&wb, &w1) == ctx.h_class(c, t)?;
        }
    }
    Ok(ok)
}

/// Checks the `E₃(R)` identities for the given units, then the same conclusions in the twisted
/// groups of `²A₂` over the ring.
pub fn e3_lemma_checks(nat: &NatContext, units: &[Elem]) -> Result<E3Report, NatError> {
    if nat.rank() != 2 {
        return Err(NatError::Hypothesis("rank two"));
    }
    let ctx = nat.sigma()?;
    let r = nat.ring();
    if let Some(&t) = units.iter().find(|&&t| !r.is_unit(t)) {
        return Err(RingError::NotAUnit(r.show(t)).into());
    }
    let e = E3::new(r);
    let (mut w_inverse, mut w_to_h, mut w_product) = (true, true, true);
    let w1 = e.w_class(r.one())?;
    for &t in units {
        let tb = r.theta(t);
        let w = e.anti_diagonal(t)?;
        let wb = e.anti_diagonal(tb)?;
        w_inverse &= w.mul(r, &wb).is_identity(r);
        w_to_h &= wb.mul(r, &e.anti_diagonal(r.one())?) == e.h(t)?;
        w_product &= e.w_class(t)? == w;
        w_to_h &= e.w_class(tb)?.mul(r, &w1) == e.h(t)?;
    }
    let pairs: Vec<APair> = r.a_pairs().into_iter().filter(|p| r.is_unit(p.u)).collect();
    let mut w_pair = true;
    let mut ws = Vec::with_capacity(pairs.len());
    for &p in &pairs {
        let w = e.w_pair(p)?;
        w_pair &= w == e.anti_diagonal(p.u)?;
        ws.push(w);
    }
    let mut h_collapse = true;
    for (p, wp) in pairs.iter().zip(&ws) {
        for (q, wq) in pairs.iter().zip(&ws) {
            let (u, ub) = (p.u, r.theta(p.u));
            let (v, vb) = (q.u, r.theta(q.u));
            let (ui, ubi, vi, vbi) = (r.inv(u)?, r.inv(ub)?, r.inv(v)?, r.inv(vb)?);
            let want = Mat::diagonal(&[r.mul(u, vbi), r.product([ui, ub, vi, vb]), r.mul(v, ubi)]);
            let split = e.h_alpha(r.mul(ub, vi))?.mul(r, &e.h_alpha_bar(r.mul(u, vbi))?);
            h_collapse &= wp.mul(r, wq) == want && want == split && want == e.h(r.mul(ub, vi))?;
        }
    }
    let natural_agrees = group_wh(ctx, units)?;
    let adj = SigmaContext::adjoint(Arc::clone(ctx.ring_arc()), Arc::clone(ctx.twisted_arc()))?;
    let adjoint_agrees = group_wh(&adj, units)?;
    Ok(E3Report {
        units: units.len(),
        pairs: pairs.len(),
        w_inverse,
        w_to_h,
        w_product,
        w_pair,
        h_collapse,
        natural_agrees,
        adjoint_agrees,
    })
}

