use adjoint_group::{Chevalley, Mat, RepKind};
use chevalley_basis::ChevalleyData;
use ring_core::{APair, Elem, FiniteRing};
use root_systems::RootId;
use serde::Serialize;
use twisted_group::{Param, SigmaContext};
use twisted_roots::ClassKind;

use crate::NatError;

#[derive(Clone, Debug, Serialize)]
pub struct TangentCase {
    pub class: usize,
    pub identity: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TangentReport {
    pub system: String,
    pub ring: String,
    pub cases: Vec<TangentCase>,
}

impl TangentReport {
    pub fn passed(&self) -> bool {
        !self.cases.is_empty() && self.cases.iter().all(|c| c.holds)
    }
}

struct Ad<'a> {
    r: &'a FiniteRing,
    data: &'a ChevalleyData,
}

impl Ad<'_> {
    fn x(&self, a: RootId) -> Mat {
        let m = self.data.ad_x(a);
        let d = m.dim();
        let mut out = Mat::zeros(d);
        for i in 0..d {
            for j in 0..d {
                out.set(i, j, self.r.from_int(m.get(i, j) as i64));
            }
        }
        out
    }

    /// `ad H_β = [ad X_β, ad X_{−β}]`.
    fn h(&self, a: RootId) -> Mat {
        let (p, q) = (self.x(a), self.x(self.data.system().neg(a)));
        p.mul(self.r, &q).sub(self.r, &q.mul(self.r, &p))
    }

    fn comb(&self, terms: &[(Elem, Mat)]) -> Mat {
        let d = terms[0].1.dim();
        terms.iter().fold(Mat::zeros(d), |acc, (k, m)| acc.add(self.r, &m.scale(self.r, *k)))
    }
}

fn conj(r: &FiniteRing, g: &Mat, x: &Mat) -> Result<Mat, NatError> {
    let gi = g.inverse(r).ok_or(NatError::Hypothesis("an invertible element"))?;
    Ok(g.mul(r, x).mul(r, &gi))
}

/// `H_α = x_α(1) ∘ X_{−α} + X_α − X_{−α}` for every root of an adjoint group.
pub fn untwisted_tangent_checks(grp: &Chevalley) -> Result<TangentReport, NatError> {
    if grp.kind() != RepKind::Adjoint {
        return Err(NatError::Hypothesis("the adjoint module"));
    }
    let r = grp.ring();
    let ad = Ad { r, data: grp.data() };
    let sys = grp.system();
    let one = r.one();
    let mut cases = Vec::new();
    for a in 0..sys.num_roots() {
        let na = sys.neg(a);
        let lhs = ad.comb(&[(one, conj(r, &grp.x(a, one), &ad.x(na))?), (one, ad.x(a)), (r.neg(one), ad.x(na))]);
        cases.push(TangentCase { class: a, identity: "H = x(1)∘X₋ + X − X₋".into(), holds: lhs == ad.h(a) });
    }
    Ok(TangentReport { system: sys.label(), ring: r.label().to_string(), cases })
}

/// The membership identities for `H⁺_[α]` and `H⁻_[α]` over every class, in the adjoint action
/// `g ∘ X = gXg⁻¹`. `a` is the antisymmetric unit used in the `X⁻`, `H⁻` vectors.
pub fn tangent_identity_checks(ctx: &SigmaContext, a: Elem) -> Result<TangentReport, NatError> {
    if ctx.group().kind() != RepKind::Adjoint {
        return Err(NatError::Hypothesis("the adjoint module"));
    }
    let r = ctx.ring();
    if !r.is_unit(a) || r.theta(a) != r.neg(a) {
        return Err(NatError::Hypothesis("a unit a with θ(a) = −a"));
    }
    let half = r.inv_int(2).map_err(|_| NatError::Hypothesis("1/2 in the ring"))?;
    let tw = ctx.twisted();
    let sys = tw.system();
    let ad = Ad { r, data: ctx.data() };
    let (one, m1) = (r.one(), r.neg(r.one()));
    let mut cases = Vec::new();
    for c in 0..tw.num_classes() {
        let cl = tw.class(c);
        let o = &cl.orbit;
        let no: Vec<RootId> = o.iter().map(|&b| sys.neg(b)).collect();
        let mut push = |name: &str, holds: bool| cases.push(TangentCase { class: c, identity: name.into(), holds });
        match cl.kind {
            ClassKind::A1 => {
                let g = ctx.x_class(c, Param::Scalar(one))?;
                let lhs = ad.comb(&[(one, conj(r, &g, &ad.x(no[0]))?), (one, ad.x(o[0])), (m1, ad.x(no[0]))]);
                push("H⁺ = x(1)∘X⁺₋ + X⁺ − X⁺₋", lhs == ad.h(o[0]));
            }
            ClassKind::A1x2 => {
                let g = ctx.x_class(c, Param::Scalar(one))?;
                let xp = ad.comb(&[(one, ad.x(o[0])), (one, ad.x(o[1]))]);
                let xpn = ad.comb(&[(one, ad.x(no[0])), (one, ad.x(no[1]))]);
                let xm = ad.comb(&[(a, ad.x(o[0])), (r.neg(a), ad.x(o[1]))]);
                let xmn = ad.comb(&[(a, ad.x(no[0])), (r.neg(a), ad.x(no[1]))]);
                let hp = ad.comb(&[(one, ad.h(o[0])), (one, ad.h(o[1]))]);
                let hm = ad.comb(&[(a, ad.h(o[0])), (r.neg(a), ad.h(o[1]))]);
                let lhs = ad.comb(&[(one, conj(r, &g, &xpn)?), (one, xp), (m1, xpn.clone())]);
                push("H⁺ = x(1)∘X⁺₋ + X⁺ − X⁺₋", lhs == hp);
                let lhs = ad.comb(&[(one, conj(r, &g, &xmn)?), (one, xm), (m1, xmn.clone())]);
                push("H⁻ = x(1)∘X⁻₋(I) + X⁻(I) − X⁻₋(I)", lhs == hm);
            }
            ClassKind::A2 => {
                let three = r.from_int(3);
                if !r.is_unit(three) {
                    return Err(NatError::Hypothesis("1/3 in the ring"));
                }
                let g = ctx.x_class(c, Param::Pair(APair::new(one, half)))?;
                let xp = ad.comb(&[(one, ad.x(o[0])), (one, ad.x(o[1]))]);
                let xpn = ad.comb(&[(one, ad.x(no[0])), (one, ad.x(no[1]))]);
                let xm = ad.comb(&[(a, ad.x(o[0])), (r.neg(a), ad.x(o[1]))]);
                let xmn = ad.comb(&[(a, ad.x(no[0])), (r.neg(a), ad.x(no[1]))]);
                let xm2 = ad.x(o[2]).scale(r, a);
                let hp = ad.comb(&[(one, ad.h(o[0])), (one, ad.h(o[1]))]);
                let hm = ad.comb(&[(a, ad.h(o[0])), (r.neg(a), ad.h(o[1]))]);
                let lhs = ad.comb(&[(one, conj(r, &g, &xpn)?), (half, xp), (m1, xpn.clone())]);
                push("H⁺ = x(1,1/2)∘X⁺₋ + ½X⁺ − X⁺₋", lhs == hp);
                // The X⁻(II) term carries N_{ᾱ,α}, the factor inside x_[α](t,u). A bare
                // −X⁻(II) matches only when N_{ᾱ,α} = −1.
                let n = ctx.data().n(o[1], o[0]) as i64;
                let lhs = ad.comb(&[
                    (one, conj(r, &g, &xmn)?),
                    (r.mul(three, half), xm),
                    (r.from_int(n), xm2),
                    (m1, xmn.clone()),
                ]);
                push("H⁻ = x(1,1/2)∘X⁻₋(I) + (3/2)X⁻(I) + N_{ᾱ,α}X⁻(II) − X⁻₋(I)", lhs == hm);
            }
            ClassKind::A1x3 => return Err(NatError::Kind(c)),
        }
    }
    Ok(TangentReport { system: tw.label(), ring: r.label().to_string(), cases })
}
