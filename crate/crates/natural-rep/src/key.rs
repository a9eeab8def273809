use adjoint_group::Mat;
use ring_core::{APair, Elem, FiniteRing};
use root_systems::RootId;
use serde::Serialize;
use twisted_group::{Param, SigmaContext};
use twisted_roots::ClassKind;

use crate::{NatContext, NatError};

/// Matrices recovered from twisted generators of one class, next to `π(X_β)`.
#[derive(Clone, Debug, Serialize)]
pub struct Recovered {
    pub class: usize,
    pub kind: ClassKind,
    pub roots: Vec<RootId>,
    #[serde(skip)]
    pub recovered: Vec<Mat>,
    #[serde(skip)]
    pub expected: Vec<Mat>,
    pub matches: bool,
}

fn lin(r: &FiniteRing, terms: &[(Elem, &Mat)]) -> Mat {
    let d = terms[0].1.dim();
    terms.iter().fold(Mat::zeros(d), |acc, (k, m)| acc.add(r, &m.scale(r, *k)))
}

/// `𝓕_[α](t,u) = x_[α](t,u) − x_[α](−t,u)`, a matrix rather than a group element.
fn script_f(ctx: &SigmaContext, c: usize, t: Elem, u: Elem) -> Result<Mat, NatError> {
    let r = ctx.ring();
    let plus = ctx.x_class(c, Param::Pair(APair::new(t, u)))?;
    let minus = ctx.x_class(c, Param::Pair(APair::new(r.neg(t), u)))?;
    Ok(plus.sub(r, &minus))
}

/// Evaluates the recovery combinations for class `c` with the antisymmetric unit `a`
/// (ignored for `A₁` classes) and compares them with `π(X_β)` over the orbit.
pub fn key_recover(nat: &NatContext, c: usize, a: Elem) -> Result<Recovered, NatError> {
    let ctx = nat.sigma()?;
    let r = nat.ring();
    let cl = ctx.twisted().class(c).clone();
    let half = r.inv_int(2).map_err(|_| NatError::Hypothesis("1/2 in the ring"))?;
    let quarter = r.mul(half, half);
    let one = r.one();
    let m1 = r.neg(one);
    let ainv = || -> Result<Elem, NatError> {
        if cl.kind != ClassKind::A1 && (!r.is_unit(a) || r.theta(a) != r.neg(a)) {
            return Err(NatError::Hypothesis("a unit a with θ(a) = −a"));
        }
        Ok(r.inv(a)?)
    };
    let x = |t: Elem| ctx.x_class(c, Param::Scalar(t));
    let recovered = match cl.kind {
        ClassKind::A1 => {
            let d = x(one)?.sub(r, &x(m1)?);
            vec![d.scale(r, half)]
        }
        ClassKind::A1x2 => {
            let ai = ainv()?;
            let p = x(one)?.sub(r, &x(m1)?);
            let q = x(a)?.sub(r, &x(r.neg(a))?);
            vec![lin(r, &[(quarter, &p), (r.mul(quarter, ai), &q)]), lin(r, &[(quarter, &p), (r.neg(r.mul(quarter, ai)), &q)])]
        }
        ClassKind::A2 => {
            let ai = ainv()?;
            let third = r.inv_int(3).map_err(|_| NatError::Hypothesis("1/3 in the ring"))?;
            let two = r.from_int(2);
            let a2 = r.mul(a, a);
            let f = |t: Elem, u: Elem| script_f(ctx, c, t, u);
            // 12 S = 8𝓕(1, 1/2) − 𝓕(2, 2) and 12a D = 8𝓕(a, −a²/2) − 𝓕(2a, −2a²).
            let s12 = lin(r, &[(r.from_int(8), &f(one, half)?), (m1, &f(two, two)?)]);
            let d12 = lin(
                r,
                &[(r.from_int(8), &f(a, r.neg(r.mul(a2, half)))?), (m1, &f(r.mul(two, a), r.neg(r.mul(two, a2)))?)],
            );
            let k24 = r.mul(r.mul(quarter, half), third);
            let xa = lin(r, &[(k24, &s12), (r.mul(k24, ai), &d12)]);
            let xab = lin(r, &[(k24, &s12), (r.neg(r.mul(k24, ai)), &d12)]);
            let n = ctx.data().n(cl.orbit[1], cl.orbit[0]) as i64;
            let p0 = ctx.x_class(c, Param::Pair(APair::new(r.zero(), a)))?;
            let q0 = ctx.x_class(c, Param::Pair(APair::new(r.zero(), r.neg(a))))?;
            let k = r.mul(r.scale(n, half), ai);
            vec![xa, xab, p0.sub(r, &q0).scale(r, k)]
        }
        ClassKind::A1x3 => return Err(NatError::Kind(c)),
    };
    let expected: Vec<Mat> = cl.orbit.iter().map(|&b| nat.pi(b)).collect();
    let matches = recovered == expected;
    Ok(Recovered { class: c, kind: cl.kind, roots: cl.orbit.clone(), recovered, expected, matches })
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub class: usize,
    pub relations: Vec<(String, bool)>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.relations.iter().all(|(_, ok)| *ok)
    }
}

/// The vanishing products used when expanding `x_[α]` in the natural module.
pub fn product_relations(nat: &NatContext, c: usize) -> Result<RelationReport, NatError> {
    let ctx = nat.sigma()?;
    let r = nat.ring();
    let cl = ctx.twisted().class(c);
    let xs: Vec<Mat> = cl.orbit.iter().map(|&b| nat.pi(b)).collect();
    let prod = |idx: &[usize]| idx.iter().skip(1).fold(xs[idx[0]].clone(), |acc, &i| acc.mul(r, &xs[i]));
    let names = ["X_α", "X_ᾱ", "X_{α+ᾱ}"];
    let mut words: Vec<Vec<usize>> = (0..xs.len()).map(|i| vec![i, i]).collect();
    match cl.kind {
        ClassKind::A1x2 => words.extend([vec![0, 1, 1], vec![0, 0, 1], vec![0, 0, 1, 1]]),
        ClassKind::A2 => words.extend([
            vec![0, 2, 2],
            vec![0, 0, 2],
            vec![0, 2],
            vec![1, 2],
            vec![0, 0, 1],
            vec![0, 1, 1],
            vec![0, 1, 2],
        ]),
        _ => {}
    }
    let relations = words
        .iter()
        .map(|w| {
            let name = w.iter().map(|&i| names[i]).collect::<Vec<_>>().join(" ");
            (format!("{name} = 0"), prod(w).is_zero())
        })
        .collect();
    Ok(RelationReport { class: c, relations })
}
