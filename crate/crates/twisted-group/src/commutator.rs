use adjoint_group::Mat;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use ring_core::{APair, Elem, FiniteRing};
use root_systems::RootId;
use serde::Serialize;
use twisted_roots::{PairTag, PairType};

use crate::sigma::{Param, SigmaContext};
use crate::TwistedGroupError;

/// One generator `x_[γ](p)` of a candidate word, led by the root `lead`.
#[derive(Clone, Debug, Serialize)]
pub struct Factor {
    pub lead: RootId,
    pub class: usize,
    pub param: Param,
}

/// A candidate right-hand side. `inverted` marks the inverse of the listed word, used for the
/// reversed orientation of asymmetric pair types.
#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    pub branch: String,
    pub factors: Vec<Factor>,
    pub inverted: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutatorReport {
    pub alpha: usize,
    pub beta: usize,
    pub tag: String,
    pub swapped: bool,
    pub p: String,
    pub q: String,
    pub branches: Vec<String>,
    pub matched: Option<String>,
}

impl CommutatorReport {
    pub fn passed(&self) -> bool {
        self.matched.is_some()
    }
}

/// Root arithmetic and `N`-lookups for a pair of leads.
struct Roots<'a> {
    ctx: &'a SigmaContext,
}

impl Roots<'_> {
    fn bar(&self, a: RootId, k: u32) -> RootId {
        self.ctx.twisted().rho().apply_pow(a, k)
    }

    fn sum(&self, xs: &[RootId]) -> Option<RootId> {
        let sys = self.ctx.twisted().system();
        let mut v = vec![0i32; sys.rank()];
        for &x in xs {
            for (a, b) in v.iter_mut().zip(sys.coords(x)) {
                *a += b;
            }
        }
        sys.root_id(&v)
    }

    fn n(&self, a: RootId, b: RootId) -> i64 {
        if self.ctx.twisted().system().sum(a, b).is_some() {
            self.ctx.data().n(a, b) as i64
        } else {
            0
        }
    }

    /// `N` on two root sums, zero if either is not a root.
    fn n_sums(&self, a: &[RootId], b: &[RootId]) -> i64 {
        match (self.sum(a), self.sum(b)) {
            (Some(x), Some(y)) => self.n(x, y),
            _ => 0,
        }
    }
}

fn th(r: &FiniteRing, t: Elem, k: u32) -> Elem {
    r.theta_pow(t, k)
}

fn factor(ctx: &SigmaContext, lead: Option<RootId>, param: Param) -> Option<Factor> {
    let lead = lead?;
    Some(Factor { lead, class: ctx.twisted().class_of(lead), param })
}

fn branch(name: String, factors: Vec<Option<Factor>>) -> Option<Candidate> {
    let factors = factors.into_iter().collect::<Option<Vec<_>>>()?;
    Some(Candidate { branch: name, factors, inverted: false })
}

/// The listed right-hand sides for `[x_[a](p), x_[b](q)]` with the pair in its stated orientation.
fn oriented(ctx: &SigmaContext, a: usize, p: Param, b: usize, q: Param, tag: PairTag) -> Vec<Candidate> {
    let r = ctx.ring();
    let tw = ctx.twisted();
    let rt = Roots { ctx };
    let al = tw.class(a).rep;
    let be = tw.class(b).rep;
    let (a1, a2) = (rt.bar(al, 1), rt.bar(al, 2));
    let (b1, b2) = (rt.bar(be, 1), rt.bar(be, 2));
    let sc = |k: i64, x: Elem| Param::Scalar(r.scale(k, x));
    let name = |i: usize| format!("{tag}:{i}");
    let mut out: Vec<Option<Candidate>> = Vec::new();
    match tag {
        PairTag::A1 | PairTag::A2i => out.push(branch(name(1), vec![])),
        PairTag::A2ii => {
            let (t, u) = (p.scalar().unwrap(), q.scalar().unwrap());
            let g = tw.half_sum(a, b).expect("a2-ii pairs have a half-sum class");
            let ga = tw.class(g).rep;
            let ng = rt.n(rt.bar(ga, 1), ga);
            let lit = r.scale(
                rt.n(al, be) * ng,
                r.sub(r.mul(t, th(r, u, 1)), r.mul(th(r, t, 1), u)),
            );
            out.push(branch(name(1), vec![factor(ctx, Some(ga), Param::Pair(APair::new(r.zero(), lit)))]));
            // With α+β ∉ Φ the listed N_{α,β} vanishes; the same expression with N_{α,β̄}.
            let alt = r.scale(rt.n(al, b1) * ng, r.sub(r.mul(t, th(r, u, 1)), r.mul(th(r, t, 1), u)));
            out.push(branch(
                format!("{tag}:1-corrected"),
                vec![factor(ctx, Some(ga), Param::Pair(APair::new(r.zero(), alt)))],
            ));
        }
        PairTag::Bi => {
            let (t, u) = (p.scalar().unwrap(), q.scalar().unwrap());
            out.push(branch(name(1), vec![factor(ctx, rt.sum(&[al, be]), sc(rt.n(al, be), r.mul(t, u)))]));
        }
        PairTag::Bii => {
            let (t, u) = (p.scalar().unwrap(), q.scalar().unwrap());
            let (tb, ub) = (th(r, t, 1), th(r, u, 1));
            out.push(branch(name(1), vec![factor(ctx, rt.sum(&[al, be]), sc(rt.n(al, be), r.mul(t, u)))]));
            out.push(branch(name(2), vec![factor(ctx, rt.sum(&[al, b1]), sc(rt.n(al, b1), r.mul(t, ub)))]));
            out.push(branch(name(3), vec![factor(ctx, rt.sum(&[a1, be]), sc(rt.n(a1, be), r.mul(tb, u)))]));
        }
        PairTag::Ci => {
            let (t, u) = (p.scalar().unwrap(), q.scalar().unwrap());
            let s = r.add(r.mul(t, th(r, u, 1)), r.mul(th(r, t, 1), u));
            out.push(branch(name(1), vec![factor(ctx, rt.sum(&[al, b1]), sc(rt.n(al, b1), s))]));
        }
        PairTag::Cii => {
            let (t, u) = (p.pair().unwrap(), q.pair().unwrap());
            let (t1, u1) = (t.t, u.t);
            out.push(branch(
                name(1),
                vec![factor(ctx, rt.sum(&[al, b1]), sc(rt.n(al, b1), r.mul(t1, th(r, u1, 1))))],
            ));
            out.push(branch(
                name(2),
                vec![factor(ctx, rt.sum(&[a1, be]), sc(rt.n(a1, be), r.mul(th(r, t1, 1), u1)))],
            ));
        }
        PairTag::Di => {
            let (t, u) = (p.scalar().unwrap(), q.scalar().unwrap());
            let nab = rt.n(al, be);
            let k2 = nab * rt.n_sums(&[be], &[al, b1]);
            out.push(branch(
                name(1),
                vec![
                    factor(ctx, rt.sum(&[al, be]), sc(nab, r.mul(t, u))),
                    factor(ctx, rt.sum(&[al, be, b1]), sc(k2, r.product([t, u, th(r, u, 1)]))),
                ],
            ));
        }
        PairTag::Dii => {
            let (t, u) = (p.scalar().unwrap(), q.pair().unwrap());
            let (tb, ttb) = (th(r, t, 1), r.mul(t, th(r, t, 1)));
            let (u1, u2) = (u.t, u.u);
            let (u1b, u2b) = (th(r, u1, 1), th(r, u2, 1));
            let k2 = rt.n(be, b1) * rt.n_sums(&[be, b1], &[al]);
            let top = rt.sum(&[al, be, b1]);
            let pair = |x: Elem, y: Elem| Param::Pair(APair::new(x, y));
            out.push(branch(
                name(1),
                vec![
                    factor(ctx, rt.sum(&[al, be]), pair(r.scale(rt.n(al, be), r.mul(t, u1)), r.mul(ttb, u2))),
                    factor(ctx, top, sc(k2, r.mul(t, u2))),
                ],
            ));
            // Branches led by α+β̄ or ᾱ+β are also listed with the top sign taken from
            // N_{β̄,β}, the coefficient obtained by rewriting x_[β] with β̄ leading.
            for (k, kk) in [("", k2), ("-corrected", -k2)] {
                out.push(branch(
                    format!("{tag}:2{k}"),
                    vec![
                        factor(ctx, rt.sum(&[al, b1]), pair(r.scale(rt.n(al, b1), r.mul(t, u1b)), r.mul(ttb, u2b))),
                        factor(ctx, top, sc(kk, r.mul(t, u2b))),
                    ],
                ));
                out.push(branch(
                    format!("{tag}:3{k}"),
                    vec![
                        factor(ctx, rt.sum(&[a1, be]), pair(r.scale(rt.n(a1, be), r.mul(tb, u1)), r.mul(ttb, u2))),
                        factor(ctx, top, sc(kk, r.mul(t, u2b))),
                    ],
                ));
            }
        }
        PairTag::E => {
            let (t, u) = (p.scalar().unwrap(), q.scalar().unwrap());
            let (ub, ubb) = (th(r, u, 1), th(r, u, 2));
            let nab = rt.n(al, be);
            let k3 = rt.n(al, b2) * rt.n_sums(&[be], &[al, b2]) * rt.n_sums(&[be], &[al, b1, b2]);
            let k4 = rt.n_sums(&[be], &[al, b1]) * rt.n_sums(&[al, be, b1], &[al, b2]);
            let f3 = factor(ctx, rt.sum(&[al, be, b1, b2]), sc(k3, r.product([t, u, ub, ubb])));
            let f4 = factor(ctx, rt.sum(&[al, al, be, b1, b2]), sc(k4, r.product([t, t, u, ub, ubb])));
            let f1 = factor(ctx, rt.sum(&[al, be]), sc(nab, r.mul(t, u)));
            out.push(branch(
                name(1),
                vec![
                    f1.clone(),
                    factor(
                        ctx,
                        rt.sum(&[al, be, b1]),
                        sc(rt.n(al, b1) * rt.n_sums(&[be], &[al, b1]), r.product([t, u, ub])),
                    ),
                    f3.clone(),
                    f4.clone(),
                ],
            ));
            out.push(branch(
                name(2),
                vec![
                    f1,
                    factor(
                        ctx,
                        rt.sum(&[al, be, b2]),
                        sc(rt.n(al, b2) * rt.n_sums(&[be], &[al, b2]), r.product([t, u, ubb])),
                    ),
                    f3,
                    f4,
                ],
            ));
        }
        PairTag::F => {
            let (t, u) = (p.scalar().unwrap(), q.scalar().unwrap());
            let (tb, tbb, ub, ubb) = (th(r, t, 1), th(r, t, 2), th(r, u, 1), th(r, u, 2));
            let s2 = r.sum([r.product([t, tb, ubb]), r.product([tb, tbb, u]), r.product([t, tbb, ub])]);
            let s3 = r.sum([r.product([t, ub, ubb]), r.product([tb, u, ubb]), r.product([tbb, u, ub])]);
            let k2 = rt.n_sums(&[al], &[a1, b2]) * rt.n(a1, b2);
            let k3 = rt.n_sums(&[b1], &[al, b2]) * rt.n(al, b2);
            let f2 = factor(ctx, rt.sum(&[al, a1, b2]), sc(k2, s2));
            let f3 = factor(ctx, rt.sum(&[al, b1, b2]), sc(k3, s3));
            let first = |x: RootId, y: RootId, xb: RootId, yb: RootId, c1: Elem, c2: Elem| {
                factor(ctx, rt.sum(&[x, y]), Param::Scalar(r.add(r.scale(rt.n(x, y), c1), r.scale(rt.n(xb, yb), c2))))
            };
            out.push(branch(
                name(1),
                vec![first(al, b1, a1, be, r.mul(t, ub), r.mul(tb, u)), f2.clone(), f3.clone()],
            ));
            out.push(branch(name(2), vec![first(al, b2, a2, be, r.mul(t, ubb), r.mul(tbb, u)), f2, f3]));
        }
        PairTag::G => {
            let (t, u) = (p.scalar().unwrap(), q.scalar().unwrap());
            let (tb, tbb, ub, ubb) = (th(r, t, 1), th(r, t, 2), th(r, u, 1), th(r, u, 2));
            let s1 = r.sum([r.mul(t, ub), r.mul(tb, ubb), r.mul(tbb, u)]);
            let s2 = r.sum([r.mul(t, ubb), r.mul(tb, u), r.mul(tbb, ub)]);
            out.push(branch(name(1), vec![factor(ctx, rt.sum(&[al, b1]), sc(rt.n(al, b1), s1))]));
            out.push(branch(name(2), vec![factor(ctx, rt.sum(&[al, b2]), sc(rt.n(al, b2), s2))]));
        }
    }
    out.into_iter().flatten().collect()
}

impl SigmaContext {
    /// Candidate right-hand sides for `[x_[a](p), x_[b](q)]`, one per listed branch.
    pub fn commutator_candidates(
        &self,
        a: usize,
        p: Param,
        b: usize,
        q: Param,
    ) -> Result<(PairType, Vec<Candidate>), TwistedGroupError> {
        self.check_param(a, p)?;
        self.check_param(b, q)?;
        let pt = self.twisted().classify_pair(a, b)?;
        let cands = if pt.swapped {
            oriented(self, b, q, a, p, pt.tag)
                .into_iter()
                .map(|mut c| {
                    c.inverted = true;
                    c
                })
                .collect()
        } else {
            oriented(self, a, p, b, q, pt.tag)
        };
        Ok((pt, cands))
    }

    pub fn evaluate(&self, c: &Candidate) -> Result<Mat, TwistedGroupError> {
        let mut m = self.identity();
        for f in &c.factors {
            m = self.group().mul(&m, &self.x_led(f.lead, f.param)?);
        }
        if c.inverted {
            m = self.inverse(&m)?;
        }
        Ok(m)
    }

    /// Compares the matrix commutator with every candidate and records the first match.
    pub fn verify_commutator(&self, a: usize, p: Param, b: usize, q: Param) -> Result<CommutatorReport, TwistedGroupError> {
        let (pt, cands) = self.commutator_candidates(a, p, b, q)?;
        let lhs = self.commutator(&self.x_class(a, p)?, &self.x_class(b, q)?)?;
        let mut matched = None;
        for c in &cands {
            if self.evaluate(c)? == lhs {
                matched = Some(c.branch.clone());
                break;
            }
        }
        let r = self.ring();
        Ok(CommutatorReport {
            alpha: a,
            beta: b,
            tag: pt.tag.to_string(),
            swapped: pt.swapped,
            p: p.show(r),
            q: q.show(r),
            branches: cands.iter().map(|c| c.branch.clone()).collect(),
            matched,
        })
    }

    /// Every ordered pair `[α] ≠ ±[β]` with `samples` seeded payloads each.
    pub fn verify_all_commutators(&self, samples: usize, seed: u64) -> Result<Vec<CommutatorReport>, TwistedGroupError> {
        let tw = self.twisted();
        let n = tw.num_classes();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && tw.class(a).negation != b)
            .collect();
        let chunks: Vec<Vec<CommutatorReport>> = pairs
            .par_iter()
            .enumerate()
            .map(|(i, &(a, b))| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((i as u64) << 20));
                (0..samples)
                    .map(|_| {
                        let p = self.sample_param(a, &mut rng);
                        let q = self.sample_param(b, &mut rng);
                        self.verify_commutator(a, p, b, q)
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<_, _>>()?;
        Ok(chunks.into_iter().flatten().collect())
    }
}
