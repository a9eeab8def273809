use adjoint_group::{Character, Mat};
use ring_core::Elem;
use serde::Serialize;
use twisted_group::{Param, SigmaContext};

use crate::{CongruenceError, LevelData};

/// Solution of `x_[α](s) x_{−[α]}(t) x_[α](s)⁻¹ = x_[α](a) h_[α](u) x_{−[α]}(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InUhv {
    pub class: usize,
    pub s: Param,
    pub t: Param,
    pub a: Param,
    pub u: Elem,
    pub b: Param,
}

/// A factorization `g = u · h(χ) · v` with `u ∈ U_σ`, `v ∈ U⁻_σ`.
#[derive(Clone, Debug)]
pub struct Utv {
    /// Payloads over the positive classes in increasing height.
    pub u: Vec<Param>,
    pub chi: Character,
    /// Payloads over the negated classes, same order as `u`.
    pub v: Vec<Param>,
    pub u_mat: Mat,
    pub h_mat: Mat,
    pub v_mat: Mat,
}

/// One letter of a word over generators of `E′_σ(R,J)`.
#[derive(Copy, Clone, Debug)]
pub enum Letter {
    /// `x_[α](t)` with `t ∈ J_[α]`; `class` may be positive or negative.
    Elementary { class: usize, t: Param },
    /// `x_[α](r) x_{−[α]}(u) x_[α](r)⁻¹` with `u ∈ J_[α]`.
    Relative { class: usize, r: Param, u: Param },
    /// `x_[β](r) x_[α](t) x_[β](r)⁻¹` with `t ∈ J_[α]`.
    Conjugate { outer: usize, r: Param, inner: usize, t: Param },
}

/// Counts over the enumerated torus `T_σ(R)`.
#[derive(Clone, Debug, Serialize)]
pub struct TorusReport {
    pub torus: usize,
    /// `h(χ) ≡ I (mod J)`.
    pub principal: usize,
    /// `χ(μ) ≡ 1` on every weight.
    pub weights_trivial: usize,
    /// `h(χ)` is central modulo `J`.
    pub full: usize,
    /// `χ(α) ≡ 1` on every root.
    pub roots_trivial: usize,
    /// Both characterizations agree element by element.
    pub agree: bool,
}

fn basis_heights(ctx: &SigmaContext) -> Vec<i32> {
    let rep = ctx.group().rep();
    (0..rep.dim()).map(|k| rep.weight(k).iter().sum()).collect()
}

/// Factors `g = U D L` with `U` unipotent upper, `D` diagonal and `L` unipotent lower for the
/// basis ordered by decreasing weight height. In the adjoint module these are the `U_σ`,
/// torus and `U⁻_σ` parts. The factorization is unique when it exists.
pub fn big_cell(ctx: &SigmaContext, g: &Mat) -> Result<(Mat, Mat, Mat), CongruenceError> {
    let r = ctx.ring();
    let n = g.dim();
    let hts = basis_heights(ctx);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&k| (std::cmp::Reverse(hts[k]), k));
    let mut a: Vec<Vec<Elem>> = order.iter().map(|&i| order.iter().map(|&j| g.get(i, j)).collect()).collect();
    let mut up = vec![vec![Elem::ZERO; n]; n];
    let mut lo = vec![vec![Elem::ZERO; n]; n];
    let mut d = vec![Elem::ZERO; n];
    for k in (0..n).rev() {
        let dk = a[k][k];
        let inv = r.inv(dk).map_err(|_| CongruenceError::OutsideBigCell)?;
        d[k] = dk;
        up[k][k] = r.one();
        lo[k][k] = r.one();
        for i in 0..k {
            up[i][k] = r.mul(a[i][k], inv);
            lo[k][i] = r.mul(inv, a[k][i]);
        }
        for i in 0..k {
            if a[i][k] == Elem::ZERO {
                continue;
            }
            for j in 0..k {
                let c = r.mul(up[i][k], a[k][j]);
                a[i][j] = r.sub(a[i][j], c);
            }
        }
    }
    let back = |m: &Vec<Vec<Elem>>| {
        let mut out = Mat::zeros(n);
        for (pi, &i) in order.iter().enumerate() {
            for (pj, &j) in order.iter().enumerate() {
                out.set(i, j, m[pi][pj]);
            }
        }
        out
    };
    let mut dm = Mat::zeros(n);
    for (p, &i) in order.iter().enumerate() {
        dm.set(i, i, d[p]);
    }
    Ok((back(&up), dm, back(&lo)))
}

fn negative_order(ctx: &SigmaContext) -> Vec<usize> {
    ctx.positive_order().iter().map(|&c| ctx.twisted().class(c).negation).collect()
}

/// Character of a diagonal adjoint torus element, read off the simple root vectors.
fn character_of(ctx: &SigmaContext, h: &Mat) -> Character {
    let sys = ctx.twisted().system();
    let l = sys.rank();
    Character { values: (0..l).map(|i| h.get(l + sys.simple(i), l + sys.simple(i))).collect() }
}

fn mul_chars(ctx: &SigmaContext, x: &Character, y: &Character) -> Character {
    let r = ctx.ring();
    Character { values: x.values.iter().zip(&y.values).map(|(&a, &b)| r.mul(a, b)).collect() }
}

impl Letter {
    pub fn matrix(&self, level: &LevelData) -> Result<Mat, CongruenceError> {
        let ctx = level.ctx();
        match *self {
            Letter::Elementary { class, t } => {
                if !level.in_j_domain(class, t) {
                    return Err(CongruenceError::Domain(format!("payload of class {class} is not in J")));
                }
                Ok(ctx.x_class(class, t)?)
            }
            Letter::Relative { class, r, u } => level.relative_generator(class, r, u),
            Letter::Conjugate { outer, r, inner, t } => {
                if !level.in_j_domain(inner, t) {
                    return Err(CongruenceError::Domain(format!("payload of class {inner} is not in J")));
                }
                Ok(ctx.conjugate(&ctx.x_class(outer, r)?, &ctx.x_class(inner, t)?)?)
            }
        }
    }
}

impl LevelData {
    fn require_radical(&self) -> Result<(), CongruenceError> {
        if self.ideal().in_radical(self.ring()) {
            Ok(())
        } else {
            Err(CongruenceError::NotInRadical)
        }
    }

    /// Closed-form solution of the `U H V` rewriting of a relative generator.
    pub fn in_uhv_solve(&self, c: usize, s: Param, t: Param) -> Result<InUhv, CongruenceError> {
        self.require_radical()?;
        let ctx = self.ctx();
        ctx.check_param(c, s)?;
        if !self.in_j_domain(c, t) {
            return Err(CongruenceError::Domain(format!("payload of class {c} is not in J")));
        }
        let r = self.ring();
        let not_unit = || CongruenceError::Domain("denominator is not a unit".into());
        let (a, u, b) = match (s, t) {
            (Param::Scalar(s), Param::Scalar(t)) => {
                let k = r.inv(r.sub(r.one(), r.mul(s, t))).map_err(|_| not_unit())?;
                let a = r.neg(r.product([t, s, s, k]));
                (Param::Scalar(a), k, Param::Scalar(r.mul(t, k)))
            }
            (Param::Pair(s), Param::Pair(t)) => {
                let bar = |x| r.theta(x);
                let (s1, s2, t1, t2) = (s.t, s.u, t.t, t.u);
                let den = r.sub(r.one(), r.sub(r.mul(bar(t1), s1), r.mul(t2, bar(s2))));
                let u = r.inv(den).map_err(|_| not_unit())?;
                let a1 = r.sum([
                    r.mul(t1, bar(s2)),
                    r.neg(r.product([bar(t1), s1, s1])),
                    r.product([t2, s1, bar(s2)]),
                ]);
                let a2 = r.sum([
                    r.product([t1, bar(s1), bar(s2)]),
                    r.neg(r.product([bar(t1), s1, s2])),
                    r.product([t2, s2, bar(s2)]),
                ]);
                let den2 = r.sub(r.one(), r.sub(r.mul(t1, bar(s1)), r.mul(bar(t2), s2)));
                let b1 = r.mul(r.sub(t1, r.mul(s1, bar(t2))), r.inv(den2).map_err(|_| not_unit())?);
                let a = ring_core::APair::new(r.mul(a1, u), r.mul(a2, u));
                let b = ring_core::APair::new(b1, r.mul(t2, u));
                (Param::Pair(a), u, Param::Pair(b))
            }
            _ => return Err(CongruenceError::Domain("parameter shapes differ".into())),
        };
        Ok(InUhv { class: c, s, t, a, u, b })
    }

    /// Whether the solution reproduces the conjugate exactly, with `a, b ∈ J_[α]` and
    /// `h_[α](u) ≡ I (mod J)`.
    pub fn in_uhv_holds(&self, sol: &InUhv) -> Result<bool, CongruenceError> {
        let ctx = self.ctx();
        let lhs = self.relative_generator(sol.class, sol.s, sol.t)?;
        let h = ctx.h_class(sol.class, sol.u)?;
        let (Ok(x), Ok(y)) = (ctx.x_class(sol.class, sol.a), ctx.x_neg(sol.class, sol.b)) else {
            return Ok(false);
        };
        let rhs = ctx.group().product([&x, &h, &y]);
        Ok(lhs == rhs
            && self.in_j_domain(sol.class, sol.a)
            && self.in_j_domain(sol.class, sol.b)
            && self.in_g_sigma_rj(&h))
    }

    fn utv_from_parts(&self, u: Mat, h: Mat, v: Mat) -> Result<Utv, CongruenceError> {
        let ctx = self.ctx();
        let up = ctx.recover_u(&u, &ctx.positive_order())?;
        let vp = ctx.recover_u(&v, &negative_order(ctx))?;
        let chi = character_of(ctx, &h);
        if ctx.h_chi(&chi)? != h {
            return Err(CongruenceError::Domain("torus part is not h(χ) for a self-conjugate χ".into()));
        }
        Ok(Utv { u: up, chi, v: vp, u_mat: u, h_mat: h, v_mat: v })
    }

    /// Factors an element of `G_σ(J)` as `U_σ(J) T_σ(J) U⁻_σ(J)`.
    pub fn g_sigma_j_decompose(&self, g: &Mat) -> Result<Utv, CongruenceError> {
        self.require_radical()?;
        if !self.in_g_sigma_rj(g) {
            return Err(CongruenceError::NotInKernel);
        }
        let (u, h, v) = big_cell(self.ctx(), g)?;
        let out = self.utv_from_parts(u, h, v)?;
        self.check_levels(&out)?;
        Ok(out)
    }

    fn check_levels(&self, f: &Utv) -> Result<(), CongruenceError> {
        let ctx = self.ctx();
        let pos = ctx.positive_order();
        let neg = negative_order(ctx);
        for (cs, ps) in [(&pos, &f.u), (&neg, &f.v)] {
            for (&c, &p) in cs.iter().zip(ps) {
                if !self.in_j_domain(c, p) {
                    return Err(CongruenceError::Domain(format!("payload of class {c} is not in J")));
                }
            }
        }
        if !self.character_trivial_on_roots(&f.chi)? {
            return Err(CongruenceError::Domain("torus part is not trivial modulo J".into()));
        }
        Ok(())
    }

    /// `χ(α) ≡ 1 (mod J)` for every root.
    pub fn character_trivial_on_roots(&self, chi: &Character) -> Result<bool, CongruenceError> {
        let g = self.ctx().group();
        let one = self.project(self.ring().one());
        for a in 0..g.system().num_roots() {
            if self.project(g.chi_root(chi, a)?) != one {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `χ(μ) ≡ 1 (mod J)` for every weight of the module.
    pub fn character_trivial_on_weights(&self, chi: &Character) -> Result<bool, CongruenceError> {
        let r = self.ring();
        let rep = self.ctx().group().rep();
        let one = self.project(r.one());
        for k in 0..rep.dim() {
            if self.project(chi.eval(r, rep.weight(k))?) != one {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn factor_letter(&self, l: &Letter) -> Result<(Mat, Character, Mat), CongruenceError> {
        let ctx = self.ctx();
        let r = self.ring();
        let rank = ctx.twisted().system().rank();
        let trivial = Character::trivial(r, rank);
        let id = ctx.identity();
        match *l {
            Letter::Elementary { class, .. } => {
                let x = l.matrix(self)?;
                if ctx.twisted().class(class).positive {
                    Ok((x, trivial, id))
                } else {
                    Ok((id, trivial, x))
                }
            }
            Letter::Relative { class, r: s, u } if ctx.twisted().class(class).positive => {
                let sol = self.in_uhv_solve(class, s, u)?;
                let h = ctx.h_class(class, sol.u)?;
                Ok((ctx.x_class(class, sol.a)?, character_of(ctx, &h), ctx.x_neg(class, sol.b)?))
            }
            Letter::Relative { .. } | Letter::Conjugate { .. } => {
                let (u, h, v) = big_cell(ctx, &l.matrix(self)?)?;
                Ok((u, character_of(ctx, &h), v))
            }
        }
    }

    /// Rewrites a word over `E′_σ(R,J)` generators into `U_σ(J) H′_σ(R,J) U⁻_σ(J)` form.
    ///
    /// Relative generators of positive classes are rewritten with [`Self::in_uhv_solve`], other
    /// letters are factored through [`big_cell`]; a `V·U` junction is
    /// refactored through [`big_cell`] and the torus parts are pushed outwards by conjugation.
    pub fn uhv_membership(&self, word: &[Letter]) -> Result<Utv, CongruenceError> {
        self.require_radical()?;
        let ctx = self.ctx();
        let g = ctx.group();
        let r = self.ring();
        let mut u = ctx.identity();
        let mut chi = Character::trivial(r, ctx.twisted().system().rank());
        let mut v = ctx.identity();
        for l in word {
            let (u1, chi1, v1) = self.factor_letter(l)?;
            let (u2, d2, v2) = big_cell(ctx, &g.mul(&v, &u1))?;
            let h = ctx.h_chi(&chi)?;
            let hinv = ctx.inverse(&h)?;
            u = g.product([&u, &h, &u2, &hinv]);
            let h1 = ctx.h_chi(&chi1)?;
            let h1inv = ctx.inverse(&h1)?;
            v = g.product([&h1inv, &v2, &h1, &v1]);
            chi = mul_chars(ctx, &mul_chars(ctx, &chi, &character_of(ctx, &d2)), &chi1);
        }
        let h = ctx.h_chi(&chi)?;
        let out = self.utv_from_parts(u, h, v)?;
        self.check_levels(&out)?;
        Ok(out)
    }

    /// Compares the two characterizations of `T_σ(J)` and of `T_σ(R,J)` over every
    /// self-conjugate character.
    pub fn torus_report(&self) -> Result<TorusReport, CongruenceError> {
        let ctx = self.ctx();
        let gens: Vec<Mat> = ctx.all_generators()?.iter().map(|m| self.reduce_mod(m)).collect();
        let q = self.quotient_ring();
        let chis = ctx.self_conjugate_characters();
        let mut rep = TorusReport {
            torus: chis.len(),
            principal: 0,
            weights_trivial: 0,
            full: 0,
            roots_trivial: 0,
            agree: true,
        };
        for chi in &chis {
            let h = ctx.h_chi(chi)?;
            let principal = self.in_g_sigma_rj(&h);
            let weights = self.character_trivial_on_weights(chi)?;
            let hq = self.reduce_mod(&h);
            let full = gens.iter().all(|x| hq.mul(q, x) == x.mul(q, &hq));
            let roots = self.character_trivial_on_roots(chi)?;
            rep.principal += principal as usize;
            rep.weights_trivial += weights as usize;
            rep.full += full as usize;
            rep.roots_trivial += roots as usize;
            rep.agree &= principal == weights && full == roots;
        }
        Ok(rep)
    }
}

