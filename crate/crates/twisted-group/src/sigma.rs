use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use adjoint_group::{Character, Chevalley, Mat, RepKind, Representation};
use chevalley_basis::{CTable, ChevalleyData};
use rand::Rng;
use ring_core::{ring_from_name, APair, Elem, FiniteRing};
use root_systems::{CartanType, RootId, RootSystem};
use serde::Serialize;
use twisted_roots::{build_twisted, ClassKind, TwistedSystem};

use crate::TwistedGroupError;

/// Parameter of a class generator: a ring element, or a pair for `A2` classes.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Param {
    Scalar(Elem),
    Pair(APair),
}

impl Param {
    pub fn zero(kind: ClassKind) -> Param {
        match kind {
            ClassKind::A2 => Param::Pair(APair::ZERO),
            _ => Param::Scalar(Elem::ZERO),
        }
    }

    pub fn scalar(self) -> Option<Elem> {
        match self {
            Param::Scalar(t) => Some(t),
            Param::Pair(_) => None,
        }
    }

    pub fn pair(self) -> Option<APair> {
        match self {
            Param::Pair(p) => Some(p),
            Param::Scalar(_) => None,
        }
    }

    /// `θ^k` applied to every component.
    pub fn theta_pow(self, r: &FiniteRing, k: u32) -> Param {
        match self {
            Param::Scalar(t) => Param::Scalar(r.theta_pow(t, k)),
            Param::Pair(p) => Param::Pair(APair::new(r.theta_pow(p.t, k), r.theta_pow(p.u, k))),
        }
    }

    /// The action `s · p`: multiplication for scalars, `(st, s s̄ u)` for pairs.
    pub fn act(self, r: &FiniteRing, s: Elem) -> Param {
        match self {
            Param::Scalar(t) => Param::Scalar(r.mul(s, t)),
            Param::Pair(p) => Param::Pair(r.a_act(s, p)),
        }
    }

    pub fn show(&self, r: &FiniteRing) -> String {
        match self {
            Param::Scalar(t) => r.show(*t),
            Param::Pair(p) => format!("({},{})", r.show(p.t), r.show(p.u)),
        }
    }
}

#[derive(Clone, Debug)]
enum SigmaMap {
    /// `g ↦ P θ(g) P⁻¹`.
    Conj { p: Mat, pinv: Mat },
    /// `g ↦ J θ(g)^{-T} J⁻¹`.
    Contra { j: Mat, jinv: Mat },
}

/// A twisted group: the untwisted group in some representation together with `σ`.
#[derive(Clone)]
pub struct SigmaContext {
    grp: Chevalley,
    tw: Arc<TwistedSystem>,
    ctab: CTable,
    sigma: SigmaMap,
    pairs: Arc<Vec<APair>>,
    fixed: Arc<Vec<Elem>>,
}

fn int_mat(r: &FiniteRing, m: &chevalley_basis::IntMatrix) -> Mat {
    let d = m.dim();
    let mut out = Mat::zeros(d);
    for i in 0..d {
        for j in 0..d {
            out.set(i, j, r.from_int(m.get(i, j) as i64));
        }
    }
    out
}

/// Finds a signed permutation `J` with `J M_β J⁻¹ = ε_β π(X_{ρβ})` for all roots, where
/// `M_β = π(X_β)` or `−π(X_β)ᵀ` when `contra` is set.
fn monomial_sigma(rep: &Representation, data: &ChevalleyData, contra: bool) -> Option<(Vec<usize>, Vec<i32>)> {
    let rho = data.rho()?;
    let d = rep.dim();
    let mut by_weight: HashMap<Vec<i32>, usize> = HashMap::new();
    for k in 0..d {
        if by_weight.insert(rep.weight(k).to_vec(), k).is_some() {
            return None;
        }
    }
    let perm: Vec<usize> = (0..d)
        .map(|k| {
            let mut w = rho.apply_vec(rep.weight(k));
            if contra {
                w.iter_mut().for_each(|x| *x = -*x);
            }
            by_weight.get(&w).copied()
        })
        .collect::<Option<_>>()?;
    let m = data.system().num_roots();
    // Sign constraints s_i s_j = target/source from every nonzero entry.
    let mut edges: Vec<Vec<(usize, i32)>> = vec![Vec::new(); d];
    for b in 0..m {
        let target: HashMap<(usize, usize), i32> = rep
            .nilpotent(rho.apply(b))
            .iter()
            .map(|&(i, j, v)| ((i, j), v * data.eps(b)))
            .collect();
        let source: Vec<(usize, usize, i32)> = rep
            .nilpotent(b)
            .iter()
            .map(|&(i, j, v)| if contra { (j, i, -v) } else { (i, j, v) })
            .collect();
        if source.len() != target.len() {
            return None;
        }
        for (i, j, v) in source {
            let t = *target.get(&(perm[i], perm[j]))?;
            let ratio = t / v;
            if ratio * v != t || ratio.abs() != 1 {
                return None;
            }
            edges[i].push((j, ratio));
            edges[j].push((i, ratio));
        }
    }
    let mut sign = vec![0i32; d];
    for start in 0..d {
        if sign[start] != 0 {
            continue;
        }
        sign[start] = 1;
        let mut q = VecDeque::from([start]);
        while let Some(i) = q.pop_front() {
            for &(j, ratio) in &edges[i] {
                let want = sign[i] * ratio;
                if sign[j] == 0 {
                    sign[j] = want;
                    q.push_back(j);
                } else if sign[j] != want {
                    return None;
                }
            }
        }
    }
    Some((perm, sign))
}

impl SigmaContext {
    /// Builds the twisted group from an `ε`-normalized basis and a representation.
    pub fn new(
        ring: Arc<FiniteRing>,
        tw: Arc<TwistedSystem>,
        data: Arc<ChevalleyData>,
        rep: Arc<Representation>,
    ) -> Result<SigmaContext, TwistedGroupError> {
        let o = tw.rho().order();
        if ring.theta_order() != o {
            return Err(TwistedGroupError::ThetaOrder(ring.theta_order(), o));
        }
        match data.rho() {
            Some(rho) if rho == tw.rho() => {}
            _ => return Err(chevalley_basis::ChevalleyError::NotNormalized.into()),
        }
        let r = &*ring;
        let sigma = if rep.kind() == RepKind::Adjoint {
            let p = int_mat(r, &data.rho_algebra_matrix()?);
            let pinv = p.pow(r, o as u64 - 1);
            SigmaMap::Conj { p, pinv }
        } else {
            let build = |perm: &[usize], sign: &[i32]| {
                let mut j = Mat::zeros(perm.len());
                for (k, (&pk, &s)) in perm.iter().zip(sign).enumerate() {
                    j.set(pk, k, r.from_int(s as i64));
                }
                let jinv = j.transpose();
                (j, jinv)
            };
            if let Some((perm, sign)) = monomial_sigma(&rep, &data, false) {
                let (p, pinv) = build(&perm, &sign);
                SigmaMap::Conj { p, pinv }
            } else if let Some((perm, sign)) = monomial_sigma(&rep, &data, true) {
                let (j, jinv) = build(&perm, &sign);
                SigmaMap::Contra { j, jinv }
            } else {
                return Err(TwistedGroupError::NoSigma);
            }
        };
        let ctab = data.c_table();
        let pairs = Arc::new(if o == 2 { r.a_pairs() } else { Vec::new() });
        let fixed = Arc::new(r.fixed_elements());
        let grp = Chevalley::new(ring, data, rep);
        Ok(SigmaContext { grp, tw, ctab, sigma, pairs, fixed })
    }

    /// The adjoint twisted group, normalizing the Chevalley basis for `ρ`.
    pub fn adjoint(ring: Arc<FiniteRing>, tw: Arc<TwistedSystem>) -> Result<SigmaContext, TwistedGroupError> {
        let data = Arc::new(ChevalleyData::new(tw.system()).normalize_signs(tw.rho())?);
        let rep = Arc::new(Representation::adjoint(&data));
        SigmaContext::new(ring, tw, data, rep)
    }

    /// Adjoint group of `(type, rank)` twisted by the standard automorphism of the given order,
    /// over a ring given by its short name.
    pub fn standard(typ: CartanType, rank: usize, order: u8, ring: &str) -> Result<SigmaContext, TwistedGroupError> {
        let sys = RootSystem::new(typ, rank)?;
        let rho = sys.standard_twist(order)?;
        let tw = Arc::new(build_twisted(&sys, &rho)?);
        SigmaContext::adjoint(Arc::new(ring_from_name(ring)?), tw)
    }

    pub fn group(&self) -> &Chevalley {
        &self.grp
    }

    pub fn ring(&self) -> &FiniteRing {
        self.grp.ring()
    }

    pub fn ring_arc(&self) -> &Arc<FiniteRing> {
        self.grp.ring_arc()
    }

    pub fn data(&self) -> &ChevalleyData {
        self.grp.data()
    }

    pub fn twisted(&self) -> &TwistedSystem {
        &self.tw
    }

    pub fn twisted_arc(&self) -> &Arc<TwistedSystem> {
        &self.tw
    }

    pub fn c_table(&self) -> &CTable {
        &self.ctab
    }

    pub fn identity(&self) -> Mat {
        self.grp.identity()
    }

    /// The matrix realizing `ρ` and whether `σ` also transposes and inverts.
    pub fn rho_matrix(&self) -> (&Mat, bool) {
        match &self.sigma {
            SigmaMap::Conj { p, .. } => (p, false),
            SigmaMap::Contra { j, .. } => (j, true),
        }
    }

    /// `σ(g)`.
    pub fn sigma(&self, g: &Mat) -> Result<Mat, TwistedGroupError> {
        let r = self.ring();
        Ok(match &self.sigma {
            SigmaMap::Conj { p, pinv } => p.mul(r, &g.theta(r)).mul(r, pinv),
            SigmaMap::Contra { j, jinv } => {
                let gi = self.grp.inverse(g)?;
                j.mul(r, &gi.theta(r).transpose()).mul(r, jinv)
            }
        })
    }

    pub fn is_sigma_fixed(&self, g: &Mat) -> Result<bool, TwistedGroupError> {
        Ok(&self.sigma(g)? == g)
    }

    /// Checks that `p` lies in the parameter domain of class `c`.
    pub fn check_param(&self, c: usize, p: Param) -> Result<(), TwistedGroupError> {
        let r = self.ring();
        let bad = |why: &str| Err(TwistedGroupError::Domain(c, why.to_string()));
        match (self.tw.class(c).kind, p) {
            (ClassKind::A1, Param::Scalar(t)) if !r.is_fixed(t) => bad("not fixed by θ"),
            (ClassKind::A2, Param::Pair(x)) if !r.is_apair(x) => bad("t t̄ ≠ u + ū"),
            (ClassKind::A2, Param::Pair(_)) => Ok(()),
            (ClassKind::A2, Param::Scalar(_)) => bad("A2 classes take pairs"),
            (_, Param::Pair(_)) => bad("pairs belong to A2 classes"),
            _ => Ok(()),
        }
    }

    /// The generator with ordered orbit starting at `lead`, without a domain check.
    pub fn x_led(&self, lead: RootId, p: Param) -> Result<Mat, TwistedGroupError> {
        let r = self.ring();
        let g = &self.grp;
        let orbit = self.tw.ordered_orbit(lead);
        let kind = self.tw.class(self.tw.class_of(lead)).kind;
        match (kind, p) {
            (ClassKind::A2, Param::Pair(x)) => {
                let n = self.data().n(orbit[1], orbit[0]) as i64;
                Ok(g.product([
                    &g.x(orbit[0], x.t),
                    &g.x(orbit[1], r.theta(x.t)),
                    &g.x(orbit[2], r.scale(n, x.u)),
                ]))
            }
            (ClassKind::A2, Param::Scalar(_)) | (_, Param::Pair(_)) => {
                Err(TwistedGroupError::Domain(self.tw.class_of(lead), "parameter shape".into()))
            }
            (_, Param::Scalar(t)) => {
                let ms: Vec<Mat> = orbit.iter().enumerate().map(|(i, &a)| g.x(a, r.theta_pow(t, i as u32))).collect();
                Ok(g.product(&ms))
            }
        }
    }

    /// `x_[α](p)` for the class `c`, led by its representative.
    pub fn x_class(&self, c: usize, p: Param) -> Result<Mat, TwistedGroupError> {
        self.check_param(c, p)?;
        self.x_led(self.tw.class(c).rep, p)
    }

    /// `x_{−[α]}(p)`: the generator of the negated class with orbit `(−α, −ᾱ, …)`.
    pub fn x_neg(&self, c: usize, p: Param) -> Result<Mat, TwistedGroupError> {
        self.check_param(c, p)?;
        self.x_led(self.tw.neg_lead(c), p)
    }

    fn need_unit(&self, c: usize, t: Elem) -> Result<Elem, TwistedGroupError> {
        self.ring().inv(t).map_err(|_| TwistedGroupError::Domain(c, "parameter must be a unit".into()))
    }

    /// `w_[α](p)`: `x(t) x_{−[α]}(−t⁻¹) x(t)`, and for `A2` classes
    /// `x(t,u) x_{−[α]}(−ū⁻¹·(t,u)) x(uū⁻¹·(t,u))`.
    pub fn w_class(&self, c: usize, p: Param) -> Result<Mat, TwistedGroupError> {
        let r = self.ring();
        self.check_param(c, p)?;
        match p {
            Param::Scalar(t) => {
                let ti = self.need_unit(c, t)?;
                let x = self.x_class(c, p)?;
                let y = self.x_neg(c, Param::Scalar(r.neg(ti)))?;
                Ok(self.grp.product([&x, &y, &x]))
            }
            Param::Pair(x) => {
                self.need_unit(c, x.u)?;
                let ubi = r.inv(r.theta(x.u))?;
                let a = self.x_class(c, p)?;
                let b = self.x_neg(c, Param::Pair(r.a_act(r.neg(ubi), x)))?;
                let z = self.x_class(c, Param::Pair(r.a_act(r.mul(x.u, ubi), x)))?;
                Ok(self.grp.product([&a, &b, &z]))
            }
        }
    }

    /// `w_[α](t) = w_α(t̄) w_ᾱ(1) w_α(t)` for an `A2` class.
    pub fn w_class_unit(&self, c: usize, t: Elem) -> Result<Mat, TwistedGroupError> {
        let cl = self.tw.class(c);
        if cl.kind != ClassKind::A2 {
            return Err(TwistedGroupError::Domain(c, "only defined for A2 classes".into()));
        }
        self.need_unit(c, t)?;
        let r = self.ring();
        let (a, ab) = (cl.orbit[0], cl.orbit[1]);
        let g = &self.grp;
        Ok(g.product([&g.w(a, r.theta(t))?, &g.w(ab, r.one())?, &g.w(a, t)?]))
    }

    /// The Weyl element used for `[α]`: [`Self::w_class`] for `A1`-type classes and
    /// [`Self::w_class_unit`] for `A2`.
    pub fn w_unit(&self, c: usize, t: Elem) -> Result<Mat, TwistedGroupError> {
        match self.tw.class(c).kind {
            ClassKind::A2 => self.w_class_unit(c, t),
            _ => self.w_class(c, Param::Scalar(t)),
        }
    }

    /// `h_[α](t)`: `w(t) w(−1)` for `A1`-type classes, `h_α(t) h_ᾱ(t̄)` for `A2`.
    pub fn h_class(&self, c: usize, t: Elem) -> Result<Mat, TwistedGroupError> {
        let r = self.ring();
        let cl = self.tw.class(c);
        match cl.kind {
            ClassKind::A2 => {
                self.need_unit(c, t)?;
                let g = &self.grp;
                Ok(g.mul(&g.h(cl.orbit[0], t)?, &g.h(cl.orbit[1], r.theta(t))?))
            }
            _ => {
                let m1 = r.neg(r.one());
                Ok(self.grp.mul(&self.w_class(c, Param::Scalar(t))?, &self.w_class(c, Param::Scalar(m1))?))
            }
        }
    }

    /// `h_[α]((t,u),(t′,u′)) = w_[α](t,u) w_[α](t′,u′)` for an `A2` class.
    pub fn h_class_pairs(&self, c: usize, p: APair, q: APair) -> Result<Mat, TwistedGroupError> {
        Ok(self.grp.mul(&self.w_class(c, Param::Pair(p))?, &self.w_class(c, Param::Pair(q))?))
    }

    /// All parameters in the domain of `c`.
    pub fn domain(&self, c: usize) -> Vec<Param> {
        let r = self.ring();
        match self.tw.class(c).kind {
            ClassKind::A1 => self.fixed.iter().map(|&t| Param::Scalar(t)).collect(),
            ClassKind::A2 => self.pairs.iter().map(|&p| Param::Pair(p)).collect(),
            _ => r.elements().map(Param::Scalar).collect(),
        }
    }

    pub fn domain_size(&self, c: usize) -> usize {
        match self.tw.class(c).kind {
            ClassKind::A1 => self.fixed.len(),
            ClassKind::A2 => self.pairs.len(),
            _ => self.ring().size(),
        }
    }

    /// A uniformly random parameter for `c`.
    pub fn sample_param(&self, c: usize, rng: &mut impl Rng) -> Param {
        let r = self.ring();
        match self.tw.class(c).kind {
            ClassKind::A1 => Param::Scalar(self.fixed[rng.gen_range(0..self.fixed.len())]),
            ClassKind::A2 => Param::Pair(self.pairs[rng.gen_range(0..self.pairs.len())]),
            _ => Param::Scalar(Elem(rng.gen_range(0..r.size()) as u16)),
        }
    }

    /// A random unit in the domain `R*_[α]` (`R*_θ` for `A1`, `R*` otherwise; for `A2`
    /// classes the unit feeds [`Self::w_unit`]).
    pub fn sample_unit(&self, c: usize, rng: &mut impl Rng) -> Elem {
        let r = self.ring();
        loop {
            let t = match self.tw.class(c).kind {
                ClassKind::A1 => self.fixed[rng.gen_range(0..self.fixed.len())],
                _ => Elem(rng.gen_range(0..r.size()) as u16),
            };
            if r.is_unit(t) {
                return t;
            }
        }
    }

    /// Characters with `χ(ρλ) = θ(χ(λ))` on the representation's lattice basis.
    pub fn is_self_conjugate(&self, chi: &Character) -> bool {
        let r = self.ring();
        let rho = self.tw.rho();
        (0..chi.values.len()).all(|k| chi.values[rho.simple_image(k)] == r.theta(chi.values[k]))
    }

    /// Every self-conjugate character, enumerated orbit by orbit on the lattice basis.
    pub fn self_conjugate_characters(&self) -> Vec<Character> {
        let r = self.ring();
        let rho = self.tw.rho();
        let l = self.grp.rep().lattice_rank();
        let mut leaders = Vec::new();
        let mut seen = vec![false; l];
        for k in 0..l {
            if !seen[k] {
                let mut j = k;
                while !seen[j] {
                    seen[j] = true;
                    j = rho.simple_image(j);
                }
                leaders.push(k);
            }
        }
        let units = r.units();
        let mut out = vec![Character { values: vec![r.one(); l] }];
        for &k in &leaders {
            let fixed = rho.simple_image(k) == k;
            let mut next = Vec::new();
            for chi in &out {
                for &v in units.iter().filter(|&&v| !fixed || r.is_fixed(v)) {
                    let mut c = chi.clone();
                    let (mut j, mut x) = (k, v);
                    loop {
                        c.values[j] = x;
                        j = rho.simple_image(j);
                        x = r.theta(x);
                        if j == k {
                            break;
                        }
                    }
                    next.push(c);
                }
            }
            out = next;
        }
        out
    }

    pub fn h_chi(&self, chi: &Character) -> Result<Mat, TwistedGroupError> {
        if !self.is_self_conjugate(chi) {
            return Err(TwistedGroupError::NotSelfConjugate);
        }
        Ok(self.grp.h_chi(chi)?)
    }

    pub fn inverse(&self, g: &Mat) -> Result<Mat, TwistedGroupError> {
        Ok(self.grp.inverse(g)?)
    }

    pub fn commutator(&self, x: &Mat, y: &Mat) -> Result<Mat, TwistedGroupError> {
        Ok(self.grp.commutator(x, y)?)
    }

    pub fn conjugate(&self, g: &Mat, h: &Mat) -> Result<Mat, TwistedGroupError> {
        Ok(self.grp.conjugate(g, h)?)
    }

    /// Every `x_[α](p)` with `p` in the full domain, for all classes.
    pub fn all_generators(&self) -> Result<Vec<Mat>, TwistedGroupError> {
        let mut out = Vec::new();
        for c in 0..self.tw.num_classes() {
            for p in self.domain(c) {
                let m = self.x_class(c, p)?;
                if !m.is_identity(self.ring()) {
                    out.push(m);
                }
            }
        }
        Ok(out)
    }

    /// Reads off the payloads of a product `Π x_[c](p_c)` taken in the given class order.
    /// Only the adjoint module is supported.
    pub fn recover_u(&self, g: &Mat, order: &[usize]) -> Result<Vec<Param>, TwistedGroupError> {
        let r = self.ring();
        let tw = &*self.tw;
        let roots: Vec<RootId> = order.iter().flat_map(|&c| tw.class(c).orbit.iter().copied()).collect();
        let t = self.grp.recover_unipotent(g, &roots)?;
        let mut out = Vec::with_capacity(order.len());
        let mut k = 0;
        for &c in order {
            let cl = tw.class(c);
            out.push(match cl.kind {
                ClassKind::A2 => {
                    let n = self.data().n(cl.orbit[1], cl.orbit[0]) as i64;
                    Param::Pair(APair::new(t[k], r.scale(n, t[k + 2])))
                }
                _ => Param::Scalar(t[k]),
            });
            k += cl.orbit.len();
        }
        Ok(out)
    }
}
