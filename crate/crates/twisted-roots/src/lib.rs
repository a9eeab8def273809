//! The twisted root system `Φ_ρ` attached to a diagram automorphism `ρ`.
//!
//! Roots are grouped into classes `[α]` by the direction of their orbit average. Each class
//! carries an ordered orbit starting from its representative, a shape tag and the domain of
//! the parameters of the corresponding root subgroup.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use chevalley_basis::CTable;
use root_systems::{CartanType, DiagramAutomorphism, RootId, RootSystem};
use serde::Serialize;
use serde_json::json;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TwistError {
    #[error("cannot twist {0}: {1}")]
    Untwistable(String, String),
    #[error("classes {0} and {1} match no pair type")]
    Unclassified(usize, usize),
    #[error("classes {0} and {1} are equal or opposite")]
    Degenerate(usize, usize),
}

/// Shape of a class.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ClassKind {
    A1,
    A1x2,
    A1x3,
    A2,
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassKind::A1 => "A1",
            ClassKind::A1x2 => "A1^2",
            ClassKind::A1x3 => "A1^3",
            ClassKind::A2 => "A2",
        })
    }
}

/// Where the parameter of `x_[α]` lives.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ParamDomain {
    /// The fixed subring `R_θ`.
    Fixed,
    /// The whole ring.
    Ring,
    /// Pairs `(t,u)` with `t t̄ = u + ū`.
    Pairs,
}

impl ClassKind {
    pub fn domain(self) -> ParamDomain {
        match self {
            ClassKind::A1 => ParamDomain::Fixed,
            ClassKind::A1x2 | ClassKind::A1x3 => ParamDomain::Ring,
            ClassKind::A2 => ParamDomain::Pairs,
        }
    }
}

/// A class of roots.
#[derive(Clone, Debug, Serialize)]
pub struct TwistedClass {
    pub id: usize,
    pub kind: ClassKind,
    /// Smallest root of the class; for `A2` the smallest root not fixed by `ρ`.
    pub rep: RootId,
    /// `rep, ρ rep, …` then `rep + ρ rep` for `A2`.
    pub orbit: Vec<RootId>,
    pub positive: bool,
    /// Class of the negated roots.
    pub negation: usize,
}

impl TwistedClass {
    pub fn domain(&self) -> ParamDomain {
        self.kind.domain()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TwistedFamily {
    /// Rank one, arising only from `²A₂`.
    A,
    B,
    C,
    G,
    F,
}

/// Cartan type of `Φ_ρ`, with `non_reduced` set when the full projection set is `BC_n`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TwistedType {
    pub family: TwistedFamily,
    pub rank: usize,
    pub non_reduced: bool,
}

impl TwistedType {
    /// Label of the projection set including doubled roots (`BC_n` for `²A_{2n}`).
    pub fn full_label(&self) -> String {
        if self.non_reduced {
            format!("BC{}", self.rank)
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for TwistedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.family {
            TwistedFamily::A => 'A',
            TwistedFamily::B => 'B',
            TwistedFamily::C => 'C',
            TwistedFamily::G => 'G',
            TwistedFamily::F => 'F',
        };
        write!(f, "{c}{}", self.rank)
    }
}

/// Pair types of the commutator taxonomy.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PairTag {
    A1,
    A2i,
    A2ii,
    Bi,
    Bii,
    Ci,
    Cii,
    Di,
    Dii,
    E,
    F,
    G,
}

impl PairTag {
    pub const ALL: [PairTag; 12] = [
        PairTag::A1,
        PairTag::A2i,
        PairTag::A2ii,
        PairTag::Bi,
        PairTag::Bii,
        PairTag::Ci,
        PairTag::Cii,
        PairTag::Di,
        PairTag::Dii,
        PairTag::E,
        PairTag::F,
        PairTag::G,
    ];
}

impl fmt::Display for PairTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairTag::A1 => "a1",
            PairTag::A2i => "a2-i",
            PairTag::A2ii => "a2-ii",
            PairTag::Bi => "b-i",
            PairTag::Bii => "b-ii",
            PairTag::Ci => "c-i",
            PairTag::Cii => "c-ii",
            PairTag::Di => "d-i",
            PairTag::Dii => "d-ii",
            PairTag::E => "e",
            PairTag::F => "f",
            PairTag::G => "g",
        })
    }
}

/// Result of [`TwistedSystem::classify_pair`].
///
/// The asymmetric types `d` and `e` are stated with the longer class first. When the
/// ordered pair comes the other way round `swapped` is set, and the formula applies to
/// `([β],[α])`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PairType {
    pub tag: PairTag,
    pub swapped: bool,
}

/// The twisted Weyl group as permutations of classes, each with a shortest word in the
/// simple class reflections.
#[derive(Clone, Debug)]
pub struct TwistedWeyl {
    pub elements: Vec<Vec<usize>>,
    pub words: Vec<Vec<usize>>,
}

impl TwistedWeyl {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Position of `w` in [`TwistedWeyl::elements`].
    pub fn position(&self, w: &[usize]) -> Option<usize> {
        self.elements.iter().position(|e| e == w)
    }
}

#[derive(Clone, Debug)]
pub struct TwistedSystem {
    sys: RootSystem,
    rho: DiagramAutomorphism,
    classes: Vec<TwistedClass>,
    class_of: Vec<usize>,
    vecs: Vec<Vec<i32>>,
    by_vec: HashMap<Vec<i32>, usize>,
    tilde: HashSet<Vec<i32>>,
    norms: Vec<i32>,
    simple: Vec<usize>,
    ttype: TwistedType,
}

fn orbit_sum(rho: &DiagramAutomorphism, v: &[i32]) -> Vec<i32> {
    let mut acc = vec![0; v.len()];
    let mut cur = v.to_vec();
    for _ in 0..rho.order() {
        for (a, c) in acc.iter_mut().zip(&cur) {
            *a += c;
        }
        cur = rho.apply_vec(&cur);
    }
    acc
}

fn primitive(v: &[i32]) -> Vec<i32> {
    fn gcd(a: i32, b: i32) -> i32 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    let g = v.iter().fold(0, |g, &x| gcd(g, x));
    v.iter().map(|x| x / g).collect()
}

fn add(a: &[i32], b: &[i32], ka: i32, kb: i32) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| ka * x + kb * y).collect()
}

fn expected_type(sys: &RootSystem, order: u8) -> Result<TwistedType, TwistError> {
    let n = sys.rank();
    let t = |family, rank, non_reduced| Ok(TwistedType { family, rank, non_reduced });
    match (sys.cartan_type(), order) {
        (CartanType::A, 2) if n == 2 => t(TwistedFamily::A, 1, true),
        (CartanType::A, 2) if n % 2 == 1 => t(TwistedFamily::C, n.div_ceil(2), false),
        (CartanType::A, 2) => t(TwistedFamily::B, n / 2, true),
        (CartanType::D, 2) => t(TwistedFamily::B, n - 1, false),
        (CartanType::D, 3) if n == 4 => t(TwistedFamily::G, 2, false),
        (CartanType::E, 2) if n == 6 => t(TwistedFamily::F, 4, false),
        _ => Err(TwistError::Untwistable(sys.label(), format!("automorphism of order {order}"))),
    }
}

/// Builds `Φ_ρ` from a nontrivial diagram automorphism.
pub fn build_twisted(sys: &RootSystem, rho: &DiagramAutomorphism) -> Result<TwistedSystem, TwistError> {
    let bad = |why: &str| TwistError::Untwistable(sys.label(), why.to_string());
    if rho.order() < 2 {
        return Err(bad("trivial automorphism"));
    }
    let ttype = expected_type(sys, rho.order())?;
    let m = sys.num_roots();

    let mut dir_index: HashMap<Vec<i32>, usize> = HashMap::new();
    let mut groups: Vec<Vec<RootId>> = Vec::new();
    for a in 0..m {
        let d = primitive(&orbit_sum(rho, sys.coords(a)));
        let k = *dir_index.entry(d).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[k].push(a);
    }

    let mut classes = Vec::with_capacity(groups.len());
    let mut vecs = Vec::with_capacity(groups.len());
    for g in &groups {
        let moving: Vec<RootId> = g.iter().copied().filter(|&a| rho.apply(a) != a).collect();
        let fixed: Vec<RootId> = g.iter().copied().filter(|&a| rho.apply(a) == a).collect();
        let kind = match (moving.len(), fixed.len()) {
            (0, 1) => ClassKind::A1,
            (2, 0) if sys.sum(moving[0], moving[1]).is_none() => ClassKind::A1x2,
            (3, 0) if (0..3).all(|i| sys.sum(moving[i], moving[(i + 1) % 3]).is_none()) => ClassKind::A1x3,
            (2, 1) if sys.sum(moving[0], moving[1]) == Some(fixed[0]) => ClassKind::A2,
            _ => return Err(bad("orbit class of unknown shape")),
        };
        let rep = if kind == ClassKind::A1 { fixed[0] } else { moving[0] };
        let mut orbit: Vec<RootId> = (0..moving.len().max(1) as u32).map(|k| rho.apply_pow(rep, k)).collect();
        if kind == ClassKind::A2 {
            orbit.push(fixed[0]);
        }
        vecs.push(orbit_sum(rho, sys.coords(rep)));
        classes.push(TwistedClass {
            id: 0,
            kind,
            rep,
            orbit,
            positive: sys.is_positive(rep),
            negation: 0,
        });
    }
    // Order classes by representative so that ids follow the root order.
    let mut perm: Vec<usize> = (0..classes.len()).collect();
    perm.sort_by_key(|&i| classes[i].rep);
    let classes: Vec<TwistedClass> = perm.iter().map(|&i| classes[i].clone()).collect();
    let vecs: Vec<Vec<i32>> = perm.iter().map(|&i| vecs[i].clone()).collect();
    let mut class_of = vec![0; m];
    let mut classes = classes;
    for (i, c) in classes.iter_mut().enumerate() {
        c.id = i;
        for &a in &c.orbit {
            class_of[a] = i;
        }
    }
    for i in 0..classes.len() {
        classes[i].negation = class_of[sys.neg(classes[i].rep)];
    }
    let by_vec = vecs.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
    let tilde = (0..m).map(|a| orbit_sum(rho, sys.coords(a))).collect();
    let cart = sys.cartan();
    let norms = vecs
        .iter()
        .map(|v| {
            let mut s = 0;
            for i in 0..v.len() {
                for j in 0..v.len() {
                    s += v[i] * cart[i][j] * v[j];
                }
            }
            s
        })
        .collect();
    let simple = {
        let mut s: Vec<usize> = sys.simple_roots().iter().map(|&a| class_of[a]).collect();
        s.sort();
        s.dedup();
        s
    };
    let t = TwistedSystem {
        sys: sys.clone(),
        rho: rho.clone(),
        classes,
        class_of,
        vecs,
        by_vec,
        tilde,
        norms,
        simple,
        ttype,
    };
    t.check_table()?;
    Ok(t)
}

impl TwistedSystem {
    /// Compares rank, root count, length classes and reducedness against the expected type.
    fn check_table(&self) -> Result<(), TwistError> {
        let bad = |why: String| TwistError::Untwistable(self.sys.label(), why);
        let t = self.ttype;
        let n = t.rank;
        let (count, long) = match t.family {
            TwistedFamily::A => (2, 2),
            TwistedFamily::B => (2 * n * n, 2 * n * (n - 1)),
            TwistedFamily::C => (2 * n * n, 2 * n),
            TwistedFamily::G => (12, 6),
            TwistedFamily::F => (48, 24),
        };
        if self.simple.len() != n || self.classes.len() != count {
            return Err(bad(format!("expected {t} with {count} roots")));
        }
        let longs = (0..self.classes.len()).filter(|&c| self.is_long(c)).count();
        if longs != long {
            return Err(bad(format!("expected {long} long roots, found {longs}")));
        }
        let doubled = self.vecs.iter().any(|v| self.tilde.contains(&add(v, v, 2, 0)));
        if doubled != t.non_reduced {
            return Err(bad("reducedness does not match".into()));
        }
        Ok(())
    }

    pub fn system(&self) -> &RootSystem {
        &self.sys
    }

    pub fn rho(&self) -> &DiagramAutomorphism {
        &self.rho
    }

    pub fn twisted_type(&self) -> TwistedType {
        self.ttype
    }

    /// Label such as `2A4`.
    pub fn label(&self) -> String {
        format!("{}{}", self.rho.order(), self.sys.label())
    }

    pub fn classes(&self) -> &[TwistedClass] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &TwistedClass {
        &self.classes[c]
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, a: RootId) -> usize {
        self.class_of[a]
    }

    pub fn positive_classes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.classes.len()).filter(|&c| self.classes[c].positive)
    }

    /// Classes of the simple roots, in increasing order.
    pub fn simple_classes(&self) -> &[usize] {
        &self.simple
    }

    pub fn is_long(&self, c: usize) -> bool {
        // Every class vector is o(ρ) times the orbit average, so norms compare directly.
        self.norms[c] == *self.norms.iter().max().expect("nonempty")
    }

    /// Class types of long and short classes.
    pub fn length_kinds(&self) -> (Vec<ClassKind>, Vec<ClassKind>) {
        let mut long = Vec::new();
        let mut short = Vec::new();
        for c in 0..self.classes.len() {
            let v = if self.is_long(c) { &mut long } else { &mut short };
            if !v.contains(&self.classes[c].kind) {
                v.push(self.classes[c].kind);
            }
        }
        (long, short)
    }

    /// Height of a class: height of its representative's orbit average, times `o(ρ)`.
    pub fn height(&self, c: usize) -> i32 {
        self.vecs[c].iter().sum()
    }

    /// Orbit of `lead` in the order used for generators: `lead, ρ lead, …`, then
    /// `lead + ρ lead` for `A2` classes. `lead` must be a non-fixed root for `A2`.
    pub fn ordered_orbit(&self, lead: RootId) -> Vec<RootId> {
        let c = &self.classes[self.class_of[lead]];
        let k = match c.kind {
            ClassKind::A1 => 1,
            ClassKind::A1x2 | ClassKind::A2 => 2,
            ClassKind::A1x3 => 3,
        };
        let mut v: Vec<RootId> = (0..k).map(|i| self.rho.apply_pow(lead, i)).collect();
        if c.kind == ClassKind::A2 {
            v.push(self.sys.sum(v[0], v[1]).expect("A2 orbit sums to a root"));
        }
        v
    }

    /// Leading root of `−[α]`: the negative of the representative. For `A2` classes the
    /// ordered orbit starts at `−ᾱ` so that both `−[α]` and `[−α]` read `(−ᾱ, −α, −α−ᾱ)`.
    pub fn neg_lead(&self, c: usize) -> RootId {
        let cl = &self.classes[c];
        let a = self.sys.neg(cl.rep);
        if cl.kind == ClassKind::A2 {
            self.rho.apply(a)
        } else {
            a
        }
    }

    fn find(&self, v: &[i32]) -> Option<usize> {
        self.by_vec.get(v).copied()
    }

    /// The class `i[α] + j[β]` if it exists.
    pub fn combine(&self, a: usize, b: usize, i: i32, j: i32) -> Option<usize> {
        self.find(&add(&self.vecs[a], &self.vecs[b], i, j))
    }

    /// Whether `i[α] + j[β]` lies in the full projection set (including doubled roots).
    pub fn combine_in_full(&self, a: usize, b: usize, i: i32, j: i32) -> bool {
        self.tilde.contains(&add(&self.vecs[a], &self.vecs[b], i, j))
    }

    /// The class `½([α]+[β])` if it exists.
    pub fn half_sum(&self, a: usize, b: usize) -> Option<usize> {
        let s = add(&self.vecs[a], &self.vecs[b], 1, 1);
        if s.iter().any(|x| x % 2 != 0) {
            return None;
        }
        self.find(&s.iter().map(|x| x / 2).collect::<Vec<_>>())
    }

    /// Pair type of the ordered pair `([α],[β])`.
    pub fn classify_pair(&self, a: usize, b: usize) -> Result<PairType, TwistError> {
        use ClassKind::*;
        if a == b || self.classes[a].negation == b {
            return Err(TwistError::Degenerate(a, b));
        }
        let ka = self.classes[a].kind;
        let kb = self.classes[b].kind;
        let kind = |c: Option<usize>| c.map(|c| self.classes[c].kind);
        let has = |x: usize, y: usize, i, j| self.combine(x, y, i, j).is_some();
        let fail = Err(TwistError::Unclassified(a, b));
        let pt = |tag, swapped| Ok(PairType { tag, swapped });

        if !has(a, b, 1, 1) {
            if !has(a, b, 1, -1) {
                if let Some(h) = self.half_sum(a, b) {
                    return match (ka, kb, self.classes[h].kind) {
                        (A1, A1, A1x2) => pt(PairTag::A2i, false),
                        (A1x2, A1x2, A2) => pt(PairTag::A2ii, false),
                        // Long and orthogonal short class of G₂: the half-sum is a root but
                        // no positive integral combination is.
                        _ => pt(PairTag::A1, false),
                    };
                }
            }
            return pt(PairTag::A1, false);
        }
        let sum = kind(self.combine(a, b, 1, 1));
        let up_b = has(a, b, 1, 2);
        let up_a = has(a, b, 2, 1);
        if up_a && up_b {
            return match (ka, kb, has(a, b, 1, -1)) {
                (A1x3, A1x3, true) => pt(PairTag::F, false),
                _ => fail,
            };
        }
        if up_a || up_b {
            let (x, y, swapped) = if up_b { (a, b, false) } else { (b, a, true) };
            let (kx, ky) = (self.classes[x].kind, self.classes[y].kind);
            if has(x, y, 1, 3) {
                return match (kx, ky, has(x, y, 2, 3)) {
                    (A1, A1x3, true) => pt(PairTag::E, swapped),
                    _ => fail,
                };
            }
            let top = kind(self.combine(x, y, 1, 2));
            return match (kx, ky, sum, top) {
                (A1, A1x2, Some(A1x2), Some(A1)) => pt(PairTag::Di, swapped),
                (A1x2, A2, Some(A2), Some(A1x2)) => pt(PairTag::Dii, swapped),
                _ => fail,
            };
        }
        if has(a, b, 1, -1) {
            if has(a, b, 2, -1) && has(a, b, 1, -2) {
                return match (ka, kb, sum) {
                    (A1x3, A1x3, Some(A1)) => pt(PairTag::G, false),
                    _ => fail,
                };
            }
            return match (ka, kb, sum) {
                (A1x2, A1x2, Some(A1)) => pt(PairTag::Ci, false),
                (A2, A2, Some(A1x2)) => pt(PairTag::Cii, false),
                _ => fail,
            };
        }
        match (ka, kb, sum) {
            (A1, A1, Some(A1)) => pt(PairTag::Bi, false),
            (A1x2, A1x2, Some(A1x2)) => pt(PairTag::Bii, false),
            _ => fail,
        }
    }

    /// The root permutation `s_[α]`: the product of the reflections in the orbit, or
    /// `s_{α+ᾱ}` for `A2` classes.
    pub fn class_reflection_roots(&self, c: usize) -> Vec<RootId> {
        let cl = &self.classes[c];
        let m = self.sys.num_roots();
        let mut p: Vec<RootId> = (0..m).collect();
        let refl: Vec<RootId> = match cl.kind {
            ClassKind::A2 => vec![cl.orbit[2]],
            _ => cl.orbit.clone(),
        };
        for r in refl {
            let s = self.sys.reflection_perm(r);
            p = p.iter().map(|&x| s[x]).collect();
        }
        p
    }

    /// `s_[α]` acting on classes.
    pub fn class_reflection(&self, c: usize) -> Vec<usize> {
        let p = self.class_reflection_roots(c);
        self.classes.iter().map(|d| self.class_of[p[d.rep]]).collect()
    }

    /// Closure of the simple class reflections.
    pub fn twisted_weyl(&self) -> TwistedWeyl {
        let gens: Vec<Vec<usize>> = self.simple.iter().map(|&c| self.class_reflection(c)).collect();
        let id: Vec<usize> = (0..self.classes.len()).collect();
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut elements = vec![id.clone()];
        let mut words = vec![Vec::new()];
        index.insert(id, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for (g, s) in gens.iter().enumerate() {
                // Right multiplication: w·s acts as x ↦ w(s(x)).
                let next: Vec<usize> = s.iter().map(|&x| elements[k][x]).collect();
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elements.len());
                    let mut w = words[k].clone();
                    w.push(self.simple[g]);
                    elements.push(next);
                    words.push(w);
                    queue.push_back(elements.len() - 1);
                }
            }
        }
        TwistedWeyl { elements, words }
    }

    /// `d([α], β)` for the class `[α]` with leading root `lead`.
    pub fn d_sign_lead(&self, c: &CTable, lead: RootId, beta: RootId) -> i32 {
        let sys = &self.sys;
        let kind = self.classes[self.class_of[lead]].kind;
        let a = lead;
        let ab = self.rho.apply(a);
        match kind {
            ClassKind::A1 => c.get(a, beta),
            ClassKind::A1x2 => c.get(a, beta) * c.get(ab, sys.reflect(a, beta)),
            ClassKind::A1x3 => {
                let abb = self.rho.apply(ab);
                let b1 = sys.reflect(a, beta);
                let b2 = sys.reflect(ab, b1);
                c.get(a, beta) * c.get(ab, b1) * c.get(abb, b2)
            }
            ClassKind::A2 => {
                let b1 = sys.reflect(a, beta);
                let b2 = sys.reflect(ab, b1);
                c.get(a, beta) * c.get(ab, b1) * c.get(a, b2)
            }
        }
    }

    /// `d([α], β)` using the class representative.
    pub fn d_sign(&self, c: &CTable, class: usize, beta: RootId) -> i32 {
        self.d_sign_lead(c, self.classes[class].rep, beta)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let coords = |a: RootId| self.sys.coords(a).to_vec();
        let classes: Vec<serde_json::Value> = self
            .classes
            .iter()
            .map(|c| {
                json!({
                    "id": c.id,
                    "kind": c.kind.to_string(),
                    "domain": c.domain(),
                    "rep": coords(c.rep),
                    "orbit": c.orbit.iter().map(|&a| coords(a)).collect::<Vec<_>>(),
                    "positive": c.positive,
                    "long": self.is_long(c.id),
                    "negation": c.negation,
                })
            })
            .collect();
        let (long, short) = self.length_kinds();
        json!({
            "system": self.label(),
            "twisted_type": self.ttype.to_string(),
            "full_type": self.ttype.full_label(),
            "long": long.iter().map(|k| k.to_string()).collect::<Vec<_>>(),
            "short": short.iter().map(|k| k.to_string()).collect::<Vec<_>>(),
            "simple_classes": self.simple,
            "classes": classes,
        })
    }
}
