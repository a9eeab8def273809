//! Simply-laced root systems of types A, D and E₆ in simple-root coordinates.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("unsupported root system {0}{1}")]
    Unsupported(CartanType, usize),
    #[error("{0:?} is not a root")]
    NotARoot(Vec<i32>),
    #[error("no diagram automorphism of order {0} for {1}")]
    NoAutomorphism(u8, String),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CartanType {
    A,
    D,
    E,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanType::A => "A",
            CartanType::D => "D",
            CartanType::E => "E",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for CartanType {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(CartanType::A),
            "D" | "d" => Ok(CartanType::D),
            "E" | "e" => Ok(CartanType::E),
            _ => Err(format!("unknown Cartan type {s}")),
        }
    }
}

/// Index of a root in [`RootSystem::roots`].
pub type RootId = usize;

/// A root system with its roots sorted by height, then by coordinates in decreasing
/// lexicographic order, so that `α_1 < α_2 < … < α_ℓ`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    typ: CartanType,
    rank: usize,
    cartan: Vec<Vec<i32>>,
    roots: Vec<Vec<i32>>,
    index: HashMap<Vec<i32>, RootId>,
    neg: Vec<RootId>,
    sum: Vec<Option<RootId>>,
    pairing: Vec<i32>,
    height: Vec<i32>,
    simple: Vec<RootId>,
}

/// Outcome of [`RootSystem::closed_subset_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedSubsetReport {
    pub closed: bool,
    pub symmetric: Vec<RootId>,
    pub special: Vec<RootId>,
}

#[derive(Serialize)]
struct RootSystemJson<'a> {
    #[serde(rename = "type")]
    typ: String,
    rank: usize,
    roots: &'a [Vec<i32>],
    cartan: &'a [Vec<i32>],
}

fn edges(typ: CartanType, rank: usize) -> Result<Vec<(usize, usize)>, RootError> {
    match (typ, rank) {
        (CartanType::A, n) if n >= 1 => Ok((0..n - 1).map(|i| (i, i + 1)).collect()),
        (CartanType::D, n) if n >= 4 => {
            let mut e: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
            e.push((n - 3, n - 1));
            Ok(e)
        }
        // Bourbaki labelling: chain 1-3-4-5-6 with 2 attached to 4.
        (CartanType::E, 6) => Ok(vec![(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]),
        (t, n) => Err(RootError::Unsupported(t, n)),
    }
}

impl RootSystem {
    pub fn new(typ: CartanType, rank: usize) -> Result<RootSystem, RootError> {
        if typ == CartanType::A && rank < 2 {
            return Err(RootError::Unsupported(typ, rank));
        }
        let e = edges(typ, rank)?;
        let mut cartan = vec![vec![0i32; rank]; rank];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(i, j) in &e {
            cartan[i][j] = -1;
            cartan[j][i] = -1;
        }
        // Close the simple roots under simple reflections.
        let simple_coords: Vec<Vec<i32>> = (0..rank)
            .map(|i| (0..rank).map(|j| i32::from(i == j)).collect())
            .collect();
        let mut seen: HashSet<Vec<i32>> = simple_coords.iter().cloned().collect();
        let mut queue: VecDeque<Vec<i32>> = simple_coords.iter().cloned().collect();
        while let Some(v) = queue.pop_front() {
            for i in 0..rank {
                let p: i32 = (0..rank).map(|k| cartan[i][k] * v[k]).sum();
                let mut w = v.clone();
                w[i] -= p;
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        let mut roots: Vec<Vec<i32>> = seen.into_iter().collect();
        roots.sort_by(|a, b| {
            let (ha, hb): (i32, i32) = (a.iter().sum(), b.iter().sum());
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let index: HashMap<Vec<i32>, RootId> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let m = roots.len();
        let neg = roots
            .iter()
            .map(|r| index[&r.iter().map(|x| -x).collect::<Vec<_>>()])
            .collect();
        let mut sum = vec![None; m * m];
        let mut pairing = vec![0i32; m * m];
        for a in 0..m {
            for b in 0..m {
                let s: Vec<i32> = roots[a].iter().zip(&roots[b]).map(|(x, y)| x + y).collect();
                sum[a * m + b] = index.get(&s).copied();
                let mut p = 0;
                for i in 0..rank {
                    for j in 0..rank {
                        p += roots[a][i] * cartan[i][j] * roots[b][j];
                    }
                }
                pairing[a * m + b] = p;
            }
        }
        let height = roots.iter().map(|r| r.iter().sum()).collect();
        let simple = simple_coords.iter().map(|s| index[s]).collect();
        Ok(RootSystem { typ, rank, cartan, roots, index, neg, sum, pairing, height, simple })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.typ
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.typ, self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn roots(&self) -> &[Vec<i32>] {
        &self.roots
    }

    pub fn coords(&self, a: RootId) -> &[i32] {
        &self.roots[a]
    }

    pub fn root_id(&self, c: &[i32]) -> Option<RootId> {
        self.index.get(c).copied()
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = RootId> + '_ {
        self.num_positive()..self.num_roots()
    }

    pub fn is_positive(&self, a: RootId) -> bool {
        a >= self.num_positive()
    }

    /// Simple root `α_{i+1}` (0-based `i`).
    pub fn simple(&self, i: usize) -> RootId {
        self.simple[i]
    }

    pub fn simple_roots(&self) -> &[RootId] {
        &self.simple
    }

    pub fn neg(&self, a: RootId) -> RootId {
        self.neg[a]
    }

    /// `α + β` when it is a root.
    pub fn sum(&self, a: RootId, b: RootId) -> Option<RootId> {
        self.sum[a * self.roots.len() + b]
    }

    pub fn diff(&self, a: RootId, b: RootId) -> Option<RootId> {
        self.sum(a, self.neg[b])
    }

    /// The Cartan integer `⟨β, α⟩`.
    pub fn pairing(&self, b: RootId, a: RootId) -> i32 {
        self.pairing[b * self.roots.len() + a]
    }

    /// `⟨λ, α⟩` for an arbitrary lattice vector `λ`.
    pub fn pairing_vec(&self, l: &[i32], a: RootId) -> i32 {
        let ac = &self.roots[a];
        let mut p = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                p += l[i] * self.cartan[i][j] * ac[j];
            }
        }
        p
    }

    pub fn height(&self, a: RootId) -> i32 {
        self.height[a]
    }

    /// `s_α(λ) = λ - ⟨λ,α⟩α` on lattice vectors.
    pub fn reflect_vec(&self, a: RootId, l: &[i32]) -> Vec<i32> {
        let p = self.pairing_vec(l, a);
        l.iter().zip(&self.roots[a]).map(|(x, y)| x - p * y).collect()
    }

    pub fn reflect(&self, a: RootId, b: RootId) -> RootId {
        self.index[&self.reflect_vec(a, &self.roots[b])]
    }

    /// The permutation of roots induced by `s_α`.
    pub fn reflection_perm(&self, a: RootId) -> Vec<RootId> {
        (0..self.roots.len()).map(|b| self.reflect(a, b)).collect()
    }

    /// Largest `r`, `q` with `β - rα` and `β + qα` roots.
    pub fn root_string(&self, a: RootId, b: RootId) -> (i32, i32) {
        let step = |sign: i32| {
            let mut k = 0;
            loop {
                let v: Vec<i32> = self.roots[b]
                    .iter()
                    .zip(&self.roots[a])
                    .map(|(x, y)| x + sign * (k + 1) * y)
                    .collect();
                if self.index.contains_key(&v) {
                    k += 1;
                } else {
                    return k;
                }
            }
        };
        (step(-1), step(1))
    }

    pub fn highest_root(&self) -> RootId {
        self.roots.len() - 1
    }

    /// Closure of `λ` under simple reflections; `λ` must be a root.
    pub fn weyl_orbit(&self, l: &[i32]) -> Result<Vec<RootId>, RootError> {
        let start = self.root_id(l).ok_or_else(|| RootError::NotARoot(l.to_vec()))?;
        let mut seen = vec![false; self.roots.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut out = vec![start];
        while let Some(b) = queue.pop_front() {
            for &s in &self.simple {
                let c = self.reflect(s, b);
                if !seen[c] {
                    seen[c] = true;
                    out.push(c);
                    queue.push_back(c);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Order of the Weyl group, computed by closing the simple reflections as root permutations.
    pub fn weyl_group_order(&self) -> usize {
        let gens: Vec<Vec<u8>> = self
            .simple
            .iter()
            .map(|&s| self.reflection_perm(s).into_iter().map(|x| x as u8).collect())
            .collect();
        let id: Vec<u8> = (0..self.roots.len() as u8).collect();
        let mut seen: HashSet<Vec<u8>> = HashSet::from([id.clone()]);
        let mut frontier = vec![id];
        while let Some(p) = frontier.pop() {
            for g in &gens {
                let q: Vec<u8> = p.iter().map(|&x| g[x as usize]).collect();
                if seen.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        seen.len()
    }

    /// All non-identity permutations of the simple roots preserving the Cartan matrix.
    pub fn diagram_automorphisms(&self) -> Vec<DiagramAutomorphism> {
        let n = self.rank;
        let mut out = Vec::new();
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_perm(0, &mut perm, &mut used, &mut out);
        out.into_iter()
            .filter(|p| p.iter().enumerate().any(|(i, &x)| i != x))
            .map(|p| DiagramAutomorphism::from_perm(self, p))
            .collect()
    }

    fn extend_perm(&self, k: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if k == self.rank {
            out.push(perm.clone());
            return;
        }
        for c in 0..self.rank {
            if used[c] || self.cartan[c][c] != self.cartan[k][k] {
                continue;
            }
            if (0..k).all(|j| self.cartan[perm[j]][c] == self.cartan[j][k]) {
                perm[k] = c;
                used[c] = true;
                self.extend_perm(k + 1, perm, used, out);
                used[c] = false;
            }
        }
    }

    /// The diagram automorphism used for twisting: order 2 for A, D, E₆; order 3 for D₄.
    pub fn standard_twist(&self, order: u8) -> Result<DiagramAutomorphism, RootError> {
        let n = self.rank;
        let perm: Vec<usize> = match (self.typ, order) {
            (CartanType::A, 2) => (0..n).rev().collect(),
            (CartanType::D, 2) => {
                let mut p: Vec<usize> = (0..n).collect();
                p.swap(n - 2, n - 1);
                p
            }
            (CartanType::D, 3) if n == 4 => vec![2, 1, 3, 0],
            (CartanType::E, 2) => vec![5, 1, 4, 3, 2, 0],
            _ => return Err(RootError::NoAutomorphism(order, self.label())),
        };
        Ok(DiagramAutomorphism::from_perm(self, perm))
    }

    /// Checks closure under root addition and splits `S` into symmetric and special parts.
    pub fn closed_subset_check(&self, s: &[RootId]) -> ClosedSubsetReport {
        let set: HashSet<RootId> = s.iter().copied().collect();
        let closed = s
            .iter()
            .all(|&a| s.iter().all(|&b| self.sum(a, b).map_or(true, |c| set.contains(&c))));
        let mut symmetric: Vec<RootId> = s.iter().copied().filter(|&a| set.contains(&self.neg(a))).collect();
        let mut special: Vec<RootId> = s.iter().copied().filter(|&a| !set.contains(&self.neg(a))).collect();
        symmetric.sort();
        symmetric.dedup();
        special.sort();
        special.dedup();
        ClosedSubsetReport { closed, symmetric, special }
    }

    /// `{type, rank, roots, cartan}` as JSON.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(RootSystemJson {
            typ: self.typ.to_string(),
            rank: self.rank,
            roots: &self.roots,
            cartan: &self.cartan,
        })
        .expect("plain data serializes")
    }
}

/// A Cartan-preserving permutation of the simple roots and its action on all roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramAutomorphism {
    perm: Vec<usize>,
    order: u8,
    root_perm: Vec<RootId>,
}

impl DiagramAutomorphism {
    fn from_perm(sys: &RootSystem, perm: Vec<usize>) -> DiagramAutomorphism {
        let root_perm = sys
            .roots
            .iter()
            .map(|r| {
                let mut v = vec![0; sys.rank];
                for (i, &c) in r.iter().enumerate() {
                    v[perm[i]] += c;
                }
                sys.index[&v]
            })
            .collect();
        let mut order = 1u8;
        let mut cur = perm.clone();
        while cur.iter().enumerate().any(|(i, &x)| i != x) {
            cur = cur.iter().map(|&x| perm[x]).collect();
            order += 1;
        }
        DiagramAutomorphism { perm, order, root_perm }
    }

    pub fn order(&self) -> u8 {
        self.order
    }

    /// Image of simple-root index `i`.
    pub fn simple_image(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn apply(&self, a: RootId) -> RootId {
        self.root_perm[a]
    }

    pub fn apply_pow(&self, a: RootId, k: u32) -> RootId {
        (0..k).fold(a, |x, _| self.root_perm[x])
    }

    pub fn apply_vec(&self, v: &[i32]) -> Vec<i32> {
        let mut w = vec![0; v.len()];
        for (i, &c) in v.iter().enumerate() {
            w[self.perm[i]] += c;
        }
        w
    }
}
