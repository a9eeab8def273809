//! Chevalley bases over ℤ for simply-laced root systems.
//!
//! The basis is ordered `H_1, …, H_ℓ` followed by `X_α` for each root in
//! [`RootSystem`] order. Structure constants come from a bimultiplicative
//! sign cocycle and are then re-signed so every extraspecial pair has
//! `N = +1`.

mod algebra;
mod checks;
mod twist;

use std::collections::BTreeMap;

use root_systems::{DiagramAutomorphism, RootId, RootSystem};

pub use algebra::{AlgebraElement, IntMatrix};
pub use checks::{NormalizationReport, StructureReport};
pub use twist::{TwistedBasisKind, TwistedBasisVector};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChevalleyError {
    #[error("sign normalization is infeasible: {0}")]
    Infeasible(String),
    #[error("graph map is not a Lie algebra automorphism: {0}")]
    NotAutomorphism(String),
    #[error("ring has no unit a with θ(a) = −a")]
    NoAntisymmetricUnit,
    #[error("2 must be invertible")]
    NeedsHalf,
    #[error("ring automorphism has order {0}, expected {1}")]
    ThetaOrder(u8, u8),
    #[error("data is not normalized for a graph automorphism")]
    NotNormalized,
}

/// Structure constants, twist signs and the basis layout.
#[derive(Clone, Debug)]
pub struct ChevalleyData {
    sys: RootSystem,
    n: Vec<i8>,
    rho: Option<DiagramAutomorphism>,
    eps: Vec<i8>,
}

impl ChevalleyData {
    /// Builds a Chevalley basis with `N = +1` on extraspecial pairs.
    pub fn new(sys: &RootSystem) -> ChevalleyData {
        let m = sys.num_roots();
        let l = sys.rank();
        // ε(α,β) = Π ε(α_i,α_j)^{a_i b_j}; ε(α_i,α_j) = −1 for i = j or i < j adjacent.
        let cocycle = |a: RootId, b: RootId| -> i8 {
            let (ca, cb) = (sys.coords(a), sys.coords(b));
            let mut e = 0i64;
            for i in 0..l {
                for j in 0..l {
                    if i == j || (i < j && sys.cartan()[i][j] == -1) {
                        e += (ca[i] * cb[j]) as i64;
                    }
                }
            }
            if e.rem_euclid(2) == 0 {
                1
            } else {
                -1
            }
        };
        let s = |a: RootId| if sys.is_positive(a) { 1i8 } else { -1 };
        let mut n = vec![0i8; m * m];
        for a in 0..m {
            for b in 0..m {
                if let Some(c) = sys.sum(a, b) {
                    n[a * m + b] = s(a) * s(b) * s(c) * cocycle(a, b);
                }
            }
        }
        let mut c = vec![1i8; m];
        for g in sys.positive_roots() {
            if sys.height(g) == 1 {
                continue;
            }
            let (a, b) = extraspecial(sys, g);
            c[g] = c[a] * c[b] * n[a * m + b];
            c[sys.neg(g)] = c[g];
        }
        resign(sys, &mut n, &c);
        ChevalleyData { sys: sys.clone(), n, rho: None, eps: vec![1; m] }
    }

    pub fn system(&self) -> &RootSystem {
        &self.sys
    }

    pub fn rank(&self) -> usize {
        self.sys.rank()
    }

    /// `ℓ + |Φ|`.
    pub fn dim(&self) -> usize {
        self.sys.rank() + self.sys.num_roots()
    }

    /// Basis index of `X_α`.
    pub fn x_index(&self, a: RootId) -> usize {
        self.sys.rank() + a
    }

    /// Basis index of `H_i`.
    pub fn h_index(&self, i: usize) -> usize {
        i
    }

    /// `N_{α,β}`, or 0 when `α + β` is not a root.
    pub fn n(&self, a: RootId, b: RootId) -> i32 {
        self.n[a * self.sys.num_roots() + b] as i32
    }

    pub fn rho(&self) -> Option<&DiagramAutomorphism> {
        self.rho.as_ref()
    }

    /// `ε_α` with `ρ(X_α) = ε_α X_{ρα}`; all `+1` before normalization.
    pub fn eps(&self, a: RootId) -> i32 {
        self.eps[a] as i32
    }

    /// `ε` for the Lie algebra automorphism extending `X_{±α_i} ↦ X_{±ρα_i}`.
    pub fn compute_eps(&self, rho: &DiagramAutomorphism) -> Vec<i8> {
        let sys = &self.sys;
        let mut eps = vec![1i8; sys.num_roots()];
        for g in sys.positive_roots() {
            if sys.height(g) > 1 {
                let (a, b) = extraspecial(sys, g);
                let v = eps[a] as i32 * eps[b] as i32 * self.n(rho.apply(a), rho.apply(b)) * self.n(a, b);
                eps[g] = v as i8;
            }
            eps[sys.neg(g)] = eps[g];
        }
        eps
    }

    /// The ε value required after normalization: −1 exactly on ρ-fixed roots `α + ρα`.
    pub fn target_eps(sys: &RootSystem, rho: &DiagramAutomorphism, a: RootId) -> i8 {
        if rho.order() == 2 && rho.apply(a) == a && is_a2_middle(sys, rho, a) {
            -1
        } else {
            1
        }
    }

    /// Re-signs the basis so that ε matches [`ChevalleyData::target_eps`].
    pub fn normalize_signs(&self, rho: &DiagramAutomorphism) -> Result<ChevalleyData, ChevalleyError> {
        let sys = &self.sys;
        let m = sys.num_roots();
        let eps = self.compute_eps(rho);
        let mut c = vec![0i8; m];
        for a in sys.positive_roots() {
            if c[a] != 0 {
                continue;
            }
            // Walk the ρ-orbit, fixing c(ρα) from c(α)c(ρα)ε_α = target.
            c[a] = 1;
            let mut cur = a;
            loop {
                let next = rho.apply(cur);
                let want = c[cur] * eps[cur] * Self::target_eps(sys, rho, cur);
                if next == a {
                    if want != c[a] {
                        return Err(ChevalleyError::Infeasible(format!("orbit of {:?}", sys.coords(a))));
                    }
                    break;
                }
                c[next] = want;
                cur = next;
            }
        }
        for a in sys.positive_roots() {
            c[sys.neg(a)] = c[a];
        }
        if sys.simple_roots().iter().any(|&s| c[s] != 1) {
            return Err(ChevalleyError::Infeasible("simple root re-signed".into()));
        }
        let mut n = self.n.clone();
        resign(sys, &mut n, &c);
        let mut out = ChevalleyData { sys: sys.clone(), n, rho: Some(rho.clone()), eps: vec![1; m] };
        out.eps = out.compute_eps(rho);
        for a in 0..m {
            if out.eps[a] != Self::target_eps(sys, rho, a) {
                return Err(ChevalleyError::Infeasible(format!("ε at {:?}", sys.coords(a))));
            }
        }
        Ok(out)
    }

    /// The basis `X_α ↦ c(α) X_α`; requires `c(−α) = c(α)` so `H_α` is unchanged.
    pub fn resigned(&self, c: &[i8]) -> Result<ChevalleyData, ChevalleyError> {
        let sys = &self.sys;
        if c.len() != sys.num_roots() || (0..c.len()).any(|a| c[a] != c[sys.neg(a)] || c[a].abs() != 1) {
            return Err(ChevalleyError::Infeasible("sign vector must be ±1 and even under negation".into()));
        }
        let mut n = self.n.clone();
        resign(sys, &mut n, c);
        Ok(ChevalleyData { sys: sys.clone(), n, rho: None, eps: vec![1; sys.num_roots()] })
    }

    /// Basis bracket `[b_i, b_j]` as a sparse integer combination.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<(usize, i32)> {
        let l = self.rank();
        let sys = &self.sys;
        match (i < l, j < l) {
            (true, true) => vec![],
            (true, false) => {
                let b = j - l;
                let p = sys.pairing(b, sys.simple(i));
                if p == 0 {
                    vec![]
                } else {
                    vec![(j, p)]
                }
            }
            (false, true) => self.bracket_basis(j, i).into_iter().map(|(k, v)| (k, -v)).collect(),
            (false, false) => {
                let (a, b) = (i - l, j - l);
                if b == sys.neg(a) {
                    self.h_alpha(a)
                } else if let Some(c) = sys.sum(a, b) {
                    vec![(l + c, self.n(a, b))]
                } else {
                    vec![]
                }
            }
        }
    }

    /// `H_α = Σ m_i H_i` for `α = Σ m_i α_i` (coroots equal roots here).
    pub fn h_alpha(&self, a: RootId) -> Vec<(usize, i32)> {
        self.sys.coords(a).iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect()
    }

    /// Integer matrix of `ad b_k` acting on column vectors.
    pub fn ad_matrix(&self, k: usize) -> IntMatrix {
        let d = self.dim();
        let mut m = IntMatrix::zeros(d);
        for j in 0..d {
            for (i, v) in self.bracket_basis(k, j) {
                m.set(i, j, m.get(i, j) + v);
            }
        }
        m
    }

    /// `ad X_α`.
    pub fn ad_x(&self, a: RootId) -> IntMatrix {
        self.ad_matrix(self.x_index(a))
    }

    /// `exp(t ad X_α)` at `t = ±1` as an integer matrix.
    pub fn x_integer(&self, a: RootId, t: i32) -> IntMatrix {
        let ad = self.ad_x(a);
        let sq = ad.mul(&ad).halve().expect("ad X_α squared has even entries");
        IntMatrix::identity(self.dim()).add(&ad.scale(t)).add(&sq.scale(t * t))
    }

    /// `w_α(1) = x_α(1) x_{−α}(−1) x_α(1)` over ℤ.
    pub fn w_integer(&self, a: RootId) -> IntMatrix {
        let xa = self.x_integer(a, 1);
        xa.mul(&self.x_integer(self.sys.neg(a), -1)).mul(&xa)
    }

    /// The table `c(α,β)` defined by `w_α(1) X_β = c(α,β) X_{s_α β}`.
    pub fn c_table(&self) -> CTable {
        let sys = &self.sys;
        let m = sys.num_roots();
        let l = self.rank();
        let mut c = vec![0i8; m * m];
        for a in 0..m {
            let w = self.w_integer(a);
            for b in 0..m {
                let t = sys.reflect(a, b);
                let v = w.get(l + t, l + b);
                debug_assert!(v == 1 || v == -1);
                c[a * m + b] = v as i8;
            }
        }
        CTable { m, c }
    }

    /// The signed permutation `P(X_α) = ε_α X_{ρα}`, `P(H_i) = H_{ρ(i)}`, checked to be an
    /// automorphism of order `o(ρ)`.
    pub fn rho_algebra_matrix(&self) -> Result<IntMatrix, ChevalleyError> {
        let rho = self.rho.as_ref().ok_or(ChevalleyError::NotNormalized)?;
        let p = self.rho_matrix_unchecked(rho, &self.eps);
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let lhs = p.apply_sparse(&self.bracket_basis(i, j));
                let (pi, si) = p.signed_image(i);
                let (pj, sj) = p.signed_image(j);
                let rhs: Vec<(usize, i32)> =
                    self.bracket_basis(pi, pj).into_iter().map(|(k, v)| (k, v * si * sj)).collect();
                if normalize(lhs) != normalize(rhs) {
                    return Err(ChevalleyError::NotAutomorphism(format!("basis pair ({i}, {j})")));
                }
            }
        }
        let mut q = IntMatrix::identity(d);
        for _ in 0..rho.order() {
            q = p.mul(&q);
        }
        if q != IntMatrix::identity(d) {
            return Err(ChevalleyError::NotAutomorphism("wrong order".into()));
        }
        Ok(p)
    }

    fn rho_matrix_unchecked(&self, rho: &DiagramAutomorphism, eps: &[i8]) -> IntMatrix {
        let l = self.rank();
        let mut p = IntMatrix::zeros(self.dim());
        for i in 0..l {
            p.set(rho.simple_image(i), i, 1);
        }
        for a in 0..self.sys.num_roots() {
            p.set(l + rho.apply(a), l + a, eps[a] as i32);
        }
        p
    }

    /// N-table and ε-table keyed by root coordinates.
    pub fn to_json(&self) -> serde_json::Value {
        let key = |a: RootId| format!("{:?}", self.sys.coords(a));
        let m = self.sys.num_roots();
        let mut n = BTreeMap::new();
        for a in 0..m {
            for b in 0..m {
                if self.sys.sum(a, b).is_some() {
                    n.insert(format!("{}+{}", key(a), key(b)), self.n(a, b));
                }
            }
        }
        let eps: BTreeMap<String, i32> = (0..m).map(|a| (key(a), self.eps(a))).collect();
        serde_json::json!({
            "system": self.sys.label(),
            "rho": self.rho.as_ref().map(|r| r.perm().to_vec()),
            "n": n,
            "eps": eps,
        })
    }
}

/// `c(α,β)` lookups.
#[derive(Clone, Debug)]
pub struct CTable {
    m: usize,
    c: Vec<i8>,
}

impl CTable {
    pub fn get(&self, a: RootId, b: RootId) -> i32 {
        self.c[a * self.m + b] as i32
    }
}

/// Smallest `α` (in root order) with `α`, `γ − α` both positive.
pub fn extraspecial(sys: &RootSystem, g: RootId) -> (RootId, RootId) {
    sys.positive_roots()
        .find_map(|a| sys.diff(g, a).filter(|&b| sys.is_positive(b)).map(|b| (a, b)))
        .expect("non-simple positive root decomposes")
}

/// Whether the ρ-fixed root `a` equals `β + ρβ` for some non-fixed `β`.
pub fn is_a2_middle(sys: &RootSystem, rho: &DiagramAutomorphism, a: RootId) -> bool {
    (0..sys.num_roots()).any(|b| rho.apply(b) != b && sys.sum(b, rho.apply(b)) == Some(a))
}

fn resign(sys: &RootSystem, n: &mut [i8], c: &[i8]) {
    let m = sys.num_roots();
    for a in 0..m {
        for b in 0..m {
            if let Some(g) = sys.sum(a, b) {
                n[a * m + b] *= c[a] * c[b] * c[g];
            }
        }
    }
}

fn normalize(mut v: Vec<(usize, i32)>) -> Vec<(usize, i32)> {
    v.sort();
    let mut out: Vec<(usize, i32)> = Vec::new();
    for (k, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == k => *y += x,
            _ => out.push((k, x)),
        }
    }
    out.retain(|&(_, x)| x != 0);
    out
}
