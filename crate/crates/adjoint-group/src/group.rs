use std::sync::Arc;

use chevalley_basis::{CTable, ChevalleyData};
use ring_core::{Elem, FiniteRing};
use root_systems::{RootId, RootSystem};
use serde::Serialize;

use crate::{GroupError, Mat, RepKind, Representation};

/// A character of the representation's weight lattice, given on the lattice basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    pub values: Vec<Elem>,
}

impl Character {
    pub fn trivial(r: &FiniteRing, rank: usize) -> Character {
        Character { values: vec![r.one(); rank] }
    }

    /// `χ(λ) = Π χ(λ_k)^{c_k}` for `λ = Σ c_k λ_k`.
    pub fn eval(&self, r: &FiniteRing, lambda: &[i32]) -> Result<Elem, GroupError> {
        let mut acc = r.one();
        for (&v, &c) in self.values.iter().zip(lambda) {
            acc = r.mul(acc, r.zpow(v, c as i64)?);
        }
        Ok(acc)
    }
}

/// One relation instance in a verification report.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CaseReport {
    pub case: String,
    pub lhs_hash: u64,
    pub rhs_hash: u64,
    pub equal: bool,
}

impl CaseReport {
    pub fn new(case: String, lhs: &Mat, rhs: &Mat) -> CaseReport {
        CaseReport { case, lhs_hash: lhs.digest(), rhs_hash: rhs.digest(), equal: lhs == rhs }
    }
}

/// An elementary Chevalley group `E_π(Φ, R)` in a fixed representation.
#[derive(Clone)]
pub struct Chevalley {
    ring: Arc<FiniteRing>,
    data: Arc<ChevalleyData>,
    rep: Arc<Representation>,
}

impl Chevalley {
    pub fn new(ring: Arc<FiniteRing>, data: Arc<ChevalleyData>, rep: Arc<Representation>) -> Chevalley {
        Chevalley { ring, data, rep }
    }

    pub fn adjoint(ring: Arc<FiniteRing>, data: Arc<ChevalleyData>) -> Chevalley {
        let rep = Arc::new(Representation::adjoint(&data));
        Chevalley { ring, data, rep }
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn ring_arc(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn data(&self) -> &ChevalleyData {
        &self.data
    }

    pub fn data_arc(&self) -> &Arc<ChevalleyData> {
        &self.data
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn rep_arc(&self) -> &Arc<Representation> {
        &self.rep
    }

    pub fn system(&self) -> &RootSystem {
        self.data.system()
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn kind(&self) -> RepKind {
        self.rep.kind()
    }

    pub fn identity(&self) -> Mat {
        Mat::identity(&self.ring, self.dim())
    }

    pub fn mul(&self, a: &Mat, b: &Mat) -> Mat {
        a.mul(&self.ring, b)
    }

    pub fn product<'a>(&self, it: impl IntoIterator<Item = &'a Mat>) -> Mat {
        it.into_iter().fold(self.identity(), |acc, m| acc.mul(&self.ring, m))
    }

    pub fn inverse(&self, a: &Mat) -> Result<Mat, GroupError> {
        a.inverse(&self.ring).ok_or(GroupError::NotInvertible)
    }

    /// `x y x⁻¹ y⁻¹`.
    pub fn commutator(&self, x: &Mat, y: &Mat) -> Result<Mat, GroupError> {
        let xi = self.inverse(x)?;
        let yi = self.inverse(y)?;
        Ok(self.product([x, y, &xi, &yi]))
    }

    /// `g h g⁻¹`.
    pub fn conjugate(&self, g: &Mat, h: &Mat) -> Result<Mat, GroupError> {
        let gi = self.inverse(g)?;
        Ok(self.product([g, h, &gi]))
    }

    /// `x_α(t) = I + tπ(X_α) + t²π(X_α)²/2`.
    pub fn x(&self, a: RootId, t: Elem) -> Mat {
        let r = &*self.ring;
        let mut m = self.identity();
        if t == Elem::ZERO {
            return m;
        }
        let t2 = r.mul(t, t);
        for &(i, j, v) in self.rep.nilpotent(a) {
            m.set(i, j, r.add(m.get(i, j), r.scale(v as i64, t)));
        }
        for &(i, j, v) in self.rep.half_square(a) {
            m.set(i, j, r.add(m.get(i, j), r.scale(v as i64, t2)));
        }
        m
    }

    /// `w_α(t) = x_α(t) x_{−α}(−t⁻¹) x_α(t)`.
    pub fn w(&self, a: RootId, t: Elem) -> Result<Mat, GroupError> {
        let r = &*self.ring;
        let ti = r.inv(t)?;
        let xa = self.x(a, t);
        Ok(self.product([&xa, &self.x(self.system().neg(a), r.neg(ti)), &xa]))
    }

    /// `h_α(t) = w_α(t) w_α(1)⁻¹`, with `w_α(1)⁻¹ = w_α(−1)`.
    pub fn h(&self, a: RootId, t: Elem) -> Result<Mat, GroupError> {
        let r = &*self.ring;
        Ok(self.mul(&self.w(a, t)?, &self.w(a, r.neg(r.one()))?))
    }

    /// Diagonal `h(χ)` acting by `χ(μ)` on the weight-`μ` basis vector.
    pub fn h_chi(&self, chi: &Character) -> Result<Mat, GroupError> {
        let r = &*self.ring;
        if chi.values.iter().any(|&v| !r.is_unit(v)) {
            return Err(GroupError::NotAUnit);
        }
        let diag: Result<Vec<Elem>, GroupError> = (0..self.dim()).map(|k| chi.eval(r, self.rep.weight(k))).collect();
        Ok(Mat::diagonal(&diag?))
    }

    /// `χ_{α,t}(λ) = t^{⟨λ,α⟩}`, so that `h(χ_{α,t}) = h_α(t)`.
    pub fn chi_alpha(&self, a: RootId, t: Elem) -> Result<Character, GroupError> {
        let r = &*self.ring;
        let values: Result<Vec<Elem>, _> =
            self.rep.coroot_pairing(a).iter().map(|&p| r.zpow(t, p as i64)).collect();
        Ok(Character { values: values? })
    }

    /// `χ(β)` for a root.
    pub fn chi_root(&self, chi: &Character, a: RootId) -> Result<Elem, GroupError> {
        chi.eval(&self.ring, self.rep.root_weight(a))
    }

    /// Compares `[x_α(t), x_β(u)]` with `x_{α+β}(N_{α,β}tu)` or the identity.
    pub fn verify_commutator(&self, a: RootId, b: RootId, t: Elem, u: Elem) -> Result<CaseReport, GroupError> {
        let sys = self.system();
        if sys.neg(a) == b {
            return Err(GroupError::OppositeRoots);
        }
        let r = &*self.ring;
        let lhs = self.commutator(&self.x(a, t), &self.x(b, u))?;
        let rhs = match sys.sum(a, b) {
            Some(c) => self.x(c, r.scale(self.data.n(a, b) as i64, r.mul(t, u))),
            None => self.identity(),
        };
        Ok(CaseReport::new(format!("R2 {a} {b} {} {}", r.show(t), r.show(u)), &lhs, &rhs))
    }

    /// Reads `c(α,β)` off `w_α(1) x_β(1) w_α(1)⁻¹ = x_{s_αβ}(c)`.
    pub fn empirical_c(&self, a: RootId, b: RootId) -> Result<i32, GroupError> {
        let r = &*self.ring;
        let g = self.conjugate(&self.w(a, r.one())?, &self.x(b, r.one()))?;
        let sb = self.system().reflect(a, b);
        for c in [1, -1] {
            if g == self.x(sb, r.from_int(c)) {
                return Ok(c as i32);
            }
        }
        Err(GroupError::Mismatch(format!("w-conjugate of x_{b}(1) by w_{a}(1)")))
    }

    /// The `c(α,β)` table of the underlying Chevalley basis.
    pub fn c_table(&self) -> CTable {
        self.data.c_table()
    }

    /// Recovers `(t_α)` with `g = Π_{α∈Φ^±} x_α(t_α)` in the given order (adjoint only).
    ///
    /// Coefficients are peeled off by height: the `X_γ`-coordinate of `g H_i` differs from that
    /// of the partial product with height-`ht γ` terms removed by exactly `−⟨γ,α_i⟩ t_γ`.
    pub fn recover_unipotent(&self, g: &Mat, order: &[RootId]) -> Result<Vec<Elem>, GroupError> {
        if self.kind() != RepKind::Adjoint {
            return Err(GroupError::Unsupported("payload recovery needs the adjoint module"));
        }
        let sys = self.system();
        let r = &*self.ring;
        let l = sys.rank();
        let mut t = vec![Elem::ZERO; order.len()];
        let mut heights: Vec<i32> = order.iter().map(|&a| sys.height(a).abs()).collect();
        heights.sort();
        heights.dedup();
        for h in heights {
            let partial = self.product(order.iter().zip(&t).map(|(&a, &s)| self.x(a, s)).collect::<Vec<_>>().iter());
            for (k, &gam) in order.iter().enumerate() {
                if sys.height(gam).abs() != h {
                    continue;
                }
                let i = (0..l)
                    .find(|&i| sys.pairing(gam, sys.simple(i)).abs() == 1)
                    .expect("every root pairs to ±1 with some simple root");
                let p = sys.pairing(gam, sys.simple(i));
                let row = l + gam;
                let diff = r.sub(partial.get(row, i), g.get(row, i));
                // diff = ⟨γ,α_i⟩ t_γ
                t[k] = if p == 1 { diff } else { r.neg(diff) };
            }
        }
        let back = self.product(order.iter().zip(&t).map(|(&a, &s)| self.x(a, s)).collect::<Vec<_>>().iter());
        if &back != g {
            return Err(GroupError::Mismatch("element is not a product in the given order".into()));
        }
        Ok(t)
    }
}
