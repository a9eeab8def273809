use std::sync::Arc;

use adjoint_group::{Chevalley, Mat, RepKind, Representation};
use chevalley_basis::ChevalleyData;
use ring_core::{ring_from_name, Elem, FiniteRing};
use root_systems::{CartanType, RootId, RootSystem};
use twisted_group::SigmaContext;
use twisted_roots::build_twisted;

use crate::NatError;

/// Row and column of the matrix unit for `β = e_i − e_j`, read off the simple-root support.
fn unit_position(sys: &RootSystem, a: RootId) -> (usize, usize) {
    let c = sys.coords(a);
    let first = c.iter().position(|&x| x != 0).expect("roots are nonzero");
    let last = c.iter().rposition(|&x| x != 0).expect("roots are nonzero");
    if c[first] > 0 {
        (first, last + 1)
    } else {
        (last + 1, first)
    }
}

/// Builds `π(X_β) = c_β E_ij` with signs `c_β = ±1` chosen so that the matrix units satisfy the
/// bracket relations of `data`. Returns the representation and the signs.
pub fn natural_representation(data: &ChevalleyData) -> Result<(Representation, Vec<i32>), NatError> {
    let sys = data.system();
    if sys.cartan_type() != CartanType::A {
        return Err(NatError::NotTypeA);
    }
    let n = sys.rank();
    let m = sys.num_roots();
    let pos: Vec<(usize, usize)> = (0..m).map(|a| unit_position(sys, a)).collect();
    // [E_ij, E_jk] = E_ik, and the reverse order gives −E_ik.
    let unit_bracket = |a: RootId, b: RootId| -> i32 {
        let ((i, j), (k, l)) = (pos[a], pos[b]);
        (j == k) as i32 - (l == i) as i32
    };
    let mut sign = vec![0i32; m];
    let mut by_height: Vec<RootId> = sys.positive_roots().collect();
    by_height.sort_by_key(|&a| sys.height(a));
    for &g in &by_height {
        if sys.height(g) == 1 {
            sign[g] = 1;
        } else {
            let (s, b) = sys
                .simple_roots()
                .iter()
                .find_map(|&s| sys.diff(g, s).map(|b| (s, b)))
                .expect("non-simple positive roots split off a simple root");
            sign[g] = sign[s] * sign[b] * unit_bracket(s, b) * data.n(s, b);
        }
        sign[sys.neg(g)] = sign[g];
    }
    for a in 0..m {
        for b in 0..m {
            if let Some(c) = sys.sum(a, b) {
                if sign[a] * sign[b] * unit_bracket(a, b) != data.n(a, b) * sign[c] {
                    return Err(NatError::Signs);
                }
            }
        }
    }
    let a_parts = (0..m).map(|a| vec![(pos[a].0, pos[a].1, sign[a])]).collect();
    let b_parts = vec![Vec::new(); m];
    // e_0 = ω_1, e_k = ω_{k+1} − ω_k, e_n = −ω_n.
    let weights = (0..=n)
        .map(|k| {
            let mut w = vec![0; n];
            if k < n {
                w[k] += 1;
            }
            if k > 0 {
                w[k - 1] -= 1;
            }
            w
        })
        .collect();
    let cartan = sys.cartan();
    let root_weights = (0..m)
        .map(|a| {
            let c = sys.coords(a);
            (0..n).map(|j| (0..n).map(|i| c[i] * cartan[i][j]).sum()).collect()
        })
        .collect();
    let coroot_pairing = (0..m).map(|a| sys.coords(a).to_vec()).collect();
    let rep = Representation::from_parts(RepKind::Natural, n + 1, a_parts, b_parts, weights, root_weights, coroot_pairing);
    Ok((rep, sign))
}

/// Type `A_n` acting on `R^{n+1}`, optionally with the graph automorphism of order two.
#[derive(Clone)]
pub struct NatContext {
    grp: Chevalley,
    sigma: Option<SigmaContext>,
    signs: Vec<i32>,
    pos: Vec<(usize, usize)>,
}

impl NatContext {
    /// The untwisted group `E(A_n, R)` in its natural module.
    pub fn untwisted(ring: Arc<FiniteRing>, rank: usize) -> Result<NatContext, NatError> {
        let sys = RootSystem::new(CartanType::A, rank)?;
        let data = Arc::new(ChevalleyData::new(&sys));
        let (rep, signs) = natural_representation(&data)?;
        let pos = (0..sys.num_roots()).map(|a| unit_position(&sys, a)).collect();
        let grp = Chevalley::new(ring, data, Arc::new(rep));
        Ok(NatContext { grp, sigma: None, signs, pos })
    }

    /// The twisted group `E′_σ(²A_n, R)` in its natural module; `θ` must have order two.
    pub fn twisted(ring: Arc<FiniteRing>, rank: usize) -> Result<NatContext, NatError> {
        let sys = RootSystem::new(CartanType::A, rank)?;
        let rho = sys.standard_twist(2)?;
        let tw = Arc::new(build_twisted(&sys, &rho)?);
        let data = Arc::new(ChevalleyData::new(&sys).normalize_signs(&rho)?);
        let (rep, signs) = natural_representation(&data)?;
        let pos = (0..sys.num_roots()).map(|a| unit_position(&sys, a)).collect();
        let ctx = SigmaContext::new(ring, tw, data, Arc::new(rep))?;
        let grp = ctx.group().clone();
        Ok(NatContext { grp, sigma: Some(ctx), signs, pos })
    }

    /// Twisted when the named ring carries an automorphism of order two, untwisted otherwise.
    pub fn from_name(rank: usize, ring: &str) -> Result<NatContext, NatError> {
        let r = Arc::new(ring_from_name(ring)?);
        if r.theta_order() == 2 {
            NatContext::twisted(r, rank)
        } else {
            NatContext::untwisted(r, rank)
        }
    }

    pub fn ring(&self) -> &FiniteRing {
        self.grp.ring()
    }

    pub fn rank(&self) -> usize {
        self.grp.system().rank()
    }

    pub fn dim(&self) -> usize {
        self.grp.dim()
    }

    pub fn system(&self) -> &RootSystem {
        self.grp.system()
    }

    pub fn group(&self) -> &Chevalley {
        &self.grp
    }

    pub fn sigma(&self) -> Result<&SigmaContext, NatError> {
        self.sigma.as_ref().ok_or(NatError::Hypothesis("an automorphism of order two"))
    }

    /// `(i, j)` with `β = e_i − e_j`, zero-based.
    pub fn position(&self, a: RootId) -> (usize, usize) {
        self.pos[a]
    }

    /// The sign `c_β` in `π(X_β) = c_β E_ij`.
    pub fn sign(&self, a: RootId) -> i32 {
        self.signs[a]
    }

    pub fn unit_matrix(&self, i: usize, j: usize) -> Mat {
        let mut m = Mat::zeros(self.dim());
        m.set(i, j, self.ring().one());
        m
    }

    /// `π(X_β)` over the ring.
    pub fn pi(&self, a: RootId) -> Mat {
        let (i, j) = self.pos[a];
        let mut m = Mat::zeros(self.dim());
        m.set(i, j, self.ring().from_int(self.signs[a] as i64));
        m
    }

    /// `I + tE_ij` for `β = e_i − e_j`. The group generator is `x_β(t) = nat_x(β, c_β t)`.
    pub fn nat_x(&self, a: RootId, t: Elem) -> Mat {
        let (i, j) = self.pos[a];
        let mut m = self.grp.identity();
        m.set(i, j, t);
        m
    }

    /// `det(g)` over any commutative ring.
    pub fn det(&self, g: &Mat) -> Elem {
        det(self.ring(), g)
    }
}

/// Determinant by permutation expansion; only used on small matrices.
pub(crate) fn det(r: &FiniteRing, g: &Mat) -> Elem {
    let d = g.dim();
    let mut perm: Vec<usize> = (0..d).collect();
    let mut acc = r.zero();
    permute(r, g, &mut perm, 0, 1, &mut acc);
    acc
}

fn permute(r: &FiniteRing, g: &Mat, perm: &mut Vec<usize>, k: usize, sign: i64, acc: &mut Elem) {
    let d = perm.len();
    if k == d {
        let term = r.product((0..d).map(|i| g.get(i, perm[i])));
        *acc = r.add(*acc, r.scale(sign, term));
        return;
    }
    for i in k..d {
        perm.swap(k, i);
        permute(r, g, perm, k + 1, if i == k { sign } else { -sign }, acc);
        perm.swap(k, i);
    }
}
