use chevalley_basis::{ChevalleyData, IntMatrix};
use root_systems::RootId;
use serde::Serialize;

/// Which module the matrices act on.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RepKind {
    Adjoint,
    Natural,
}

/// Sparse integer matrix entries `(row, col, value)`.
pub type Sparse = Vec<(usize, usize, i32)>;

/// Integer data of a representation: `π(X_β)`, `π(X_β)²/2` and the weights.
///
/// Weights and characters use a lattice basis chosen by the representation: simple roots for
/// the adjoint module, fundamental weights for the natural one.
#[derive(Clone, Debug)]
pub struct Representation {
    kind: RepKind,
    dim: usize,
    a: Vec<Sparse>,
    b: Vec<Sparse>,
    weights: Vec<Vec<i32>>,
    root_weights: Vec<Vec<i32>>,
    coroot_pairing: Vec<Vec<i32>>,
}

fn sparse(m: &IntMatrix) -> Sparse {
    let d = m.dim();
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let v = m.get(i, j);
            if v != 0 {
                out.push((i, j, v));
            }
        }
    }
    out
}

impl Representation {
    pub fn adjoint(data: &ChevalleyData) -> Representation {
        let sys = data.system();
        let l = sys.rank();
        let m = sys.num_roots();
        let mut a = Vec::with_capacity(m);
        let mut b = Vec::with_capacity(m);
        for r in 0..m {
            let ad = data.ad_x(r);
            let sq = ad.mul(&ad).halve().expect("(ad X)² has even entries");
            a.push(sparse(&ad));
            b.push(sparse(&sq));
        }
        let mut weights = vec![vec![0; l]; l];
        weights.extend((0..m).map(|r| sys.coords(r).to_vec()));
        let root_weights = (0..m).map(|r| sys.coords(r).to_vec()).collect();
        let coroot_pairing = (0..m).map(|r| (0..l).map(|k| sys.pairing(sys.simple(k), r)).collect()).collect();
        Representation { kind: RepKind::Adjoint, dim: l + m, a, b, weights, root_weights, coroot_pairing }
    }

    /// Assembles a representation from explicit data; used for the natural module.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        kind: RepKind,
        dim: usize,
        a: Vec<Sparse>,
        b: Vec<Sparse>,
        weights: Vec<Vec<i32>>,
        root_weights: Vec<Vec<i32>>,
        coroot_pairing: Vec<Vec<i32>>,
    ) -> Representation {
        Representation { kind, dim, a, b, weights, root_weights, coroot_pairing }
    }

    pub fn kind(&self) -> RepKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nilpotent(&self, r: RootId) -> &Sparse {
        &self.a[r]
    }

    pub fn half_square(&self, r: RootId) -> &Sparse {
        &self.b[r]
    }

    /// Weight of basis vector `k` in lattice coordinates.
    pub fn weight(&self, k: usize) -> &[i32] {
        &self.weights[k]
    }

    /// Root `β` in lattice coordinates.
    pub fn root_weight(&self, r: RootId) -> &[i32] {
        &self.root_weights[r]
    }

    /// `⟨λ_k, β^∨⟩` for each lattice basis vector `λ_k`.
    pub fn coroot_pairing(&self, r: RootId) -> &[i32] {
        &self.coroot_pairing[r]
    }

    pub fn lattice_rank(&self) -> usize {
        self.coroot_pairing.first().map_or(0, |v| v.len())
    }
}
