use adjoint_group::Mat;
use ring_core::{Elem, FiniteRing};
use serde::Serialize;
use twisted_group::SigmaContext;

use crate::NatError;

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraReport {
    pub dim: usize,
    /// Rank of the generated algebra over the residue field.
    pub rank: usize,
    pub products: usize,
    pub full: bool,
}

/// Vectors kept in echelon form over a local ring; pivots are units, so the number of kept
/// vectors is the rank of their reductions over the residue field.
struct Echelon<'a> {
    r: &'a FiniteRing,
    rows: Vec<(usize, Vec<Elem>)>,
}

impl<'a> Echelon<'a> {
    fn reduce(&self, mut v: Vec<Elem>) -> Vec<Elem> {
        let r = self.r;
        for (p, row) in &self.rows {
            let k = v[*p];
            if k != r.zero() {
                for (x, y) in v.iter_mut().zip(row) {
                    *x = r.sub(*x, r.mul(k, *y));
                }
            }
        }
        v
    }

    /// Adds `v` when its reduction has a unit entry; returns whether it was new.
    fn insert(&mut self, v: Vec<Elem>) -> bool {
        let r = self.r;
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|&x| r.is_unit(x)) else {
            return false;
        };
        let inv = r.inv(v[p]).expect("pivot is a unit");
        v.iter_mut().for_each(|x| *x = r.mul(*x, inv));
        for (_, row) in self.rows.iter_mut() {
            let k = row[p];
            if k != r.zero() {
                for (x, y) in row.iter_mut().zip(&v) {
                    *x = r.sub(*x, r.mul(k, *y));
                }
            }
        }
        self.rows.push((p, v));
        true
    }
}

fn from_entries(d: usize, v: &[Elem]) -> Mat {
    Mat::from_rows(v.chunks(d).map(|c| c.to_vec()).collect())
}

/// Closes `{I} ∪ gens` under right multiplication by the generators and reports whether the
/// span is all of `M_n` over the residue field, which by Nakayama means all of `M_n(R)`.
pub fn algebra_generation_check(r: &FiniteRing, gens: &[Mat], budget: usize) -> Result<AlgebraReport, NatError> {
    if !r.is_local() {
        return Err(NatError::NotLocal);
    }
    let d = gens.first().map_or(0, |g| g.dim());
    let target = d * d;
    let mut ech = Echelon { r, rows: Vec::new() };
    let mut basis: Vec<Mat> = Vec::new();
    for m in std::iter::once(Mat::identity(r, d)).chain(gens.iter().cloned()) {
        if ech.insert(m.entries().to_vec()) {
            basis.push(m);
        }
    }
    let mut products = 0;
    let mut next = 0;
    while next < basis.len() && basis.len() < target {
        let b = basis[next].clone();
        next += 1;
        for g in gens {
            products += 1;
            if products > budget {
                return Err(NatError::Budget(budget));
            }
            let m = b.mul(r, g);
            if ech.insert(m.entries().to_vec()) {
                basis.push(m);
            }
        }
    }
    let rank = ech.rows.len();
    Ok(AlgebraReport { dim: d, rank, products, full: rank == target })
}

#[derive(Clone, Debug, Serialize)]
pub struct FormReport {
    pub generators: usize,
    /// Dimension of `{F : θ(g)ᵀ F g = F for every generator}`.
    pub invariant_dim: usize,
    #[serde(skip)]
    pub form: Option<Mat>,
    pub hermitian: bool,
    pub nondegenerate: bool,
}

/// Solves for the sesquilinear forms fixed by the generators of `ctx` and looks for a
/// nondegenerate hermitian one among their scalar multiples. Needs a field.
pub fn hermitian_forms(ctx: &SigmaContext, gens: &[Mat]) -> Result<FormReport, NatError> {
    let r = ctx.ring();
    if !r.is_field() {
        return Err(NatError::Hypothesis("a field"));
    }
    let d = ctx.group().dim();
    let n2 = d * d;
    let mut ech = Echelon { r, rows: Vec::new() };
    for g in gens {
        let tg = g.theta(r);
        for i in 0..d {
            for j in 0..d {
                // Coefficient of F_kl in (θ(g)ᵀ F g − F)_ij.
                let mut row = vec![r.zero(); n2];
                for k in 0..d {
                    for l in 0..d {
                        row[k * d + l] = r.mul(tg.get(k, i), g.get(l, j));
                    }
                }
                row[i * d + j] = r.sub(row[i * d + j], r.one());
                ech.insert(row);
            }
        }
    }
    let pivots: Vec<usize> = ech.rows.iter().map(|(p, _)| *p).collect();
    let free: Vec<usize> = (0..n2).filter(|c| !pivots.contains(c)).collect();
    let null: Vec<Vec<Elem>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![r.zero(); n2];
            v[f] = r.one();
            for (p, row) in &ech.rows {
                v[*p] = r.neg(row[f]);
            }
            v
        })
        .collect();
    let mut form = None;
    if null.len() == 1 {
        let f0 = from_entries(d, &null[0]);
        form = r
            .units()
            .into_iter()
            .map(|c| f0.scale(r, c))
            .find(|f| f.theta(r).transpose() == *f);
    }
    let hermitian = form.is_some();
    let nondegenerate = form.as_ref().is_some_and(|f| r.is_unit(crate::context::det(r, f)));
    Ok(FormReport { generators: gens.len(), invariant_dim: null.len(), form, hermitian, nondegenerate })
}
