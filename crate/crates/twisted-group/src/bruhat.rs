use std::collections::HashSet;

use adjoint_group::{closure, Mat};
use serde::Serialize;

use crate::sigma::SigmaContext;
use crate::TwistedGroupError;

#[derive(Clone, Debug, Serialize)]
pub struct BruhatCell {
    pub word: Vec<usize>,
    pub u_w_order: usize,
    pub size: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BruhatReport {
    pub group_order: usize,
    pub u_order: usize,
    pub h_order: usize,
    pub b_order: usize,
    pub cells: Vec<BruhatCell>,
    pub cell_sum: usize,
    /// Every `b η_w u` expression gives a distinct element.
    pub unique: bool,
    pub disjoint: bool,
    pub exhaustive: bool,
}

impl BruhatReport {
    pub fn passed(&self) -> bool {
        self.unique && self.disjoint && self.exhaustive && self.cell_sum == self.group_order
    }
}

/// All products `x_[c₁](p₁) ⋯ x_[c_k](p_k)` in the given class order.
fn class_products(ctx: &SigmaContext, classes: &[usize]) -> Result<(Vec<Mat>, bool), TwistedGroupError> {
    let mut acc = vec![ctx.identity()];
    for &c in classes {
        let gens: Vec<Mat> = ctx.domain(c).into_iter().map(|p| ctx.x_class(c, p)).collect::<Result<_, _>>()?;
        acc = acc.iter().flat_map(|a| gens.iter().map(move |g| (a, g))).map(|(a, g)| ctx.group().mul(a, g)).collect();
    }
    let n = acc.len();
    let distinct: HashSet<&Mat> = acc.iter().collect();
    let unique = distinct.len() == n;
    Ok((acc, unique))
}

impl SigmaContext {
    /// Positive classes in increasing height.
    pub fn positive_order(&self) -> Vec<usize> {
        let tw = self.twisted();
        let mut v: Vec<usize> = tw.positive_classes().collect();
        v.sort_by_key(|&c| (tw.height(c), c));
        v
    }

    /// Enumerates the elementary group by closure over every generator.
    pub fn enumerate(&self, budget: usize) -> Result<adjoint_group::ElementSet, TwistedGroupError> {
        let gens = self.all_generators()?;
        Ok(closure(self.ring(), &gens, budget)?)
    }
}

/// Partitions the enumerated group into cells `B η_w U_w` over the twisted Weyl group.
pub fn bruhat_count(ctx: &SigmaContext, budget: usize) -> Result<BruhatReport, TwistedGroupError> {
    let r = ctx.ring();
    if !r.is_field() {
        return Err(TwistedGroupError::NotAField("Bruhat counting"));
    }
    let tw = ctx.twisted();
    let g = ctx.enumerate(budget)?;
    let pos = ctx.positive_order();
    let (u, mut unique) = class_products(ctx, &pos)?;
    let h: Vec<&Mat> = g.elements().iter().filter(|m| m.is_diagonal()).collect();
    let b: Vec<Mat> = u.iter().flat_map(|x| h.iter().map(move |y| ctx.group().mul(x, y))).collect();
    let b_distinct = b.iter().collect::<HashSet<_>>().len();
    unique &= b_distinct == b.len();

    let weyl = tw.twisted_weyl();
    let mut seen: HashSet<Mat> = HashSet::new();
    let mut disjoint = true;
    let mut cells = Vec::new();
    let mut cell_sum = 0;
    for (elem, word) in weyl.elements.iter().zip(&weyl.words) {
        let mut eta = ctx.identity();
        for &s in word {
            eta = ctx.group().mul(&eta, &ctx.w_unit(s, r.one())?);
        }
        let inv: Vec<usize> = pos.iter().copied().filter(|&c| !tw.class(elem[c]).positive).collect();
        let (uw, uw_unique) = class_products(ctx, &inv)?;
        unique &= uw_unique;
        let mut cell: HashSet<Mat> = HashSet::new();
        for x in &b {
            let xe = ctx.group().mul(x, &eta);
            for y in &uw {
                cell.insert(ctx.group().mul(&xe, y));
            }
        }
        unique &= cell.len() == b.len() * uw.len();
        for m in &cell {
            if !seen.insert(m.clone()) {
                disjoint = false;
            }
        }
        cell_sum += b.len() * uw.len();
        cells.push(BruhatCell { word: word.clone(), u_w_order: uw.len(), size: cell.len() });
    }
    let exhaustive = seen.len() == g.len() && seen.iter().all(|m| g.contains(m));
    Ok(BruhatReport {
        group_order: g.len(),
        u_order: u.len(),
        h_order: h.len(),
        b_order: b.len(),
        cells,
        cell_sum,
        unique,
        disjoint,
        exhaustive,
    })
}
