use std::collections::HashMap;

use rayon::prelude::*;
use ring_core::FiniteRing;

use crate::{GroupError, Mat};

/// Default cap on enumerated elements.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// An enumerated finite matrix group, elements in discovery order.
#[derive(Clone, Debug)]
pub struct ElementSet {
    elems: Vec<Mat>,
    index: HashMap<Mat, u32>,
}

impl ElementSet {
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, m: &Mat) -> bool {
        self.index.contains_key(m)
    }

    pub fn elements(&self) -> &[Mat] {
        &self.elems
    }

    pub fn position(&self, m: &Mat) -> Option<usize> {
        self.index.get(m).map(|&i| i as usize)
    }

    /// Order-independent digest of the set.
    pub fn digest(&self) -> u64 {
        let mut hs: Vec<u64> = self.elems.iter().map(Mat::digest).collect();
        hs.sort_unstable();
        let mut acc = 0xcbf2_9ce4_8422_2325u64;
        for h in hs {
            acc = (acc ^ h).wrapping_mul(0x0000_0100_0000_01b3);
        }
        acc
    }

    fn insert(&mut self, m: Mat) -> bool {
        if self.index.contains_key(&m) {
            return false;
        }
        self.index.insert(m.clone(), self.elems.len() as u32);
        self.elems.push(m);
        true
    }

    /// Products `g·h` with `g` a listed element, `h` a generator.
    pub fn is_closed_under(&self, r: &FiniteRing, gens: &[Mat]) -> bool {
        self.elems.par_iter().all(|g| gens.iter().all(|h| self.contains(&g.mul(r, h))))
    }

    /// Elements commuting with every generator.
    pub fn centralizer_of(&self, r: &FiniteRing, gens: &[Mat]) -> Vec<Mat> {
        self.elems
            .par_iter()
            .filter(|g| gens.iter().all(|h| g.mul(r, h) == h.mul(r, g)))
            .cloned()
            .collect()
    }
}

/// Closure of `gens` under right multiplication, layer by layer.
///
/// Each frontier layer is expanded in parallel and merged in a fixed order, so the result does
/// not depend on scheduling.
pub fn closure(r: &FiniteRing, gens: &[Mat], budget: usize) -> Result<ElementSet, GroupError> {
    let d = gens.first().map_or(1, Mat::dim);
    let mut set = ElementSet { elems: Vec::new(), index: HashMap::new() };
    set.insert(Mat::identity(r, d));
    let mut frontier = vec![Mat::identity(r, d)];
    while !frontier.is_empty() {
        let next: Vec<Vec<Mat>> = frontier.par_iter().map(|g| gens.iter().map(|h| g.mul(r, h)).collect()).collect();
        let mut fresh = Vec::new();
        for m in next.into_iter().flatten() {
            if set.insert(m.clone()) {
                if set.len() > budget {
                    return Err(GroupError::Budget(budget));
                }
                fresh.push(m);
            }
        }
        frontier = fresh;
    }
    Ok(set)
}

/// Smallest subgroup containing `seeds` and normalized by `conj` (given with inverses).
pub fn normal_closure(
    r: &FiniteRing,
    seeds: &[Mat],
    conj: &[(Mat, Mat)],
    budget: usize,
) -> Result<ElementSet, GroupError> {
    let mut gens: Vec<Mat> = seeds.to_vec();
    loop {
        let h = closure(r, &gens, budget)?;
        let missing = gens
            .iter()
            .flat_map(|s| conj.iter().map(move |(g, gi)| (s, g, gi)))
            .map(|(s, g, gi)| g.mul(r, s).mul(r, gi))
            .find(|c| !h.contains(c));
        match missing {
            None => return Ok(h),
            Some(c) => gens.push(c),
        }
    }
}

/// Subgroup generated by all commutators of pairs of `gens`, then normally closed under `gens`.
pub fn commutator_closure(r: &FiniteRing, gens: &[(Mat, Mat)], budget: usize) -> Result<ElementSet, GroupError> {
    let mut seeds = Vec::new();
    for (x, xi) in gens {
        for (y, yi) in gens {
            let c = x.mul(r, y).mul(r, xi).mul(r, yi);
            if !c.is_identity(r) && !seeds.contains(&c) {
                seeds.push(c);
            }
        }
    }
    if seeds.is_empty() {
        seeds.push(Mat::identity(r, gens.first().map_or(1, |g| g.0.dim())));
    }
    normal_closure(r, &seeds, gens, budget)
}
