use serde::Serialize;

use crate::{is_a2_middle, ChevalleyData};

/// Exhaustive checks of the structure-constant rules and the Jacobi identity.
#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub system: String,
    pub root_pairs: usize,
    /// `|N_{α,β}| = 1` whenever `α+β` is a root, and `N = 0` otherwise.
    pub unit_constants: bool,
    /// `N_{β,α} = −N_{α,β}`.
    pub antisymmetric: bool,
    /// `N_{α,β} N_{−α,−β} = −1`.
    pub negation: bool,
    /// `N_{α,β} = N_{β,γ} = N_{γ,α}` for `α+β+γ = 0`.
    pub cyclic: bool,
    /// `N_{α,β}N_{γ,δ} + N_{β,γ}N_{α,δ} + N_{γ,α}N_{β,δ} = 0` for `α+β+γ+δ = 0`, no opposite pair.
    pub four_term: bool,
    pub jacobi: bool,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.unit_constants && self.antisymmetric && self.negation && self.cyclic && self.four_term && self.jacobi
    }
}

/// The sign conditions on `ε` and the automorphism check for a normalized basis.
#[derive(Clone, Debug, Serialize)]
pub struct NormalizationReport {
    pub system: String,
    pub order: u8,
    /// `ε_α = ε_ᾱ`.
    pub orbit_constant: bool,
    /// `ε_α = −1` exactly on the ρ-fixed roots of `A₂` classes.
    pub a2_fixed_negative: bool,
    pub others_positive: bool,
    /// The signed permutation built from `ρ` and `ε` preserves every bracket.
    pub automorphism: bool,
}

impl NormalizationReport {
    pub fn passed(&self) -> bool {
        self.orbit_constant && self.a2_fixed_negative && self.others_positive && self.automorphism
    }
}

impl ChevalleyData {
    pub fn verify_structure(&self) -> StructureReport {
        let s = self.system();
        let m = s.num_roots();
        let (mut unit_constants, mut antisymmetric, mut negation, mut cyclic) = (true, true, true, true);
        let mut root_pairs = 0;
        for a in 0..m {
            for b in 0..m {
                let n = self.n(a, b);
                match s.sum(a, b) {
                    Some(c) => {
                        root_pairs += 1;
                        unit_constants &= n.abs() == 1;
                        antisymmetric &= n == -self.n(b, a);
                        negation &= n * self.n(s.neg(a), s.neg(b)) == -1;
                        let g = s.neg(c);
                        cyclic &= n == self.n(b, g) && n == self.n(g, a);
                    }
                    None => unit_constants &= n == 0,
                }
            }
        }
        let mut four_term = true;
        let rank = s.rank();
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    let v: Vec<i32> = (0..rank).map(|i| s.coords(a)[i] + s.coords(b)[i] + s.coords(c)[i]).collect();
                    let Some(abc) = s.root_id(&v) else { continue };
                    let d = s.neg(abc);
                    let opp = |x: usize, y: usize| s.neg(x) == y;
                    if opp(a, b) || opp(a, c) || opp(a, d) || opp(b, c) || opp(b, d) || opp(c, d) {
                        continue;
                    }
                    four_term &= self.n(a, b) * self.n(c, d) + self.n(b, c) * self.n(a, d) + self.n(c, a) * self.n(b, d) == 0;
                }
            }
        }
        StructureReport {
            system: s.label(),
            root_pairs,
            unit_constants,
            antisymmetric,
            negation,
            cyclic,
            four_term,
            jacobi: self.jacobi_holds(),
        }
    }

    /// `[b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]] = 0` on all basis triples.
    pub fn jacobi_holds(&self) -> bool {
        let dim = self.dim();
        let brackets: Vec<Vec<Vec<(usize, i32)>>> =
            (0..dim).map(|i| (0..dim).map(|j| self.bracket_basis(i, j)).collect()).collect();
        let mut acc = vec![0i32; dim];
        for i in 0..dim {
            for j in 0..dim {
                for k in j + 1..dim {
                    acc.iter_mut().for_each(|x| *x = 0);
                    for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for &(p, v) in &brackets[y][z] {
                            for &(q, w) in &brackets[x][p] {
                                acc[q] += v * w;
                            }
                        }
                    }
                    if acc.iter().any(|&x| x != 0) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Requires data produced by [`ChevalleyData::normalize_signs`].
    pub fn verify_normalization(&self) -> Option<NormalizationReport> {
        let rho = self.rho()?;
        let s = self.system();
        let (mut orbit_constant, mut a2_fixed_negative, mut others_positive) = (true, true, true);
        for a in 0..s.num_roots() {
            orbit_constant &= self.eps(a) == self.eps(rho.apply(a));
            if rho.order() == 2 && rho.apply(a) == a && is_a2_middle(s, rho, a) {
                a2_fixed_negative &= self.eps(a) == -1;
            } else {
                others_positive &= self.eps(a) == 1;
            }
        }
        Some(NormalizationReport {
            system: s.label(),
            order: rho.order(),
            orbit_constant,
            a2_fixed_negative,
            others_positive,
            automorphism: self.rho_algebra_matrix().is_ok(),
        })
    }
}
