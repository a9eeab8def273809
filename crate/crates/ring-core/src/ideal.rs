use crate::apair::APair;
use crate::ring::{Elem, FiniteRing};
use crate::RingError;

/// A theta-invariant ideal, stored as a membership table over the parent ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaIdeal {
    generators: Vec<Elem>,
    member: Vec<bool>,
    elements: Vec<Elem>,
}

impl ThetaIdeal {
    /// Smallest theta-invariant ideal containing `gens`.
    pub fn generated(r: &FiniteRing, gens: &[Elem]) -> ThetaIdeal {
        let mut spanning: Vec<Elem> = Vec::new();
        let mut seen = vec![false; r.size()];
        for &g in gens {
            for k in 0..r.theta_order() as u32 {
                let gk = r.theta_pow(g, k);
                for x in r.elements() {
                    let y = r.mul(x, gk);
                    if !seen[y.idx()] {
                        seen[y.idx()] = true;
                        spanning.push(y);
                    }
                }
            }
        }
        let mut member = vec![false; r.size()];
        member[0] = true;
        let mut elements = vec![Elem::ZERO];
        let mut frontier = vec![Elem::ZERO];
        while let Some(a) = frontier.pop() {
            for &s in &spanning {
                let b = r.add(a, s);
                if !member[b.idx()] {
                    member[b.idx()] = true;
                    elements.push(b);
                    frontier.push(b);
                }
            }
        }
        elements.sort();
        ThetaIdeal { generators: gens.to_vec(), member, elements }
    }

    pub fn zero(r: &FiniteRing) -> ThetaIdeal {
        Self::generated(r, &[])
    }

    pub fn unit(r: &FiniteRing) -> ThetaIdeal {
        Self::generated(r, &[r.one()])
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.member[a.idx()]
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn is_zero(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.len() == self.member.len()
    }

    /// `J ∩ R_θ`.
    pub fn fixed_part(&self, r: &FiniteRing) -> Vec<Elem> {
        self.elements.iter().copied().filter(|&a| r.is_fixed(a)).collect()
    }

    /// Pairs of the twisted parameter group with both coordinates in the ideal.
    pub fn a_pairs(&self, r: &FiniteRing) -> Vec<APair> {
        let mut out = Vec::new();
        for &t in &self.elements {
            let n = r.mul(t, r.theta(t));
            for &u in &self.elements {
                if r.add(u, r.theta(u)) == n {
                    out.push(APair { t, u });
                }
            }
        }
        out
    }

    pub fn contains_pair(&self, p: APair) -> bool {
        self.contains(p.t) && self.contains(p.u)
    }

    pub fn sum(&self, r: &FiniteRing, other: &ThetaIdeal) -> ThetaIdeal {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(&other.generators);
        Self::generated(r, &gens)
    }

    /// Whether `1 + j` is a unit for every `j`, which is equivalent to lying in the Jacobson radical.
    pub fn in_radical(&self, r: &FiniteRing) -> bool {
        self.elements.iter().all(|&j| r.is_unit(r.add(r.one(), j)))
    }

    pub fn is_subset_of(&self, other: &ThetaIdeal) -> bool {
        self.elements.iter().all(|&a| other.contains(a))
    }

    /// Quotient ring `R/J` with the induced automorphism, and the projection map.
    pub fn quotient(&self, r: &FiniteRing) -> Result<Quotient, RingError> {
        let n = r.size();
        let mut proj = vec![u16::MAX; n];
        let mut reps: Vec<Elem> = Vec::new();
        for a in r.elements() {
            if proj[a.idx()] != u16::MAX {
                continue;
            }
            let k = reps.len() as u16;
            reps.push(a);
            for &j in &self.elements {
                proj[r.add(a, j).idx()] = k;
            }
        }
        let m = reps.len();
        let mut add = vec![0u16; m * m];
        let mut mul = vec![0u16; m * m];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                add[i * m + j] = proj[r.add(a, b).idx()];
                mul[i * m + j] = proj[r.mul(a, b).idx()];
            }
        }
        let theta = reps.iter().map(|&a| proj[r.theta(a).idx()]).collect();
        let coords = reps.iter().map(|&a| r.coords(a).to_vec()).collect();
        let one = Elem(proj[r.one().idx()]);
        let ring = if m == 1 {
            FiniteRing::from_tables(format!("{}/R", r.label()), coords, add, mul, theta, one)?
        } else {
            FiniteRing::from_tables(format!("{}/J", r.label()), coords, add, mul, theta, one)?
        };
        Ok(Quotient { ring, proj: proj.into_iter().map(Elem).collect() })
    }
}

/// A quotient ring together with the canonical projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub ring: FiniteRing,
    proj: Vec<Elem>,
}

impl Quotient {
    pub fn project(&self, a: Elem) -> Elem {
        self.proj[a.idx()]
    }
}
