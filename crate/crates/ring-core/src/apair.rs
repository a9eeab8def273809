use serde::{Deserialize, Serialize};

use crate::ideal::ThetaIdeal;
use crate::ring::{Elem, FiniteRing};
use crate::RingError;

/// Element `(t, u)` of the group 𝒜(R) defined by `t θ(t) = u + θ(u)`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct APair {
    pub t: Elem,
    pub u: Elem,
}

impl APair {
    pub const ZERO: APair = APair { t: Elem::ZERO, u: Elem::ZERO };

    pub fn new(t: Elem, u: Elem) -> APair {
        APair { t, u }
    }
}

impl FiniteRing {
    pub fn is_apair(&self, p: APair) -> bool {
        self.mul(p.t, self.theta(p.t)) == self.add(p.u, self.theta(p.u))
    }

    pub fn check_apair(&self, p: APair) -> Result<APair, RingError> {
        if self.is_apair(p) {
            Ok(p)
        } else {
            Err(RingError::NotAPair(self.show(p.t), self.show(p.u)))
        }
    }

    /// All elements of 𝒜(R).
    pub fn a_pairs(&self) -> Vec<APair> {
        let mut out = Vec::new();
        for t in self.elements() {
            let n = self.mul(t, self.theta(t));
            for u in self.elements() {
                if self.add(u, self.theta(u)) == n {
                    out.push(APair { t, u });
                }
            }
        }
        out
    }

    /// `(t,u) ⊕ (t',u') = (t + t', u + u' + θ(t) t')`.
    pub fn a_op(&self, x: APair, y: APair) -> APair {
        APair {
            t: self.add(x.t, y.t),
            u: self.add(self.add(x.u, y.u), self.mul(self.theta(x.t), y.t)),
        }
    }

    pub fn a_inv(&self, x: APair) -> APair {
        APair { t: self.neg(x.t), u: self.theta(x.u) }
    }

    /// `r · (t,u) = (r t, r θ(r) u)`.
    pub fn a_act(&self, r: Elem, x: APair) -> APair {
        APair { t: self.mul(r, x.t), u: self.mul(self.mul(r, self.theta(r)), x.u) }
    }

    /// Splits `x` as `k ⊕ h` with `k = (g1, g1 θ(g1)/2)` and central `h = (0, (g2 - θ(g2))/2)`.
    pub fn a_decompose(&self, x: APair) -> Result<(APair, APair), RingError> {
        let half = self.inv_int(2).map_err(|_| RingError::NeedsUnit("2"))?;
        self.check_apair(x)?;
        let k = APair { t: x.t, u: self.mul(half, self.mul(x.t, self.theta(x.t))) };
        let h = APair { t: Elem::ZERO, u: self.mul(half, self.sub(x.u, self.theta(x.u))) };
        Ok((k, h))
    }

    /// Writes `x ∈ 𝒜(I + J)` as `p ⊕ q ⊕ c` with `p ∈ 𝒜(I)`, `q ∈ 𝒜(J)` and `c = (0, v)` central.
    pub fn a_ideal_split(
        &self,
        x: APair,
        i: &ThetaIdeal,
        j: &ThetaIdeal,
    ) -> Result<(APair, APair, APair), RingError> {
        let half = self.inv_int(2).map_err(|_| RingError::NeedsUnit("2"))?;
        self.check_apair(x)?;
        let split = |r: Elem| -> Option<(Elem, Elem)> {
            if i.contains(r) {
                return Some((r, Elem::ZERO));
            }
            i.elements().iter().find(|&&a| j.contains(self.sub(r, a))).map(|&a| (a, self.sub(r, a)))
        };
        let (a1, b1) = split(x.t).ok_or(RingError::NotInIdeal)?;
        let (a2, b2) = split(x.u).ok_or(RingError::NotInIdeal)?;
        let anti = |v: Elem| self.mul(half, self.sub(v, self.theta(v)));
        let p = APair { t: a1, u: self.add(self.mul(half, self.mul(a1, self.theta(a1))), anti(a2)) };
        let q = APair { t: b1, u: self.add(self.mul(half, self.mul(b1, self.theta(b1))), anti(b2)) };
        let c = APair {
            t: Elem::ZERO,
            u: self.mul(half, self.sub(self.mul(a1, self.theta(b1)), self.mul(self.theta(a1), b1))),
        };
        Ok((p, q, c))
    }

    /// Returns `t` with `tz + θ(tz) (+ θ²(tz))` equal to `rz + r2 θ(z) (+ r3 θ²(z))`.
    pub fn theta_symmetrize(
        &self,
        r: Elem,
        r2: Elem,
        r3: Option<Elem>,
        z: Elem,
    ) -> Result<Elem, RingError> {
        match (self.theta_order(), r3) {
            (2, None) => {
                let c = self.add(self.mul(r, z), self.mul(r2, self.theta(z)));
                if !self.is_fixed(c) {
                    return Err(RingError::NotFixed);
                }
                let half = self.inv_int(2).map_err(|_| RingError::NeedsUnit("2"))?;
                Ok(self.mul(half, self.add(r, self.theta(r2))))
            }
            (3, Some(r3)) => {
                let z1 = self.theta(z);
                let z2 = self.theta(z1);
                let c = self.sum([self.mul(r, z), self.mul(r2, z1), self.mul(r3, z2)]);
                if !self.is_fixed(c) {
                    return Err(RingError::NotFixed);
                }
                let third = self.inv_int(3).map_err(|_| RingError::NeedsUnit("3"))?;
                Ok(self.mul(third, self.sum([r, self.theta(r3), self.theta_pow(r2, 2)])))
            }
            (o, _) => Err(RingError::Unsupported(format!(
                "symmetrisation needs theta of order 2 (two coefficients) or 3 (three); got order {o}"
            ))),
        }
    }

    /// `tz + θ(tz) + …` summed over the theta orbit.
    pub fn orbit_trace(&self, a: Elem) -> Elem {
        let mut acc = a;
        let mut x = a;
        for _ in 1..self.theta_order() {
            x = self.theta(x);
            acc = self.add(acc, x);
        }
        acc
    }
}
