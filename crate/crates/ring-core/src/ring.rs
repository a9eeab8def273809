use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::descriptor::RingDescriptor;
use crate::RingError;

/// Largest ring we are willing to tabulate.
pub const MAX_RING_SIZE: usize = 2048;

/// Handle for an element of a [`FiniteRing`]. Index 0 is always zero.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Elem(pub u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);

    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

const NO_INV: u16 = u16::MAX;

/// A finite commutative ring with unity and an automorphism `theta`.
///
/// All laws are stored as lookup tables indexed by element handles, so
/// arithmetic is a single table read and equality is handle equality.
#[derive(Clone)]
pub struct FiniteRing {
    label: String,
    desc: Option<RingDescriptor>,
    n: usize,
    coords: Vec<Vec<u32>>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    theta: Vec<u16>,
    inv: Vec<u16>,
    one: Elem,
    theta_order: u8,
    characteristic: u32,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("label", &self.label)
            .field("size", &self.n)
            .field("theta_order", &self.theta_order)
            .field("characteristic", &self.characteristic)
            .finish()
    }
}

impl FiniteRing {
    /// Builds a ring from explicit tables and validates the axioms.
    ///
    /// `coords[i]` is a human readable coordinate tuple for element `i`; element 0 must
    /// be the additive identity.
    pub fn from_tables(
        label: impl Into<String>,
        coords: Vec<Vec<u32>>,
        add: Vec<u16>,
        mul: Vec<u16>,
        theta: Vec<u16>,
        one: Elem,
    ) -> Result<FiniteRing, RingError> {
        let n = coords.len();
        if n == 0 || n > MAX_RING_SIZE {
            return Err(RingError::TooLarge(n));
        }
        if add.len() != n * n || mul.len() != n * n || theta.len() != n {
            return Err(RingError::Axiom("table sizes disagree with element count".into()));
        }
        let mut neg = vec![NO_INV; n];
        for a in 0..n {
            for b in 0..n {
                if add[a * n + b] == 0 {
                    neg[a] = b as u16;
                    break;
                }
            }
            if neg[a] == NO_INV {
                return Err(RingError::Axiom(format!("element {a} has no additive inverse")));
            }
        }
        let mut inv = vec![NO_INV; n];
        for a in 0..n {
            for b in 0..n {
                if mul[a * n + b] == one.0 {
                    inv[a] = b as u16;
                    break;
                }
            }
        }
        let mut ring = FiniteRing {
            label: label.into(),
            desc: None,
            n,
            coords,
            add,
            mul,
            neg,
            theta,
            inv,
            one,
            theta_order: 1,
            characteristic: 1,
        };
        ring.characteristic = ring.compute_characteristic();
        ring.theta_order = ring.compute_theta_order()?;
        ring.check_axioms()?;
        Ok(ring)
    }

    pub(crate) fn set_descriptor(&mut self, d: RingDescriptor) {
        self.desc = Some(d);
    }

    fn compute_characteristic(&self) -> u32 {
        let mut acc = self.one;
        let mut k = 1u32;
        while acc != Elem::ZERO {
            acc = self.add(acc, self.one);
            k += 1;
        }
        k
    }

    fn compute_theta_order(&self) -> Result<u8, RingError> {
        let mut cur: Vec<u16> = self.theta.clone();
        for k in 1..=6u8 {
            if cur.iter().enumerate().all(|(i, &v)| v as usize == i) {
                return Ok(k);
            }
            cur = cur.iter().map(|&v| self.theta[v as usize]).collect();
        }
        Err(RingError::Axiom("theta does not have order 1, 2 or 3".into()))
    }

    fn check_axioms(&self) -> Result<(), RingError> {
        let n = self.n;
        if self.theta_order > 3 {
            return Err(RingError::Axiom(format!("theta has order {}", self.theta_order)));
        }
        let triples: Box<dyn Iterator<Item = (usize, usize, usize)>> = if n <= 64 {
            Box::new((0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c)))))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
            let v: Vec<_> = (0..1000)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect();
            Box::new(v.into_iter())
        };
        for (a, b, c) in triples {
            let (ea, eb, ec) = (Elem(a as u16), Elem(b as u16), Elem(c as u16));
            if self.add(self.add(ea, eb), ec) != self.add(ea, self.add(eb, ec)) {
                return Err(RingError::Axiom("addition is not associative".into()));
            }
            if self.mul(self.mul(ea, eb), ec) != self.mul(ea, self.mul(eb, ec)) {
                return Err(RingError::Axiom("multiplication is not associative".into()));
            }
            if self.mul(ea, self.add(eb, ec)) != self.add(self.mul(ea, eb), self.mul(ea, ec)) {
                return Err(RingError::Axiom("distributivity fails".into()));
            }
        }
        for a in 0..n {
            let ea = Elem(a as u16);
            if self.add(ea, Elem::ZERO) != ea {
                return Err(RingError::Axiom("0 is not an additive identity".into()));
            }
            if self.mul(ea, self.one) != ea {
                return Err(RingError::Axiom("1 is not a multiplicative identity".into()));
            }
        }
        let pairs: Box<dyn Iterator<Item = (usize, usize)>> = if n <= 512 {
            Box::new((0..n).flat_map(move |a| (0..n).map(move |b| (a, b))))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
            let v: Vec<_> = (0..20000).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
            Box::new(v.into_iter())
        };
        for (a, b) in pairs {
            let (ea, eb) = (Elem(a as u16), Elem(b as u16));
            if self.add(ea, eb) != self.add(eb, ea) {
                return Err(RingError::Axiom("addition is not commutative".into()));
            }
            if self.mul(ea, eb) != self.mul(eb, ea) {
                return Err(RingError::Axiom("multiplication is not commutative".into()));
            }
            if self.theta(self.add(ea, eb)) != self.add(self.theta(ea), self.theta(eb)) {
                return Err(RingError::Axiom("theta is not additive".into()));
            }
            if self.theta(self.mul(ea, eb)) != self.mul(self.theta(ea), self.theta(eb)) {
                return Err(RingError::Axiom("theta is not multiplicative".into()));
            }
        }
        if self.theta(self.one) != self.one {
            return Err(RingError::Axiom("theta does not fix 1".into()));
        }
        let mut seen = vec![false; n];
        for &t in &self.theta {
            if std::mem::replace(&mut seen[t as usize], true) {
                return Err(RingError::Axiom("theta is not bijective".into()));
            }
        }
        Ok(())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn descriptor(&self) -> Option<&RingDescriptor> {
        self.desc.as_ref()
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn theta_order(&self) -> u8 {
        self.theta_order
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.n as u16).map(Elem)
    }

    pub fn coords(&self, a: Elem) -> &[u32] {
        &self.coords[a.idx()]
    }

    /// Looks an element up by its coordinate tuple.
    pub fn from_coords(&self, c: &[u32]) -> Option<Elem> {
        self.coords.iter().position(|x| x == c).map(|i| Elem(i as u16))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.add[a.idx() * self.n + b.idx()])
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.mul[a.idx() * self.n + b.idx()])
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.idx()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn theta(&self, a: Elem) -> Elem {
        Elem(self.theta[a.idx()])
    }

    pub fn theta_pow(&self, a: Elem, k: u32) -> Elem {
        let mut x = a;
        for _ in 0..(k % self.theta_order as u32) {
            x = self.theta(x);
        }
        x
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.inv[a.idx()] != NO_INV
    }

    pub fn inv(&self, a: Elem) -> Result<Elem, RingError> {
        match self.inv[a.idx()] {
            NO_INV => Err(RingError::NotAUnit(self.show(a))),
            v => Ok(Elem(v)),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem, RingError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = self.one;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Integer power allowing negative exponents on units.
    pub fn zpow(&self, a: Elem, e: i64) -> Result<Elem, RingError> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else {
            Ok(self.pow(self.inv(a)?, e.unsigned_abs()))
        }
    }

    /// Image of an integer under the canonical map from the integers.
    pub fn from_int(&self, k: i64) -> Elem {
        let c = self.characteristic as i64;
        let r = k.rem_euclid(c);
        let mut acc = Elem::ZERO;
        let mut base = self.one;
        let mut e = r as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            e >>= 1;
        }
        acc
    }

    /// `k * a` for an integer `k`.
    pub fn scale(&self, k: i64, a: Elem) -> Elem {
        self.mul(self.from_int(k), a)
    }

    pub fn sum<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(Elem::ZERO, |acc, x| self.add(acc, x))
    }

    pub fn product<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(self.one, |acc, x| self.mul(acc, x))
    }

    pub fn is_fixed(&self, a: Elem) -> bool {
        self.theta(a) == a
    }

    /// Elements of the fixed subring.
    pub fn fixed_elements(&self) -> Vec<Elem> {
        self.elements().filter(|&a| self.is_fixed(a)).collect()
    }

    pub fn units(&self) -> Vec<Elem> {
        self.elements().filter(|&a| self.is_unit(a)).collect()
    }

    /// Norm-like product `a θ(a) θ²(a) …` over the theta orbit.
    pub fn orbit_product(&self, a: Elem) -> Elem {
        let mut acc = a;
        let mut x = a;
        for _ in 1..self.theta_order {
            x = self.theta(x);
            acc = self.mul(acc, x);
        }
        acc
    }

    /// Smallest unit `a` with `θ(a) = -a`, if any.
    pub fn antisymmetric_unit(&self) -> Option<Elem> {
        self.elements().find(|&a| self.is_unit(a) && self.theta(a) == self.neg(a) && a != self.neg(a))
    }

    /// All units `a` with `θ(a) = -a`.
    pub fn antisymmetric_units(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&a| self.is_unit(a) && self.theta(a) == self.neg(a) && a != self.neg(a))
            .collect()
    }

    /// Multiplicative inverse of the integer `k`, if it is a unit.
    pub fn inv_int(&self, k: i64) -> Result<Elem, RingError> {
        self.inv(self.from_int(k))
    }

    /// True when the ring is a field.
    pub fn is_field(&self) -> bool {
        self.elements().skip(1).all(|a| self.is_unit(a))
    }

    /// True when the non-units form an ideal.
    pub fn is_local(&self) -> bool {
        let nonunits: Vec<Elem> = self.elements().filter(|&a| !self.is_unit(a)).collect();
        nonunits
            .iter()
            .all(|&a| nonunits.iter().all(|&b| !self.is_unit(self.add(a, b))))
    }

    /// Short display of an element as its coordinate tuple.
    pub fn show(&self, a: Elem) -> String {
        let c = &self.coords[a.idx()];
        if c.len() == 1 {
            c[0].to_string()
        } else {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            format!("({})", parts.join(","))
        }
    }
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.add == other.add && self.mul == other.mul && self.theta == other.theta
    }
}

impl Eq for FiniteRing {}
