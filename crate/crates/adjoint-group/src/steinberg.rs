use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ring_core::Elem;
use serde::Serialize;

use crate::{CaseReport, Chevalley, GroupError};

/// How relation instances are chosen.
#[derive(Clone, Copy, Debug)]
pub enum Sampling {
    /// Every root pair and every parameter pair.
    Exhaustive,
    /// `n` seeded instances per relation.
    Seeded { seed: u64, n: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct SteinbergReport {
    pub cases: Vec<CaseReport>,
    /// Empirical `c(α,β)` agrees with the basis table and its listed properties.
    pub c_table_consistent: bool,
    pub failures: usize,
}

impl SteinbergReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.c_table_consistent
    }
}

type Inst = (usize, usize, Elem, Elem);

impl Chevalley {
    fn instances(&self, sampling: Sampling, salt: u64, t_units: bool, u_units: bool) -> Vec<Inst> {
        let r = self.ring();
        let m = self.system().num_roots();
        let units = r.units();
        let all: Vec<Elem> = r.elements().collect();
        let pool = |unit: bool| if unit { &units } else { &all };
        match sampling {
            Sampling::Exhaustive => {
                let mut out = Vec::new();
                for a in 0..m {
                    for b in 0..m {
                        for &t in pool(t_units) {
                            for &u in pool(u_units) {
                                out.push((a, b, t, u));
                            }
                        }
                    }
                }
                out
            }
            Sampling::Seeded { seed, n } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15));
                (0..n)
                    .map(|_| {
                        let a = rng.gen_range(0..m);
                        let b = rng.gen_range(0..m);
                        let tp = pool(t_units);
                        let up = pool(u_units);
                        (a, b, tp[rng.gen_range(0..tp.len())], up[rng.gen_range(0..up.len())])
                    })
                    .collect()
            }
        }
    }

    /// Checks relations (R1)–(R8) and the `c(α,β)` property list.
    pub fn verify_steinberg(&self, sampling: Sampling) -> Result<SteinbergReport, GroupError> {
        let r = self.ring();
        let sys = self.system();
        let c = self.c_table();
        let mut cases = Vec::new();
        let pw = |t: Elem, e: i32| r.zpow(t, e as i64);

        for (a, _, t, u) in self.instances(sampling, 1, false, false) {
            let lhs = self.mul(&self.x(a, t), &self.x(a, u));
            cases.push(CaseReport::new(format!("R1 {a} {} {}", r.show(t), r.show(u)), &lhs, &self.x(a, r.add(t, u))));
        }
        for (a, b, t, u) in self.instances(sampling, 2, false, false) {
            if sys.neg(a) != b {
                cases.push(self.verify_commutator(a, b, t, u)?);
            }
        }
        for (a, b, t, u) in self.instances(sampling, 3, true, false) {
            let s = sys.reflect(a, b);
            let lhs = self.conjugate(&self.w(a, t)?, &self.x(b, u))?;
            let k = r.mul(r.scale(c.get(a, b) as i64, pw(t, -sys.pairing(b, a))?), u);
            cases.push(CaseReport::new(format!("R3 {a} {b} {} {}", r.show(t), r.show(u)), &lhs, &self.x(s, k)));
        }
        for (a, b, t, u) in self.instances(sampling, 4, true, true) {
            let s = sys.reflect(a, b);
            let lhs = self.conjugate(&self.w(a, t)?, &self.w(b, u)?)?;
            let k = r.mul(r.scale(c.get(a, b) as i64, pw(t, -sys.pairing(b, a))?), u);
            cases.push(CaseReport::new(format!("R4 {a} {b} {} {}", r.show(t), r.show(u)), &lhs, &self.w(s, k)?));
        }
        for (a, b, t, u) in self.instances(sampling, 5, true, true) {
            let s = sys.reflect(a, b);
            let lhs = self.conjugate(&self.w(a, t)?, &self.h(b, u)?)?;
            cases.push(CaseReport::new(format!("R5 {a} {b} {} {}", r.show(t), r.show(u)), &lhs, &self.h(s, u)?));
        }
        for (a, b, t, u) in self.instances(sampling, 6, true, false) {
            let lhs = self.conjugate(&self.h(a, t)?, &self.x(b, u))?;
            let k = r.mul(pw(t, sys.pairing(b, a))?, u);
            cases.push(CaseReport::new(format!("R6 {a} {b} {} {}", r.show(t), r.show(u)), &lhs, &self.x(b, k)));
        }
        for (a, b, t, u) in self.instances(sampling, 7, true, true) {
            let lhs = self.conjugate(&self.h(a, t)?, &self.w(b, u)?)?;
            let k = r.mul(pw(t, sys.pairing(b, a))?, u);
            cases.push(CaseReport::new(format!("R7 {a} {b} {} {}", r.show(t), r.show(u)), &lhs, &self.w(b, k)?));
        }
        for (a, b, t, u) in self.instances(sampling, 8, true, true) {
            let lhs = self.conjugate(&self.h(a, t)?, &self.h(b, u)?)?;
            cases.push(CaseReport::new(format!("R8 {a} {b} {} {}", r.show(t), r.show(u)), &lhs, &self.h(b, u)?));
        }

        let c_table_consistent = self.check_c_table(&c)?;
        let failures = cases.iter().filter(|c| !c.equal).count();
        Ok(SteinbergReport { cases, c_table_consistent, failures })
    }

    fn check_c_table(&self, c: &chevalley_basis::CTable) -> Result<bool, GroupError> {
        let sys = self.system();
        let m = sys.num_roots();
        for a in 0..m {
            if c.get(a, a) != -1 || c.get(a, sys.neg(a)) != -1 {
                return Ok(false);
            }
            for b in 0..m {
                if self.empirical_c(a, b)? != c.get(a, b) {
                    return Ok(false);
                }
                let sb = sys.reflect(a, b);
                let sign = if sys.pairing(b, a) % 2 == 0 { 1 } else { -1 };
                let ok = c.get(a, b) == c.get(a, sys.neg(b))
                    && c.get(sys.neg(a), sys.neg(b)) == c.get(a, sb)
                    && c.get(sys.neg(a), b) == c.get(a, sb)
                    && c.get(a, b) * c.get(a, sb) == sign;
                if !ok {
                    return Ok(false);
                }
                if b != a && b != sys.neg(a) {
                    let plus = sys.sum(a, b).is_some();
                    let minus = sys.diff(a, b).is_some();
                    if (!plus && !minus && c.get(a, b) != 1)
                        || (plus && !minus && c.get(a, b) != self.data().n(a, b))
                        || (sys.pairing(a, b) == 0 && plus && minus && c.get(a, b) != -1)
                    {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}
