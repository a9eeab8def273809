use serde::{Deserialize, Serialize};

use crate::ring::{Elem, FiniteRing, MAX_RING_SIZE};
use crate::RingError;

/// Serializable description of a ring construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RingDescriptor {
    /// Integers modulo `n`, trivial automorphism.
    Zmod { n: u32 },
    /// `GF(p^k)` with automorphism `x -> x^(p^theta_power)`.
    Gf { p: u32, k: u32, theta_power: u32 },
    /// `base[w]/(w^2 - d)` with `w -> -w` over the base automorphism.
    Quad { base: Box<RingDescriptor>, d: i64 },
    /// `base^copies` with the cyclic shift.
    Product { base: Box<RingDescriptor>, copies: u32 },
    /// `base[e]/(e^2)` with `e -> e`.
    Dual { base: Box<RingDescriptor> },
}

impl RingDescriptor {
    pub fn gf(q: u32) -> Result<RingDescriptor, RingError> {
        let (p, k) = prime_power(q).ok_or_else(|| RingError::Unsupported(format!("{q} is not a prime power")))?;
        Ok(RingDescriptor::Gf { p, k, theta_power: default_theta_power(k) })
    }

    /// Parses a short name (`gf9`, `z36`, `z3xz3`, `dual-gf9`, `quad-z5-2`) or a JSON object.
    pub fn parse(s: &str) -> Result<RingDescriptor, RingError> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| RingError::Parse(e.to_string()));
        }
        if let Some(rest) = s.strip_prefix("dual-") {
            return Ok(RingDescriptor::Dual { base: Box::new(Self::parse(rest)?) });
        }
        if let Some(rest) = s.strip_prefix("quad-") {
            let (b, d) = rest
                .rsplit_once('-')
                .ok_or_else(|| RingError::Parse(format!("expected quad-<base>-<d>, got {s}")))?;
            let d: i64 = d.parse().map_err(|_| RingError::Parse(format!("bad d in {s}")))?;
            return Ok(RingDescriptor::Quad { base: Box::new(Self::parse(b)?), d });
        }
        if s.contains('x') {
            let parts: Vec<&str> = s.split('x').collect();
            if parts.iter().any(|p| *p != parts[0]) {
                return Err(RingError::Parse(format!("product factors must agree: {s}")));
            }
            return Ok(RingDescriptor::Product {
                base: Box::new(Self::parse(parts[0])?),
                copies: parts.len() as u32,
            });
        }
        let num = |t: &str| -> Result<u32, RingError> {
            t.parse().map_err(|_| RingError::Parse(format!("unrecognised ring name {s}")))
        };
        if let Some(q) = s.strip_prefix("gf") {
            if let Some((q, tp)) = q.split_once(':') {
                let (p, k) = prime_power(num(q)?).ok_or_else(|| RingError::Parse(format!("{q} is not a prime power")))?;
                return Ok(RingDescriptor::Gf { p, k, theta_power: num(tp)? });
            }
            return Self::gf(num(q)?);
        }
        if let Some(n) = s.strip_prefix("zmod").or_else(|| s.strip_prefix('z')) {
            return Ok(RingDescriptor::Zmod { n: num(n)? });
        }
        Err(RingError::Parse(format!("unrecognised ring name {s}")))
    }

    /// Canonical short name; `parse(short_name())` returns an equal descriptor.
    pub fn short_name(&self) -> String {
        match self {
            RingDescriptor::Zmod { n } => format!("z{n}"),
            RingDescriptor::Gf { p, k, theta_power } => {
                let q = p.pow(*k);
                if *theta_power == default_theta_power(*k) {
                    format!("gf{q}")
                } else {
                    format!("gf{q}:{theta_power}")
                }
            }
            RingDescriptor::Quad { base, d } => format!("quad-{}-{d}", base.short_name()),
            RingDescriptor::Product { base, copies } => {
                vec![base.short_name(); *copies as usize].join("x")
            }
            RingDescriptor::Dual { base } => format!("dual-{}", base.short_name()),
        }
    }

    /// Number of elements the construction would have.
    pub fn size(&self) -> u64 {
        match self {
            RingDescriptor::Zmod { n } => *n as u64,
            RingDescriptor::Gf { p, k, .. } => (*p as u64).pow(*k),
            RingDescriptor::Quad { base, .. } | RingDescriptor::Dual { base } => base.size().pow(2),
            RingDescriptor::Product { base, copies } => base.size().pow(*copies),
        }
    }
}

fn default_theta_power(k: u32) -> u32 {
    if k % 2 == 0 {
        k / 2
    } else if k % 3 == 0 {
        k / 3
    } else {
        0
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut r, mut k) = (q, 0);
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1 && is_prime(p)).then_some((p, k))
}

/// Builds the ring described by `d`.
pub fn make_ring(d: &RingDescriptor) -> Result<FiniteRing, RingError> {
    let size = d.size();
    if size as usize > MAX_RING_SIZE || size == 0 {
        return Err(RingError::TooLarge(size as usize));
    }
    let mut ring = match d {
        RingDescriptor::Zmod { n } => zmod(*n)?,
        RingDescriptor::Gf { p, k, theta_power } => galois(*p, *k, *theta_power)?,
        RingDescriptor::Quad { base, d } => quad(&make_ring(base)?, *d)?,
        RingDescriptor::Product { base, copies } => product(&make_ring(base)?, *copies)?,
        RingDescriptor::Dual { base } => dual(&make_ring(base)?)?,
    };
    ring.set_descriptor(d.clone());
    Ok(ring)
}

/// Parses a name or JSON descriptor and builds the ring.
pub fn ring_from_name(s: &str) -> Result<FiniteRing, RingError> {
    make_ring(&RingDescriptor::parse(s)?)
}

fn zmod(n: u32) -> Result<FiniteRing, RingError> {
    if n < 2 {
        return Err(RingError::Unsupported("modulus must be at least 2".into()));
    }
    let n = n as usize;
    let coords = (0..n as u32).map(|i| vec![i]).collect();
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            add[a * n + b] = ((a + b) % n) as u16;
            mul[a * n + b] = ((a * b) % n) as u16;
        }
    }
    let theta = (0..n as u16).collect();
    FiniteRing::from_tables(format!("z{n}"), coords, add, mul, theta, Elem(1))
}

// Polynomials over Z/p, lowest coefficient first.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    let lead_inv = (1..p).find(|x| x * m[dm] % p == 1).unwrap();
    while r.len() > dm {
        let c = r[r.len() - 1] * lead_inv % p;
        let shift = r.len() - 1 - dm;
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - c * mi % p) % p;
        }
        r.pop();
    }
    r
}

fn digits(mut i: usize, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = (i % p as usize) as u32;
            i /= p as usize;
            d
        })
        .collect()
}

fn monic_irreducible(p: u32, k: u32) -> Vec<u32> {
    let total = (p as usize).pow(k);
    'cand: for idx in 0..total {
        let mut f = digits(idx, p, k);
        f.push(1);
        for d in 1..=k / 2 {
            for gi in 0..(p as usize).pow(d) {
                let mut g = digits(gi, p, d);
                g.push(1);
                if poly_rem(&f, &g, p).iter().all(|&c| c == 0) {
                    continue 'cand;
                }
            }
        }
        return f;
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn galois(p: u32, k: u32, theta_power: u32) -> Result<FiniteRing, RingError> {
    if !is_prime(p) || k == 0 {
        return Err(RingError::Unsupported(format!("GF({p}^{k}) is not a field size")));
    }
    let n = (p as usize).pow(k);
    let f = monic_irreducible(p, k);
    let elems: Vec<Vec<u32>> = (0..n).map(|i| digits(i, p, k)).collect();
    let index = |c: &[u32]| -> usize {
        c.iter().rev().fold(0usize, |acc, &d| acc * p as usize + d as usize)
    };
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            let s: Vec<u32> = (0..k as usize).map(|i| (elems[a][i] + elems[b][i]) % p).collect();
            add[a * n + b] = index(&s) as u16;
            let mut prod = vec![0u32; 2 * k as usize - 1];
            for i in 0..k as usize {
                for j in 0..k as usize {
                    prod[i + j] = (prod[i + j] + elems[a][i] * elems[b][j]) % p;
                }
            }
            let mut r = poly_rem(&prod, &f, p);
            r.resize(k as usize, 0);
            mul[a * n + b] = index(&r) as u16;
        }
    }
    let e = (p as u64).pow(theta_power % k);
    let powmod = |a: usize| -> u16 {
        let mut acc = 1usize;
        let mut base = a;
        let mut ee = e;
        while ee > 0 {
            if ee & 1 == 1 {
                acc = mul[acc * n + base] as usize;
            }
            base = mul[base * n + base] as usize;
            ee >>= 1;
        }
        acc as u16
    };
    let theta = (0..n).map(powmod).collect();
    let label = RingDescriptor::Gf { p, k, theta_power }.short_name();
    FiniteRing::from_tables(label, elems, add, mul, theta, Elem(1))
}

fn pair_ring(
    label: String,
    base: &FiniteRing,
    mul_law: impl Fn(Elem, Elem, Elem, Elem) -> (Elem, Elem),
    theta_law: impl Fn(Elem, Elem) -> (Elem, Elem),
) -> Result<FiniteRing, RingError> {
    let nb = base.size();
    let n = nb * nb;
    let split = |i: usize| (Elem((i % nb) as u16), Elem((i / nb) as u16));
    let join = |a: Elem, b: Elem| (a.idx() + nb * b.idx()) as u16;
    let coords = (0..n)
        .map(|i| {
            let (a, b) = split(i);
            let mut c = base.coords(a).to_vec();
            c.extend_from_slice(base.coords(b));
            c
        })
        .collect();
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    for x in 0..n {
        let (a0, a1) = split(x);
        for y in 0..n {
            let (b0, b1) = split(y);
            add[x * n + y] = join(base.add(a0, b0), base.add(a1, b1));
            let (c0, c1) = mul_law(a0, a1, b0, b1);
            mul[x * n + y] = join(c0, c1);
        }
    }
    let theta = (0..n)
        .map(|x| {
            let (a0, a1) = split(x);
            let (t0, t1) = theta_law(a0, a1);
            join(t0, t1)
        })
        .collect();
    FiniteRing::from_tables(label, coords, add, mul, theta, Elem(base.one().0))
}

fn quad(base: &FiniteRing, d: i64) -> Result<FiniteRing, RingError> {
    let de = base.from_int(d);
    let label = format!("quad-{}-{d}", base.label());
    pair_ring(
        label,
        base,
        |a0, a1, b0, b1| {
            let c0 = base.add(base.mul(a0, b0), base.mul(de, base.mul(a1, b1)));
            let c1 = base.add(base.mul(a0, b1), base.mul(a1, b0));
            (c0, c1)
        },
        |a0, a1| (base.theta(a0), base.neg(base.theta(a1))),
    )
}

fn dual(base: &FiniteRing) -> Result<FiniteRing, RingError> {
    let label = format!("dual-{}", base.label());
    pair_ring(
        label,
        base,
        |a0, a1, b0, b1| (base.mul(a0, b0), base.add(base.mul(a0, b1), base.mul(a1, b0))),
        |a0, a1| (base.theta(a0), base.theta(a1)),
    )
}

fn product(base: &FiniteRing, copies: u32) -> Result<FiniteRing, RingError> {
    if base.theta_order() != 1 {
        return Err(RingError::Unsupported("product rings need a base with trivial automorphism".into()));
    }
    if copies == 0 {
        return Err(RingError::Unsupported("product needs at least one copy".into()));
    }
    let nb = base.size();
    let c = copies as usize;
    let n = nb.pow(copies);
    let split = |mut i: usize| -> Vec<Elem> {
        (0..c)
            .map(|_| {
                let e = Elem((i % nb) as u16);
                i /= nb;
                e
            })
            .collect()
    };
    let join = |v: &[Elem]| -> u16 { v.iter().rev().fold(0usize, |acc, e| acc * nb + e.idx()) as u16 };
    let parts: Vec<Vec<Elem>> = (0..n).map(split).collect();
    let coords = parts
        .iter()
        .map(|v| v.iter().flat_map(|&e| base.coords(e).to_vec()).collect())
        .collect();
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    let mut buf = vec![Elem::ZERO; c];
    for x in 0..n {
        for y in 0..n {
            for i in 0..c {
                buf[i] = base.add(parts[x][i], parts[y][i]);
            }
            add[x * n + y] = join(&buf);
            for i in 0..c {
                buf[i] = base.mul(parts[x][i], parts[y][i]);
            }
            mul[x * n + y] = join(&buf);
        }
    }
    let theta = parts
        .iter()
        .map(|v| {
            let shifted: Vec<Elem> = (0..c).map(|i| v[(i + c - 1) % c]).collect();
            join(&shifted)
        })
        .collect();
    let ones = vec![base.one(); c];
    let label = vec![base.label().to_string(); c].join("x");
    FiniteRing::from_tables(label, coords, add, mul, theta, Elem(join(&ones)))
}
