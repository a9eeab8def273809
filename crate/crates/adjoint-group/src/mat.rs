use std::hash::{DefaultHasher, Hash, Hasher};

use ring_core::{Elem, FiniteRing};

/// A square matrix over a [`FiniteRing`], row-major. Equality and hashing are entrywise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    d: usize,
    a: Vec<Elem>,
}

impl Mat {
    pub fn zeros(d: usize) -> Mat {
        Mat { d, a: vec![Elem::ZERO; d * d] }
    }

    pub fn identity(r: &FiniteRing, d: usize) -> Mat {
        let mut m = Self::zeros(d);
        for i in 0..d {
            m.a[i * d + i] = r.one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Elem>>) -> Mat {
        let d = rows.len();
        let a: Vec<Elem> = rows.into_iter().flatten().collect();
        assert_eq!(a.len(), d * d, "matrix must be square");
        Mat { d, a }
    }

    pub fn diagonal(diag: &[Elem]) -> Mat {
        let d = diag.len();
        let mut m = Self::zeros(d);
        for (i, &x) in diag.iter().enumerate() {
            m.a[i * d + i] = x;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.a[i * self.d + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.a[i * self.d + j] = v;
    }

    pub fn entries(&self) -> &[Elem] {
        &self.a
    }

    pub fn is_identity(&self, r: &FiniteRing) -> bool {
        (0..self.d).all(|i| (0..self.d).all(|j| self.get(i, j) == if i == j { r.one() } else { r.zero() }))
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&x| x == Elem::ZERO)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.d).all(|i| (0..self.d).all(|j| i == j || self.get(i, j) == Elem::ZERO))
    }

    pub fn mul(&self, r: &FiniteRing, o: &Mat) -> Mat {
        let d = self.d;
        let mut out = Self::zeros(d);
        for i in 0..d {
            let row = &mut out.a[i * d..(i + 1) * d];
            for k in 0..d {
                let x = self.a[i * d + k];
                if x == Elem::ZERO {
                    continue;
                }
                let orow = &o.a[k * d..(k + 1) * d];
                for j in 0..d {
                    let y = orow[j];
                    if y != Elem::ZERO {
                        row[j] = r.add(row[j], r.mul(x, y));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, r: &FiniteRing, o: &Mat) -> Mat {
        Mat { d: self.d, a: self.a.iter().zip(&o.a).map(|(&x, &y)| r.add(x, y)).collect() }
    }

    pub fn sub(&self, r: &FiniteRing, o: &Mat) -> Mat {
        Mat { d: self.d, a: self.a.iter().zip(&o.a).map(|(&x, &y)| r.sub(x, y)).collect() }
    }

    pub fn scale(&self, r: &FiniteRing, k: Elem) -> Mat {
        Mat { d: self.d, a: self.a.iter().map(|&x| r.mul(k, x)).collect() }
    }

    pub fn map(&self, f: impl Fn(Elem) -> Elem) -> Mat {
        Mat { d: self.d, a: self.a.iter().map(|&x| f(x)).collect() }
    }

    /// θ applied entrywise.
    pub fn theta(&self, r: &FiniteRing) -> Mat {
        self.map(|x| r.theta(x))
    }

    pub fn transpose(&self) -> Mat {
        let d = self.d;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for j in 0..d {
                out.a[j * d + i] = self.a[i * d + j];
            }
        }
        out
    }

    /// `Σ c_k v_k` where the vector is column `j`.
    pub fn column(&self, j: usize) -> Vec<Elem> {
        (0..self.d).map(|i| self.get(i, j)).collect()
    }

    pub fn apply(&self, r: &FiniteRing, v: &[Elem]) -> Vec<Elem> {
        (0..self.d)
            .map(|i| r.sum((0..self.d).map(|j| r.mul(self.get(i, j), v[j]))))
            .collect()
    }

    /// Gauss-Jordan inverse. Pivots must be units; over rings without a unit entry in a
    /// column, sums of two or three rows are tried before giving up.
    pub fn inverse(&self, r: &FiniteRing) -> Option<Mat> {
        let d = self.d;
        let mut m = self.a.clone();
        let mut inv = Self::identity(r, d).a;
        for c in 0..d {
            let pivot = (c..d).find(|&i| r.is_unit(m[i * d + c]));
            match pivot {
                Some(p) => swap_rows(&mut m, &mut inv, d, c, p),
                None => {
                    if !combine_for_unit(r, &mut m, &mut inv, d, c) {
                        return None;
                    }
                }
            }
            let pv = r.inv(m[c * d + c]).ok()?;
            for j in 0..d {
                m[c * d + j] = r.mul(pv, m[c * d + j]);
                inv[c * d + j] = r.mul(pv, inv[c * d + j]);
            }
            for i in 0..d {
                if i == c {
                    continue;
                }
                let f = m[i * d + c];
                if f == Elem::ZERO {
                    continue;
                }
                for j in 0..d {
                    m[i * d + j] = r.sub(m[i * d + j], r.mul(f, m[c * d + j]));
                    inv[i * d + j] = r.sub(inv[i * d + j], r.mul(f, inv[c * d + j]));
                }
            }
        }
        Some(Mat { d, a: inv })
    }

    pub fn pow(&self, r: &FiniteRing, mut e: u64) -> Mat {
        let mut base = self.clone();
        let mut acc = Self::identity(r, self.d);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(r, &base);
            }
            base = base.mul(r, &base);
            e >>= 1;
        }
        acc
    }

    /// A 64-bit digest of the entries, stable for a given build.
    pub fn digest(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.a.hash(&mut h);
        h.finish()
    }
}

fn swap_rows(m: &mut [Elem], inv: &mut [Elem], d: usize, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..d {
        m.swap(a * d + j, b * d + j);
        inv.swap(a * d + j, b * d + j);
    }
}

fn add_row(r: &FiniteRing, m: &mut [Elem], inv: &mut [Elem], d: usize, dst: usize, src: usize) {
    for j in 0..d {
        m[dst * d + j] = r.add(m[dst * d + j], m[src * d + j]);
        inv[dst * d + j] = r.add(inv[dst * d + j], inv[src * d + j]);
    }
}

fn combine_for_unit(r: &FiniteRing, m: &mut [Elem], inv: &mut [Elem], d: usize, c: usize) -> bool {
    let rows: Vec<usize> = (c..d).filter(|&i| m[i * d + c] != Elem::ZERO).collect();
    for (x, &i) in rows.iter().enumerate() {
        for &j in &rows[x + 1..] {
            if r.is_unit(r.add(m[i * d + c], m[j * d + c])) {
                add_row(r, m, inv, d, i, j);
                swap_rows(m, inv, d, c, i);
                return true;
            }
        }
    }
    for (x, &i) in rows.iter().enumerate() {
        for (y, &j) in rows.iter().enumerate().skip(x + 1) {
            for &k in &rows[y + 1..] {
                if r.is_unit(r.add(r.add(m[i * d + c], m[j * d + c]), m[k * d + c])) {
                    add_row(r, m, inv, d, i, j);
                    add_row(r, m, inv, d, i, k);
                    swap_rows(m, inv, d, c, i);
                    return true;
                }
            }
        }
    }
    false
}
