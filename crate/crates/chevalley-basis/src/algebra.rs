use ring_core::{Elem, FiniteRing};

use crate::ChevalleyData;

/// Dense square integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    d: usize,
    a: Vec<i32>,
}

impl IntMatrix {
    pub fn zeros(d: usize) -> IntMatrix {
        IntMatrix { d, a: vec![0; d * d] }
    }

    pub fn identity(d: usize) -> IntMatrix {
        let mut m = Self::zeros(d);
        for i in 0..d {
            m.a[i * d + i] = 1;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.a[i * self.d + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i32) {
        self.a[i * self.d + j] = v;
    }

    pub fn entries(&self) -> &[i32] {
        &self.a
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.d).all(|i| (0..self.d).all(|j| i == j || self.get(i, j) == 0))
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        let d = self.d;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let x = self.a[i * d + k];
                if x == 0 {
                    continue;
                }
                for j in 0..d {
                    out.a[i * d + j] += x * o.a[k * d + j];
                }
            }
        }
        out
    }

    pub fn add(&self, o: &IntMatrix) -> IntMatrix {
        IntMatrix { d: self.d, a: self.a.iter().zip(&o.a).map(|(x, y)| x + y).collect() }
    }

    pub fn scale(&self, k: i32) -> IntMatrix {
        IntMatrix { d: self.d, a: self.a.iter().map(|x| x * k).collect() }
    }

    /// Exact division by two, `None` if some entry is odd.
    pub fn halve(&self) -> Option<IntMatrix> {
        self.a
            .iter()
            .map(|&x| if x % 2 == 0 { Some(x / 2) } else { None })
            .collect::<Option<Vec<i32>>>()
            .map(|a| IntMatrix { d: self.d, a })
    }

    /// Non-zero `(row, value)` entries of column `j`.
    pub fn column(&self, j: usize) -> Vec<(usize, i32)> {
        (0..self.d).filter_map(|i| Some((i, self.get(i, j))).filter(|p| p.1 != 0)).collect()
    }

    pub(crate) fn apply_sparse(&self, v: &[(usize, i32)]) -> Vec<(usize, i32)> {
        let mut out = Vec::new();
        for &(k, x) in v {
            for (i, y) in self.column(k) {
                out.push((i, x * y));
            }
        }
        out
    }

    /// For a signed permutation matrix, the image index and sign of basis vector `j`.
    pub(crate) fn signed_image(&self, j: usize) -> (usize, i32) {
        let c = self.column(j);
        debug_assert_eq!(c.len(), 1);
        c[0]
    }
}

/// A vector over a [`FiniteRing`] in the Chevalley basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    pub coords: Vec<Elem>,
}

impl AlgebraElement {
    pub fn zero(dim: usize) -> AlgebraElement {
        AlgebraElement { coords: vec![Elem::ZERO; dim] }
    }

    /// `r · b_k`.
    pub fn basis(dim: usize, k: usize, coef: Elem) -> AlgebraElement {
        let mut v = Self::zero(dim);
        v.coords[k] = coef;
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == Elem::ZERO)
    }

    pub fn add(&self, r: &FiniteRing, o: &AlgebraElement) -> AlgebraElement {
        AlgebraElement { coords: self.coords.iter().zip(&o.coords).map(|(&a, &b)| r.add(a, b)).collect() }
    }

    pub fn sub(&self, r: &FiniteRing, o: &AlgebraElement) -> AlgebraElement {
        AlgebraElement { coords: self.coords.iter().zip(&o.coords).map(|(&a, &b)| r.sub(a, b)).collect() }
    }

    pub fn scale(&self, r: &FiniteRing, k: Elem) -> AlgebraElement {
        AlgebraElement { coords: self.coords.iter().map(|&a| r.mul(k, a)).collect() }
    }

    /// θ applied coordinatewise.
    pub fn theta(&self, r: &FiniteRing) -> AlgebraElement {
        AlgebraElement { coords: self.coords.iter().map(|&a| r.theta(a)).collect() }
    }

    /// `M v` for an integer matrix reduced into `r`.
    pub fn apply(&self, r: &FiniteRing, m: &IntMatrix) -> AlgebraElement {
        let d = m.dim();
        let mut out = Self::zero(d);
        for j in 0..d {
            let x = self.coords[j];
            if x == Elem::ZERO {
                continue;
            }
            for (i, v) in m.column(j) {
                out.coords[i] = r.add(out.coords[i], r.scale(v as i64, x));
            }
        }
        out
    }
}

impl ChevalleyData {
    /// Lie bracket over `r`, the bilinear extension of [`ChevalleyData::bracket_basis`].
    pub fn bracket(&self, r: &FiniteRing, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let d = self.dim();
        let mut out = AlgebraElement::zero(d);
        for (i, &a) in x.coords.iter().enumerate() {
            if a == Elem::ZERO {
                continue;
            }
            for (j, &b) in y.coords.iter().enumerate() {
                if b == Elem::ZERO {
                    continue;
                }
                let ab = r.mul(a, b);
                for (k, v) in self.bracket_basis(i, j) {
                    out.coords[k] = r.add(out.coords[k], r.scale(v as i64, ab));
                }
            }
        }
        out
    }
}
