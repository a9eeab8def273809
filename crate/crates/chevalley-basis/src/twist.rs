use ring_core::{Elem, FiniteRing};
use root_systems::RootId;

use crate::{AlgebraElement, ChevalleyData, ChevalleyError};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TwistedBasisKind {
    XPlus,
    XMinusI,
    XMinusII,
    HPlus,
    HMinus,
}

/// One vector of the R_θ-basis of the σ-fixed subalgebra.
#[derive(Clone, Debug)]
pub struct TwistedBasisVector {
    pub kind: TwistedBasisKind,
    /// Class representative root, or the simple-root index for `H` vectors.
    pub anchor: usize,
    pub vector: AlgebraElement,
}

impl ChevalleyData {
    /// `σ(x) = P(θ(x))`.
    pub fn sigma(&self, r: &FiniteRing, x: &AlgebraElement) -> Result<AlgebraElement, ChevalleyError> {
        let p = self.rho_algebra_matrix()?;
        Ok(x.theta(r).apply(r, &p))
    }

    /// The vectors `X⁺_[α], X⁻_[α](I), X⁻_[α](II), H⁺_[α_i], H⁻_[α_i]` built from the first
    /// antisymmetric unit `a` of `r`.
    pub fn twisted_algebra_basis(&self, r: &FiniteRing) -> Result<Vec<TwistedBasisVector>, ChevalleyError> {
        let rho = self.rho().ok_or(ChevalleyError::NotNormalized)?;
        if rho.order() != 2 || r.theta_order() != 2 {
            return Err(ChevalleyError::ThetaOrder(r.theta_order(), 2));
        }
        if !r.is_unit(r.from_int(2)) {
            return Err(ChevalleyError::NeedsHalf);
        }
        let a = r.antisymmetric_unit().ok_or(ChevalleyError::NoAntisymmetricUnit)?;
        let sys = self.system();
        let d = self.dim();
        let one = r.one();
        let x = |root: RootId, c: Elem| AlgebraElement::basis(d, self.x_index(root), c);
        let h = |i: usize, c: Elem| AlgebraElement::basis(d, self.h_index(i), c);
        let mut out = Vec::new();
        let mut seen = vec![false; sys.num_roots()];
        for al in 0..sys.num_roots() {
            if seen[al] {
                continue;
            }
            let bar = rho.apply(al);
            seen[al] = true;
            seen[bar] = true;
            if bar == al {
                if Self::target_eps(sys, rho, al) == -1 {
                    // Middle of an A₂ class; emitted with its class below.
                    continue;
                }
                out.push(TwistedBasisVector { kind: TwistedBasisKind::XPlus, anchor: al, vector: x(al, one) });
                continue;
            }
            out.push(TwistedBasisVector {
                kind: TwistedBasisKind::XPlus,
                anchor: al,
                vector: x(al, one).add(r, &x(bar, one)),
            });
            out.push(TwistedBasisVector {
                kind: TwistedBasisKind::XMinusI,
                anchor: al,
                vector: x(al, a).sub(r, &x(bar, a)),
            });
            if let Some(mid) = sys.sum(al, bar) {
                out.push(TwistedBasisVector { kind: TwistedBasisKind::XMinusII, anchor: al, vector: x(mid, a) });
            }
        }
        let mut seen = vec![false; sys.rank()];
        for i in 0..sys.rank() {
            if seen[i] {
                continue;
            }
            let j = rho.simple_image(i);
            seen[i] = true;
            seen[j] = true;
            if i == j {
                out.push(TwistedBasisVector { kind: TwistedBasisKind::HPlus, anchor: i, vector: h(i, one) });
            } else {
                out.push(TwistedBasisVector { kind: TwistedBasisKind::HPlus, anchor: i, vector: h(i, one).add(r, &h(j, one)) });
                out.push(TwistedBasisVector { kind: TwistedBasisKind::HMinus, anchor: i, vector: h(i, a).sub(r, &h(j, a)) });
            }
        }
        Ok(out)
    }

    /// Coordinates of `v` in the basis returned by [`ChevalleyData::twisted_algebra_basis`].
    pub fn twisted_coords(
        &self,
        r: &FiniteRing,
        basis: &[TwistedBasisVector],
        v: &AlgebraElement,
    ) -> Result<Vec<Elem>, ChevalleyError> {
        let rho = self.rho().ok_or(ChevalleyError::NotNormalized)?;
        let half = r.inv(r.from_int(2)).map_err(|_| ChevalleyError::NeedsHalf)?;
        let a = r.antisymmetric_unit().ok_or(ChevalleyError::NoAntisymmetricUnit)?;
        let ainv = r.inv(a).map_err(|_| ChevalleyError::NoAntisymmetricUnit)?;
        let sys = self.system();
        let coord = |k: usize| v.coords[k];
        let sym = |p: Elem, q: Elem| r.mul(half, r.add(p, q));
        let anti = |p: Elem, q: Elem| r.mul(r.mul(half, ainv), r.sub(p, q));
        let out = basis
            .iter()
            .map(|b| match b.kind {
                TwistedBasisKind::XPlus | TwistedBasisKind::XMinusI => {
                    let (p, q) = (coord(self.x_index(b.anchor)), coord(self.x_index(rho.apply(b.anchor))));
                    if rho.apply(b.anchor) == b.anchor {
                        p
                    } else if b.kind == TwistedBasisKind::XPlus {
                        sym(p, q)
                    } else {
                        anti(p, q)
                    }
                }
                TwistedBasisKind::XMinusII => {
                    let mid = sys.sum(b.anchor, rho.apply(b.anchor)).expect("A2 class");
                    r.mul(ainv, coord(self.x_index(mid)))
                }
                TwistedBasisKind::HPlus | TwistedBasisKind::HMinus => {
                    let j = rho.simple_image(b.anchor);
                    let (p, q) = (coord(b.anchor), coord(j));
                    if j == b.anchor {
                        p
                    } else if b.kind == TwistedBasisKind::HPlus {
                        sym(p, q)
                    } else {
                        anti(p, q)
                    }
                }
            })
            .collect();
        Ok(out)
    }
}
