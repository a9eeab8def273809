use adjoint_group::{Character, Mat};
use ring_core::Elem;
use serde::Serialize;
use twisted_roots::ClassKind;

use crate::sigma::{Param, SigmaContext};
use crate::TwistedGroupError;

#[derive(Clone, Debug, Serialize)]
pub struct ConjReport {
    pub case: String,
    pub passed: bool,
}

impl SigmaContext {
    /// The predicted `w_[α](t) x_[β](u) w_[α](t)⁻¹ = x_{s_[α][β]}(d([α],β′) t^{…} · u′)`.
    pub fn conj_by_w_rhs(&self, a: usize, t: Elem, b: usize, u: Param) -> Result<Mat, TwistedGroupError> {
        let r = self.ring();
        let tw = self.twisted();
        let sys = tw.system();
        let ca = tw.class(a);
        let target = tw.class_reflection(a)[b];
        let gamma = tw.class(target).rep;
        let s_roots = tw.class_reflection_roots(a);
        // β′ is the orbit element of [β] whose image is the representative of the target class.
        let beta = tw.class(b).rep;
        let k = (0..tw.rho().order() as u32)
            .find(|&k| s_roots[tw.rho().apply_pow(beta, k)] == gamma)
            .ok_or_else(|| TwistedGroupError::Domain(b, "no orbit element maps to the representative".into()))?;
        let bp = tw.rho().apply_pow(beta, k);
        let up = u.theta_pow(r, k);
        let d = tw.d_sign_lead(self.c_table(), ca.rep, bp);
        let span = match ca.kind {
            ClassKind::A1 => 1,
            ClassKind::A1x2 | ClassKind::A2 => 2,
            ClassKind::A1x3 => 3,
        };
        let mut s = r.from_int(d as i64);
        for i in 0..span {
            let ai = tw.rho().apply_pow(ca.rep, i);
            s = r.mul(s, r.zpow(r.theta_pow(t, i), -sys.pairing(bp, ai) as i64)?);
        }
        Ok(self.x_led(gamma, up.act(r, s))?)
    }

    /// Checks the `w`-conjugation formula for one instance.
    pub fn conj_by_w(&self, a: usize, t: Elem, b: usize, u: Param) -> Result<ConjReport, TwistedGroupError> {
        let w = self.w_unit(a, t)?;
        let lhs = self.conjugate(&w, &self.x_class(b, u)?)?;
        let rhs = self.conj_by_w_rhs(a, t, b, u)?;
        let r = self.ring();
        Ok(ConjReport {
            case: format!("w[{a}]({}) x[{b}]({})", r.show(t), u.show(r)),
            passed: lhs == rhs,
        })
    }

    /// Checks `h(χ) x_[α](u) h(χ)⁻¹ = x_[α](χ(α)·u)`.
    pub fn conj_by_torus(&self, chi: &Character, a: usize, u: Param) -> Result<ConjReport, TwistedGroupError> {
        let h = self.h_chi(chi)?;
        let lhs = self.conjugate(&h, &self.x_class(a, u)?)?;
        let rep = self.twisted().class(a).rep;
        let s = self.group().chi_root(chi, rep)?;
        let rhs = self.x_class(a, u.act(self.ring(), s))?;
        Ok(ConjReport {
            case: format!("h(χ) x[{a}]({})", u.show(self.ring())),
            passed: lhs == rhs,
        })
    }
}
