use adjoint_group::{closure, Mat};
use serde::Serialize;
use serde_json::json;
use twisted_group::bruhat_count;

use super::untwisted;
use crate::{Case, Context, RepChoice, Result, SuiteConfig};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Enumeration {
    pub twisted_type: String,
    pub ring: String,
    pub rep: RepChoice,
    pub order: usize,
    /// Order-independent hash of the element set, as a hex string.
    pub digest: String,
}

/// Closure of the generators under multiplication, stopping at `cfg.budget` elements.
pub fn enumerate(cfg: &SuiteConfig) -> Result<Enumeration> {
    let (set, rep) = if cfg.twisted_type.is_twisted() {
        let ctx = Context::build(cfg)?;
        (ctx.sigma()?.enumerate(cfg.budget)?, cfg.effective_rep())
    } else {
        let g = untwisted::group(cfg)?;
        let r = g.ring();
        let gens: Vec<Mat> = (0..g.system().num_roots())
            .flat_map(|a| r.elements().map(move |t| (a, t)))
            .map(|(a, t)| g.x(a, t))
            .collect();
        (closure(r, &gens, cfg.budget)?, RepChoice::Adjoint)
    };
    Ok(Enumeration {
        twisted_type: cfg.twisted_type.to_string(),
        ring: cfg.ring.short_name(),
        rep,
        order: set.len(),
        digest: format!("{:016x}", set.digest()),
    })
}

/// Partition of the enumerated group into `B w U_w` cells.
pub(crate) fn bruhat(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let ctx = Context::build(cfg)?;
    let rep = bruhat_count(ctx.sigma()?, cfg.budget)?;
    let mut cases: Vec<Case> = rep
        .cells
        .iter()
        .map(|c| {
            Case::check(
                format!("cell {:?}", c.word),
                c.size == rep.b_order * c.u_w_order,
            )
            .detail(json!({ "u_w": c.u_w_order, "size": c.size }))
        })
        .collect();
    cases.push(
        Case::check("cell-sum", rep.cell_sum == rep.group_order)
            .detail(json!({ "group": rep.group_order, "sum": rep.cell_sum, "b": rep.b_order, "u": rep.u_order, "h": rep.h_order })),
    );
    cases.push(Case::check("unique-expressions", rep.unique));
    cases.push(Case::check("disjoint", rep.disjoint));
    cases.push(Case::check("exhaustive", rep.exhaustive));
    Ok(cases)
}
