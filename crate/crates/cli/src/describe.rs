use chevalley_basis::ChevalleyData;
use serde_json::Value;
use twisted_roots::build_twisted;

use crate::{require_twisted, root_system, CliError, Result, TypeSpec};

/// `roots <T> <n>`, `twist <type>` or `constants <T> <n>` as a JSON document.
pub fn describe(args: &[String]) -> Result<Value> {
    let usage = || {
        CliError::Usage(
            "usage: describe roots <A|D|E> <rank> | twist <type> | constants <A|D|E> <rank>".into(),
        )
    };
    let ty = |a: &[String]| -> Result<TypeSpec> {
        match a {
            [t] => t.parse(),
            [t, n] => format!("{t}{n}").parse(),
            _ => Err(usage()),
        }
    };
    match args.split_first() {
        Some((k, rest)) if k == "roots" => Ok(root_system(ty(rest)?)?.to_json()),
        Some((k, rest)) if k == "constants" => {
            Ok(ChevalleyData::new(&root_system(ty(rest)?)?).to_json())
        }
        Some((k, rest)) if k == "twist" => {
            let t = ty(rest)?;
            require_twisted(t)?;
            let sys = root_system(t)?;
            let rho = sys.standard_twist(t.order)?;
            Ok(build_twisted(&sys, &rho)?.to_json())
        }
        _ => Err(usage()),
    }
}
