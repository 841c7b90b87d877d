//! Named instances available through `--builtin`.

use thiserror::Error;
use wdl_core::{instances, BoundedLattice, Dicomplementation};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown builtin `{0}` (known: L6, L7, B2, B4, B8, L6-trivial, chain-<n>-trivial)")]
pub struct UnknownBuiltin(pub String);

pub const FIXED: [&str; 6] = ["L6", "L7", "B2", "B4", "B8", "L6-trivial"];

/// `chain-<n>-trivial` accepts `1 <= n <= 64`.
pub fn builtin(name: &str) -> Result<Dicomplementation, UnknownBuiltin> {
    let unknown = || UnknownBuiltin(name.to_string());
    Ok(match name {
        "L6" => instances::l6(),
        "L7" => instances::l7(),
        "B2" => instances::boolean(1),
        "B4" => instances::boolean(2),
        "B8" => instances::boolean(3),
        "L6-trivial" => Dicomplementation::trivial(instances::l6_lattice()),
        _ => {
            let n: usize = name
                .strip_prefix("chain-")
                .and_then(|r| r.strip_suffix("-trivial"))
                .and_then(|n| n.parse().ok())
                .ok_or_else(unknown)?;
            if n > wdl_core::MAX_ELEMENTS {
                return Err(unknown());
            }
            Dicomplementation::trivial(BoundedLattice::chain(n).map_err(|_| unknown())?)
        }
    })
}
