//! Genus-0 Fuchsian signatures: the extension table, composite extensions,
//! and extension criteria for cyclic surface-kernel epimorphisms.

mod chains;
mod skep;
mod table;

pub use chains::{extension_chains, ExtensionChain};
pub use skep::{cb_extendable, CbCase, CbVerdict, SkepSpec};
pub use table::{gs_extensions, gs_row, is_finitely_maximal, GsExtension, GsRow, Guard, Param, Period, GS_TABLE};

use crate::curve::Signature;
use crate::numtheory::lcm_many;

/// A surface-kernel epimorphism onto Z_n exists iff n is the lcm of the
/// periods and of every set obtained by deleting one period.
pub fn harvey_admissible(sig: &Signature, n: u64) -> bool {
    let p = sig.periods();
    if n < 2 || p.is_empty() {
        return false;
    }
    if lcm_many(p).ok() != Some(n) {
        return false;
    }
    (0..p.len()).all(|skip| {
        let rest: Vec<u64> = p.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
        lcm_many(&rest).ok() == Some(n)
    })
}
