//! Finitely presented and permutation groups: enough machinery to certify
//! group orders and abelian invariants of the classifier's output.

mod coset;
mod perm;
mod presentation;
mod smith;

pub use coset::{coset_enumerate, coset_table, CosetTable};
pub use perm::{cayley_presentation, perm_order, PermutationSet};
pub use presentation::{commutator, invert, power, reduce, Presentation, Word};
pub use smith::{abelianization, relation_matrix, smith_normal_form, Abelianization};

use serde::Serialize;

use crate::Result;

pub const DEFAULT_MAX_COSETS: usize = 1_000_000;
pub const DEFAULT_MAX_SIZE: usize = 10_000_000;

/// Generators of a permutation group of degree 12 and order 96.
pub const GROUP96_GENERATORS: &str =
    "(1,4)(2,7)(3,10)(5,8)(6,11)(9,12); (1,10,9,5)(2,4,11,3,7,12,6,8); (1,2,3)(4,5,6)(7,8,9)(10,11,12)";

/// Cheap isomorphism-class evidence: order, abelianization, commutativity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: u64,
    pub abelian_invariants: Vec<u64>,
    pub is_abelian: bool,
}

impl Fingerprint {
    fn new(order: u64, ab: Abelianization) -> Self {
        // G is abelian iff it equals its abelianization
        let is_abelian = ab.order() == Some(order);
        Fingerprint { order, abelian_invariants: ab.invariants, is_abelian }
    }
}

impl std::fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let ab = Abelianization { invariants: self.abelian_invariants.clone(), free_rank: 0 };
        write!(
            f,
            "order {}, abelianization {}, {}",
            self.order,
            ab,
            if self.is_abelian { "abelian" } else { "non-abelian" }
        )
    }
}

pub fn fingerprint_presentation(pres: &Presentation, max_cosets: usize) -> Result<Fingerprint> {
    let order = coset_enumerate(pres, max_cosets)?;
    Ok(Fingerprint::new(order, abelianization(pres)))
}

pub fn fingerprint_permutations(perms: &PermutationSet, max_size: usize) -> Result<Fingerprint> {
    let pres = cayley_presentation(perms, max_size)?;
    let order = perm_order(perms, max_size)?;
    Ok(Fingerprint::new(order, abelianization(&pres)))
}
