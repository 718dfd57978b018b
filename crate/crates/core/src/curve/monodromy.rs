//! Genus from the monodromy of the sheets, independent of the closed formula.
//!
//! Fix sheets `0..n`. A loop around a branch point with exponent `k`
//! multiplies every germ of `y` by `ζ^k`, i.e. sends sheet `s` to `s + k`.
//! Riemann–Hurwitz over the sheets then reads `2 - 2g = 2n - Σ (n - cycles(σ))`.

use super::CyclicCover;
use crate::{Error, Result};

/// The sheet permutation `s ↦ s + k mod n`.
pub fn sheet_permutation(n: u64, k: u64) -> Vec<usize> {
    let n = n as usize;
    let k = (k as usize) % n;
    (0..n).map(|s| (s + k) % n).collect()
}

fn cycle_count(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut s = start;
        while !seen[s] {
            seen[s] = true;
            s = perm[s];
        }
    }
    cycles
}

pub fn monodromy_genus(cover: &CyclicCover) -> Result<u64> {
    if !cover.is_irreducible() {
        return Err(Error::domain("monodromy genus needs an irreducible cover"));
    }
    let n = cover.n() as usize;
    let perms: Vec<Vec<usize>> = cover
        .all_branches()
        .iter()
        .map(|b| sheet_permutation(cover.n(), b.exponent))
        .collect();

    let mut product: Vec<usize> = (0..n).collect();
    for p in &perms {
        product = product.iter().map(|&s| p[s]).collect();
    }
    if product.iter().enumerate().any(|(i, &s)| i != s) {
        return Err(Error::Invariant("product of local monodromies is not the identity".into()));
    }

    let ramification: i64 = perms.iter().map(|p| (n - cycle_count(p)) as i64).sum();
    let euler = 2 * n as i64 - ramification;
    if euler > 2 || (2 - euler) % 2 != 0 {
        return Err(Error::Invariant(format!("impossible Euler characteristic {euler}")));
    }
    Ok(((2 - euler) / 2) as u64)
}
