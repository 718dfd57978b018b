//! Lefschetz curves `y^p = x^a (x+1)`, `p` prime.

use super::presentations as pres;
use super::report::{chain, ClassificationReport, GroupDescriptor};
use super::structure::GroupStructure::*;
use crate::curve::{canonical_triple, CyclicCover};
use crate::numtheory::is_prime;
use crate::{Error, Result};

fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    Ok(())
}

/// Representative exponent in `[1, (p-1)/2)`: `a > (p-1)/2` becomes
/// `p-a-1`, and `a = (p-1)/2` becomes 1.
pub fn lefschetz_canonical(p: u64, a: u64) -> Result<u64> {
    check_prime(p)?;
    if p < 5 {
        return Err(Error::domain(format!("Lefschetz curves need p >= 5, got {p}")));
    }
    if a == 0 || a > p - 2 {
        return Err(Error::domain(format!("exponent {a} outside [1, {}]", p - 2)));
    }
    let half = (p - 1) / 2;
    Ok(if a > half {
        p - a - 1
    } else if a == half {
        1
    } else {
        a
    })
}

/// Whether `y^p = x^a(x+1)` and `y^p = x^b(x+1)` are isomorphic.
pub fn lefschetz_isomorphic(p: u64, a: u64, b: u64) -> Result<bool> {
    let a = lefschetz_canonical(p, a)?;
    let b = lefschetz_canonical(p, b)?;
    let ab = a * b;
    Ok(a == b
        || (ab + b + 1) % p == 0
        || (ab + a + 1) % p == 0
        || (a + b + ab) % p == 0
        || ab % p == 1)
}

/// Full automorphism group of `y^p = x^a (x+1)`.
pub fn classify_lefschetz(p: u64, a: u64) -> Result<ClassificationReport> {
    let a0 = lefschetz_canonical(p, a)?;
    let cover = CyclicCover::lefschetz(p, a)?;
    let genus = cover.genus()?;
    let signature = cover.signature()?;
    let sq = a0 * a0 % p;
    let (row, order, structure, presentation, steps): (_, _, _, _, Vec<(&str, Vec<u64>)>) = if a0 == 1 {
        ("LEFSCHETZ.1", 2 * p, Cyclic(2 * p), Some(pres::cyclic(2 * p)), vec![("3", vec![2, p, 2 * p])])
    } else if p == 7 && a0 == 2 {
        ("LEFSCHETZ.2", 168, Named("PSL(2,7)".into()), None, vec![("1", vec![3, 3, 7]), ("6", vec![2, 3, 7])])
    } else if p % 3 == 1 && p > 7 && (1 + a0 + sq).is_multiple_of(p) {
        let twist = a0.min(sq);
        (
            "LEFSCHETZ.3",
            3 * p,
            CyclicSemidirectC3 { n: p, twist },
            Some(pres::period_three(p, twist)),
            vec![("1", vec![3, 3, p])],
        )
    } else {
        ("LEFSCHETZ.4", p, Cyclic(p), Some(pres::cyclic(p)), vec![])
    };
    let steps: Vec<(&str, &[u64])> = steps.iter().map(|(r, q)| (*r, q.as_slice())).collect();
    ClassificationReport {
        input: cover.to_string(),
        canonical_triple: Some(canonical_triple(p, 1, a0, p - 1 - a0)?),
        genus,
        chain: chain(signature.periods(), &steps),
        signature,
        row: row.to_string(),
        group: GroupDescriptor { order, structure, presentation, notes: String::new() },
        base_order: p,
    }
    .check_order_law()
}
