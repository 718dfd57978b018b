//! Fermat curves `y^n + x^d = 1`.

use num_integer::Integer;

use super::presentations as pres;
use super::report::{chain, ClassificationReport, GroupDescriptor};
use super::structure::GroupStructure::*;
use crate::curve::CyclicCover;
use crate::{Error, Result};

/// Full automorphism group of `y^n + x^d = 1`, `2 <= d <= n`, genus at least 2.
///
/// The chain starts at the signature of the whole `Z_d + Z_n` action, so
/// `base_order` is `d·n`.
pub fn classify_fermat(n: u64, d: u64) -> Result<ClassificationReport> {
    if d < 2 || d > n {
        return Err(Error::domain(format!("Fermat curves need 2 <= d <= n, got n = {n}, d = {d}")));
    }
    let cover = CyclicCover::fermat(n, d)?;
    let genus = cover.genus()?;
    if genus < 2 {
        return Err(Error::domain(format!("y^{n} + x^{d} = 1 has genus {genus}: below hyperbolic range")));
    }
    let expected_genus = match d {
        2 if n.is_multiple_of(2) => Some((n - 2) / 2),
        2 => Some((n - 1) / 2),
        3 if n.is_multiple_of(3) => Some(n - 2),
        3 => Some(n - 1),
        _ => None,
    };
    if let Some(g) = expected_genus.filter(|&g| g != genus) {
        return Err(Error::Invariant(format!("y^{n} + x^{d} = 1: expected genus {g}, computed {genus}")));
    }
    let central = |center: u64, q: String| CentralExtension { center, quotient: q };
    let swap = |e: u64| DirectSumSemidirect { summands: vec![e, n], by: "Z2".into() };
    let (row, order, structure, presentation, start, steps): (_, _, _, _, Vec<u64>, Vec<(&str, Vec<u64>)>) = match d {
        2 if n % 2 == 1 => ("FERMAT.D2", 2 * n, Cyclic(2 * n), Some(pres::cyclic(2 * n)), vec![2, n, 2 * n], vec![]),
        2 => ("FERMAT.D2", 4 * n, swap(2), Some(pres::fermat_swap(n, 2)), vec![2, n, n], vec![("3", vec![2, 4, n])]),
        3 if n.is_multiple_of(3) => ("FERMAT.D3", 6 * n, swap(3), Some(pres::fermat_swap(n, 3)), vec![3, n, n], vec![("3", vec![2, 6, n])]),
        3 if n == 4 => (
            "FERMAT.D3",
            48,
            central(4, "A4".into()),
            Some(pres::central_a4()),
            vec![3, 4, 12],
            vec![("13", vec![2, 3, 12])],
        ),
        3 => ("FERMAT.D3", 3 * n, Cyclic(3 * n), Some(pres::cyclic(3 * n)), vec![3, n, 3 * n], vec![]),
        _ if d == n => (
            "FERMAT.1",
            6 * n * n,
            DirectSumSemidirect { summands: vec![n, n], by: "S3".into() },
            None,
            vec![n, n, n],
            vec![("2", vec![2, 3, 2 * n])],
        ),
        _ if !n.is_multiple_of(d) => (
            "FERMAT.2",
            d * n,
            Abelian(vec![d, n]),
            Some(pres::abelian(d, n)),
            vec![d, n, d.lcm(&n)],
            vec![],
        ),
        _ => (
            "FERMAT.3",
            2 * d * n,
            central(d, format!("D{}", 2 * n)),
            Some(pres::fermat_dihedral(d, n)),
            vec![d, n, n],
            vec![("3", vec![2, n, 2 * d])],
        ),
    };
    let steps: Vec<(&str, &[u64])> = steps.iter().map(|(r, p)| (*r, p.as_slice())).collect();
    ClassificationReport {
        input: format!("y^{n} + x^{d} = 1"),
        canonical_triple: None,
        genus,
        signature: cover.signature()?,
        row: row.to_string(),
        group: GroupDescriptor { order, structure, presentation, notes: String::new() },
        chain: chain(&start, &steps),
        base_order: d * n,
    }
    .check_order_law()
}
