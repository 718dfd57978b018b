//! Decision procedures for the full automorphism group of cyclic covers.

mod belyi;
mod fermat;
mod lefschetz;
mod presentations;
mod report;
mod structure;

pub use belyi::classify_belyi;
pub use fermat::classify_fermat;
pub use lefschetz::{classify_lefschetz, lefschetz_canonical, lefschetz_isomorphic};
pub use report::{ChainStep, ClassificationReport, GroupDescriptor};
pub use structure::GroupStructure;

use crate::curve::{BranchPoint, CyclicCover};
use crate::grouptheory::Presentation;
use crate::numtheory::{gcd, gcd_many, is_prime};
use crate::{Error, Result};

/// Presentation of the classified group, when one is known.
pub fn presentation_for(report: &ClassificationReport) -> Option<Presentation> {
    report.group.presentation.clone()
}

/// Whether D_{2n} acts on `y^n = Π (x - a_i)^{k_i}` with four branch
/// points: the exponents pair up with equal `gcd(n, k)`.
pub fn dihedral_four_branch(n: u64, k: [u64; 4]) -> Result<bool> {
    if n < 2 || k.iter().any(|&x| x == 0 || x >= n) {
        return Err(Error::domain(format!("exponents {k:?} must lie in [1, {}]", n.saturating_sub(1))));
    }
    if k.iter().sum::<u64>() % n != 0 {
        return Err(Error::domain("exponents must sum to 0 mod n"));
    }
    if gcd_many(&[n, k[0], k[1], k[2], k[3]])? != 1 {
        return Err(Error::domain("gcd(n, k1, k2, k3, k4) must be 1"));
    }
    let g = k.map(|x| gcd(n, x));
    let pairs = [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]];
    Ok(pairs.iter().any(|p| g[p[0]] == g[p[1]] && g[p[2]] == g[p[3]]))
}

/// For `y^p = f(x)` with `r` branch points, `r > 2p` forces the cyclic
/// group to be normal with polyhedral quotient.
pub fn stability_normal(p: u64, r: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if r == 0 {
        return Err(Error::domain("branch point count must be positive"));
    }
    Ok(r > 2 * p)
}

/// `Some(d)` when the cover is `y^n = -(x^d - 1)`, i.e. `y^n + x^d = 1`.
fn fermat_degree(cover: &CyclicCover) -> Option<u64> {
    let d = cover.branches().len() as u64;
    if cover.constant() != crate::curve::Rational::from_integer(-1) || cover.branches().iter().any(|b| b.exponent != 1) {
        return None;
    }
    let expected: std::collections::BTreeSet<BranchPoint> = (0..d).map(|i| BranchPoint::root_of_unity(d, i)).collect();
    let actual: std::collections::BTreeSet<BranchPoint> = cover.branches().iter().map(|b| b.point.clone()).collect();
    (expected == actual).then_some(d)
}

/// Classifies any supported cover: three branch points (moved to
/// `0, 1, -1` by a Möbius map) or a Fermat curve.
pub fn classify_cover(cover: &CyclicCover) -> Result<ClassificationReport> {
    if let Some(d) = fermat_degree(cover) {
        if d <= cover.n() {
            return classify_fermat(cover.n(), d);
        }
    }
    let exps: Vec<u64> = cover.all_branches().iter().map(|b| b.exponent).collect();
    if let [a, b, c] = exps[..] {
        let mut report = classify_belyi(cover.n(), a, b, c)?;
        report.input = cover.to_string();
        return Ok(report);
    }
    Err(Error::domain(format!(
        "only covers with three branch points and Fermat curves are classified; this one has {}",
        exps.len()
    )))
}
