//! Cyclic covers `y^n = c · Π (x - e_i)^{k_i}` of the projective line.
//!
//! Exponents are kept reduced into `[1, n-1]`; a factor whose exponent is
//! divisible by `n` is an `n`-th power and is dropped. The exponent over
//! infinity is derived from the finite ones: `(n - Σ k_i mod n) mod n`.

mod monodromy;
mod parse;
mod point;

use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::numtheory::{gcd, gcd_many, units};
use crate::{Error, Result};

pub use monodromy::{monodromy_genus, sheet_permutation};
pub use parse::parse_curve;
pub use point::BranchPoint;

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    pub point: BranchPoint,
    pub exponent: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicCover {
    n: u64,
    branches: Vec<Branch>,
    infinity_exponent: u64,
    #[serde(default = "one", skip_serializing_if = "is_one", with = "rational_string")]
    constant: Rational,
}

mod rational_string {
    use super::Rational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        text.trim().parse().map_err(D::Error::custom)
    }
}

fn one() -> Rational {
    Rational::from_integer(1)
}

fn is_one(r: &Rational) -> bool {
    *r == one()
}

/// Genus-0 Fuchsian signature: the elliptic periods, ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub genus: u64,
    pub periods: Vec<u64>,
}

impl Signature {
    /// Builds a genus-0 signature, sorting the periods. Periods below 2 are rejected.
    pub fn new(periods: impl Into<Vec<u64>>) -> Result<Self> {
        let mut periods = periods.into();
        if periods.iter().any(|&m| m < 2) {
            return Err(Error::domain(format!("signature periods must be >= 2: {periods:?}")));
        }
        periods.sort_unstable();
        Ok(Signature { genus: 0, periods })
    }

    pub fn periods(&self) -> &[u64] {
        &self.periods
    }

    /// `2π`-normalised hyperbolic area `r - 2 - Σ 1/m_i` (genus 0).
    pub fn area(&self) -> f64 {
        self.periods.len() as f64 - 2.0 - self.periods.iter().map(|&m| 1.0 / m as f64).sum::<f64>()
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let body: Vec<String> = self.periods.iter().map(u64::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

impl CyclicCover {
    /// Builds a cover from raw exponents, reducing them modulo `n`.
    pub fn new(n: u64, factors: Vec<(BranchPoint, i64)>) -> Result<Self> {
        Self::with_constant(n, one(), factors)
    }

    pub fn with_constant(n: u64, constant: Rational, factors: Vec<(BranchPoint, i64)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!("cover degree must be >= 2, got {n}")));
        }
        if constant == Rational::from_integer(0) {
            return Err(Error::domain("leading constant must be nonzero"));
        }
        let mut branches: Vec<Branch> = Vec::with_capacity(factors.len());
        let mut seen = BTreeSet::new();
        for (point, k) in factors {
            if point == BranchPoint::Infinity {
                return Err(Error::domain("infinity is implicit and cannot be listed as a factor"));
            }
            if !seen.insert(point.clone()) {
                return Err(Error::domain("non-distinct roots"));
            }
            let exponent = k.rem_euclid(n as i64) as u64;
            if exponent != 0 {
                branches.push(Branch { point, exponent });
            }
        }
        if branches.is_empty() {
            return Err(Error::domain("cover has no finite branch points"));
        }
        let total: u64 = branches.iter().map(|b| b.exponent).sum();
        let infinity_exponent = (n - total % n) % n;
        Ok(CyclicCover {
            n,
            branches,
            infinity_exponent,
            constant,
        })
    }

    /// `y^n = x^a (x-1)^b (x+1)^c`.
    pub fn belyi(n: u64, a: u64, b: u64, c: u64) -> Result<Self> {
        Self::new(
            n,
            vec![
                (BranchPoint::integer(0), a as i64),
                (BranchPoint::integer(1), b as i64),
                (BranchPoint::integer(-1), c as i64),
            ],
        )
    }

    /// `y^p = x^a (x+1)`.
    pub fn lefschetz(p: u64, a: u64) -> Result<Self> {
        Self::new(
            p,
            vec![(BranchPoint::integer(0), a as i64), (BranchPoint::integer(-1), 1)],
        )
    }

    /// `y^n + x^d = 1`, i.e. `y^n = -Π_{ζ^d = 1} (x - ζ)`.
    pub fn fermat(n: u64, d: u64) -> Result<Self> {
        if d < 1 {
            return Err(Error::domain("Fermat degree d must be positive"));
        }
        let factors = (0..d).map(|i| (BranchPoint::root_of_unity(d, i), 1)).collect();
        Self::with_constant(n, Rational::from_integer(-1), factors)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    pub fn infinity_exponent(&self) -> u64 {
        self.infinity_exponent
    }

    pub fn constant(&self) -> Rational {
        self.constant
    }

    pub fn finite_exponents(&self) -> Vec<u64> {
        self.branches.iter().map(|b| b.exponent).collect()
    }

    /// Every branch point with its exponent, infinity last when branched there.
    pub fn all_branches(&self) -> Vec<Branch> {
        let mut all = self.branches.clone();
        if self.infinity_exponent != 0 {
            all.push(Branch {
                point: BranchPoint::Infinity,
                exponent: self.infinity_exponent,
            });
        }
        all
    }

    pub fn branch_count(&self) -> usize {
        self.branches.len() + usize::from(self.infinity_exponent != 0)
    }

    /// `gcd(n, k_1, ..., k_m) == 1` over the finite exponents.
    pub fn is_irreducible(&self) -> bool {
        let mut vals = vec![self.n];
        vals.extend(self.finite_exponents());
        gcd_many(&vals).map(|g| g == 1).unwrap_or(false)
    }

    fn require_irreducible(&self) -> Result<()> {
        if self.is_irreducible() {
            Ok(())
        } else {
            Err(Error::domain(format!("cover is reducible (n = {}, exponents {:?})", self.n, self.finite_exponents())))
        }
    }

    /// Riemann–Hurwitz genus, treating a branched infinity as one more branch point.
    pub fn genus(&self) -> Result<u64> {
        self.require_irreducible()?;
        let n = self.n as i64;
        let all = self.all_branches();
        let m = all.len() as i64;
        let fixed: i64 = all.iter().map(|b| gcd(self.n, b.exponent) as i64).sum();
        let twice = 2 + (m - 2) * n - fixed;
        if twice < 0 || twice % 2 != 0 {
            return Err(Error::Invariant(format!("genus formula gave 2g = {twice} for {self:?}")));
        }
        Ok((twice / 2) as u64)
    }

    /// Periods `n / gcd(n, k)` of the uniformizing genus-0 group, ascending.
    pub fn signature(&self) -> Result<Signature> {
        self.require_irreducible()?;
        let periods: Vec<u64> = self
            .all_branches()
            .iter()
            .map(|b| self.n / gcd(self.n, b.exponent))
            .filter(|&m| m > 1)
            .collect();
        Signature::new(periods)
    }

    /// Replaces every exponent `k` by `l·k mod n`; `l` must be a unit mod `n`.
    pub fn scale_exponents(&self, l: u64) -> Result<Self> {
        if gcd(l, self.n) != 1 {
            return Err(Error::domain(format!("scale factor {l} is not a unit modulo {}", self.n)));
        }
        let factors = self
            .branches
            .iter()
            .map(|b| (b.point.clone(), ((l % self.n) * b.exponent % self.n) as i64))
            .collect();
        Self::with_constant(self.n, self.constant, factors)
    }

    /// Exponents at `(0, 1, -1)` when the cover is exactly a belyi cover in standard position.
    pub fn belyi_triple(&self) -> Option<[u64; 3]> {
        if self.infinity_exponent != 0 || self.branches.len() != 3 {
            return None;
        }
        let find = |v: i64| {
            self.branches
                .iter()
                .find(|b| b.point == BranchPoint::integer(v))
                .map(|b| b.exponent)
        };
        Some([find(0)?, find(1)?, find(-1)?])
    }
}

impl std::fmt::Display for CyclicCover {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "y^{} = ", self.n)?;
        if self.constant != one() {
            if self.constant == -one() {
                write!(f, "-")?;
            } else {
                write!(f, "{}*", self.constant)?;
            }
        }
        for b in &self.branches {
            let base = match &b.point {
                BranchPoint::Rational(r) if *r.numer() == 0 => "x".to_string(),
                BranchPoint::Rational(r) if *r.numer() < 0 => format!("(x + {})", -r),
                p => format!("(x - {p})"),
            };
            if b.exponent == 1 {
                write!(f, "{base}")?;
            } else {
                write!(f, "{base}^{}", b.exponent)?;
            }
        }
        Ok(())
    }
}

fn check_triple(n: u64, t: [u64; 3]) -> Result<()> {
    if n < 2 {
        return Err(Error::domain(format!("degree must be >= 2, got {n}")));
    }
    if t.iter().any(|&k| k == 0 || k >= n) {
        return Err(Error::domain(format!("exponents {t:?} must lie in [1, {}]", n - 1)));
    }
    if t.iter().sum::<u64>() % n != 0 {
        return Err(Error::domain(format!("exponents {t:?} do not sum to 0 mod {n}")));
    }
    if gcd_many(&[n, t[0], t[1], t[2]])? != 1 {
        return Err(Error::domain(format!("gcd(n, a, b, c) != 1 for n = {n}, {t:?}")));
    }
    Ok(())
}

/// All triples equivalent to `(a, b, c)`: images under a unit multiplier
/// followed by any permutation.
pub fn triple_orbit(n: u64, a: u64, b: u64, c: u64) -> Result<BTreeSet<[u64; 3]>> {
    check_triple(n, [a, b, c])?;
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut orbit = BTreeSet::new();
    for k in units(n) {
        let s = [k * a % n, k * b % n, k * c % n];
        for p in PERMS {
            orbit.insert([s[p[0]], s[p[1]], s[p[2]]]);
        }
    }
    Ok(orbit)
}

/// Lexicographically least member of the equivalence class of `(a, b, c)`.
pub fn canonical_triple(n: u64, a: u64, b: u64, c: u64) -> Result<[u64; 3]> {
    let orbit = triple_orbit(n, a, b, c)?;
    orbit
        .into_iter()
        .next()
        .ok_or_else(|| Error::Invariant("empty triple orbit".into()))
}
