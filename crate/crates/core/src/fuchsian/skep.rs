//! Extension criteria for a cyclic action given by branch data.

use serde::Serialize;

use crate::curve::{CyclicCover, Signature};
use crate::numtheory::{gcd, units};
use crate::{Error, Result};

/// A surface-kernel epimorphism onto Z_n: the i-th elliptic generator
/// maps to T^{image_i} and has order `period_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkepSpec {
    n: u64,
    pairs: Vec<(u64, u64)>,
}

impl SkepSpec {
    /// Validates `(period, image)` pairs against Z_n.
    pub fn new(n: u64, pairs: Vec<(u64, u64)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain("target order must be >= 2"));
        }
        let mut reduced = Vec::with_capacity(pairs.len());
        let mut sum = 0u64;
        for (period, image) in pairs {
            let k = image % n;
            let order = n / gcd(n, k);
            if k == 0 || order != period {
                return Err(Error::domain(format!(
                    "image T^{image} has order {order} in Z_{n}, not the period {period}"
                )));
            }
            sum = (sum + k) % n;
            reduced.push((period, k));
        }
        if sum != 0 {
            return Err(Error::domain("images must multiply to the identity"));
        }
        Ok(SkepSpec { n, pairs: reduced })
    }

    /// Periods are derived from the images.
    pub fn from_images(n: u64, images: &[u64]) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain("target order must be >= 2"));
        }
        let pairs = images.iter().map(|&k| (n / gcd(n, k % n), k)).collect();
        Self::new(n, pairs)
    }

    /// The branch data of a cover, infinity included when it ramifies.
    pub fn from_cover(cover: &CyclicCover) -> Result<Self> {
        let images: Vec<u64> = cover.all_branches().iter().map(|b| b.exponent).collect();
        Self::from_images(cover.n(), &images)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    pub fn signature(&self) -> Result<Signature> {
        Signature::new(self.pairs.iter().map(|p| p.0).collect::<Vec<_>>())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CbCase {
    pub case: u8,
    pub outer: Signature,
    pub multiplier: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

/// All matching extension cases; empty means the action does not extend.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct CbVerdict(pub Vec<CbCase>);

impl CbVerdict {
    pub fn is_extendable(&self) -> bool {
        !self.0.is_empty()
    }

    pub fn cases(&self) -> &[CbCase] {
        &self.0
    }

    pub fn find(&self, case: u8) -> Option<&CbCase> {
        self.0.iter().find(|c| c.case == case)
    }
}

impl std::fmt::Display for CbVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "NOT_EXTENDABLE");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|c| format!("case {} -> {} (x{})", c.case, c.outer, c.multiplier))
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

fn sig(p: Vec<u64>) -> Signature {
    Signature::new(p).expect("periods >= 2")
}

fn mul(a: u64, b: u64, n: u64) -> u64 {
    (a as u128 * b as u128 % n as u128) as u64
}

fn case1(s: &SkepSpec) -> Option<CbCase> {
    let n = s.n;
    let p = &s.pairs;
    if p.len() != 4 || p.iter().any(|&(per, _)| per != n) {
        return None;
    }
    let inv = crate::numtheory::inverse_mod(p[0].1, n)?;
    let [a, b, c] = [1, 2, 3].map(|i| mul(p[i].1, inv, n));
    let one = 1 % n;
    let ok = mul(mul(a, b, n), c, n) == one
        && [a, b, c].iter().all(|&x| mul(x, x, n) == one)
        && (1 + a + b + c) % n == 0;
    ok.then(|| CbCase {
        case: 1,
        outer: sig(vec![2, 2, 2, n]),
        multiplier: 4,
        note: Some("extends, structure unspecified"),
    })
}

fn case2(s: &SkepSpec) -> Option<CbCase> {
    let mut per: Vec<u64> = s.pairs.iter().map(|p| p.0).collect();
    per.sort_unstable();
    if per.len() != 4 || per[0] != per[1] || per[2] != per[3] || per[0] + per[2] < 5 {
        return None;
    }
    Some(CbCase { case: 2, outer: sig(vec![2, 2, per[0], per[2]]), multiplier: 2, note: None })
}

fn case3(s: &SkepSpec) -> Option<CbCase> {
    let n = s.n;
    let p = &s.pairs;
    if p.len() != 3 || n < 4 || p.iter().any(|&(per, _)| per != n) {
        return None;
    }
    let z: Vec<u64> = p.iter().map(|q| q.1).collect();
    let rotates = |k: u64| {
        let kz: Vec<u64> = z.iter().map(|&x| mul(k, x, n)).collect();
        (kz[0] == z[1] && kz[1] == z[2] && kz[2] == z[0]) || (kz[0] == z[2] && kz[2] == z[1] && kz[1] == z[0])
    };
    units(n)
        .into_iter()
        .filter(|&k| k != 1 && mul(mul(k, k, n), k, n) == 1)
        .any(rotates)
        .then(|| CbCase { case: 3, outer: sig(vec![3, 3, n]), multiplier: 3, note: None })
}

fn case4(s: &SkepSpec) -> Option<CbCase> {
    let n = s.n;
    let p = &s.pairs;
    if p.len() != 3 {
        return None;
    }
    let involutions: Vec<u64> = units(n).into_iter().filter(|&t| mul(t, t, n) == 1 % n).collect();
    for i in 0..3 {
        for j in (i + 1)..3 {
            let l = 3 - i - j;
            let (pn, zi) = p[i];
            let (pj, zj) = p[j];
            let m = p[l].0;
            if pn != pj || pn < 3 || pn % m != 0 || pn + m < 7 {
                continue;
            }
            if zi == zj || involutions.iter().any(|&t| mul(t, zi, n) == zj) {
                return Some(CbCase { case: 4, outer: sig(vec![2, pn, 2 * m]), multiplier: 2, note: None });
            }
        }
    }
    None
}

fn case5(s: &SkepSpec) -> Option<CbCase> {
    let n = s.n;
    let mut per: Vec<u64> = s.pairs.iter().map(|p| p.0).collect();
    per.sort_unstable();
    if n != 12 || per != [3, 4, 12] {
        return None;
    }
    let target = {
        let mut t = vec![1u64, 3, 8];
        t.sort_unstable();
        t
    };
    units(n)
        .into_iter()
        .any(|k| {
            let mut kz: Vec<u64> = s.pairs.iter().map(|q| mul(k, q.1, n)).collect();
            kz.sort_unstable();
            kz == target
        })
        .then(|| CbCase { case: 5, outer: sig(vec![2, 3, 12]), multiplier: 4, note: None })
}

/// Every extension case that applies to `skep`, in case order.
pub fn cb_extendable(skep: &SkepSpec) -> CbVerdict {
    let checks: [fn(&SkepSpec) -> Option<CbCase>; 5] = [case1, case2, case3, case4, case5];
    CbVerdict(checks.iter().filter_map(|f| f(skep)).collect())
}
