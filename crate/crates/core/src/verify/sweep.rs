//! Exhaustive enumeration of belyi triples and the cross-check driver.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classifier::{classify_belyi, ClassificationReport};
use crate::curve::{canonical_triple, monodromy_genus, triple_orbit, CyclicCover};
use crate::fuchsian::{cb_extendable, harvey_admissible, SkepSpec};
use crate::numtheory::gcd_many;
use crate::{Error, Result};

pub const DEFAULT_N_MAX: u64 = 60;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub canonical_triple: [u64; 3],
    pub orbit_size: usize,
    pub report: ClassificationReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationTable {
    pub n: u64,
    /// Ordered triples surviving the gcd filter.
    pub ordered_triples: usize,
    pub classes: Vec<ClassEntry>,
}

/// Ordered `(a, b, c)` in `[1, n-1]^3` with `a + b + c ≡ 0 (mod n)`, before
/// the gcd filter.
fn ordered_triples(n: u64) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    for a in 1..n {
        for b in 1..n {
            if (a + b) % n != 0 {
                out.push([a, b, n - (a + b) % n]);
            }
        }
    }
    out
}

pub fn enumerate_classes(n: u64) -> Result<EnumerationTable> {
    enumerate_classes_capped(n, DEFAULT_N_MAX)
}

pub fn enumerate_classes_capped(n: u64, cap: u64) -> Result<EnumerationTable> {
    if n < 4 || n > cap {
        return Err(Error::domain(format!("n = {n} outside [4, {cap}]")));
    }
    let all = ordered_triples(n);
    if all.len() as u64 != (n - 1) * (n - 2) {
        return Err(Error::Invariant(format!("{} ordered triples for n = {n}", all.len())));
    }
    let mut admissible = Vec::new();
    for t in all {
        if gcd_many(&[n, t[0], t[1], t[2]])? == 1 {
            admissible.push(t);
        }
    }
    let ordered = admissible.len();

    let mut members: BTreeMap<[u64; 3], Vec<[u64; 3]>> = BTreeMap::new();
    for t in admissible {
        members.entry(canonical_triple(n, t[0], t[1], t[2])?).or_default().push(t);
    }

    let mut classes = Vec::with_capacity(members.len());
    for (canon, orbit) in members {
        let report = classify_belyi(n, canon[0], canon[1], canon[2])?;
        for t in &orbit {
            let other = classify_belyi(n, t[0], t[1], t[2])?;
            let key = |r: &ClassificationReport| (r.genus, r.row.clone(), r.group.order, r.group.structure.clone());
            if key(&other) != key(&report) {
                return Err(Error::Invariant(format!(
                    "n = {n}: {t:?} classifies as {} |G|={} but its class {canon:?} as {} |G|={}",
                    other.row, other.group.order, report.row, report.group.order
                )));
            }
        }
        classes.push(ClassEntry { canonical_triple: canon, orbit_size: orbit.len(), report });
    }
    Ok(EnumerationTable { n, ordered_triples: ordered, classes })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub n_range: [u64; 2],
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheckReport {
    pub checks: Vec<CheckResult>,
}

impl CrossCheckReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub const CHECKS: [&str; 7] = [
    "genus_vs_monodromy",
    "equivalence_invariance",
    "order_law",
    "hurwitz_bound",
    "harvey_condition",
    "default_not_extendable",
    "chain_validity",
];

// First witness per check, indexed like CHECKS.
type Witnesses = [Option<String>; 7];

type GenusFn = dyn Fn(&CyclicCover) -> Result<u64> + Sync;

fn check_table(table: &EnumerationTable, genus_of: &GenusFn) -> Witnesses {
    let mut w: Witnesses = Default::default();
    let mut note = |i: usize, msg: String| {
        if w[i].is_none() {
            w[i] = Some(msg);
        }
    };
    let n = table.n;

    // The orbits must tile the admissible ordered triples.
    let total: usize = table.classes.iter().map(|c| c.orbit_size).sum();
    if total != table.ordered_triples {
        note(1, format!("n={n}: orbits cover {total} of {} ordered triples", table.ordered_triples));
    }

    for entry in &table.classes {
        let [a, b, c] = entry.canonical_triple;
        let tag = format!("n={n} ({a},{b},{c})");
        let r = &entry.report;
        let cover = match CyclicCover::belyi(n, a, b, c) {
            Ok(cover) => cover,
            Err(e) => {
                note(1, format!("{tag}: {e}"));
                continue;
            }
        };

        match (genus_of(&cover), monodromy_genus(&cover)) {
            (Ok(g), Ok(m)) if g == m && r.genus == m => {}
            (g, m) => note(0, format!("{tag}: formula {g:?}, report {}, monodromy {m:?}", r.genus)),
        }

        match triple_orbit(n, a, b, c) {
            Ok(orbit) if orbit.len() == entry.orbit_size && orbit.first() == Some(&entry.canonical_triple) => {}
            Ok(orbit) => note(1, format!("{tag}: orbit of size {} recorded as {}", orbit.len(), entry.orbit_size)),
            Err(e) => note(1, format!("{tag}: {e}")),
        }
        if r.canonical_triple != Some(entry.canonical_triple) {
            note(1, format!("{tag}: report carries {:?}", r.canonical_triple));
        }

        if !r.order_law_holds() {
            note(2, format!("{tag}: |G|={} but base {} x index {}", r.order(), r.base_order, r.chain_index()));
        }

        if r.genus >= 2 {
            let bound = 84 * (r.genus - 1);
            let klein = n == 7 && entry.canonical_triple == [1, 2, 4];
            if r.order() > bound || (r.order() == bound) != klein {
                note(3, format!("{tag}: |G|={} against 84(g-1)={bound}", r.order()));
            }
            if !r.chain_is_table_valid() {
                note(6, format!("{tag}: chain {:?}", r.chain.iter().map(|s| s.signature.to_string()).collect::<Vec<_>>()));
            }
        }

        match cover.signature() {
            Ok(sig) if harvey_admissible(&sig, n) => {}
            Ok(sig) => note(4, format!("{tag}: {sig} admits no skep onto Z{n}")),
            Err(e) => note(4, format!("{tag}: {e}")),
        }

        if r.row == "DEFAULT" {
            match SkepSpec::from_images(n, &entry.canonical_triple) {
                Ok(s) => {
                    let v = cb_extendable(&s);
                    if v.is_extendable() {
                        note(5, format!("{tag}: DEFAULT but extendable ({v})"));
                    }
                }
                Err(e) => note(5, format!("{tag}: {e}")),
            }
        }
    }
    w
}

fn merge(into: &mut Witnesses, from: Witnesses) {
    for (a, b) in into.iter_mut().zip(from) {
        if a.is_none() {
            *a = b;
        }
    }
}

fn finish(per_n: Vec<Witnesses>, range: [u64; 2]) -> CrossCheckReport {
    // per_n is in increasing n, so the first witness is the smallest one
    let mut all: Witnesses = Default::default();
    for w in per_n {
        merge(&mut all, w);
    }
    CrossCheckReport {
        checks: CHECKS
            .iter()
            .zip(all)
            .map(|(name, witness)| CheckResult { name: name.to_string(), n_range: range, pass: witness.is_none(), witness })
            .collect(),
    }
}

/// Runs every check for `n` in `[max(4, n_min), n_max]`.
pub fn cross_check(n_min: u64, n_max: u64) -> Result<CrossCheckReport> {
    cross_check_with(n_min, n_max, &|c: &CyclicCover| c.genus())
}

fn cross_check_with(n_min: u64, n_max: u64, genus_of: &GenusFn) -> Result<CrossCheckReport> {
    if n_max < 4 {
        return Err(Error::domain(format!("n_max = {n_max} is below 4")));
    }
    let lo = n_min.max(4);
    if lo > n_max {
        return Err(Error::domain(format!("empty range [{lo}, {n_max}]")));
    }
    let per_n: Vec<Witnesses> = (lo..=n_max)
        .into_par_iter()
        .map(|n| match enumerate_classes_capped(n, n_max) {
            Ok(t) => check_table(&t, genus_of),
            Err(e) => {
                let mut w: Witnesses = Default::default();
                w[1] = Some(format!("n={n}: {e}"));
                w
            }
        })
        .collect();
    Ok(finish(per_n, [lo, n_max]))
}

/// Runs the same checks on tables produced elsewhere (e.g. read back from
/// `enumerate --json`).
pub fn cross_check_tables(tables: &[EnumerationTable]) -> Result<CrossCheckReport> {
    if tables.is_empty() {
        return Err(Error::domain("no enumeration tables"));
    }
    let mut sorted: Vec<&EnumerationTable> = tables.iter().collect();
    sorted.sort_by_key(|t| t.n);
    let range = [sorted[0].n, sorted[sorted.len() - 1].n];
    let per_n: Vec<Witnesses> = sorted.par_iter().map(|t| check_table(t, &|c: &CyclicCover| c.genus())).collect();
    Ok(finish(per_n, range))
}
