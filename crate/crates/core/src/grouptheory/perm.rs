//! Permutation groups given by generators, closed by breadth-first search.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::presentation::{invert, Presentation, Word};
use crate::{Error, Result};

/// Generators acting on `{1..degree}`; stored 0-based as image lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PermutationSet {
    degree: usize,
    generators: Vec<Vec<u32>>,
}

impl PermutationSet {
    pub fn new(degree: usize, generators: Vec<Vec<u32>>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::domain("degree must be positive"));
        }
        for (i, g) in generators.iter().enumerate() {
            let mut seen = vec![false; degree];
            if g.len() != degree {
                return Err(Error::domain(format!("generator {} has {} images, expected {degree}", i + 1, g.len())));
            }
            for &x in g {
                if x as usize >= degree || std::mem::replace(&mut seen[x as usize], true) {
                    return Err(Error::domain(format!("generator {} is not a bijection", i + 1)));
                }
            }
        }
        Ok(PermutationSet { degree, generators })
    }

    /// Parses generators in cycle notation, separated by `;` or newlines:
    /// `(1,4)(2,7); (1,2,3)`. Points are 1-based. Without an explicit
    /// degree the largest point is used.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Self> {
        let mut cycles_per_gen: Vec<Vec<Vec<u32>>> = Vec::new();
        let mut offset = 0;
        let mut max_point = 0u32;
        for chunk in text.split([';', '\n']) {
            let base = offset;
            offset += chunk.len() + 1;
            if chunk.trim().is_empty() {
                continue;
            }
            let cycles = parse_cycles(chunk, base)?;
            for c in &cycles {
                max_point = max_point.max(c.iter().copied().max().unwrap_or(0));
            }
            cycles_per_gen.push(cycles);
        }
        let degree = degree.unwrap_or(max_point as usize).max(1);
        if max_point as usize > degree {
            return Err(Error::domain(format!("point {max_point} exceeds degree {degree}")));
        }
        let gens = cycles_per_gen
            .into_iter()
            .map(|cycles| {
                let mut img: Vec<u32> = (0..degree as u32).collect();
                for c in cycles {
                    for (i, &p) in c.iter().enumerate() {
                        img[p as usize - 1] = c[(i + 1) % c.len()] - 1;
                    }
                }
                img
            })
            .collect();
        Self::new(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    /// Conjugates every generator by `sigma`.
    pub fn conjugate(&self, sigma: &[u32]) -> Result<Self> {
        let mut inv = vec![0u32; self.degree];
        for (i, &s) in sigma.iter().enumerate() {
            inv[s as usize] = i as u32;
        }
        let gens = self
            .generators
            .iter()
            .map(|g| (0..self.degree).map(|x| sigma[g[inv[x] as usize] as usize]).collect())
            .collect();
        Self::new(self.degree, gens)
    }
}

fn parse_cycles(chunk: &str, base: usize) -> Result<Vec<Vec<u32>>> {
    let mut cycles = Vec::new();
    let bytes = chunk.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b if b.is_ascii_whitespace() => i += 1,
            b'(' => {
                let close = chunk[i..]
                    .find(')')
                    .map(|k| i + k)
                    .ok_or_else(|| Error::syntax(base + i, "unclosed cycle"))?;
                let mut cycle = Vec::new();
                let inner = &chunk[i + 1..close];
                let mut pos = i + 1;
                for tok in inner.split(|c: char| c == ',' || c.is_whitespace()) {
                    if !tok.is_empty() {
                        let p: u32 = tok
                            .parse()
                            .ok()
                            .filter(|&p| p >= 1)
                            .ok_or_else(|| Error::syntax(base + pos, format!("bad point '{tok}'")))?;
                        if cycle.contains(&p) {
                            return Err(Error::syntax(base + pos, format!("point {p} repeated in cycle")));
                        }
                        cycle.push(p);
                    }
                    pos += tok.len() + 1;
                }
                if cycles.iter().any(|c: &Vec<u32>| c.iter().any(|p| cycle.contains(p))) {
                    return Err(Error::syntax(base + i, "cycles are not disjoint"));
                }
                if !cycle.is_empty() {
                    cycles.push(cycle);
                }
                i = close + 1;
            }
            _ => return Err(Error::syntax(base + i, "expected '('")),
        }
    }
    Ok(cycles)
}

/// `(p*q)(x) = q(p(x))`: apply `p` first.
fn compose(p: &[u32], q: &[u32]) -> Vec<u32> {
    p.iter().map(|&x| q[x as usize]).collect()
}

/// The Cayley graph from the identity: elements in BFS order plus, for each
/// element, the index of its product with each generator.
struct Closure {
    elements: Vec<Vec<u32>>,
    edges: Vec<Vec<usize>>,
}

fn closure(perms: &PermutationSet, max_size: usize) -> Result<Closure> {
    let id: Vec<u32> = (0..perms.degree as u32).collect();
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut elements = vec![id.clone()];
    index.insert(id, 0);
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(e) = queue.pop_front() {
        let mut out = Vec::with_capacity(perms.generators.len());
        for g in &perms.generators {
            let prod = compose(&elements[e], g);
            let k = match index.get(&prod) {
                Some(&k) => k,
                None => {
                    if elements.len() >= max_size {
                        return Err(Error::BudgetExceeded { limit: max_size, what: "group elements" });
                    }
                    let k = elements.len();
                    index.insert(prod.clone(), k);
                    elements.push(prod);
                    queue.push_back(k);
                    k
                }
            };
            out.push(k);
        }
        if edges.len() <= e {
            edges.resize(e + 1, Vec::new());
        }
        edges[e] = out;
    }
    Ok(Closure { elements, edges })
}

/// Order of the group generated by `perms`.
pub fn perm_order(perms: &PermutationSet, max_size: usize) -> Result<u64> {
    closure(perms, max_size).map(|c| c.elements.len() as u64)
}

/// A presentation of the generated group on the same generators, read off
/// the Cayley graph: a spanning tree gives a word for every element, and
/// every non-tree edge gives a relator.
pub fn cayley_presentation(perms: &PermutationSet, max_size: usize) -> Result<Presentation> {
    let c = closure(perms, max_size)?;
    let mut word: Vec<Option<Word>> = vec![None; c.elements.len()];
    word[0] = Some(Vec::new());
    let mut tree = vec![vec![false; perms.generators.len()]; c.elements.len()];
    // elements were discovered in BFS order, so parents precede children
    for e in 0..c.elements.len() {
        let w = word[e].clone().expect("BFS order");
        for (g, &k) in c.edges[e].iter().enumerate() {
            if word[k].is_none() {
                let mut wk = w.clone();
                wk.push(g as i32 + 1);
                word[k] = Some(wk);
                tree[e][g] = true;
            }
        }
    }
    let mut relators = Vec::new();
    for e in 0..c.elements.len() {
        for (g, &k) in c.edges[e].iter().enumerate() {
            if !tree[e][g] {
                let mut r = word[e].clone().unwrap();
                r.push(g as i32 + 1);
                r.extend(invert(word[k].as_ref().unwrap()));
                relators.push(r);
            }
        }
    }
    let names = (1..=perms.generators.len()).map(|i| format!("g{i}")).collect();
    Presentation::new(names, relators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouptheory::coset::coset_enumerate;

    use crate::grouptheory::GROUP96_GENERATORS as GROUP96;

    #[test]
    fn examples() {
        let g96 = PermutationSet::parse(GROUP96, Some(12)).unwrap();
        assert_eq!(perm_order(&g96, 10_000_000).unwrap(), 96);
        assert_eq!(perm_order(&PermutationSet::parse("(1,2,3)", None).unwrap(), 100).unwrap(), 3);
        let s4 = PermutationSet::parse("(1,2); (1,2,3,4)", None).unwrap();
        assert_eq!(perm_order(&s4, 100).unwrap(), 24);
        assert_eq!(perm_order(&PermutationSet::parse("()", Some(3)).unwrap(), 10).unwrap(), 1);
    }

    #[test]
    fn budget() {
        let s6 = PermutationSet::parse("(1,2); (1,2,3,4,5,6)", None).unwrap();
        assert!(matches!(perm_order(&s6, 100), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn parse_errors() {
        assert!(PermutationSet::parse("(1,2", None).is_err());
        assert!(PermutationSet::parse("(1,1)", None).is_err());
        assert!(PermutationSet::parse("(1,2)(2,3)", None).is_err());
        assert!(PermutationSet::parse("(1,5)", Some(4)).is_err());
        assert!(PermutationSet::parse("1,2", None).is_err());
    }

    #[test]
    fn conjugation_invariance() {
        let g96 = PermutationSet::parse(GROUP96, Some(12)).unwrap();
        let sigma: Vec<u32> = vec![5, 3, 11, 0, 1, 2, 10, 9, 8, 4, 7, 6];
        let conj = g96.conjugate(&sigma).unwrap();
        assert_ne!(conj, g96);
        assert_eq!(perm_order(&conj, 1000).unwrap(), 96);
    }

    #[test]
    fn cayley_presentation_defines_the_group() {
        let s4 = PermutationSet::parse("(1,2); (1,2,3,4)", None).unwrap();
        let p = cayley_presentation(&s4, 100).unwrap();
        assert_eq!(coset_enumerate(&p, 10_000).unwrap(), 24);
    }
}
