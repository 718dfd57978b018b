//! Composites of table rows.

use serde::Serialize;

use super::table::{gs_extensions, GsExtension};
use crate::curve::Signature;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionChain {
    pub start: Signature,
    pub steps: Vec<GsExtension>,
    /// Row that reaches the final signature in one step with the same total index.
    pub equivalent_row: Option<&'static str>,
    /// The composite does not occur for any surface-kernel epimorphism onto a cyclic group.
    pub dead: bool,
}

impl ExtensionChain {
    pub fn end(&self) -> &Signature {
        self.steps.last().map(|s| &s.outer).unwrap_or(&self.start)
    }

    pub fn total_index(&self) -> u64 {
        self.steps.iter().map(|s| s.index).product()
    }

    pub fn rows(&self) -> Vec<&'static str> {
        self.steps.iter().map(|s| s.row.id).collect()
    }
}

impl std::fmt::Display for ExtensionChain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.start)?;
        for s in &self.steps {
            write!(f, " -r{}-> {}", s.row.id, s.outer)?;
        }
        if let Some(r) = self.equivalent_row {
            write!(f, "  ~ r{r}")?;
        }
        if self.dead {
            write!(f, "  (dead)")?;
        }
        Ok(())
    }
}

/// Known non-occurring composites: from (n,n,n) nothing reaches (2,3,2n),
/// and (9,9,9) never passes through (3,3,9) on the way to (2,3,9).
fn is_dead(start: &Signature, steps: &[GsExtension]) -> bool {
    let p = start.periods();
    if p.len() != 3 || p[0] != p[2] {
        return false;
    }
    let n = p[0];
    let reaches = |target: &[u64]| steps.iter().any(|s| s.outer.periods() == target);
    if n >= 4 && reaches(&[2, 3, 2 * n]) {
        return true;
    }
    n == 9 && reaches(&[3, 3, 9]) && reaches(&[2, 3, 9])
}

fn extend(start: &Signature, prefix: &mut Vec<GsExtension>, out: &mut Vec<ExtensionChain>) {
    let tip = prefix.last().map(|s| s.outer.clone()).unwrap_or_else(|| start.clone());
    for ext in gs_extensions(&tip) {
        prefix.push(ext);
        if prefix.len() >= 2 {
            let total: u64 = prefix.iter().map(|s| s.index).product();
            let end = &prefix.last().unwrap().outer;
            let equivalent_row = gs_extensions(start)
                .into_iter()
                .find(|e| &e.outer == end && e.index == total)
                .map(|e| e.row.id);
            out.push(ExtensionChain {
                start: start.clone(),
                steps: prefix.clone(),
                equivalent_row,
                dead: is_dead(start, prefix),
            });
        }
        extend(start, prefix, out);
        prefix.pop();
    }
}

/// Every composite of two or more table rows starting at `sig`.
///
/// Recursion terminates because each step divides the hyperbolic area by
/// its index (at least 2).
pub fn extension_chains(sig: &Signature) -> Vec<ExtensionChain> {
    let mut out = Vec::new();
    extend(sig, &mut Vec::new(), &mut out);
    out
}
