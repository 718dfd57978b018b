//! Genus-0 signatures admitting a finite-index Fuchsian extension.
//!
//! Rows are data: period patterns in two parameters `n`, `m` plus guard
//! predicates. Matching tries every assignment of pattern slots to the
//! periods of a signature.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::curve::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Param {
    N,
    M,
}

/// One slot of a period pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Period {
    Const(u64),
    /// `coef * param`
    Var(Param, u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Guard {
    /// n >= k
    NAtLeast(u64),
    /// n + m >= k
    SumAtLeast(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GsRow {
    pub id: &'static str,
    pub inner: &'static [Period],
    pub outer: &'static [Period],
    pub index: u64,
    pub normal: bool,
    pub guards: &'static [Guard],
}

use Guard::*;
use Param::*;
use Period::*;

const N1: Period = Var(N, 1);
const N2: Period = Var(N, 2);
const N3: Period = Var(N, 3);
const N4: Period = Var(N, 4);
const M1: Period = Var(M, 1);
const M2: Period = Var(M, 2);

const fn row(
    id: &'static str,
    inner: &'static [Period],
    outer: &'static [Period],
    index: u64,
    normal: bool,
    guards: &'static [Guard],
) -> GsRow {
    GsRow { id, inner, outer, index, normal, guards }
}

pub static GS_TABLE: [GsRow; 16] = [
    row("1", &[N1, N1, N1], &[Const(3), Const(3), N1], 3, true, &[NAtLeast(4)]),
    row("2", &[N1, N1, N1], &[Const(2), Const(3), N2], 6, true, &[NAtLeast(4)]),
    row("3", &[N1, N1, M1], &[Const(2), N1, M2], 2, true, &[NAtLeast(3), SumAtLeast(7)]),
    row("A", &[N1, N1, N1, N1], &[Const(2), Const(2), Const(2), N1], 4, true, &[NAtLeast(3)]),
    row("B", &[N1, N1, M1, M1], &[Const(2), Const(2), N1, M1], 2, true, &[SumAtLeast(5)]),
    row("4", &[Const(7), Const(7), Const(7)], &[Const(2), Const(3), Const(7)], 24, false, &[]),
    row("5", &[Const(2), Const(7), Const(7)], &[Const(2), Const(3), Const(7)], 9, false, &[]),
    row("6", &[Const(3), Const(3), Const(7)], &[Const(2), Const(3), Const(7)], 8, false, &[]),
    row("7", &[Const(4), Const(8), Const(8)], &[Const(2), Const(3), Const(8)], 12, false, &[]),
    row("8", &[Const(3), Const(8), Const(8)], &[Const(2), Const(3), Const(8)], 10, false, &[]),
    row("9", &[Const(9), Const(9), Const(9)], &[Const(2), Const(3), Const(9)], 12, false, &[]),
    row("10", &[Const(4), Const(4), Const(5)], &[Const(2), Const(4), Const(5)], 6, false, &[]),
    row("11", &[N1, N4, N4], &[Const(2), Const(3), N4], 6, false, &[NAtLeast(2)]),
    row("12", &[N1, N2, N2], &[Const(2), Const(4), N2], 4, false, &[NAtLeast(3)]),
    row("13", &[Const(3), N1, N3], &[Const(2), Const(3), N3], 4, false, &[NAtLeast(3)]),
    row("14", &[Const(2), N1, N2], &[Const(2), Const(3), N2], 3, false, &[NAtLeast(4)]),
];

/// Looks up a row by its label ("1".."14", "A", "B").
pub fn gs_row(id: &str) -> Option<&'static GsRow> {
    GS_TABLE.iter().find(|r| r.id == id)
}

#[derive(Debug, Clone, Copy, Default)]
struct Binding {
    n: Option<u64>,
    m: Option<u64>,
}

impl Binding {
    fn slot(&mut self, p: Param) -> &mut Option<u64> {
        match p {
            N => &mut self.n,
            M => &mut self.m,
        }
    }

    fn bind(&mut self, pattern: Period, value: u64) -> bool {
        match pattern {
            Const(c) => c == value,
            Var(p, coef) => {
                if !value.is_multiple_of(coef) {
                    return false;
                }
                let v = value / coef;
                let slot = self.slot(p);
                match *slot {
                    Some(old) => old == v,
                    None => {
                        *slot = Some(v);
                        true
                    }
                }
            }
        }
    }

    fn eval(&self, pattern: Period) -> Option<u64> {
        match pattern {
            Const(c) => Some(c),
            Var(N, coef) => self.n.map(|v| v * coef),
            Var(M, coef) => self.m.map(|v| v * coef),
        }
    }

    fn admits(&self, guards: &[Guard]) -> bool {
        guards.iter().all(|g| match *g {
            NAtLeast(k) => self.n.is_some_and(|n| n >= k),
            SumAtLeast(k) => match (self.n, self.m) {
                (Some(n), Some(m)) => n + m >= k,
                _ => false,
            },
        })
    }
}

/// Every period pattern value is at least 2 once parameters are bound.
fn all_periods_valid(b: &Binding, pattern: &[Period]) -> bool {
    pattern.iter().all(|&p| b.eval(p).is_some_and(|v| v >= 2))
}

fn permutations(len: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            acc.push(x);
            go(rest, acc, out);
            acc.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..len).collect(), &mut Vec::new(), &mut out);
    out
}

/// A row instantiated at a concrete signature.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GsExtension {
    #[serde(serialize_with = "row_label")]
    pub row: &'static GsRow,
    pub inner: Signature,
    pub outer: Signature,
    pub index: u64,
    pub normal: bool,
}

fn row_label<S: Serializer>(row: &&'static GsRow, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(row.id)
}

impl GsRow {
    /// Instantiates this row at `sig` in every distinct way.
    pub fn instantiate(&'static self, sig: &Signature) -> Vec<GsExtension> {
        let periods = sig.periods();
        let mut out: Vec<GsExtension> = Vec::new();
        if periods.len() != self.inner.len() {
            return out;
        }
        for perm in permutations(periods.len()) {
            let mut b = Binding::default();
            let matched = perm
                .iter()
                .zip(self.inner)
                .all(|(&i, &pat)| b.bind(pat, periods[i]));
            if !matched || !b.admits(self.guards) || !all_periods_valid(&b, self.outer) {
                continue;
            }
            let outer: Vec<u64> = self.outer.iter().map(|&p| b.eval(p).unwrap()).collect();
            let outer = Signature::new(outer).expect("outer periods are >= 2");
            if out.iter().all(|e| e.outer != outer) {
                out.push(GsExtension {
                    row: self,
                    inner: sig.clone(),
                    outer,
                    index: self.index,
                    normal: self.normal,
                });
            }
        }
        out
    }
}

/// All rows whose inner pattern matches `sig`, instantiated.
pub fn gs_extensions(sig: &Signature) -> Vec<GsExtension> {
    GS_TABLE.iter().flat_map(|r| r.instantiate(sig)).collect()
}

/// True when no table row applies.
pub fn is_finitely_maximal(sig: &Signature) -> bool {
    gs_extensions(sig).is_empty()
}

fn pattern_text(pattern: &[Period]) -> String {
    let parts: Vec<String> = pattern
        .iter()
        .map(|p| match *p {
            Const(c) => c.to_string(),
            Var(v, coef) => {
                let name = if v == N { "n" } else { "m" };
                if coef == 1 {
                    name.to_string()
                } else {
                    format!("{coef}{name}")
                }
            }
        })
        .collect();
    format!("({})", parts.join(","))
}

fn guard_text(guards: &[Guard]) -> String {
    let parts: Vec<String> = guards
        .iter()
        .map(|g| match *g {
            NAtLeast(k) => format!("n>={k}"),
            SumAtLeast(k) => format!("n+m>={k}"),
        })
        .collect();
    parts.join(", ")
}

impl std::fmt::Display for GsRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:>2}  {} -> {}  index {}", self.id, pattern_text(self.inner), pattern_text(self.outer), self.index)?;
        if !self.guards.is_empty() {
            write!(f, "  [{}]", guard_text(self.guards))?;
        }
        if self.normal {
            write!(f, "  normal")?;
        }
        Ok(())
    }
}

impl std::fmt::Display for GsExtension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} -> {}  row {}, index {}", self.inner, self.outer, self.row.id, self.index)?;
        if self.normal {
            write!(f, ", normal")?;
        }
        Ok(())
    }
}

impl Serialize for GsRow {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GsRow", 6)?;
        st.serialize_field("row", self.id)?;
        st.serialize_field("inner", &pattern_text(self.inner))?;
        st.serialize_field("outer", &pattern_text(self.outer))?;
        st.serialize_field("index", &self.index)?;
        st.serialize_field("normal", &self.normal)?;
        st.serialize_field("conditions", &guard_text(self.guards))?;
        st.end()
    }
}
