//! Coset enumeration over the trivial subgroup (HLT strategy with lookahead).

use super::presentation::Presentation;
use crate::{Error, Result};

const NONE: u32 = 0;

/// Enumeration outcome: the completed coset table.
#[derive(Debug, Clone)]
pub struct CosetTable {
    /// `rows[c][2g]` is `c·g`, `rows[c][2g+1]` is `c·g^-1`; cosets are 0-based here.
    pub rows: Vec<Vec<u32>>,
}

impl CosetTable {
    pub fn order(&self) -> u64 {
        self.rows.len() as u64
    }
}

fn column(g: i32) -> usize {
    let i = (g.unsigned_abs() as usize - 1) * 2;
    if g > 0 {
        i
    } else {
        i + 1
    }
}

struct OutOfSpace;

struct Enumerator {
    cols: usize,
    /// Flat table, row `c` at `c*cols`; coset 0 is a dummy, cosets are 1-based.
    table: Vec<u32>,
    parent: Vec<u32>,
    allocated: usize,
    live: usize,
    max: usize,
    queue: Vec<u32>,
    relators: Vec<Vec<usize>>,
}

impl Enumerator {
    fn new(pres: &Presentation, max: usize) -> Self {
        let cols = 2 * pres.generator_count();
        let relators = pres.relators().iter().map(|r| r.iter().map(|&g| column(g)).collect()).collect();
        let mut e = Enumerator {
            cols,
            table: vec![NONE; 2 * cols],
            parent: vec![0, 1],
            allocated: 1,
            live: 1,
            max,
            queue: Vec::new(),
            relators,
        };
        e.table.reserve(cols * 1024);
        e
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.cols + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, v: u32) {
        self.table[c as usize * self.cols + x] = v;
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn define(&mut self, c: u32, x: usize) -> std::result::Result<(), OutOfSpace> {
        if self.allocated >= self.max {
            return Err(OutOfSpace);
        }
        self.allocated += 1;
        self.live += 1;
        let d = self.allocated as u32;
        self.table.extend(std::iter::repeat_n(NONE, self.cols));
        self.parent.push(d);
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(())
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, drop) = if a < b { (a, b) } else { (b, a) };
        self.parent[drop as usize] = keep;
        self.live -= 1;
        self.queue.push(drop);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.cols {
                let f = self.get(e, x);
                if f == NONE {
                    continue;
                }
                self.set(f, x ^ 1, NONE);
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let ex = self.get(e1, x);
                if ex != NONE {
                    self.merge(f1, ex);
                } else {
                    let fx = self.get(f1, x ^ 1);
                    if fx != NONE {
                        self.merge(e1, fx);
                    } else {
                        self.set(e1, x, f1);
                        self.set(f1, x ^ 1, e1);
                    }
                }
            }
        }
    }

    /// Traces relator `r` from coset `c` in both directions, filling gaps
    /// with new cosets when `fill` is set; records deductions and coincidences.
    fn scan(&mut self, c: u32, r: usize, fill: bool) -> std::result::Result<(), OutOfSpace> {
        let len = self.relators[r].len();
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, len);
        loop {
            while i < j {
                let next = self.get(f, self.relators[r][i]);
                if next == NONE {
                    break;
                }
                f = next;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i {
                let next = self.get(b, self.relators[r][j - 1] ^ 1);
                if next == NONE {
                    break;
                }
                b = next;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                let x = self.relators[r][i];
                self.set(f, x, b);
                self.set(b, x ^ 1, f);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            let x = self.relators[r][i];
            self.define(f, x)?;
        }
    }

    /// Scans every live coset under every relator without defining anything.
    fn lookahead(&mut self) {
        let mut c = 1u32;
        while (c as usize) <= self.allocated {
            for r in 0..self.relators.len() {
                if !self.is_live(c) {
                    break;
                }
                let _ = self.scan(c, r, false);
            }
            c += 1;
        }
    }

    /// Renumbers live cosets consecutively; returns the new number of `from`
    /// (or of the next live coset after it).
    fn compact(&mut self, from: u32) -> u32 {
        let mut map = vec![0u32; self.allocated + 1];
        let mut next = 0u32;
        for c in 1..=self.allocated as u32 {
            if self.is_live(c) {
                next += 1;
                map[c as usize] = next;
            }
        }
        let mut table = vec![NONE; (next as usize + 1) * self.cols];
        for c in 1..=self.allocated as u32 {
            let nc = map[c as usize];
            if nc == 0 {
                continue;
            }
            for x in 0..self.cols {
                let v = self.get(c, x);
                table[nc as usize * self.cols + x] = if v == NONE { NONE } else { map[v as usize] };
            }
        }
        let resume = (from as usize..=self.allocated)
            .find(|&c| map[c] != 0)
            .map(|c| map[c])
            .unwrap_or(next + 1);
        self.table = table;
        self.allocated = next as usize;
        self.live = next as usize;
        self.parent = (0..=next).collect();
        resume
    }

    fn process(&mut self, c: u32) -> std::result::Result<(), OutOfSpace> {
        for r in 0..self.relators.len() {
            if !self.is_live(c) {
                return Ok(());
            }
            self.scan(c, r, true)?;
        }
        for x in 0..self.cols {
            if !self.is_live(c) {
                return Ok(());
            }
            if self.get(c, x) == NONE {
                self.define(c, x)?;
            }
        }
        Ok(())
    }

    fn run(&mut self) -> Result<()> {
        let mut c = 1u32;
        while (c as usize) <= self.allocated {
            if self.is_live(c) {
                if let Err(OutOfSpace) = self.process(c) {
                    let before = self.live;
                    self.lookahead();
                    // a pass that recovers almost nothing would only repeat
                    if self.live >= before || before - self.live < self.max / 100 {
                        return Err(Error::BudgetExceeded { limit: self.max, what: "cosets" });
                    }
                    c = self.compact(c);
                    continue;
                }
            }
            c += 1;
        }
        Ok(())
    }

    fn into_table(mut self) -> CosetTable {
        self.compact(1);
        let rows = (1..=self.allocated as u32)
            .map(|c| (0..self.cols).map(|x| self.get(c, x) - 1).collect())
            .collect();
        CosetTable { rows }
    }
}

/// Enumerates the cosets of the trivial subgroup; returns the full table.
pub fn coset_table(pres: &Presentation, max_cosets: usize) -> Result<CosetTable> {
    if max_cosets == 0 {
        return Err(Error::domain("max_cosets must be positive"));
    }
    let mut e = Enumerator::new(pres, max_cosets);
    e.run()?;
    Ok(e.into_table())
}

/// Order of the group defined by `pres`. Exceeding `max_cosets` live cosets
/// is reported as [`Error::BudgetExceeded`], which usually means the group is infinite.
pub fn coset_enumerate(pres: &Presentation, max_cosets: usize) -> Result<u64> {
    coset_table(pres, max_cosets).map(|t| t.order())
}
