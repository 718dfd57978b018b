//! Finite presentations and their text form.
//!
//! ```text
//! <a, b | a^2, b^3, (a*b)^7>
//! <s, t, u | s^4, t^8, u^2, [s,t], [s,u], (u*t)^2 = s^-1>
//! ```
//!
//! Words are products of generators, parenthesised words and commutators
//! `[x,y] = x^-1 y^-1 x y`, each optionally raised to an integer power.
//! `*` between factors is optional; juxtaposed names are split by longest
//! match against the generator list. `1` is the empty word. A relation
//! `w1 = w2 = ...` contributes `w1 w2^-1`, `w2 w3^-1`, ...

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A word is a list of signed 1-based generator indices; negative means inverse.
pub type Word = Vec<i32>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

pub fn invert(w: &[i32]) -> Word {
    w.iter().rev().map(|&g| -g).collect()
}

/// Free reduction.
pub fn reduce(w: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &g in w {
        if out.last() == Some(&-g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    out
}

pub fn power(w: &[i32], k: i64) -> Word {
    let base = if k < 0 { invert(w) } else { w.to_vec() };
    let mut out = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
    for _ in 0..k.unsigned_abs() {
        out.extend_from_slice(&base);
    }
    out
}

pub fn commutator(x: &[i32], y: &[i32]) -> Word {
    let mut w = invert(x);
    w.extend(invert(y));
    w.extend_from_slice(x);
    w.extend_from_slice(y);
    w
}

fn default_names(count: usize) -> Vec<String> {
    if count <= 26 {
        (0..count).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (1..=count).map(|i| format!("x{i}")).collect()
    }
}

impl Presentation {
    /// Relators are freely reduced; empty ones are dropped.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::domain("a presentation needs at least one generator"));
        }
        let count = generators.len() as i32;
        let mut rels = Vec::with_capacity(relators.len());
        for r in relators {
            if let Some(&bad) = r.iter().find(|&&g| g == 0 || g.abs() > count) {
                return Err(Error::domain(format!("generator index {bad} out of range 1..={count}")));
            }
            let r = reduce(&r);
            if !r.is_empty() {
                rels.push(r);
            }
        }
        Ok(Presentation { generators, relators: rels })
    }

    pub fn with_count(count: usize, relators: Vec<Word>) -> Result<Self> {
        Self::new(default_names(count), relators)
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// `<x1,x2,x3 | x1^a, x2^b, x3^c, x1 x2 x3>`
    pub fn triangle(a: u64, b: u64, c: u64) -> Self {
        let names = ["x1", "x2", "x3"].map(String::from).to_vec();
        let rels = vec![power(&[1], a as i64), power(&[2], b as i64), power(&[3], c as i64), vec![1, 2, 3]];
        Self::new(names, rels).expect("valid triangle presentation")
    }

    /// Parses the text form, or a JSON object `{"generators": [..] | count, "relators": [[..]]}`.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            return Self::from_json(trimmed);
        }
        Parser::new(text).presentation()
    }

    fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Gens {
            Count(usize),
            Names(Vec<String>),
        }
        #[derive(Deserialize)]
        struct Raw {
            generators: Gens,
            relators: Vec<Word>,
        }
        let raw: Raw = serde_json::from_str(text).map_err(|e| Error::syntax(e.column().saturating_sub(1), e.to_string()))?;
        let names = match raw.generators {
            Gens::Count(c) => default_names(c),
            Gens::Names(n) => n,
        };
        Self::new(names, raw.relators)
    }

    pub fn word_to_string(&self, w: &[i32]) -> String {
        format_word(&self.generators, w)
    }
}

/// Smallest `u` with `w = u^k`.
fn primitive_root(w: &[i32]) -> (&[i32], usize) {
    let n = w.len();
    for len in 1..=n {
        if n.is_multiple_of(len) && w.chunks(len).all(|c| c == &w[..len]) {
            return (&w[..len], n / len);
        }
    }
    (w, 1)
}

fn format_word(names: &[String], w: &[i32]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let (root, k) = primitive_root(w);
    if k > 1 && root.len() > 1 && root.iter().any(|&g| g != root[0]) {
        return format!("({})^{k}", format_word(names, root));
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let g = w[i];
        let mut j = i;
        while j < w.len() && w[j] == g {
            j += 1;
        }
        let run = (j - i) as i64;
        let name = &names[g.unsigned_abs() as usize - 1];
        let exp = if g < 0 { -run } else { run };
        parts.push(if exp == 1 { name.clone() } else { format!("{name}^{exp}") });
        i = j;
    }
    parts.join("*")
}

impl std::fmt::Display for Presentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.word_to_string(r)).collect();
        write!(f, "<{} | {}>", self.generators.join(","), rels.join(", "))
    }
}

impl std::str::FromStr for Presentation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    names: Vec<String>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0, names: Vec::new() }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let r = self.rest();
        self.pos += r.len() - r.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn error(&mut self, msg: &str) -> Error {
        self.skip_ws();
        let found = match self.rest().chars().next() {
            Some(c) => format!("found '{c}'"),
            None => "found end of input".into(),
        };
        Error::syntax(self.pos, format!("{msg}, {found}"))
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn identifier(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let r = self.rest();
        let mut chars = r.char_indices();
        match chars.next() {
            Some((_, c)) if c.is_ascii_alphabetic() => {}
            _ => return None,
        }
        let end = chars
            .find(|&(_, c)| !(c.is_ascii_alphanumeric() || c == '_'))
            .map(|(i, _)| i)
            .unwrap_or(r.len());
        self.pos += end;
        Some(&r[..end])
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let neg = self.eat('-');
        self.skip_ws();
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            self.pos = start;
            return Err(self.error("expected an integer"));
        }
        let text = &self.rest()[..digits];
        self.pos += digits;
        let v: i64 = text.parse().map_err(|_| Error::syntax(start, "integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn presentation(mut self) -> Result<Presentation> {
        self.expect('<')?;
        loop {
            let at = {
                self.skip_ws();
                self.pos
            };
            let name = self.identifier().ok_or_else(|| self.error("expected a generator name"))?;
            if self.names.iter().any(|n| n == name) {
                return Err(Error::syntax(at, format!("duplicate generator '{name}'")));
            }
            self.names.push(name.to_string());
            if !self.eat(',') {
                break;
            }
        }
        let mut relators = Vec::new();
        if self.eat('|') && self.peek() != Some('>') {
            loop {
                let mut sides = vec![self.word()?];
                while self.eat('=') {
                    sides.push(self.word()?);
                }
                if sides.len() == 1 {
                    relators.push(sides.pop().unwrap());
                } else {
                    for pair in sides.windows(2) {
                        let mut r = pair[0].clone();
                        r.extend(invert(&pair[1]));
                        relators.push(r);
                    }
                }
                if !self.eat(',') {
                    break;
                }
            }
        }
        self.expect('>')?;
        if self.peek().is_some() {
            return Err(self.error("trailing input"));
        }
        Presentation::new(self.names, relators)
    }

    fn word(&mut self) -> Result<Word> {
        let mut w = self.factor()?;
        loop {
            self.eat('*');
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() || c == '(' || c == '[' || c == '1' => {
                    w.extend(self.factor()?);
                }
                _ => break,
            }
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<Word> {
        let mut atoms = self.atom()?;
        while self.eat('^') {
            let k = self.integer()?;
            atoms = power(&atoms, k);
        }
        Ok(atoms)
    }

    fn atom(&mut self) -> Result<Word> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(')')?;
                Ok(w)
            }
            Some('[') => {
                self.pos += 1;
                let x = self.word()?;
                self.expect(',')?;
                let y = self.word()?;
                self.expect(']')?;
                Ok(commutator(&x, &y))
            }
            Some('1') => {
                self.pos += 1;
                Ok(Vec::new())
            }
            Some(c) if c.is_ascii_alphabetic() => self.generator_run(),
            _ => Err(self.error("expected a generator, '(' or '['")),
        }
    }

    /// An identifier token split into known generator names by longest
    /// match; only the last name takes a following exponent.
    fn generator_run(&mut self) -> Result<Word> {
        let start = self.pos;
        let token = self.identifier().expect("peeked alphabetic");
        let mut w = Vec::new();
        let mut rest = token;
        while !rest.is_empty() {
            let best = self
                .names
                .iter()
                .enumerate()
                .filter(|(_, n)| rest.starts_with(n.as_str()))
                .max_by_key(|(_, n)| n.len());
            match best {
                Some((i, n)) => {
                    w.push(i as i32 + 1);
                    rest = &rest[n.len()..];
                }
                None => {
                    let at = start + token.len() - rest.len();
                    return Err(Error::syntax(at, format!("unknown generator in '{token}'")));
                }
            }
        }
        // `ab^2` means a*b^2: the exponent applies to the last generator only
        if w.len() > 1 && self.peek() == Some('^') {
            let last = w.pop().unwrap();
            let mut head = w;
            let mut tail = vec![last];
            while self.eat('^') {
                let k = self.integer()?;
                tail = power(&tail, k);
            }
            head.extend(tail);
            return Ok(head);
        }
        Ok(w)
    }
}
