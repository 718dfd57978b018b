//! Symbolic group-structure tags.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use regex::Regex;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// The isomorphism type recorded for a classified group. Tags are claims;
/// orders and fingerprints are what the crate verifies.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupStructure {
    /// `Z{m}`
    Cyclic(u64),
    /// `Z4+Z5`
    Abelian(Vec<u64>),
    /// `D{order}`
    Dihedral(u64),
    /// `Z{n} x| Z2 (twist {k})`: the involution acts on Z_n by `v -> v^k`.
    CyclicSemidirectC2 { n: u64, twist: u64 },
    /// `Z{n} x| Z3 (twist {k})`
    CyclicSemidirectC3 { n: u64, twist: u64 },
    /// `(central Z{m}).{quotient}`
    CentralExtension { center: u64, quotient: String },
    /// `(Z4+Z4) x| S3`
    DirectSumSemidirect { summands: Vec<u64>, by: String },
    /// `({kernel}).{quotient}`, a non-split extension.
    Extension { kernel: Box<GroupStructure>, quotient: String },
    /// `PSL(2,7)`, `GL(2,3)`, ...
    Named(String),
}

fn sum_text(parts: &[u64]) -> String {
    parts.iter().map(|d| format!("Z{d}")).collect::<Vec<_>>().join("+")
}

impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupStructure::*;
        match self {
            Cyclic(m) => write!(f, "Z{m}"),
            Abelian(parts) => write!(f, "{}", sum_text(parts)),
            Dihedral(o) => write!(f, "D{o}"),
            CyclicSemidirectC2 { n, twist } => write!(f, "Z{n} x| Z2 (twist {twist})"),
            CyclicSemidirectC3 { n, twist } => write!(f, "Z{n} x| Z3 (twist {twist})"),
            CentralExtension { center, quotient } => write!(f, "(central Z{center}).{quotient}"),
            DirectSumSemidirect { summands, by } => write!(f, "({}) x| {by}", sum_text(summands)),
            Extension { kernel, quotient } => write!(f, "({kernel}).{quotient}"),
            Named(name) => write!(f, "{name}"),
        }
    }
}

struct Patterns {
    cyclic: Regex,
    abelian: Regex,
    dihedral: Regex,
    semidirect: Regex,
    central: Regex,
    direct_sum: Regex,
    extension: Regex,
}

fn patterns() -> &'static Patterns {
    static P: OnceLock<Patterns> = OnceLock::new();
    P.get_or_init(|| Patterns {
        cyclic: Regex::new(r"^Z(\d+)$").unwrap(),
        abelian: Regex::new(r"^Z\d+(\+Z\d+)+$").unwrap(),
        dihedral: Regex::new(r"^D(\d+)$").unwrap(),
        semidirect: Regex::new(r"^Z(\d+) x\| Z([23]) \(twist (\d+)\)$").unwrap(),
        central: Regex::new(r"^\(central Z(\d+)\)\.(\S+)$").unwrap(),
        direct_sum: Regex::new(r"^\((Z\d+(?:\+Z\d+)+)\) x\| (\S+)$").unwrap(),
        extension: Regex::new(r"^\((.+)\)\.(\S+)$").unwrap(),
    })
}

fn summands(text: &str) -> Vec<u64> {
    text.split('+').map(|z| z[1..].parse().expect("regex-checked digits")).collect()
}

fn number(text: &str) -> Result<u64> {
    text.parse().map_err(|_| Error::domain(format!("number out of range: {text}")))
}

impl FromStr for GroupStructure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use GroupStructure::*;
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::domain("empty group structure"));
        }
        let p = patterns();
        if let Some(c) = p.cyclic.captures(s) {
            return Ok(Cyclic(number(&c[1])?));
        }
        if p.abelian.is_match(s) {
            return Ok(Abelian(summands(s)));
        }
        if let Some(c) = p.dihedral.captures(s) {
            return Ok(Dihedral(number(&c[1])?));
        }
        if let Some(c) = p.semidirect.captures(s) {
            let (n, twist) = (number(&c[1])?, number(&c[3])?);
            return Ok(if &c[2] == "2" { CyclicSemidirectC2 { n, twist } } else { CyclicSemidirectC3 { n, twist } });
        }
        if let Some(c) = p.central.captures(s) {
            return Ok(CentralExtension { center: number(&c[1])?, quotient: c[2].to_string() });
        }
        if let Some(c) = p.direct_sum.captures(s) {
            return Ok(DirectSumSemidirect { summands: summands(&c[1]), by: c[2].to_string() });
        }
        if let Some(c) = p.extension.captures(s) {
            return Ok(Extension { kernel: Box::new(c[1].parse()?), quotient: c[2].to_string() });
        }
        Ok(Named(s.to_string()))
    }
}

impl Serialize for GroupStructure {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupStructure {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::GroupStructure::*;
    use super::*;

    #[test]
    fn display_round_trip() {
        let cases = vec![
            (Cyclic(18), "Z18"),
            (Abelian(vec![4, 5]), "Z4+Z5"),
            (Dihedral(12), "D12"),
            (CyclicSemidirectC2 { n: 15, twist: 4 }, "Z15 x| Z2 (twist 4)"),
            (CyclicSemidirectC3 { n: 13, twist: 3 }, "Z13 x| Z3 (twist 3)"),
            (CentralExtension { center: 4, quotient: "A4".into() }, "(central Z4).A4"),
            (DirectSumSemidirect { summands: vec![4, 4], by: "S3".into() }, "(Z4+Z4) x| S3"),
            (
                Extension { kernel: Box::new(CyclicSemidirectC2 { n: 16, twist: 9 }), quotient: "Z2".into() },
                "(Z16 x| Z2 (twist 9)).Z2",
            ),
            (Named("PSL(2,7)".into()), "PSL(2,7)"),
            (Named("GL(2,3)".into()), "GL(2,3)"),
        ];
        for (tag, text) in cases {
            assert_eq!(tag.to_string(), text);
            assert_eq!(text.parse::<GroupStructure>().unwrap(), tag);
            let json = serde_json::to_string(&tag).unwrap();
            assert_eq!(serde_json::from_str::<GroupStructure>(&json).unwrap(), tag);
        }
        assert!("".parse::<GroupStructure>().is_err());
    }
}
