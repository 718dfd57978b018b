//! Classification reports.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::structure::GroupStructure;
use crate::curve::Signature;
use crate::fuchsian::{gs_extensions, gs_row};
use crate::grouptheory::Presentation;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub order: u64,
    pub structure: GroupStructure,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "presentation_text")]
    pub presentation: Option<Presentation>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub notes: String,
}

/// One signature along an extension chain; `via_row` and `index` describe
/// the table row that produced it (absent on the first step).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStep {
    #[serde(with = "signature_text")]
    pub signature: Signature,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub via_row: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    /// The curve equation as classified.
    pub input: String,
    pub canonical_triple: Option<[u64; 3]>,
    pub genus: u64,
    /// Signature of the cyclic action.
    #[serde(with = "signature_text")]
    pub signature: Signature,
    /// Table row tag: `A.1`..`E.3`, `DEFAULT`, `LEFSCHETZ.k`, `FERMAT.k`, ...
    pub row: String,
    #[serde(flatten)]
    pub group: GroupDescriptor,
    pub chain: Vec<ChainStep>,
    /// Order of the group acting with the chain's first signature.
    pub base_order: u64,
}

impl ClassificationReport {
    pub fn order(&self) -> u64 {
        self.group.order
    }

    pub fn chain_index(&self) -> u64 {
        self.chain.iter().filter_map(|s| s.index).product()
    }

    /// `order == base_order × Π indices`.
    pub fn order_law_holds(&self) -> bool {
        self.group.order == self.base_order * self.chain_index()
    }

    /// Every step of the chain is an instance of the row it names.
    pub fn chain_is_table_valid(&self) -> bool {
        self.chain.windows(2).all(|w| {
            let (Some(row), Some(index)) = (&w[1].via_row, w[1].index) else {
                return false;
            };
            gs_extensions(&w[0].signature)
                .iter()
                .any(|e| e.row.id == row && e.index == index && e.outer == w[1].signature)
        }) && self.chain.first().is_some_and(|s| s.via_row.is_none())
    }

    pub(crate) fn check_order_law(self) -> Result<Self> {
        if self.order_law_holds() {
            Ok(self)
        } else {
            Err(Error::Invariant(format!(
                "order {} is not {} times the chain index {} (row {})",
                self.group.order,
                self.base_order,
                self.chain_index(),
                self.row
            )))
        }
    }
}

impl std::fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "curve:      {}", self.input)?;
        if let Some([a, b, c]) = self.canonical_triple {
            writeln!(f, "class:      ({a},{b},{c})")?;
        }
        writeln!(f, "genus:      {}", self.genus)?;
        writeln!(f, "signature:  {}", self.signature)?;
        writeln!(f, "row:        {}", self.row)?;
        writeln!(f, "|G|:        {}", self.group.order)?;
        writeln!(f, "structure:  {}", self.group.structure)?;
        if let Some(p) = &self.group.presentation {
            writeln!(f, "presented:  {p}")?;
        }
        let chain: Vec<String> = self
            .chain
            .iter()
            .map(|s| match (&s.via_row, s.index) {
                (Some(row), Some(i)) => format!("-[row {row}, index {i}]-> {}", s.signature),
                _ => s.signature.to_string(),
            })
            .collect();
        writeln!(f, "chain:      {} (base order {})", chain.join(" "), self.base_order)?;
        if !self.group.notes.is_empty() {
            writeln!(f, "notes:      {}", self.group.notes)?;
        }
        Ok(())
    }
}

/// Builds a chain from a start signature and `(row, outer periods)` steps.
pub(crate) fn chain(start: &[u64], steps: &[(&str, &[u64])]) -> Vec<ChainStep> {
    let sig = |p: &[u64]| Signature::new(p.to_vec()).expect("chain periods are >= 2");
    let mut out = vec![ChainStep { signature: sig(start), via_row: None, index: None }];
    for (row, outer) in steps {
        let index = gs_row(row).expect("known row").index;
        out.push(ChainStep { signature: sig(outer), via_row: Some(row.to_string()), index: Some(index) });
    }
    out
}

mod signature_text {
    use super::*;

    pub fn serialize<S: Serializer>(sig: &Signature, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(sig)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Signature, D::Error> {
        let text = String::deserialize(d)?;
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
        let periods: std::result::Result<Vec<u64>, _> = inner.split(',').map(|p| p.trim().parse::<u64>()).collect();
        let periods = periods.map_err(serde::de::Error::custom)?;
        Signature::new(periods).map_err(serde::de::Error::custom)
    }
}

mod presentation_text {
    use super::*;

    pub fn serialize<S: Serializer>(p: &Option<Presentation>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match p {
            Some(p) => s.collect_str(p),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Presentation>, D::Error> {
        let text: Option<String> = Option::deserialize(d)?;
        text.map(|t| Presentation::parse(&t).map_err(serde::de::Error::custom)).transpose()
    }
}
