use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::{Error, Result};

/// Location of a branch point on the projective line.
///
/// Non-real roots of unity are kept symbolic. Roots of unity of order 1 or 2
/// are normalised to the rationals `1` and `-1`, so two labels compare equal
/// exactly when they name the same point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BranchPoint {
    Rational(Rational),
    /// `exp(2πi · index / order)` with `order >= 3` and `gcd(index, order) = 1`.
    RootOfUnity { order: u64, index: u64 },
    Infinity,
}

impl BranchPoint {
    pub fn integer(v: i64) -> Self {
        BranchPoint::Rational(Rational::from_integer(v))
    }

    pub fn root_of_unity(order: u64, index: u64) -> Self {
        let index = index % order;
        let g = index.gcd(&order);
        let (index, order) = (index / g, order / g);
        match order {
            1 => BranchPoint::integer(1),
            2 => BranchPoint::integer(-1),
            _ => BranchPoint::RootOfUnity { order, index },
        }
    }

    pub fn to_complex(&self) -> Option<Complex64> {
        match self {
            BranchPoint::Rational(r) => Some(Complex64::new(*r.numer() as f64 / *r.denom() as f64, 0.0)),
            BranchPoint::RootOfUnity { order, index } => Some(Complex64::from_polar(
                1.0,
                2.0 * std::f64::consts::PI * *index as f64 / *order as f64,
            )),
            BranchPoint::Infinity => None,
        }
    }
}

impl fmt::Display for BranchPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BranchPoint::Rational(r) => write!(f, "{r}"),
            BranchPoint::RootOfUnity { order, index } => write!(f, "zeta{order}^{index}"),
            BranchPoint::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for BranchPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" {
            return Ok(BranchPoint::Infinity);
        }
        if let Some(rest) = s.strip_prefix("zeta") {
            let (order, index) = rest
                .split_once('^')
                .ok_or_else(|| Error::syntax(0, format!("bad root of unity label {s:?}")))?;
            let order: u64 = order.parse().map_err(|_| Error::syntax(4, "bad root order"))?;
            let index: u64 = index.parse().map_err(|_| Error::syntax(0, "bad root index"))?;
            if order == 0 {
                return Err(Error::syntax(4, "root order must be positive"));
            }
            return Ok(BranchPoint::root_of_unity(order, index));
        }
        let r: Rational = s
            .parse()
            .map_err(|_| Error::syntax(0, format!("bad branch point label {s:?}")))?;
        Ok(BranchPoint::Rational(r))
    }
}

impl Serialize for BranchPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BranchPoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
