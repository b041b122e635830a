use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A positive count, given either exactly or as `base^exp`.
///
/// Power form keeps quantities like `20000^5` or `43^500` in log space; they
/// are never expanded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cardinality {
    Count(BigUint),
    Power { base: u64, exp: u64 },
}

impl Cardinality {
    pub fn count(n: u64) -> Self {
        Cardinality::Count(BigUint::from(n))
    }

    pub fn power(base: u64, exp: u64) -> Self {
        Cardinality::Power { base, exp }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Cardinality::Count(n) if n.is_zero() => {
                Err(Error::InvalidValue("cardinality must be >= 1".into()))
            }
            Cardinality::Power { base: 0, .. } => {
                Err(Error::InvalidValue("power base must be >= 1".into()))
            }
            _ => Ok(()),
        }
    }

    pub fn log10(&self) -> Result<f64> {
        self.validate()?;
        Ok(match self {
            Cardinality::Count(n) => log10_biguint(n),
            Cardinality::Power { base, exp } => *exp as f64 * (*base as f64).log10(),
        })
    }
}

impl From<u64> for Cardinality {
    fn from(n: u64) -> Self {
        Cardinality::count(n)
    }
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::Count(n) => write!(f, "{n}"),
            Cardinality::Power { base, exp } => write!(f, "{base}^{exp}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CardinalityRepr {
    Int(u64),
    Digits(String),
    Power {
        base: u64,
        exp: u64,
    },
}

impl Serialize for Cardinality {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = match self {
            Cardinality::Count(n) => match n.to_u64() {
                Some(v) => CardinalityRepr::Int(v),
                None => CardinalityRepr::Digits(n.to_string()),
            },
            Cardinality::Power { base, exp } => CardinalityRepr::Power {
                base: *base,
                exp: *exp,
            },
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cardinality {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let c = match CardinalityRepr::deserialize(d)? {
            CardinalityRepr::Int(v) => Cardinality::count(v),
            CardinalityRepr::Digits(s) => s
                .parse::<BigUint>()
                .map(Cardinality::Count)
                .map_err(|_| D::Error::custom(format!("not a decimal integer: {s:?}")))?,
            CardinalityRepr::Power { base, exp } => Cardinality::Power { base, exp },
        };
        c.validate().map_err(D::Error::custom)?;
        Ok(c)
    }
}

/// log10 of an arbitrarily large integer, accurate to f64 precision.
pub fn log10_biguint(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 64 {
        return n.to_u64().map_or(f64::NEG_INFINITY, |v| (v as f64).log10());
    }
    let shift = bits - 64;
    let top = (n >> shift).to_u64().expect("top 64 bits fit");
    (top as f64).log10() + shift as f64 * std::f64::consts::LOG10_2
}

/// log10 of `branching^plies`, computed as `plies * log10(branching)`.
pub fn gtc_power(branching: f64, plies: f64) -> Result<f64> {
    if !(branching > 1.0) || !(plies > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "need branching > 1 and plies > 0, got {branching} and {plies}"
        )));
    }
    Ok(plies * branching.log10())
}

/// Sum of log10 over the factors, i.e. log10 of their product.
pub fn log10_product(factors: &[Cardinality]) -> Result<f64> {
    factors.iter().map(Cardinality::log10).sum()
}
