use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const LEDGER_FORMAT_VERSION: u32 = 1;

const BUILTIN: &str = include_str!("../../data/ledgers.toml");

/// A contribution to a ledger: `equivalence × count`, or `equivalence`
/// alone when `count` is absent.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LedgerComponent {
    pub label: String,
    pub equivalence: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<i64>,
}

impl LedgerComponent {
    pub fn contribution(&self) -> BigInt {
        BigInt::from(self.equivalence) * BigInt::from(self.count.unwrap_or(1))
    }
}

/// A total count split among distinguished varieties.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DegenerationLedger {
    pub name: String,
    #[serde(default)]
    pub description: String,
    pub total: i64,
    pub components: Vec<LedgerComponent>,
}

/// A reference value kept as data only.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RecordedValue {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<i64>,
    pub formula: String,
    #[serde(default)]
    pub note: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LedgerFile {
    pub version: u32,
    #[serde(default, rename = "ledger")]
    pub ledgers: Vec<DegenerationLedger>,
    #[serde(default)]
    pub recorded: Vec<RecordedValue>,
}

impl LedgerFile {
    pub fn parse(text: &str) -> Result<Self> {
        let file: LedgerFile = toml::from_str(text).map_err(|e| Error::Ledger(e.to_string()))?;
        if file.version != LEDGER_FORMAT_VERSION {
            return Err(Error::Ledger(format!(
                "unsupported format version {} (expected {LEDGER_FORMAT_VERSION})",
                file.version
            )));
        }
        Ok(file)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Ledger(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("ledger files serialize")
    }

    pub fn check_all(&self) -> Vec<LedgerVerdict> {
        self.ledgers.iter().map(ledger_check).collect()
    }
}

/// The ledgers shipped with the crate.
pub fn builtin_ledgers() -> LedgerFile {
    LedgerFile::parse(BUILTIN).expect("bundled ledger file is valid")
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LedgerVerdict {
    pub name: String,
    #[serde(serialize_with = "crate::recipes::bigint_as_string")]
    pub total: BigInt,
    #[serde(serialize_with = "crate::recipes::bigint_as_string")]
    pub sum: BigInt,
    /// `total − sum`.
    #[serde(serialize_with = "crate::recipes::bigint_as_string")]
    pub residual: BigInt,
    pub pass: bool,
}

/// Checks that the components add up to the total.
pub fn ledger_check(ledger: &DegenerationLedger) -> LedgerVerdict {
    let total = BigInt::from(ledger.total);
    let sum: BigInt = ledger
        .components
        .iter()
        .map(LedgerComponent::contribution)
        .sum();
    let residual = &total - &sum;
    LedgerVerdict {
        name: ledger.name.clone(),
        pass: residual == BigInt::from(0),
        total,
        sum,
        residual,
    }
}

impl fmt::Display for LedgerVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass {
            write!(f, "PASS {}: {} = {}", self.name, self.sum, self.total)
        } else {
            write!(
                f,
                "FAIL {}: components sum to {}, total {} (residual {})",
                self.name, self.sum, self.total, self.residual
            )
        }
    }
}
