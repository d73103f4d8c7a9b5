//! Read-only reference values shipped with the library.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

const BUNDLED: &str = include_str!("../data/fixtures.toml");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixtures {
    entries: BTreeMap<String, String>,
}

impl Fixtures {
    pub fn bundled() -> Self {
        Self::parse(BUNDLED).expect("bundled fixtures parse")
    }

    /// Flat `key = "value"` TOML; any other value type is rejected.
    pub fn parse(source: &str) -> Result<Self> {
        let table: toml::Table = source.parse().map_err(|e: toml::de::Error| {
            let line = e
                .span()
                .map(|s| source[..s.start].matches('\n').count() + 1)
                .unwrap_or(0);
            Error::Parse {
                line,
                message: e.message().to_string(),
            }
        })?;
        let mut entries = BTreeMap::new();
        for (key, value) in table {
            match value {
                toml::Value::String(s) => {
                    entries.insert(key, s);
                }
                other => {
                    return Err(Error::Validation(format!(
                        "fixture {key:?} must be a string, found {}",
                        other.type_str()
                    )))
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn get(&self, key: &str) -> Result<&str> {
        self.entries
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| Error::Validation(format!("unknown fixture key {key:?}")))
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }
}
